#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "orbitcode/orbitcode.hpp"

namespace testutil {

inline std::string fixture(const std::string& relative) {
    return std::string(FIXTURES_DIR) + "/" + relative;
}

inline orbitcode::Permutation random_permutation(int degree, std::mt19937_64& rng) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return orbitcode::Permutation::from_images(std::move(images));
}

// Random doubleword-compatible permutation of degree 2n: a coordinate
// permutation combined with per-pair half swaps (value complementation).
inline orbitcode::Permutation random_compatible_permutation(int n, std::mt19937_64& rng) {
    auto sigma = random_permutation(n, rng);
    std::vector<int> images(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        bool flip = rng() & 1;
        images[static_cast<std::size_t>(i)] = flip ? sigma(i) + n : sigma(i);
        images[static_cast<std::size_t>(n + i)] = flip ? sigma(i) : sigma(i) + n;
    }
    return orbitcode::Permutation::from_images(std::move(images));
}

inline orbitcode::PermutationGroup random_lifted_group(int n, int generators,
                                                       std::mt19937_64& rng) {
    std::vector<orbitcode::Permutation> qs;
    for (int i = 0; i < generators; ++i) qs.push_back(random_permutation(n, rng));
    return orbitcode::lift_coordinate_group(qs);
}

inline orbitcode::PermutationGroup random_compatible_group(int n, int generators,
                                                           std::mt19937_64& rng) {
    std::vector<orbitcode::Permutation> ps;
    for (int i = 0; i < generators; ++i) ps.push_back(random_compatible_permutation(n, rng));
    return orbitcode::PermutationGroup(2 * n, std::move(ps));
}

// Swaps the two halves wholesale: value complementation of every coordinate.
inline orbitcode::Permutation complement_swap(int n) {
    std::vector<int> images(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        images[static_cast<std::size_t>(i)] = n + i;
        images[static_cast<std::size_t>(n + i)] = i;
    }
    return orbitcode::Permutation::from_images(std::move(images));
}

// Random coordinate lifts plus the complement swap: exercises half-mixing
// while keeping orbits with usable intra distances around.
inline orbitcode::PermutationGroup random_mixed_group(int n, int lifted_generators,
                                                      std::mt19937_64& rng) {
    auto lifted = random_lifted_group(n, lifted_generators, rng);
    auto generators = lifted.generators();
    generators.push_back(complement_swap(n));
    return orbitcode::PermutationGroup(2 * n, std::move(generators));
}

inline orbitcode::Doubleword random_doubleword(int n, std::mt19937_64& rng) {
    std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return orbitcode::Doubleword::from_codeword(orbitcode::Codeword(n, rng() & mask));
}

// The lifted cyclic-shift group: coordinates rotate by one position.
inline orbitcode::PermutationGroup lifted_cyclic_group(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
    return orbitcode::lift_coordinate_group({orbitcode::Permutation::from_images(images)});
}

inline orbitcode::PermutationGroup trivial_group(int n) {
    return orbitcode::lift_coordinate_group({orbitcode::Permutation(n)});
}

}  // namespace testutil
