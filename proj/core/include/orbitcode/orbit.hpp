#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "orbitcode/perm.hpp"
#include "orbitcode/word.hpp"

namespace orbitcode {

// Distance sentinel for singleton orbits and one-word codes: admissible for
// any target distance, and min()-friendly.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// Full-space enumeration sweeps 2^n codewords and keeps a 2^n-bit visited set
// (32 MB at the cap).
inline constexpr int kMaxEnumerationHalf = 28;

struct Orbit {
    Doubleword rep;                          // canonical: numerically smallest member
    std::uint64_t size = 1;
    int min_distance = kInfiniteDistance;    // intra-orbit, codeword domain
};

// BFS closure of seed under the group generators. Requires a
// doubleword-compatible group whose degree matches the seed length.
// If members is non-null it receives every orbit member (BFS order).
Orbit compute_orbit(const PermutationGroup& g, const Doubleword& seed,
                    std::vector<Doubleword>* members = nullptr);

// Minimum codeword distance between two distinct members of G.seed;
// kInfiniteDistance for singleton orbits. Distance invariance under the group
// lets one endpoint stay fixed at the seed.
int intra_orbit_min_distance(const PermutationGroup& g, const Doubleword& seed);

// Minimum codeword distance between any member of G.x and any member of G.y,
// computed by fixing x and scanning G.y. If x and y generate the same orbit
// the result equals the intra-orbit distance and *same_orbit (when given) is
// set.
int inter_orbit_min_distance(const PermutationGroup& g, const Doubleword& x, const Doubleword& y,
                             bool* same_orbit = nullptr);

struct EnumerateOptions {
    int weight_min = 0;
    int weight_max = kMaxCodewordLength;
    std::uint64_t max_orbits = std::numeric_limits<std::uint64_t>::max();
};

// Sweeps all 2^n codewords in increasing order, emitting one Orbit per orbit
// of the group whose minimum codeword weight lies in [weight_min, weight_max].
// The ascending sweep makes every emitted representative canonical. Stops
// after max_orbits emitted orbits. Requires n <= kMaxEnumerationHalf.
std::vector<Orbit> enumerate_orbit_reps(const PermutationGroup& g,
                                        const EnumerateOptions& options = {});

}  // namespace orbitcode
