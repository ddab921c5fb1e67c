#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orbitcode/orbit.hpp"
#include "orbitcode/perm.hpp"
#include "orbitcode/word.hpp"

namespace orbitcode {

// A set of distinct binary words of one length. words is sorted ascending;
// use make_code to normalize and validate.
struct Code {
    int length = 0;
    std::vector<std::uint64_t> words;
    // Set once the distance has been established; never above the true value.
    std::optional<int> claimed_min_distance;

    std::uint64_t size() const { return words.size(); }
    Codeword word(std::size_t i) const { return Codeword(length, words[i]); }
};

Code make_code(int length, std::vector<std::uint64_t> words,
               std::optional<int> claimed_min_distance = std::nullopt);

struct AssembledCode {
    Code code;
    std::vector<Orbit> orbits;  // one entry per input representative, input order
};

// Union of the orbits of the given representatives, mapped to codewords.
// Distinct orbits are disjoint, so the assembled size is exactly the sum of
// the orbit sizes. Throws when two representatives generate the same orbit.
AssembledCode assemble_code(const PermutationGroup& g, std::span<const Doubleword> reps);

struct WitnessPair {
    std::uint64_t a = 0, b = 0;  // word values, a < b; attain the minimum distance
};

enum class VerifyMode { full_pairwise, orbit_reduced };

struct VerificationReport {
    int length = 0;
    std::uint64_t size = 0;
    int min_distance = kInfiniteDistance;  // exact; infinite for single-word codes
    WitnessPair witnesses;                 // meaningful when min_distance is finite
    VerifyMode mode = VerifyMode::full_pairwise;
    std::vector<Orbit> per_orbit;          // orbit-reduced runs only
};

// Exact minimum distance over all word pairs. The oracle path: no reductions.
VerificationReport verify_full_pairwise(const Code& c, int threads = 0);

// Exact minimum distance of the union of the orbits of reps, computed as the
// minimum over every orbit's intra distance and every orbit pair's inter
// distance; equal to the full pairwise minimum by distance invariance.
VerificationReport verify_orbit_reduced(const PermutationGroup& g,
                                        std::span<const Doubleword> reps, int threads = 0);

// Mode selection for assembled codes: orbit-reduced beyond 100000 words,
// full pairwise otherwise.
VerificationReport verify_assembled(const PermutationGroup& g, const AssembledCode& assembled,
                                    int threads = 0);

// Appends an overall parity bit as coordinate n+1. Requires
// claimed_min_distance to be set, odd and finite; the result has the same
// size, length n+1 and minimum distance claimed+1.
Code extend_parity(const Code& c);

// Keeps the words holding the majority value at the coordinate (ties keep 0)
// and deletes that coordinate. Size at least half, rounded up; minimum
// distance never decreases. coordinate is 1-based.
Code shorten(const Code& c, int coordinate);

// Coordinate whose majority subcode is largest (smallest coordinate on ties).
int best_shortening_coordinate(const Code& c);

}  // namespace orbitcode
