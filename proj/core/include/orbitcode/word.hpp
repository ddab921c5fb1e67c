#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "orbitcode/perm.hpp"

namespace orbitcode {

// Codewords fit one machine word.
inline constexpr int kMaxCodewordLength = 64;
// Doublewords (2n bits) also fit one machine word, so n is capped at 32 for
// everything the group acts on. Every shipped fixture has 2n <= 48.
inline constexpr int kMaxDoublewordHalf = 32;

// Binary word of length n <= 64. Coordinate i (1-based, as in all listings)
// is bit (n - i) of the value, so comparing values is the same as comparing
// the ASCII 0/1 strings.
class Codeword {
public:
    Codeword(int length, std::uint64_t value);
    static Codeword parse(std::string_view text);

    int length() const { return length_; }
    std::uint64_t value() const { return value_; }
    bool bit(int coordinate) const {  // 1-based
        return (value_ >> (length_ - coordinate)) & 1u;
    }
    int weight() const { return std::popcount(value_); }
    std::string to_string() const;

    friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
    int length_;
    std::uint64_t value_;
};

// Binary word of length 2n whose second half is the bitwise complement of the
// first: bit(n+i) = 1 - bit(i). Construction always validates the invariant.
class Doubleword {
public:
    static Doubleword from_codeword(const Codeword& w);
    // Parses a 0/1 string of even length; throws std::invalid_argument if the
    // complement invariant does not hold.
    static Doubleword parse(std::string_view text);
    static Doubleword from_value(int half_length, std::uint64_t value);

    // First-half bits; the exact inverse of from_codeword.
    Codeword codeword() const { return Codeword(half_length_, value_ >> half_length_); }

    int half_length() const { return half_length_; }  // n
    int length() const { return 2 * half_length_; }   // 2n
    std::uint64_t value() const { return value_; }
    bool bit(int coordinate) const {  // 1-based over 1..2n
        return (value_ >> (2 * half_length_ - coordinate)) & 1u;
    }
    std::string to_string() const;

    friend auto operator<=>(const Doubleword&, const Doubleword&) = default;

private:
    Doubleword(int n, std::uint64_t v) : half_length_(n), value_(v) {}
    int half_length_;
    std::uint64_t value_;
};

int hamming(const Codeword& a, const Codeword& b);
// Doubleword distance is always twice the codeword distance of the halves.
int hamming(const Doubleword& a, const Doubleword& b);

// Output bit at position p(i) equals input bit at position i. Requires
// degree(p) == 2n; throws if the result violates the complement invariant
// (which means p was not doubleword-compatible).
Doubleword apply_permutation(const Permutation& p, const Doubleword& x);

// Precomputed bit-position map of a permutation acting on packed word values;
// the fast path for orbit search. No validity checks on apply().
class PermutationWordAction {
public:
    explicit PermutationWordAction(const Permutation& p);

    std::uint64_t apply(std::uint64_t word) const {
        std::uint64_t out = 0;
        while (word) {
            int b = std::countr_zero(word);
            word &= word - 1;
            out |= std::uint64_t{1} << target_[static_cast<std::size_t>(b)];
        }
        return out;
    }
    int degree() const { return degree_; }

private:
    std::array<std::uint8_t, 64> target_{};
    int degree_;
};

}  // namespace orbitcode
