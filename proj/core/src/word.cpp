#include "orbitcode/word.hpp"

#include <stdexcept>

namespace orbitcode {

namespace {

std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

std::uint64_t parse_bits(std::string_view text, int max_len, const char* what) {
    if (text.empty()) throw std::invalid_argument(std::string(what) + " is empty");
    if (static_cast<int>(text.size()) > max_len)
        throw std::invalid_argument(std::string(what) + " longer than " + std::to_string(max_len) +
                                    " bits");
    std::uint64_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string(what) + " contains character '" +
                                        std::string(1, c) + "'; expected 0 or 1");
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

std::string format_bits(std::uint64_t value, int length) {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i)
        if ((value >> (length - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

}  // namespace

Codeword::Codeword(int length, std::uint64_t value) : length_(length), value_(value) {
    if (length < 1 || length > kMaxCodewordLength)
        throw std::invalid_argument("codeword length " + std::to_string(length) +
                                    " outside 1.." + std::to_string(kMaxCodewordLength));
    if (length < 64 && (value >> length) != 0)
        throw std::invalid_argument("codeword value has bits beyond length " +
                                    std::to_string(length));
}

Codeword Codeword::parse(std::string_view text) {
    std::uint64_t value = parse_bits(text, kMaxCodewordLength, "codeword");
    return Codeword(static_cast<int>(text.size()), value);
}

std::string Codeword::to_string() const { return format_bits(value_, length_); }

Doubleword Doubleword::from_codeword(const Codeword& w) {
    if (w.length() > kMaxDoublewordHalf)
        throw std::invalid_argument("doubleword half length " + std::to_string(w.length()) +
                                    " exceeds " + std::to_string(kMaxDoublewordHalf));
    int n = w.length();
    std::uint64_t value = (w.value() << n) | (~w.value() & low_mask(n));
    return Doubleword(n, value);
}

Doubleword Doubleword::from_value(int half_length, std::uint64_t value) {
    if (half_length < 1 || half_length > kMaxDoublewordHalf)
        throw std::invalid_argument("doubleword half length " + std::to_string(half_length) +
                                    " outside 1.." + std::to_string(kMaxDoublewordHalf));
    if (2 * half_length < 64 && (value >> (2 * half_length)) != 0)
        throw std::invalid_argument("doubleword value has bits beyond length " +
                                    std::to_string(2 * half_length));
    std::uint64_t mask = low_mask(half_length);
    if ((((value >> half_length) ^ value) & mask) != mask)
        throw std::invalid_argument("complement invariant violated: second half is not the "
                                    "complement of the first");
    return Doubleword(half_length, value);
}

Doubleword Doubleword::parse(std::string_view text) {
    if (text.size() % 2 != 0)
        throw std::invalid_argument("doubleword length " + std::to_string(text.size()) +
                                    " is odd");
    std::uint64_t value = parse_bits(text, 2 * kMaxDoublewordHalf, "doubleword");
    return from_value(static_cast<int>(text.size()) / 2, value);
}

std::string Doubleword::to_string() const { return format_bits(value_, length()); }

int hamming(const Codeword& a, const Codeword& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("hamming: length mismatch (" + std::to_string(a.length()) +
                                    " vs " + std::to_string(b.length()) + ")");
    return std::popcount(a.value() ^ b.value());
}

int hamming(const Doubleword& a, const Doubleword& b) {
    if (a.half_length() != b.half_length())
        throw std::invalid_argument("hamming: length mismatch (" + std::to_string(a.length()) +
                                    " vs " + std::to_string(b.length()) + ")");
    return std::popcount(a.value() ^ b.value());
}

Doubleword apply_permutation(const Permutation& p, const Doubleword& x) {
    if (p.degree() != x.length())
        throw std::invalid_argument("apply_permutation: degree " + std::to_string(p.degree()) +
                                    " does not match doubleword length " +
                                    std::to_string(x.length()));
    PermutationWordAction action(p);
    return Doubleword::from_value(x.half_length(), action.apply(x.value()));
}

PermutationWordAction::PermutationWordAction(const Permutation& p) : degree_(p.degree()) {
    if (degree_ > 64)
        throw std::invalid_argument("word action requires degree <= 64, got " +
                                    std::to_string(degree_));
    // Coordinate i (1-based) sits at bit (degree - i); moving coordinate i to
    // p(i) moves bit b to bit (degree - 1 - p(degree - 1 - b)).
    for (int b = 0; b < degree_; ++b) {
        int point = degree_ - 1 - b;
        target_[static_cast<std::size_t>(b)] =
            static_cast<std::uint8_t>(degree_ - 1 - p(point));
    }
}

}  // namespace orbitcode
