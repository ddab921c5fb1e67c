#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace orbitcode {

// Permutation on the points 0..degree-1. File formats, cycle notation and
// error messages all use 1-based points; the in-memory image table is 0-based.
class Permutation {
public:
    // Identity on {0..degree-1}.
    explicit Permutation(int degree);

    // Validates that images is a bijection on {0..m-1}.
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    Permutation() = default;
    std::vector<int> images_;
};

// compose(p, q)(i) = p(q(i)): q is applied first. This convention is used
// everywhere in the library.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// Parses a product of disjoint cycles, e.g. "(1 26)(2 25)" or "(1,26)(2,25)".
// Points absent from every cycle are fixed; "" and "()" denote the identity.
// Throws std::invalid_argument on out-of-range points, repeated points, or
// malformed parentheses.
Permutation parse_cycles(std::string_view text, int degree);

// Inverse serializer: parse_cycles(format_cycles(p), p.degree()) == p.
// The identity formats as "()".
std::string format_cycles(const Permutation& p);

// True iff |p(i) - p(n+i)| = n for all i in 1..n (1-based), i.e. p maps the
// complement coordinate pairs of a doubleword to complement pairs. Requires
// degree == 2n.
bool is_doubleword_compatible(const Permutation& p, int n);

class PermutationGroup {
public:
    // Validates that generators is nonempty and every generator has the
    // group degree.
    PermutationGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    // Degree is even and every generator satisfies the pairing constraint
    // for n = degree/2.
    bool is_doubleword_compatible() const;

private:
    int degree_;
    std::vector<Permutation> generators_;
};

// Lifts coordinate permutations q of degree n to doubleword permutations p of
// degree 2n defined by p(i) = q(i), p(n+i) = q(i) + n. Every lifted generator
// is doubleword-compatible.
PermutationGroup lift_coordinate_group(const std::vector<Permutation>& coordinate_perms);

}  // namespace orbitcode
