#include "orbitcode/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace orbitcode {

Permutation::Permutation(int degree) {
    if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    if (images.empty()) throw std::invalid_argument("permutation degree must be positive");
    int m = static_cast<int>(images.size());
    std::vector<char> seen(images.size(), 0);
    for (int img : images) {
        if (img < 0 || img >= m)
            throw std::invalid_argument("image " + std::to_string(img + 1) + " out of range 1.." +
                                        std::to_string(m));
        if (seen[static_cast<std::size_t>(img)])
            throw std::invalid_argument("image " + std::to_string(img + 1) +
                                        " appears twice; not a bijection");
        seen[static_cast<std::size_t>(img)] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                    " vs " + std::to_string(q.degree()) + ")");
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) images[static_cast<std::size_t>(i)] = p(q(i));
    return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) images[static_cast<std::size_t>(p(i))] = i;
    return Permutation::from_images(std::move(images));
}

Permutation parse_cycles(std::string_view text, int degree) {
    if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(degree), 0);

    std::size_t i = 0;
    auto skip_separators = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };

    skip_separators();
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument(std::string("expected '(' but found '") + text[i] +
                                        "' in cycle notation");
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip_separators();
            if (i >= text.size())
                throw std::invalid_argument("unbalanced '(' in cycle notation");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument(std::string("unexpected character '") + text[i] +
                                            "' in cycle notation");
            long point = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                point = point * 10 + (text[i] - '0');
                if (point > degree) break;
                ++i;
            }
            if (point < 1 || point > degree)
                throw std::invalid_argument("point " + std::to_string(point) +
                                            " out of range 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(point - 1)])
                throw std::invalid_argument("point " + std::to_string(point) +
                                            " repeated in cycle notation");
            used[static_cast<std::size_t>(point - 1)] = 1;
            cycle.push_back(static_cast<int>(point - 1));
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        skip_separators();
    }
    return Permutation::from_images(std::move(images));
}

std::string format_cycles(const Permutation& p) {
    std::string out;
    std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
    for (int start = 0; start < p.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || p(start) == start) continue;
        out += '(';
        int point = start;
        bool first = true;
        do {
            seen[static_cast<std::size_t>(point)] = 1;
            if (!first) out += ' ';
            out += std::to_string(point + 1);
            first = false;
            point = p(point);
        } while (point != start);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

bool is_doubleword_compatible(const Permutation& p, int n) {
    if (n < 1 || p.degree() != 2 * n)
        throw std::invalid_argument("compatibility check requires degree == 2n (degree " +
                                    std::to_string(p.degree()) + ", n " + std::to_string(n) + ")");
    for (int i = 0; i < n; ++i)
        if (std::abs(p(i) - p(n + i)) != n) return false;
    return true;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
    if (degree_ < 1) throw std::invalid_argument("group degree must be positive");
    if (generators_.empty())
        throw std::invalid_argument("group requires at least one generator (use the identity "
                                    "for the trivial group)");
    for (const auto& g : generators_)
        if (g.degree() != degree_)
            throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                        " does not match group degree " + std::to_string(degree_));
}

bool PermutationGroup::is_doubleword_compatible() const {
    if (degree_ % 2 != 0) return false;
    int n = degree_ / 2;
    return std::all_of(generators_.begin(), generators_.end(), [n](const Permutation& g) {
        return orbitcode::is_doubleword_compatible(g, n);
    });
}

PermutationGroup lift_coordinate_group(const std::vector<Permutation>& coordinate_perms) {
    if (coordinate_perms.empty())
        throw std::invalid_argument("lift requires at least one coordinate permutation");
    int n = coordinate_perms.front().degree();
    std::vector<Permutation> lifted;
    lifted.reserve(coordinate_perms.size());
    for (const auto& q : coordinate_perms) {
        if (q.degree() != n)
            throw std::invalid_argument("coordinate permutations have inconsistent degrees (" +
                                        std::to_string(n) + " vs " + std::to_string(q.degree()) +
                                        ")");
        std::vector<int> images(static_cast<std::size_t>(2 * n));
        for (int i = 0; i < n; ++i) {
            images[static_cast<std::size_t>(i)] = q(i);
            images[static_cast<std::size_t>(n + i)] = q(i) + n;
        }
        lifted.push_back(Permutation::from_images(std::move(images)));
    }
    return PermutationGroup(2 * n, std::move(lifted));
}

}  // namespace orbitcode
