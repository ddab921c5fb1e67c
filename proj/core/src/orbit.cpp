#include "orbitcode/orbit.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace orbitcode {

namespace {

void require_compatible(const PermutationGroup& g, int doubleword_length) {
    if (g.degree() != doubleword_length)
        throw std::invalid_argument("group degree " + std::to_string(g.degree()) +
                                    " does not match doubleword length " +
                                    std::to_string(doubleword_length));
    if (!g.is_doubleword_compatible())
        throw std::invalid_argument("group is not doubleword-compatible");
}

std::vector<PermutationWordAction> make_actions(const PermutationGroup& g) {
    std::vector<PermutationWordAction> actions;
    actions.reserve(g.generators().size());
    for (const auto& gen : g.generators()) actions.emplace_back(gen);
    return actions;
}

struct OrbitScan {
    std::uint64_t min_value;
    std::uint64_t size;
    int min_distance;  // doubleword-domain distance to the seed, halved by callers
    std::vector<std::uint64_t> members;
};

// BFS closure of seed; members come back in discovery order, seed first.
OrbitScan scan_orbit(const std::vector<PermutationWordAction>& actions, std::uint64_t seed) {
    OrbitScan scan{seed, 0, kInfiniteDistance, {}};
    std::unordered_set<std::uint64_t> visited{seed};
    scan.members.push_back(seed);
    for (std::size_t head = 0; head < scan.members.size(); ++head) {
        std::uint64_t x = scan.members[head];
        for (const auto& action : actions) {
            std::uint64_t y = action.apply(x);
            if (visited.insert(y).second) {
                scan.members.push_back(y);
                scan.min_value = std::min(scan.min_value, y);
                scan.min_distance =
                    std::min(scan.min_distance, std::popcount(seed ^ y));
            }
        }
    }
    scan.size = scan.members.size();
    return scan;
}

}  // namespace

Orbit compute_orbit(const PermutationGroup& g, const Doubleword& seed,
                    std::vector<Doubleword>* members) {
    require_compatible(g, seed.length());
    OrbitScan scan = scan_orbit(make_actions(g), seed.value());
    if (members) {
        members->clear();
        members->reserve(scan.members.size());
        for (std::uint64_t m : scan.members)
            members->push_back(Doubleword::from_value(seed.half_length(), m));
    }
    Orbit orbit{Doubleword::from_value(seed.half_length(), scan.min_value), scan.size,
                scan.min_distance};
    if (orbit.min_distance != kInfiniteDistance) orbit.min_distance /= 2;
    return orbit;
}

int intra_orbit_min_distance(const PermutationGroup& g, const Doubleword& seed) {
    return compute_orbit(g, seed).min_distance;
}

int inter_orbit_min_distance(const PermutationGroup& g, const Doubleword& x, const Doubleword& y,
                             bool* same_orbit) {
    if (x.half_length() != y.half_length())
        throw std::invalid_argument("inter-orbit distance: doubleword lengths differ");
    require_compatible(g, x.length());
    auto actions = make_actions(g);
    OrbitScan scan = scan_orbit(actions, y.value());
    bool same = std::find(scan.members.begin(), scan.members.end(), x.value()) !=
                scan.members.end();
    if (same_orbit) *same_orbit = same;
    if (same) {
        int d = scan_orbit(actions, x.value()).min_distance;
        return d == kInfiniteDistance ? d : d / 2;
    }
    int min_distance = kInfiniteDistance;
    for (std::uint64_t m : scan.members)
        min_distance = std::min(min_distance, std::popcount(x.value() ^ m));
    return min_distance / 2;
}

std::vector<Orbit> enumerate_orbit_reps(const PermutationGroup& g,
                                        const EnumerateOptions& options) {
    if (g.degree() % 2 != 0)
        throw std::invalid_argument("group degree must be even to act on doublewords");
    int n = g.degree() / 2;
    if (n > kMaxEnumerationHalf)
        throw std::invalid_argument("enumeration requires n <= " +
                                    std::to_string(kMaxEnumerationHalf) + ", got " +
                                    std::to_string(n));
    require_compatible(g, 2 * n);
    auto actions = make_actions(g);

    std::uint64_t space = std::uint64_t{1} << n;
    std::vector<std::uint64_t> visited((space + 63) / 64, 0);
    auto mark = [&](std::uint64_t w) { visited[w >> 6] |= std::uint64_t{1} << (w & 63); };
    auto seen = [&](std::uint64_t w) {
        return (visited[w >> 6] >> (w & 63)) & 1u;
    };

    std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<Orbit> orbits;
    std::vector<std::uint64_t> queue;
    for (std::uint64_t w = 0; w < space && orbits.size() < options.max_orbits; ++w) {
        if (seen(w)) continue;
        std::uint64_t seed = (w << n) | (~w & mask);
        queue.clear();
        queue.push_back(seed);
        mark(w);
        int min_dw_distance = kInfiniteDistance;
        int min_weight = std::popcount(w);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint64_t x = queue[head];
            for (const auto& action : actions) {
                std::uint64_t y = action.apply(x);
                std::uint64_t half = y >> n;
                if (seen(half)) continue;
                mark(half);
                queue.push_back(y);
                min_dw_distance = std::min(min_dw_distance, std::popcount(seed ^ y));
                min_weight = std::min(min_weight, std::popcount(half));
            }
        }
        if (min_weight < options.weight_min || min_weight > options.weight_max) continue;
        Orbit orbit{Doubleword::from_value(n, seed), queue.size(),
                    min_dw_distance == kInfiniteDistance ? kInfiniteDistance
                                                         : min_dw_distance / 2};
        orbits.push_back(orbit);
    }
    return orbits;
}

}  // namespace orbitcode
