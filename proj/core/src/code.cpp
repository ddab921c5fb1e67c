#include "orbitcode/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "orbitcode/parallel.hpp"

namespace orbitcode {

namespace {

// (distance, witness) ordered so the global minimum is scheduling-independent.
struct ScanResult {
    int distance = kInfiniteDistance;
    WitnessPair witnesses;

    void update(int d, std::uint64_t a, std::uint64_t b) {
        if (a > b) std::swap(a, b);
        if (d < distance ||
            (d == distance && (a < witnesses.a || (a == witnesses.a && b < witnesses.b)))) {
            distance = d;
            witnesses = {a, b};
        }
    }
    void merge(const ScanResult& other) {
        if (other.distance == kInfiniteDistance) return;
        update(other.distance, other.witnesses.a, other.witnesses.b);
    }
};

}  // namespace

Code make_code(int length, std::vector<std::uint64_t> words,
               std::optional<int> claimed_min_distance) {
    if (length < 1 || length > kMaxCodewordLength)
        throw std::invalid_argument("code length " + std::to_string(length) + " outside 1.." +
                                    std::to_string(kMaxCodewordLength));
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (length < 64 && (words[i] >> length) != 0)
            throw std::invalid_argument("word has bits beyond length " + std::to_string(length));
        if (i > 0 && words[i] == words[i - 1])
            throw std::invalid_argument("duplicate word " + Codeword(length, words[i]).to_string());
    }
    return Code{length, std::move(words), claimed_min_distance};
}

AssembledCode assemble_code(const PermutationGroup& g, std::span<const Doubleword> reps) {
    if (reps.empty()) throw std::invalid_argument("no orbit representatives");
    AssembledCode assembled;
    int n = reps.front().half_length();
    std::vector<std::uint64_t> words;
    std::vector<Doubleword> members;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].half_length() != n)
            throw std::invalid_argument("representative lengths differ");
        Orbit orbit = compute_orbit(g, reps[i], &members);
        for (std::size_t j = 0; j < i; ++j)
            if (assembled.orbits[j].rep == orbit.rep)
                throw std::invalid_argument(
                    "representatives " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                    " generate the same orbit (rep " + orbit.rep.to_string() + ")");
        assembled.orbits.push_back(orbit);
        for (const auto& m : members) words.push_back(m.codeword().value());
    }
    std::uint64_t expected = 0;
    for (const auto& orbit : assembled.orbits) expected += orbit.size;
    assembled.code = make_code(n, std::move(words));
    if (assembled.code.size() != expected)
        throw std::logic_error("assembled size does not equal the sum of orbit sizes");
    return assembled;
}

VerificationReport verify_full_pairwise(const Code& c, int threads) {
    if (c.words.empty()) throw std::invalid_argument("cannot verify an empty code");
    VerificationReport report;
    report.length = c.length;
    report.size = c.size();
    report.mode = VerifyMode::full_pairwise;
    if (c.size() < 2) return report;

    std::size_t rows = c.words.size() - 1;
    std::vector<ScanResult> row_results(rows);
    const std::uint64_t* words = c.words.data();
    std::size_t count = c.words.size();
    parallel_for(rows, threads, [&](std::uint64_t i) {
        ScanResult local;
        std::uint64_t wi = words[i];
        int best = kInfiniteDistance;
        std::size_t best_j = 0;
        for (std::size_t j = i + 1; j < count; ++j) {
            int d = std::popcount(wi ^ words[j]);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        if (best != kInfiniteDistance) local.update(best, wi, words[best_j]);
        row_results[i] = local;
    });

    ScanResult total;
    for (const auto& r : row_results) total.merge(r);
    report.min_distance = total.distance;
    report.witnesses = total.witnesses;
    return report;
}

VerificationReport verify_orbit_reduced(const PermutationGroup& g,
                                        std::span<const Doubleword> reps, int threads) {
    if (reps.empty()) throw std::invalid_argument("no orbit representatives");
    int n = reps.front().half_length();

    std::vector<std::vector<std::uint64_t>> members(reps.size());
    std::vector<Orbit> orbits;
    orbits.reserve(reps.size());
    std::vector<Doubleword> list;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].half_length() != n)
            throw std::invalid_argument("representative lengths differ");
        orbits.push_back(compute_orbit(g, reps[i], &list));
        for (std::size_t j = 0; j < i; ++j)
            if (orbits[j].rep == orbits[i].rep)
                throw std::invalid_argument(
                    "representatives " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                    " generate the same orbit (rep " + orbits[i].rep.to_string() + ")");
        members[i].reserve(list.size());
        for (const auto& m : list) members[i].push_back(m.value());
    }

    VerificationReport report;
    report.length = n;
    report.mode = VerifyMode::orbit_reduced;
    report.per_orbit = orbits;
    for (const auto& orbit : orbits) report.size += orbit.size;

    ScanResult total;
    // Intra distances: fix the seed, scan its own orbit.
    for (std::size_t i = 0; i < reps.size(); ++i) {
        std::uint64_t seed = reps[i].value();
        for (std::uint64_t m : members[i]) {
            if (m == seed) continue;
            total.update(std::popcount(seed ^ m) / 2, seed >> n, m >> n);
        }
    }
    // Inter distances per pair: larger orbit contributes its representative,
    // smaller orbit is scanned.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) pairs.emplace_back(i, j);
    std::vector<ScanResult> pair_results(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::uint64_t k) {
        auto [i, j] = pairs[k];
        std::size_t small = members[i].size() <= members[j].size() ? i : j;
        std::size_t large = small == i ? j : i;
        std::uint64_t fixed_rep = members[large].front();
        ScanResult local;
        for (std::uint64_t m : members[small])
            local.update(std::popcount(fixed_rep ^ m) / 2, fixed_rep >> n, m >> n);
        pair_results[k] = local;
    });
    for (const auto& r : pair_results) total.merge(r);

    report.min_distance = total.distance;
    report.witnesses = total.witnesses;
    return report;
}

VerificationReport verify_assembled(const PermutationGroup& g, const AssembledCode& assembled,
                                    int threads) {
    if (assembled.code.size() > 100000) {
        std::vector<Doubleword> reps;
        reps.reserve(assembled.orbits.size());
        for (const auto& orbit : assembled.orbits) reps.push_back(orbit.rep);
        return verify_orbit_reduced(g, reps, threads);
    }
    VerificationReport report = verify_full_pairwise(assembled.code, threads);
    report.per_orbit = assembled.orbits;
    return report;
}

Code extend_parity(const Code& c) {
    if (c.words.empty()) throw std::invalid_argument("cannot extend an empty code");
    if (!c.claimed_min_distance)
        throw std::invalid_argument("parity extension requires a verified minimum distance");
    int d = *c.claimed_min_distance;
    if (d == kInfiniteDistance || d % 2 == 0)
        throw std::invalid_argument("parity extension requires an odd minimum distance, got " +
                                    std::to_string(d));
    if (c.length + 1 > kMaxCodewordLength)
        throw std::invalid_argument("extended length exceeds " +
                                    std::to_string(kMaxCodewordLength));
    std::vector<std::uint64_t> words;
    words.reserve(c.words.size());
    for (std::uint64_t w : c.words)
        words.push_back((w << 1) | (static_cast<std::uint64_t>(std::popcount(w)) & 1u));
    return make_code(c.length + 1, std::move(words), d + 1);
}

Code shorten(const Code& c, int coordinate) {
    if (c.words.empty()) throw std::invalid_argument("cannot shorten an empty code");
    if (coordinate < 1 || coordinate > c.length)
        throw std::invalid_argument("coordinate " + std::to_string(coordinate) +
                                    " out of range 1.." + std::to_string(c.length));
    if (c.length == 1) throw std::invalid_argument("cannot shorten a length-1 code");
    int b = c.length - coordinate;  // bit position of the coordinate
    std::uint64_t ones = 0;
    for (std::uint64_t w : c.words) ones += (w >> b) & 1u;
    std::uint64_t zeros = c.words.size() - ones;
    std::uint64_t keep = ones > zeros ? 1 : 0;  // majority; ties keep value 0

    std::uint64_t low_mask = (std::uint64_t{1} << b) - 1;
    std::vector<std::uint64_t> words;
    words.reserve(static_cast<std::size_t>(std::max(ones, zeros)));
    for (std::uint64_t w : c.words)
        if (((w >> b) & 1u) == keep) {
            std::uint64_t high = b + 1 >= 64 ? 0 : (w >> (b + 1)) << b;
            words.push_back(high | (w & low_mask));
        }
    return make_code(c.length - 1, std::move(words), c.claimed_min_distance);
}

int best_shortening_coordinate(const Code& c) {
    if (c.words.empty()) throw std::invalid_argument("cannot shorten an empty code");
    std::uint64_t best_retained = 0;
    int best_coordinate = 1;
    for (int coordinate = 1; coordinate <= c.length; ++coordinate) {
        int b = c.length - coordinate;
        std::uint64_t ones = 0;
        for (std::uint64_t w : c.words) ones += (w >> b) & 1u;
        std::uint64_t retained = std::max(ones, c.words.size() - ones);
        if (retained > best_retained) {
            best_retained = retained;
            best_coordinate = coordinate;
        }
    }
    return best_coordinate;
}

}  // namespace orbitcode
