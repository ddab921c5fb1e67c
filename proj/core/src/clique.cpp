#include "orbitcode/clique.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace orbitcode {

namespace {

using Clock = std::chrono::steady_clock;

// Candidate sets are bitsets over order positions (position k = k-th vertex
// in the branch order).
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(int bits) : words_((bits + 63) / 64, 0) {}

    void set(int b) { words_[static_cast<std::size_t>(b >> 6)] |= std::uint64_t{1} << (b & 63); }
    void reset(int b) {
        words_[static_cast<std::size_t>(b >> 6)] &= ~(std::uint64_t{1} << (b & 63));
    }
    bool test(int b) const {
        return (words_[static_cast<std::size_t>(b >> 6)] >> (b & 63)) & 1u;
    }
    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }
    int highest() const {  // -1 when empty
        for (int w = static_cast<int>(words_.size()) - 1; w >= 0; --w)
            if (words_[static_cast<std::size_t>(w)])
                return w * 64 + 63 - std::countl_zero(words_[static_cast<std::size_t>(w)]);
        return -1;
    }
    void intersect_into(const BitSet& other, BitSet& out) const {
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
    }
    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                fn(static_cast<int>(w * 64) + b);
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

class ExactSolver {
public:
    ExactSolver(const CompatibilityGraph& g, const SolveBudget& budget)
        : graph_(g), n_(static_cast<int>(g.nodes.size())), budget_(budget) {
        if (budget_.time_limit_seconds > 0)
            deadline_ = Clock::now() +
                        std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(budget_.time_limit_seconds));
    }

    CliqueResult solve() {
        auto start = Clock::now();
        CliqueResult result;
        bool proven = true;
        if (n_ > 0) {
            order_vertices();
            run();
            proven = !aborted_;
            // Tightening only reshuffles an already-proven optimum; running
            // out of budget there keeps the incumbent and the proof.
            if (proven) tighten_lexicographic();
            result.weight = best_weight_;
            result.members.reserve(best_.size());
            for (int pos : best_) result.members.push_back(order_[static_cast<std::size_t>(pos)]);
            std::sort(result.members.begin(), result.members.end());
        }
        result.optimal = proven;
        result.stats.nodes_expanded = nodes_;
        result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (!is_clique(graph_, result.members))
            throw std::logic_error("solver produced a non-clique");  // unreachable
        return result;
    }

private:
    // Branch order: weight descending, ties degree descending, then index.
    void order_vertices() {
        std::vector<int> degree(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j && graph_.adj.test(i, j)) ++degree[static_cast<std::size_t>(i)];
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            std::uint64_t wa = graph_.nodes[static_cast<std::size_t>(a)].weight;
            std::uint64_t wb = graph_.nodes[static_cast<std::size_t>(b)].weight;
            if (wa != wb) return wa > wb;
            if (degree[static_cast<std::size_t>(a)] != degree[static_cast<std::size_t>(b)])
                return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
            return a < b;
        });

        weight_.resize(static_cast<std::size_t>(n_));
        adj_.assign(static_cast<std::size_t>(n_), BitSet(n_));
        for (int k = 0; k < n_; ++k)
            weight_[static_cast<std::size_t>(k)] =
                graph_.nodes[static_cast<std::size_t>(order_[static_cast<std::size_t>(k)])].weight;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (graph_.adj.test(order_[static_cast<std::size_t>(a)],
                                    order_[static_cast<std::size_t>(b)])) {
                    adj_[static_cast<std::size_t>(a)].set(b);
                    adj_[static_cast<std::size_t>(b)].set(a);
                }
        cbound_.assign(static_cast<std::size_t>(n_), 0);
        pool_.assign(static_cast<std::size_t>(n_) + 1, BitSet(n_));
    }

    bool out_of_budget() {
        if (aborted_) return true;
        ++nodes_;
        if (budget_.node_limit && nodes_ > budget_.node_limit) return aborted_ = true;
        if (budget_.time_limit_seconds > 0 && (nodes_ & 1023) == 0 && Clock::now() >= deadline_)
            return aborted_ = true;
        return false;
    }

    std::uint64_t weight_sum(const BitSet& set) const {
        std::uint64_t sum = 0;
        set.for_each([&](int k) { sum += weight_[static_cast<std::size_t>(k)]; });
        return sum;
    }

    void record_if_better(std::uint64_t cw) {
        if (cw > best_weight_) {
            best_weight_ = cw;
            best_ = stack_;
        }
    }

    // Max-weight cliques extending stack_ with vertices from cand (all
    // adjacent to everything in stack_). Positions in cand are strictly below
    // every position already branched on.
    void expand(int depth, std::uint64_t cw, std::uint64_t cand_sum) {
        BitSet& cand = pool_[static_cast<std::size_t>(depth)];
        for (;;) {
            if (out_of_budget()) return;
            if (cand.empty()) {
                record_if_better(cw);
                return;
            }
            if (cw + cand_sum <= best_weight_) return;
            int v = cand.highest();
            if (cw + cbound_[static_cast<std::size_t>(v)] <= best_weight_) return;
            cand.reset(v);
            std::uint64_t wv = weight_[static_cast<std::size_t>(v)];

            BitSet& next = pool_[static_cast<std::size_t>(depth + 1)];
            cand.intersect_into(adj_[static_cast<std::size_t>(v)], next);
            stack_.push_back(v);
            if (next.empty())
                record_if_better(cw + wv);
            else
                expand(depth + 1, cw + wv, weight_sum(next));
            stack_.pop_back();
            if (aborted_) return;
            cand_sum -= wv;
        }
    }

    void run() {
        for (int k = 0; k < n_ && !aborted_; ++k) {
            BitSet& cand = pool_[0];
            cand = BitSet(n_);
            bool any = false;
            adj_[static_cast<std::size_t>(k)].for_each([&](int j) {
                if (j < k) {
                    cand.set(j);
                    any = true;
                }
            });
            stack_.assign(1, k);
            if (!any)
                record_if_better(weight_[static_cast<std::size_t>(k)]);
            else
                expand(0, weight_[static_cast<std::size_t>(k)], weight_sum(cand));
            stack_.clear();
            cbound_[static_cast<std::size_t>(k)] = best_weight_;
        }
    }

    // Decision search: does cand contain a clique of weight >= target?
    bool exists_clique(int depth, const BitSet& cand_in, std::uint64_t target) {
        if (target == 0) return true;
        BitSet& cand = pool_t_[static_cast<std::size_t>(depth)];
        cand = cand_in;
        std::uint64_t cand_sum = weight_sum(cand);
        for (;;) {
            if (out_of_budget()) return false;
            if (cand_sum < target) return false;
            int v = cand.highest();
            if (v < 0) return false;
            if (cbound_[static_cast<std::size_t>(v)] < target) return false;
            cand.reset(v);
            std::uint64_t wv = weight_[static_cast<std::size_t>(v)];
            if (wv >= target) return true;
            BitSet next(n_);
            cand.intersect_into(adj_[static_cast<std::size_t>(v)], next);
            if (exists_clique(depth + 1, next, target - wv)) return true;
            if (aborted_) return false;
            cand_sum -= wv;
        }
    }

    // Replace best_ by the lexicographically smallest (by original node
    // index) member set among all cliques of weight best_weight_.
    void tighten_lexicographic() {
        if (best_weight_ == 0) return;
        pool_t_.assign(static_cast<std::size_t>(n_) + 1, BitSet(n_));
        std::vector<int> by_index(static_cast<std::size_t>(n_));
        std::iota(by_index.begin(), by_index.end(), 0);  // original indices ascending
        std::vector<int> position(static_cast<std::size_t>(n_));
        for (int k = 0; k < n_; ++k) position[static_cast<std::size_t>(order_[static_cast<std::size_t>(k)])] = k;

        BitSet cand(n_);
        for (int k = 0; k < n_; ++k) cand.set(k);
        std::vector<int> chosen;
        std::uint64_t cw = 0;
        for (int original = 0; original < n_ && cw < best_weight_; ++original) {
            int k = position[static_cast<std::size_t>(original)];
            if (!cand.test(k)) continue;
            BitSet next(n_);
            cand.intersect_into(adj_[static_cast<std::size_t>(k)], next);
            std::uint64_t wv = weight_[static_cast<std::size_t>(k)];
            std::uint64_t need = best_weight_ - cw - wv;
            bool feasible = cw + wv <= best_weight_ &&
                            (need == 0 || exists_clique(0, next, need));
            if (aborted_) return;  // keep the incumbent; weight already proven
            if (feasible) {
                chosen.push_back(k);
                cw += wv;
                cand = next;
            } else {
                cand.reset(k);
            }
        }
        if (cw == best_weight_) best_ = chosen;
    }

    const CompatibilityGraph& graph_;
    int n_;
    SolveBudget budget_;
    Clock::time_point deadline_{};
    std::vector<int> order_;
    std::vector<std::uint64_t> weight_;
    std::vector<BitSet> adj_;
    std::vector<std::uint64_t> cbound_;
    std::vector<BitSet> pool_;
    std::vector<BitSet> pool_t_;
    std::vector<int> stack_;
    std::vector<int> best_;
    std::uint64_t best_weight_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

CliqueResult max_weight_clique_exact(const CompatibilityGraph& g, const SolveBudget& budget) {
    return ExactSolver(g, budget).solve();
}

CliqueResult max_weight_clique_heuristic(const CompatibilityGraph& g,
                                         const HeuristicParams& params) {
    auto start = Clock::now();
    int n = static_cast<int>(g.nodes.size());
    CliqueResult best;
    std::mt19937_64 rng(params.rng_seed);
    std::vector<int> cand, next, current;
    for (std::uint64_t it = 0; it < params.iterations && n > 0; ++it) {
        cand.resize(static_cast<std::size_t>(n));
        std::iota(cand.begin(), cand.end(), 0);
        current.clear();
        std::uint64_t cw = 0;
        while (!cand.empty()) {
            std::uint64_t total = 0;
            for (int v : cand) total += g.nodes[static_cast<std::size_t>(v)].weight;
            std::uint64_t r = rng() % total;  // weight-proportional pick
            int picked = cand.back();
            for (int v : cand) {
                std::uint64_t w = g.nodes[static_cast<std::size_t>(v)].weight;
                if (r < w) {
                    picked = v;
                    break;
                }
                r -= w;
            }
            current.push_back(picked);
            cw += g.nodes[static_cast<std::size_t>(picked)].weight;
            next.clear();
            for (int v : cand)
                if (v != picked && g.adj.test(picked, v)) next.push_back(v);
            cand.swap(next);
            ++best.stats.nodes_expanded;
        }
        if (cw > best.weight) {
            best.weight = cw;
            best.members = current;
            std::sort(best.members.begin(), best.members.end());
        }
    }
    best.optimal = false;
    best.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!is_clique(g, best.members)) throw std::logic_error("heuristic produced a non-clique");
    return best;
}

bool is_clique(const CompatibilityGraph& g, std::span<const int> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || members[i] >= static_cast<int>(g.nodes.size())) return false;
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.adj.test(members[i], members[j])) return false;
    }
    return true;
}

}  // namespace orbitcode
