#include "orbitcode/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "orbitcode/parallel.hpp"

namespace orbitcode {

std::uint64_t CompatibilityGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (int i = 0; i < adj.nodes(); ++i)
        for (std::uint64_t word : adj.row(i)) twice += static_cast<std::uint64_t>(std::popcount(word));
    return twice / 2;
}

std::uint64_t CompatibilityGraph::total_weight() const {
    std::uint64_t total = 0;
    for (const auto& node : nodes) total += node.weight;
    return total;
}

CompatibilityGraph build_graph(const PermutationGroup& g, std::span<const Orbit> orbits, int d,
                               int threads) {
    if (d < 1) throw std::invalid_argument("target distance must be >= 1");

    std::vector<Orbit> admissible;
    for (const auto& orbit : orbits)
        if (orbit.min_distance >= d) admissible.push_back(orbit);
    std::sort(admissible.begin(), admissible.end(),
              [](const Orbit& a, const Orbit& b) { return a.rep < b.rep; });
    for (std::size_t i = 1; i < admissible.size(); ++i)
        if (admissible[i].rep == admissible[i - 1].rep)
            throw std::invalid_argument("duplicate orbit with canonical representative " +
                                        admissible[i].rep.to_string());

    int count = static_cast<int>(admissible.size());
    CompatibilityGraph graph;
    graph.target_d = d;
    graph.adj = AdjacencyMatrix(count);
    graph.nodes.reserve(admissible.size());

    std::vector<std::vector<std::uint64_t>> members(admissible.size());
    for (std::size_t i = 0; i < admissible.size(); ++i) {
        std::vector<Doubleword> list;
        Orbit recomputed = compute_orbit(g, admissible[i].rep, &list);
        if (recomputed.rep != admissible[i].rep || recomputed.size != admissible[i].size ||
            recomputed.min_distance != admissible[i].min_distance)
            throw std::invalid_argument("orbit of " + admissible[i].rep.to_string() +
                                        " does not match its metadata (stale orbit list?)");
        members[i].reserve(list.size());
        for (const auto& m : list) members[i].push_back(m.value());
        graph.nodes.push_back({admissible[i].rep.to_string(), recomputed.size});
    }

    // Pair (i, j), i < j: scan the smaller orbit against the larger one's
    // representative; stop early once a pair below d shows up. Rows hold the
    // upper triangle only.
    int dw_d = 2 * d;
    std::vector<std::vector<char>> edge_rows(members.size());
    parallel_for(members.size(), threads, [&](std::uint64_t i) {
        edge_rows[i].assign(members.size() - i - 1, 0);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto& small = members[i].size() <= members[j].size() ? members[i] : members[j];
            std::uint64_t fixed_rep = members[i].size() <= members[j].size()
                                          ? members[j].front()
                                          : members[i].front();
            bool edge = true;
            for (std::uint64_t m : small) {
                if (std::popcount(fixed_rep ^ m) < dw_d) {
                    edge = false;
                    break;
                }
            }
            edge_rows[i][j - i - 1] = edge ? 1 : 0;
        }
    });
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (edge_rows[i][j - i - 1]) graph.adj.set(static_cast<int>(i), static_cast<int>(j));
    return graph;
}

void write_dimacs(std::ostream& out, const CompatibilityGraph& g) {
    int count = static_cast<int>(g.nodes.size());
    for (int i = 0; i < count; ++i)
        if (!g.nodes[static_cast<std::size_t>(i)].label.empty())
            out << "c node " << (i + 1) << " rep=" << g.nodes[static_cast<std::size_t>(i)].label
                << "\n";
    out << "p edge " << count << ' ' << g.edge_count() << "\n";
    for (int i = 0; i < count; ++i)
        out << "n " << (i + 1) << ' ' << g.nodes[static_cast<std::size_t>(i)].weight << "\n";
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (g.adj.test(i, j)) out << "e " << (i + 1) << ' ' << (j + 1) << "\n";
}

CompatibilityGraph read_dimacs(std::istream& in, std::string_view name) {
    CompatibilityGraph graph;
    bool have_problem = false;
    std::vector<std::pair<int, std::string>> pending_labels;
    std::string line;
    int line_no = 0;

    auto fail = [&](const std::string& message) -> void {
        throw std::runtime_error(std::string(name) + ":" + std::to_string(line_no) + ": " +
                                 message);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string kind;
        fields >> kind;
        if (kind.empty()) continue;
        if (kind == "c") {
            std::string word;
            int index;
            if (fields >> word >> index && word == "node") {
                std::string rep;
                if (fields >> rep && rep.starts_with("rep="))
                    pending_labels.emplace_back(index, rep.substr(4));
            }
            continue;
        }
        if (kind == "p") {
            std::string format;
            long long nodes = -1, edges = -1;
            if (!(fields >> format >> nodes >> edges) || format != "edge" || nodes < 0 ||
                edges < 0)
                fail("expected 'p edge <nodes> <edges>'");
            if (have_problem) fail("duplicate problem line");
            have_problem = true;
            graph.nodes.assign(static_cast<std::size_t>(nodes), GraphNode{});
            graph.adj = AdjacencyMatrix(static_cast<int>(nodes));
            continue;
        }
        if (kind == "n") {
            long long index, weight;
            if (!have_problem) fail("'n' line before problem line");
            if (!(fields >> index >> weight)) fail("expected 'n <index> <weight>'");
            if (index < 1 || index > static_cast<long long>(graph.nodes.size()))
                fail("node index " + std::to_string(index) + " out of range");
            if (weight < 1) fail("node weight must be positive");
            graph.nodes[static_cast<std::size_t>(index - 1)].weight =
                static_cast<std::uint64_t>(weight);
            continue;
        }
        if (kind == "e") {
            long long a, b;
            if (!have_problem) fail("'e' line before problem line");
            if (!(fields >> a >> b)) fail("expected 'e <i> <j>'");
            if (a < 1 || a > static_cast<long long>(graph.nodes.size()) || b < 1 ||
                b > static_cast<long long>(graph.nodes.size()))
                fail("edge endpoint out of range");
            if (a == b) fail("self-loop on node " + std::to_string(a));
            graph.adj.set(static_cast<int>(a - 1), static_cast<int>(b - 1));
            continue;
        }
        fail("unknown line type '" + kind + "'");
    }
    if (!have_problem) {
        line_no = std::max(line_no, 1);
        fail("missing 'p edge' line");
    }
    for (const auto& [index, label] : pending_labels)
        if (index >= 1 && index <= static_cast<int>(graph.nodes.size()))
            graph.nodes[static_cast<std::size_t>(index - 1)].label = label;
    return graph;
}

}  // namespace orbitcode
