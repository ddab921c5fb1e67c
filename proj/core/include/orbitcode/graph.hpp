#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "orbitcode/orbit.hpp"
#include "orbitcode/perm.hpp"

namespace orbitcode {

// Symmetric boolean relation over node indices, no self-loops.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(int nodes)
        : nodes_(nodes), words_per_row_((nodes + 63) / 64),
          bits_(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(words_per_row_), 0) {}

    int nodes() const { return nodes_; }
    int words_per_row() const { return words_per_row_; }

    void set(int i, int j) {
        bits_[row_offset(i) + static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
        bits_[row_offset(j) + static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
    bool test(int i, int j) const {
        return (bits_[row_offset(i) + static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
    }
    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + row_offset(i), static_cast<std::size_t>(words_per_row_)};
    }

private:
    std::size_t row_offset(int i) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(words_per_row_);
    }
    int nodes_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct GraphNode {
    std::string label;        // orbit representative bit string; may be empty for imported graphs
    std::uint64_t weight = 1; // orbit size
};

struct CompatibilityGraph {
    std::vector<GraphNode> nodes;
    AdjacencyMatrix adj;
    int target_d = 0;  // 0 when unknown (imported files)

    std::uint64_t edge_count() const;
    std::uint64_t total_weight() const;
};

// Nodes are the orbits with intra-orbit distance >= d, ordered by canonical
// representative ascending; an edge joins two orbits whose inter-orbit
// distance is >= d. Node weight is the orbit size. Orbit members are
// recomputed from the representatives; edge scans walk the smaller orbit
// against the larger orbit's representative and stop at the first pair below
// d. Throws on duplicate canonical representatives.
CompatibilityGraph build_graph(const PermutationGroup& g, std::span<const Orbit> orbits, int d,
                               int threads = 0);

// DIMACS ASCII: optional "c node <i> rep=<bits>" comment per node, then
// "p edge <nodes> <edges>", "n <i> <weight>" per node, "e <i> <j>" per edge
// with 1-based indices. An empty graph is exactly "p edge 0 0".
void write_dimacs(std::ostream& out, const CompatibilityGraph& g);

// Accepts files from this library and from other tools: weights default to 1
// when n-lines are absent, duplicate edges collapse, comments are ignored
// except for the rep mapping above. Throws FormatError-style
// std::runtime_error with 1-based line numbers on malformed input.
CompatibilityGraph read_dimacs(std::istream& in, std::string_view name = "dimacs");

}  // namespace orbitcode
