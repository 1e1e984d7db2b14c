#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmap/degree.hpp"

namespace pmap {

// Plane forest on vertices 1..size in lexicographic (depth-first) order.
// parent[v] == 0 marks a tree root; the artificial extra root linking the
// trees is never materialized. Children of a vertex appear in sibling order
// along the numbering. Immutable after construction.
class Forest {
public:
    Forest(std::vector<std::uint32_t> parent, std::vector<std::uint32_t> child_count,
           std::uint32_t rho);

    std::uint32_t size() const { return static_cast<std::uint32_t>(parent_.size() - 1); }
    std::uint32_t rho() const { return rho_; }

    std::uint32_t parent(std::uint32_t v) const { return parent_[v]; }
    std::uint32_t child_count(std::uint32_t v) const { return k_[v]; }
    std::uint32_t tree_index(std::uint32_t v) const { return tree_[v]; }
    // rank among siblings, 1-based; for a tree root, its rank among the roots
    std::uint32_t sibling_rank(std::uint32_t v) const { return chi_[v]; }

    std::uint32_t child(std::uint32_t v, std::uint32_t j) const {  // j in 1..k
        return kids_[kid_off_[v] + j - 1];
    }
    bool is_root(std::uint32_t v) const { return parent_[v] == 0; }
    bool is_leaf(std::uint32_t v) const { return k_[v] == 0; }

    const std::vector<std::uint32_t>& parents() const { return parent_; }
    const std::vector<std::uint32_t>& child_counts() const { return k_; }

    DegreeSequence degree_sequence() const;

    void check(std::uint32_t v) const;  // throws on invalid vertex id

private:
    std::vector<std::uint32_t> parent_;  // [0] unused
    std::vector<std::uint32_t> k_;
    std::vector<std::uint32_t> tree_;
    std::vector<std::uint32_t> chi_;
    std::vector<std::uint32_t> kids_;     // children listed per vertex (CSR)
    std::vector<std::uint32_t> kid_off_;  // offset into kids_, per vertex
    std::uint32_t rho_;
};

// Integer walk W(0..size) with W(0) = 0, increments k-1 >= -1, terminal value
// -rho reached for the first time at the last step. The jump at position j
// (1-based) is the out-degree minus one of the j-th vertex; the value "at" a
// vertex v in the sense of the encoding identities is W(v-1).
struct LukasiewiczPath {
    std::vector<std::int64_t> values;  // size + 1 entries
    std::uint32_t rho = 0;

    std::uint32_t size() const { return static_cast<std::uint32_t>(values.size() - 1); }
    std::int64_t jump(std::uint32_t j) const { return values[j] - values[j - 1]; }  // j in 1..size
};

struct PathDefect {
    std::size_t index;
    std::string reason;
};

// Returns the first defect, or nullopt if the path is a valid first-passage
// bridge from 0 to -rho with jumps >= -1.
std::optional<PathDefect> check_lukasiewicz(const std::vector<std::int64_t>& values,
                                            std::uint32_t rho);

LukasiewiczPath forest_to_lukasiewicz(const Forest& f);
Forest lukasiewicz_to_forest(const LukasiewiczPath& w);  // throws std::invalid_argument

// H(j) = generation of vertex j+1 within its own tree (roots at height 0),
// for j = 0..size-1.
struct HeightProcess {
    std::vector<std::uint32_t> values;
};
HeightProcess height_process(const Forest& f);

struct LRCounts {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    std::uint64_t lr = 0;
};
// Vertices branching off the strict ancestral line of x, within x's tree.
LRCounts lr_counts(const Forest& f, std::uint32_t x);

// Number of jumps with value in A among the first floor(r) jumps of w.
// A must be a sorted set of values >= -1.
std::uint64_t lambda_jumps(const LukasiewiczPath& w, const std::vector<std::int64_t>& A, double r);

// inf { r : Lambda_A(r) = floor(p) }; throws if floor(p) exceeds the total
// number of A-jumps.
std::uint64_t zeta_jumps(const LukasiewiczPath& w, const std::vector<std::int64_t>& A, double p);

// Deterministic structural self-audit of the path encoding: for every
// internal vertex x and every sibling pair j <= j', checks
//   W(x k_x) = W(x), W(xj') = inf over [xj, xj'] of W, j'-j = W(xj) - W(xj').
struct Lemma1Report {
    struct Violation {
        std::uint32_t x;
        std::uint32_t j;
        std::uint32_t jp;
        int identity;  // 1, 2 or 3
    };
    std::vector<Violation> violations;
    std::uint64_t pairs_checked = 0;
    bool ok() const { return violations.empty(); }
};
Lemma1Report lemma1_check(const Forest& f);

// Sparse-table range minimum over a fixed array; O(1) query after O(n log n) build.
class RangeMin {
public:
    explicit RangeMin(const std::vector<std::int64_t>& a);
    std::int64_t min(std::size_t lo, std::size_t hi) const;  // inclusive range

private:
    std::vector<std::vector<std::int64_t>> table_;
    std::vector<std::uint32_t> log2_;
};

}  // namespace pmap
