#pragma once

#include <cstdint>
#include <vector>

#include "pmap/degree.hpp"
#include "pmap/forest.hpp"
#include "pmap/rng.hpp"

namespace pmap {

// A uniformly random ordering of the jump multiset {k-1 with multiplicity
// d(k)}; partial sums run from 0 down to -rho but need not stay above -rho.
struct Bridge {
    std::vector<std::int64_t> jumps;  // length upsilon, 1-based semantics via index+1
    std::uint32_t rho = 0;

    std::uint32_t size() const { return static_cast<std::uint32_t>(jumps.size()); }
    std::vector<std::int64_t> partial_sums() const;  // B(0..upsilon)
};

struct VervaatShift {
    std::uint32_t p = 0;  // which excess level, in {0, ..., rho-1}
    std::uint32_t i = 0;  // first hitting time of min + p, in {1, ..., upsilon}
};

Bridge sample_bridge(const DegreeSequence& ds, Rng& rng);

// The rho shift indices that turn the bridge into a first-passage bridge,
// ordered by p = 0, ..., rho-1 (index p is the first hitting time of min+p).
std::vector<std::uint32_t> good_shifts(const Bridge& b);

// Cyclic shift at the first hitting time of min + p.
LukasiewiczPath vervaat(const Bridge& b, std::uint32_t p, VervaatShift* shift = nullptr);

// Exactly uniform over the forests with census ds: bridge + uniform p + shift.
Forest sample_forest(const DegreeSequence& ds, Rng& rng);

// Member of B_k^{>=-1}: b_k = 0, increments (from an implicit 0) >= -1.
struct LabelBridge {
    std::vector<std::int64_t> values;
    std::uint32_t k() const { return static_cast<std::uint32_t>(values.size()); }
};

// Exactly uniform over the binom(2k-1, k-1) members, via a uniform
// (k-1)-subset of 2k-1 slots (stars and bars); O(k), no rejection.
LabelBridge sample_label_bridge(std::uint32_t k, Rng& rng);

struct LabelledForest {
    Forest forest;
    std::vector<std::int64_t> labels;  // [0] unused; labels[v] for v = 1..size

    std::int64_t min_label() const;
};

// Checks the bridge rule at every branch point and across the tree roots.
bool valid_labelling(const LabelledForest& lf);

LabelledForest sample_labelled_forest(const DegreeSequence& ds, Rng& rng);

// L(0..size): L(0) = 0 for the extra root, then per-vertex labels in
// lexicographic order.
std::vector<std::int64_t> label_process(const LabelledForest& lf);

// Urn draws without replacement from {k with multiplicity k d(k)}; chi(i) is
// then uniform in 1..xi(i).
struct SpineSample {
    std::vector<std::uint32_t> xi;
    std::vector<std::uint32_t> chi;
};
SpineSample sample_spine(const DegreeSequence& ds, std::uint64_t h, Rng& rng);

// (parent out-degree, child rank) pairs along a strict ancestral line.
struct ContentVector {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

    bool operator==(const ContentVector& o) const { return pairs == o.pairs; }
};

ContentVector content_of(const Forest& f, std::uint32_t x);

// The forest reduced to the given vertices and their ancestors, summarised:
// c trees, q leaves, b branch points with their original/kept child data,
// and the content pairs of the single branches in lexicographic order.
struct ReducedForest {
    struct BranchPoint {
        std::uint32_t vertex;
        std::uint32_t total_children;          // r(p), in the original forest
        std::uint32_t kept_children;           // d(p), in the reduced forest
        std::vector<std::uint32_t> positions;  // z_{p,1} < ... < z_{p,d(p)}
    };
    std::uint32_t trees = 0;          // c
    std::uint32_t leaves = 0;         // q
    std::vector<BranchPoint> branch_points;
    ContentVector content;

    std::uint32_t branch_point_count() const {
        return static_cast<std::uint32_t>(branch_points.size());
    }
};

ReducedForest reduce_forest(const Forest& f, const std::vector<std::uint32_t>& xs);

}  // namespace pmap
