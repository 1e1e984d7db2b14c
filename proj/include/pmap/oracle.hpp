#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmap/degree.hpp"
#include "pmap/forest.hpp"
#include "pmap/sampler.hpp"

namespace pmap {

struct EnumerationBudget {
    std::uint64_t max_vertices = 10;
    std::uint64_t max_items = 50'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Every forest with census ds, exactly once, by backtracking over jump
// sequences with first-passage pruning.
void enumerate_forests(const DegreeSequence& ds, const EnumerationBudget& budget,
                       const std::function<void(const Forest&)>& fn);

std::vector<LabelBridge> enumerate_label_bridges(std::uint32_t k);

void enumerate_labelled_forests(const DegreeSequence& ds, const EnumerationBudget& budget,
                                const std::function<void(const LabelledForest&)>& fn);

// Chi-square goodness of fit of a keyed sampler against the uniform law on
// an enumerated outcome space.
struct UniformityReport {
    std::uint64_t trials = 0;
    std::size_t outcomes = 0;
    double chi2 = 0.0;
    double p_value = 0.0;
    bool foreign_outcome = false;  // sampler produced a key outside the space
    std::map<std::string, std::uint64_t> observed;
};
UniformityReport uniformity_test(const std::function<std::string(Rng&)>& draw,
                                 const std::vector<std::string>& outcome_keys,
                                 std::uint64_t trials, Rng& rng);

// Exact check of the spinal upper bound: for every realized content vector
// (and reduced-forest shape for q = 2), the enumerated probability is at most
// the closed-form right-hand side. Both sides exact rationals; irrational
// sigma powers are compared after squaring.
struct Lemma3Row {
    ContentVector content;
    std::uint32_t b = 0;  // branch points
    std::uint32_t c = 1;  // trees
    BigRat lhs;
    BigRat rhs_squared;  // squared RHS (comparison domain)
    bool hypothesis_ok = true;
    bool bound_ok = true;
};
struct Lemma3Report {
    std::vector<Lemma3Row> rows;
    std::uint64_t checked = 0;
    std::uint64_t skipped_hypothesis = 0;
    std::uint64_t violations = 0;  // among rows with hypothesis_ok
    std::uint64_t violations_unconditional = 0;
};
Lemma3Report lemma3_exact_check(const DegreeSequence& ds, std::uint32_t q,
                                const EnumerationBudget& budget);

// P(xi(i) = k_i, chi(i) = j_i for i <= h) for the without-replacement urn.
BigRat spine_prefix_probability(const DegreeSequence& ds,
                                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

// Exact pmf of a functional under uniform forest (x uniform vertex for
// per-vertex functionals). Supported: "lr", "height" (per vertex, mass
// denominators #T * upsilon), "width" (per forest, denominator #T).
std::map<std::uint64_t, BigRat> exact_tail_table(const DegreeSequence& ds,
                                                 const std::string& functional,
                                                 const EnumerationBudget& budget);

}  // namespace pmap
