#include <doctest.h>

#include <set>

#include "pmap/oracle.hpp"

using namespace pmap;

TEST_CASE("forest enumeration matches the closed form") {
    const std::vector<std::pair<DegreeSequence, std::uint64_t>> cases = {
        {DegreeSequence({{0, 2}, {2, 1}}, 1), 1},
        {DegreeSequence({{0, 3}, {2, 2}}, 1), 2},
        {DegreeSequence({{0, 2}}, 2), 1},
        {DegreeSequence({{0, 4}, {1, 1}, {3, 1}}, 2), 0},  // fill from formula below
        {DegreeSequence({{0, 4}, {2, 3}}, 1), 0},
    };
    for (const auto& [ds, known] : cases) {
        std::uint64_t n = 0;
        std::set<std::vector<std::uint32_t>> distinct;
        enumerate_forests(ds, {}, [&](const Forest& f) {
            ++n;
            distinct.insert(f.parents());
            CHECK(f.degree_sequence() == ds);
        });
        CHECK(n == distinct.size());  // no duplicates
        CHECK(n == count_forests(ds).get_ui());
        if (known) CHECK(n == known);
    }
}

TEST_CASE("label bridge enumeration counts are binomials") {
    CHECK(enumerate_label_bridges(1).size() == 1);
    CHECK(enumerate_label_bridges(2).size() == 3);
    CHECK(enumerate_label_bridges(3).size() == 10);
    CHECK(enumerate_label_bridges(4).size() == 35);
    CHECK(enumerate_label_bridges(5).size() == 126);
    // no duplicates
    const auto all = enumerate_label_bridges(4);
    std::set<std::vector<std::int64_t>> s;
    for (const auto& lb : all) s.insert(lb.values);
    CHECK(s.size() == all.size());
}

TEST_CASE("labelled forest enumeration counts") {
    CHECK([] {
        std::uint64_t n = 0;
        enumerate_labelled_forests(DegreeSequence({{0, 1}}, 1), {}, [&](auto&) { ++n; });
        return n;
    }() == 1);
    std::uint64_t n = 0;
    enumerate_labelled_forests(DegreeSequence({{0, 2}, {2, 1}}, 1), {},
                               [&](const LabelledForest& lf) {
                                   ++n;
                                   CHECK(valid_labelling(lf));
                               });
    CHECK(n == 3);
    n = 0;
    enumerate_labelled_forests(DegreeSequence({{0, 3}, {2, 2}}, 1), {}, [&](auto&) { ++n; });
    CHECK(n == 18);
}

TEST_CASE("budget exceeded is reported") {
    EnumerationBudget tiny;
    tiny.max_vertices = 3;
    CHECK_THROWS_AS(
        enumerate_forests(DegreeSequence({{0, 3}, {2, 2}}, 1), tiny, [](auto&) {}),
        BudgetExceeded);
    tiny.max_vertices = 10;
    tiny.max_items = 1;
    CHECK_THROWS_AS(
        enumerate_forests(DegreeSequence({{0, 3}, {2, 2}}, 1), tiny, [](auto&) {}),
        BudgetExceeded);
}

TEST_CASE("uniformity harness") {
    std::vector<std::string> keys = {"a", "b", "c", "d"};
    SUBCASE("uniform sampler passes") {
        Rng rng(1);
        const auto rep = uniformity_test(
            [&](Rng& r) { return keys[r.below(4)]; }, keys, 20000, rng);
        CHECK(!rep.foreign_outcome);
        CHECK(rep.p_value > 0.01);
    }
    SUBCASE("planted bias fails hard") {
        Rng rng(2);
        const auto rep = uniformity_test(
            [&](Rng& r) {
                if (r.unit() < 0.2) return keys[0];
                return keys[r.below(4)];
            },
            keys, 20000, rng);
        CHECK(rep.p_value < 1e-6);
    }
    SUBCASE("foreign outcome is flagged") {
        Rng rng(3);
        const auto rep = uniformity_test([&](Rng&) { return std::string("zzz"); }, keys, 10, rng);
        CHECK(rep.foreign_outcome);
        CHECK(rep.p_value == 0.0);
    }
}

TEST_CASE("spine prefix probability") {
    const DegreeSequence ds({{0, 2}, {2, 1}}, 1);
    // urn: two balls labelled 2; P(xi=2, chi=1) = 1 * 1/2
    CHECK(spine_prefix_probability(ds, {{2, 1}}) == BigRat(1, 2));
    CHECK(spine_prefix_probability(ds, {}) == BigRat(1));
    CHECK(spine_prefix_probability(ds, {{3, 1}}) == BigRat(0));
    // two draws exhaust the urn: P = (2/2)(1/2) * (1/1)(1/2)
    CHECK(spine_prefix_probability(ds, {{2, 1}, {2, 2}}) == BigRat(1, 4));
}

TEST_CASE("spinal bound, one point: frozen example rows") {
    const DegreeSequence ds({{0, 2}, {2, 1}}, 1);
    const Lemma3Report rep = lemma3_exact_check(ds, 1, {});
    CHECK(rep.violations == 0);
    CHECK(rep.violations_unconditional == 0);
    bool found_single = false, found_empty = false;
    for (const auto& row : rep.rows) {
        if (row.content.pairs == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}}) {
            found_single = true;
            CHECK(row.lhs == BigRat(1, 3));
            // RHS = (rho + (k-1))/upsilon * P = (2/3)(1/2) = 1/3, equality
            CHECK(row.rhs_squared == BigRat(1, 9));
            CHECK(row.lhs * row.lhs == row.rhs_squared);
        }
        if (row.content.pairs.empty()) {
            found_empty = true;
            CHECK(row.lhs == BigRat(1, 3));  // P(x is the root) = rho/upsilon
            CHECK(row.rhs_squared == BigRat(1, 9));
        }
    }
    CHECK(found_single);
    CHECK(found_empty);
}

TEST_CASE("spinal bound, two points, exhaustive on a small census") {
    const DegreeSequence ds({{0, 3}, {2, 2}}, 1);
    const Lemma3Report rep = lemma3_exact_check(ds, 2, {});
    // at this size the lemma's h,q <= upsilon/4 hypothesis never holds, but
    // the bound itself is satisfied by every configuration
    CHECK(rep.checked > 0);
    CHECK(rep.skipped_hypothesis == rep.checked);
    CHECK(rep.violations == 0);
    CHECK(rep.violations_unconditional == 0);

    const Lemma3Report rep1 = lemma3_exact_check(ds, 1, {});
    CHECK(rep1.violations == 0);
    CHECK(rep1.skipped_hypothesis == 0);

    CHECK_THROWS_AS(lemma3_exact_check(DegreeSequence({{0, 2}, {1, 2}}, 2), 1, {}),
                    std::invalid_argument);
}

TEST_CASE("exact tail tables on the unique 3-vertex tree") {
    const DegreeSequence ds({{0, 2}, {2, 1}}, 1);
    const auto lr = exact_tail_table(ds, "lr", {});
    CHECK(lr.at(0) == BigRat(1, 3));
    CHECK(lr.at(1) == BigRat(2, 3));
    const auto height = exact_tail_table(ds, "height", {});
    CHECK(height.at(0) == BigRat(1, 3));
    CHECK(height.at(1) == BigRat(2, 3));
    const auto width = exact_tail_table(ds, "width", {});
    CHECK(width.at(2) == BigRat(1));
    CHECK_THROWS_AS(exact_tail_table(ds, "girth", {}), std::invalid_argument);
}
