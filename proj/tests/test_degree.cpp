#include <doctest.h>

#include "pmap/degree.hpp"

using namespace pmap;

TEST_CASE("degree sequence derived quantities") {
    // d = {0:11, 1:1, 2:2, 3:1, 4:1}, rho = 4 (the 16-vertex example forest)
    DegreeSequence ds({{0, 11}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}, 4);
    CHECK(ds.vertices() == 16);
    CHECK(ds.edges() == 12);
    CHECK(ds.max_degree() == 4);
    CHECK(ds.sigma2_exact() == 2 * 2 + 3 * 2 * 1 + 4 * 3 * 1);  // 4 + 6 + 12
    CHECK(ds.rho() == 4);
    CHECK(ds.count(2) == 2);
    CHECK(ds.count(5) == 0);
}

TEST_CASE("degree sequence rejects inconsistent rho") {
    CHECK_THROWS_AS(DegreeSequence({{0, 2}, {2, 1}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence({{2, 1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence({}, 1), std::invalid_argument);
    // upsilon = rho + eps holds by construction on anything that validates
    DegreeSequence ok({{0, 3}, {2, 2}}, 1);
    CHECK(ok.vertices() == ok.rho() + ok.edges());
}

TEST_CASE("face degrees convert to forest degrees") {
    SUBCASE("one quadrangle") {
        FaceDegreeSequence fds({{2, 1}}, 1);
        DegreeSequence ds = face_to_forest_degrees(fds);
        CHECK(ds.count(0) == 2);
        CHECK(ds.count(2) == 1);
        CHECK(ds.rho() == 1);
        CHECK(ds.vertices() == fds.edge_count());
    }
    SUBCASE("no inner faces") {
        FaceDegreeSequence fds({}, 1);
        DegreeSequence ds = face_to_forest_degrees(fds);
        CHECK(ds.count(0) == 1);
        CHECK(ds.vertices() == 1);
    }
    SUBCASE("the five-face example") {
        FaceDegreeSequence fds({{1, 1}, {2, 2}, {3, 1}, {4, 1}}, 4);
        DegreeSequence ds = face_to_forest_degrees(fds);
        CHECK(ds.count(0) == 11);  // 4 + 0 + 2 + 2 + 3
        CHECK(fds.inner_faces() == 5);
        CHECK(ds.vertices() == fds.edge_count());
    }
}

TEST_CASE("forest counting formula") {
    CHECK(count_forests(DegreeSequence({{0, 1}}, 1)) == 1);
    CHECK(count_forests(DegreeSequence({{0, 2}, {2, 1}}, 1)) == 1);
    CHECK(count_forests(DegreeSequence({{0, 3}, {2, 2}}, 1)) == 2);
    CHECK(count_forests(DegreeSequence({{0, 2}}, 2)) == 1);
}

TEST_CASE("map counting formula") {
    CHECK(count_maps(FaceDegreeSequence({}, 1)) == 1);
    CHECK(count_maps(FaceDegreeSequence({{2, 1}}, 1)) == 2);
    CHECK(count_maps(FaceDegreeSequence({{1, 1}}, 1)) == 1);
}

TEST_CASE("labelled forest count and the pointed-map identity") {
    // #maps (d0+1) = 2 #labelled forests, on a few small instances
    const std::vector<FaceDegreeSequence> cases = {
        FaceDegreeSequence({}, 1),          FaceDegreeSequence({{2, 1}}, 1),
        FaceDegreeSequence({{1, 2}}, 1),    FaceDegreeSequence({{2, 2}}, 1),
        FaceDegreeSequence({{1, 1}}, 2),    FaceDegreeSequence({{3, 1}, {1, 1}}, 2),
    };
    for (const auto& fds : cases) {
        const DegreeSequence ds = face_to_forest_degrees(fds);
        const BigInt lhs = count_maps(fds) * BigInt(static_cast<unsigned long>(ds.count(0) + 1));
        const BigInt rhs = 2 * count_labelled_forests(ds);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sigma^2 and leaf-count inequalities when d(1) is controlled") {
    const std::vector<DegreeSequence> cases = {
        DegreeSequence({{0, 3}, {2, 2}}, 1),
        DegreeSequence({{0, 11}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}, 4),
        DegreeSequence({{0, 5}, {1, 2}, {3, 2}}, 1),
    };
    for (const auto& ds : cases) {
        const double eps = static_cast<double>(ds.edges());
        const double delta = 1.0 - static_cast<double>(ds.count(1)) / eps;
        REQUIRE(delta > 0.0);
        CHECK(ds.sigma2() >= delta * eps - 1e-9);
        CHECK(static_cast<double>(ds.count(0)) >=
              delta * static_cast<double>(ds.vertices()) / 2.0 - 1e-9);
    }
}

TEST_CASE("family generators") {
    SUBCASE("2p-angulations") {
        FamilyParams p;
        p.p = 2;
        FaceDegreeSequence quads = family_generator("2p", 5, p);
        CHECK(quads.face_counts() == FaceDegreeSequence::Counts{{2, 5}});
        CHECK(face_to_forest_degrees(quads).sigma2_exact() == 10);

        p.p = 4;
        FaceDegreeSequence octs = family_generator("2p", 3, p);
        CHECK(face_to_forest_degrees(octs).sigma2_exact() == 36);
    }
    SUBCASE("power law has the requested face count and is seed-stable") {
        FamilyParams p;
        p.alpha = 1.5;
        p.seed = 7;
        FaceDegreeSequence a = family_generator("power-law", 100, p);
        FaceDegreeSequence b = family_generator("power-law", 100, p);
        CHECK(a.inner_faces() == 100);
        CHECK(a == b);
    }
    SUBCASE("unknown family") {
        CHECK_THROWS_AS(family_generator("nope", 3), std::invalid_argument);
    }
    SUBCASE("big face") {
        FaceDegreeSequence f = family_generator("big-face", 10);
        CHECK(f.inner_faces() == 10);
        CHECK(f.face_counts().back().first == 10);
    }
}
