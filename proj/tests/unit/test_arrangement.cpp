#include "doctest.h"

#include "logsym/arrangement.hpp"
#include "logsym/error.hpp"

using namespace logsym;

TEST_CASE("torus model strata") {
    const Arrangement a = torus_model(4, {0, 1, 2}, {"Zx", "Zy", "Zz"});
    CHECK(a.size() == 3);
    CHECK(a.manifold_betti() == BettiVector::torus(4));
    CHECK(a.stratum({"Zx"}).betti == BettiVector({2, 6, 6, 2}));
    CHECK(a.stratum({"Zx", "Zy"}).betti == BettiVector({4, 8, 4}));
    CHECK(a.stratum({"Zx", "Zy", "Zz"}).betti == BettiVector({8, 8}));
    CHECK(a.stratum({"Zx", "Zy", "Zz"}).components == 8);
    CHECK(a.stratum({"Zy", "Zx"}).dim == 2);
    CHECK(a.is_torus_model());
    CHECK(a.mask_of({"Zz"}) == 4u);
    CHECK(a.ids_of(5) == std::vector<std::string>{"Zx", "Zz"});
    CHECK_THROWS_AS(a.index_of("Zt"), InputError);
}

TEST_CASE("restriction keeps the chosen hypersurfaces") {
    const Arrangement a = torus_model(4, {0, 1, 2}, {"Zx", "Zy", "Zz"});
    const Arrangement r = a.restricted_to(a.mask_of({"Zx", "Zz"}));
    CHECK(r.size() == 2);
    CHECK(r.hypersurfaces()[1].id == "Zz");
    CHECK(r.stratum({"Zx", "Zz"}).betti == BettiVector({4, 8, 4}));
}

TEST_CASE("product renames colliding ids and offsets coordinates") {
    const Arrangement t = torus_model(2, {0}, {"Z"});
    const Arrangement p = product(t, t);
    REQUIRE(p.size() == 2);
    CHECK(p.hypersurfaces()[1].id == "Z'");
    CHECK(p.hypersurfaces()[1].coordinate == 2);
    CHECK(p.manifold_betti() == BettiVector::torus(4));
    CHECK(p.stratum({"Z", "Z'"}).betti == BettiVector({4, 8, 4}));
    const Arrangement q = product(point_arrangement(), t);
    CHECK(q.manifold_dim() == 2);
    CHECK(q.stratum({"Z"}).betti == BettiVector({2, 2}));
}

TEST_CASE("product offsets role indices") {
    std::vector<Hypersurface> hs{{"A", RoleLabel{Role::X, 1}, 0}, {"B", RoleLabel{Role::Y, 1}, 1}};
    std::vector<Stratum> strata(4);
    strata[0].betti = BettiVector::torus(2);
    strata[1].betti = BettiVector({2, 2});
    strata[2].betti = BettiVector({2, 2});
    strata[3].betti = BettiVector({4});
    const Arrangement a(2, hs, strata);
    const Arrangement p = product(a, a);
    CHECK(p.hypersurfaces()[2].id == "A'");
    CHECK(p.hypersurfaces()[2].label == RoleLabel{Role::X, 2});
    CHECK(p.hypersurfaces()[3].label == RoleLabel{Role::Y, 2});
}

TEST_CASE("role labels") {
    CHECK(parse_role("x1") == RoleLabel{Role::X, 1});
    CHECK(parse_role("z12") == RoleLabel{Role::Z, 12});
    CHECK(to_string(RoleLabel{Role::Y, 3}) == "y3");
    CHECK_THROWS_AS(parse_role("w1"), InputError);
    CHECK_THROWS_AS(parse_role("x"), InputError);
    CHECK_THROWS_AS(parse_role("x0"), InputError);
}

TEST_CASE("custom arrangement validation") {
    std::vector<Hypersurface> hs{{"A", {}, {}}, {"B", {}, {}}};
    const BettiVector s2({1, 0, 1});
    SUBCASE("complete table") {
        const Arrangement a = custom_arrangement(s2, 2, hs,
                                                 {{{"A"}, BettiVector({1, 1}), false},
                                                  {{"B"}, BettiVector({1, 1}), false},
                                                  {{"A", "B"}, BettiVector({2}), false}});
        CHECK(a.stratum({"A", "B"}).components == 2);
        CHECK_FALSE(a.is_torus_model());
    }
    SUBCASE("missing stratum") {
        CHECK_THROWS_AS(custom_arrangement(s2, 2, hs, {{{"A"}, BettiVector({1, 1}), false}}),
                        InputError);
    }
    SUBCASE("odd dimension") {
        CHECK_THROWS_AS(custom_arrangement(BettiVector({1, 0, 0, 1}), 3, {}, {}), InputError);
    }
    SUBCASE("cohomology above the stratum dimension") {
        CHECK_THROWS_AS(custom_arrangement(s2, 2, hs,
                                           {{{"A"}, BettiVector({1, 1, 1}), false},
                                            {{"B"}, BettiVector({1, 1}), false},
                                            {{"A", "B"}, BettiVector({2}), false}}),
                        InputError);
    }
    SUBCASE("monotonicity") {
        CHECK_THROWS_AS(custom_arrangement(s2, 2, hs,
                                           {{{"A"}, {}, true},
                                            {{"B"}, BettiVector({1, 1}), false},
                                            {{"A", "B"}, BettiVector({2}), false}}),
                        InputError);
    }
    SUBCASE("duplicate id") {
        std::vector<Hypersurface> dup{{"A", {}, {}}, {"A", {}, {}}};
        CHECK_THROWS_AS(custom_arrangement(s2, 2, dup, {}), InputError);
    }
}

TEST_CASE("divisor size cap") {
    std::vector<int> coords{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK_THROWS_AS(torus_model(10, coords), ResourceError);
    CHECK(torus_model(10, coords, {}, ArrangementLimits{10}).size() == 10);
}
