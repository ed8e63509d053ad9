#include "doctest.h"
#include "generators.hpp"

#include "logsym/arrangement.hpp"
#include "logsym/logcohom.hpp"

using namespace logsym;

namespace {

mpz_class binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Closed form for T^n with s coordinate divisors: Σ_j C(s,j)·2^j·C(n-j, p-j).
BettiVector torus_closed_form(int n, int s) {
    std::vector<mpz_class> out(n + 1);
    for (int p = 0; p <= n; ++p)
        for (int j = 0; j <= s; ++j) out[p] += binom(s, j) * (mpz_class(1) << j) * binom(n - j, p - j);
    return BettiVector(out);
}

} // namespace

TEST_CASE("four-torus with three coordinate hypersurfaces") {
    const Arrangement a = torus_model(4, {0, 1, 2}, {"Zx", "Zy", "Zz"});
    CHECK(b_cohomology(a) == BettiVector({1, 10, 36, 54, 27}));
}

TEST_CASE("two-torus with one hypersurface") {
    CHECK(b_cohomology(torus_model(2, {0})) == BettiVector({1, 4, 3}));
}

TEST_CASE("empty divisor gives de Rham cohomology") {
    CHECK(b_cohomology(torus_model(4, {})) == BettiVector::torus(4));
}

TEST_CASE("torus models match the closed form") {
    for (int n = 2; n <= 8; n += 2)
        for (int s = 0; s <= n && s <= 8; ++s) {
            std::vector<int> coords;
            for (int c = 0; c < s; ++c) coords.push_back(c);
            CHECK(b_cohomology(torus_model(n, coords)) == torus_closed_form(n, s));
        }
}

TEST_CASE("restricted divisors") {
    const Arrangement a = torus_model(4, {0, 1, 2}, {"Zx", "Zy", "Zz"});
    CHECK(b_cohomology_restricted(a, std::vector<std::string>{}) == BettiVector::torus(4));
    CHECK(b_cohomology_restricted(a, std::vector<std::string>{"Zx", "Zy"}) == torus_closed_form(4, 2));
    CHECK(b_cohomology_restricted(a, a.full_mask()) == b_cohomology(a));
}

TEST_CASE("total dimension is the sum over strata") {
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 * gen::uniform(1, 3);
        const int s = gen::uniform(0, std::min(n, 5));
        std::vector<int> coords;
        for (int c = 0; c < s; ++c) coords.push_back(c);
        const Arrangement a = torus_model(n, coords);
        mpz_class total = 0;
        for (const auto& st : a.strata()) total += st.betti.total();
        CHECK(b_cohomology(a).total() == total);
    }
}

TEST_CASE("empty strata contribute nothing") {
    std::vector<Hypersurface> hs{{"A", {}, {}}, {"B", {}, {}}};
    const Arrangement a = custom_arrangement(BettiVector({1, 0, 1}), 2, hs,
                                             {{{"A"}, BettiVector({1, 1}), false},
                                              {{"B"}, BettiVector({1, 1}), false},
                                              {{"A", "B"}, {}, true}});
    // [1,0,1] + [0,1,1] + [0,1,1]
    CHECK(b_cohomology(a) == BettiVector({1, 2, 3}));
}
