#include "doctest.h"
#include "generators.hpp"

#include <set>

#include "logsym/error.hpp"
#include "logsym/logcohom.hpp"
#include "logsym/poisson.hpp"

using namespace logsym;

namespace {

std::vector<int> members(unsigned mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i + 1);
    return out;
}

// Exhaustive filter over all subset quadruples.
std::vector<IndexCollection> brute_force(int k, int ell, int p_max, bool strict_jk) {
    std::vector<IndexCollection> out;
    for (unsigned i = 0; i < (1u << k); ++i)
        for (unsigned j = 0; j < (1u << k); ++j)
            for (unsigned kk = 0; kk < (1u << k); ++kk)
                for (unsigned l = 0; l < (1u << ell); ++l) {
                    if (i == 0 || (i & j) || (i & kk)) continue;
                    if (strict_jk && (j & kk)) continue;
                    IndexCollection c{members(i), members(j), members(kk), members(l), 0};
                    c.m = 2 * static_cast<int>(c.I.size()) + static_cast<int>(c.J.size() + c.K.size() + c.L.size());
                    if (c.m <= p_max) out.push_back(c);
                }
    std::sort(out.begin(), out.end());
    return out;
}

Arrangement t4_xyz() { return torus_model(4, {0, 1, 2}, {"Zx", "Zy", "Zz"}); }

} // namespace

TEST_CASE("index family examples") {
    const auto a = enumerate_index_sets(1, 1, 4);
    REQUIRE(a.size() == 2);
    CHECK(to_string(a[0]) == "I={1} J={} K={} L={} m=2");
    CHECK(to_string(a[1]) == "I={1} J={} K={} L={1} m=3");
    CHECK(enumerate_index_sets(0, 5, 10).empty());
    const auto b = enumerate_index_sets(2, 0, 2);
    REQUIRE(b.size() == 2);
    CHECK(b[0].I == std::vector<int>{1});
    CHECK(b[1].I == std::vector<int>{2});
}

TEST_CASE("J and K may share an index unless strict") {
    const auto loose = enumerate_index_sets(2, 0, 4);
    const auto strict = enumerate_index_sets(2, 0, 4, PoissonOptions{true});
    const IndexCollection overlap{{1}, {2}, {2}, {}, 4};
    CHECK(std::find(loose.begin(), loose.end(), overlap) != loose.end());
    CHECK(std::find(strict.begin(), strict.end(), overlap) == strict.end());
}

TEST_CASE("enumeration agrees with exhaustive filtering") {
    for (int k = 0; k <= 4; ++k)
        for (int ell = 0; ell <= 4; ++ell)
            for (int p = 0; p <= 12; p += 3)
                for (bool strict : {false, true})
                    CHECK(enumerate_index_sets(k, ell, p, PoissonOptions{strict}) == brute_force(k, ell, p, strict));
}

TEST_CASE("collection strata") {
    const Partition p{{{"Zx", "Zy"}}, {"Zz"}};
    CHECK(collection_stratum({{1}, {}, {}, {1}, 3}, p) == std::vector<std::string>{"Zx", "Zy", "Zz"});
    CHECK(collection_stratum({{1}, {}, {}, {}, 2}, p) == std::vector<std::string>{"Zx", "Zy"});
    const Partition two{{{"Zx1", "Zy1"}, {"Zx2", "Zy2"}}, {}};
    CHECK(collection_stratum({{1}, {2}, {}, {}, 3}, two) == std::vector<std::string>{"Zx1", "Zy1", "Zx2"});
    CHECK(collection_stratum({{1}, {2}, {2}, {}, 4}, two) ==
          std::vector<std::string>{"Zx1", "Zy1", "Zx2", "Zy2"});
    CHECK_THROWS_AS(collection_stratum({{3}, {}, {}, {}, 2}, two), InputError);
    CHECK_THROWS_AS(collection_stratum({{1}, {}, {}, {1}, 3}, two), InputError);
}

TEST_CASE("worked example on the four-torus") {
    const Partition p{{{"Zx", "Zy"}}, {"Zz"}};
    CHECK(poisson_cohomology(t4_xyz(), p) == BettiVector({1, 10, 40, 70, 39}));
    const PoissonReport r = poisson_cohomology_report(t4_xyz(), p);
    REQUIRE(r.terms.size() == 3);
    CHECK_FALSE(r.terms[0].collection);
    CHECK(r.terms[0].dims[2] == 36);
    CHECK(r.terms[1].stratum == std::vector<std::string>{"Zx", "Zy"});
    CHECK(r.terms[1].dims[2] == 4);
    CHECK(r.terms[1].twist.twisted_pairs == std::vector<int>{1});
    CHECK(r.terms[2].dims == BettiVector({0, 0, 0, 8, 8}));
}

TEST_CASE("degenerate partitions") {
    CHECK(poisson_cohomology(torus_model(4, {}), Partition{}) == BettiVector::torus(4));
    const Arrangement z = torus_model(4, {0, 2}, {"A", "B"});
    CHECK(poisson_cohomology(z, Partition{{}, {"A", "B"}}) == b_cohomology(z));
    // A single hypersurface: H^p(M) ⊕ H^{p-1}(Z).
    const Arrangement one = torus_model(2, {0});
    CHECK(poisson_cohomology(one, Partition{{}, {"Z0"}}) == BettiVector({1, 4, 3}));
    CHECK(poisson_cohomology(torus_model(2, {0, 1}), Partition{{{"Z0", "Z1"}}, {}}) == BettiVector({1, 6, 13}));
    CHECK_THROWS_AS(poisson_cohomology(z, Partition{{}, {"A"}}), InputError);
}

TEST_CASE("empty strata are reported but contribute nothing") {
    std::vector<Hypersurface> hs{{"A", {}, {}}, {"B", {}, {}}};
    const Arrangement a = custom_arrangement(BettiVector({1, 0, 1}), 2, hs,
                                             {{{"A"}, BettiVector({1, 1}), false},
                                              {{"B"}, BettiVector({1, 1}), false},
                                              {{"A", "B"}, {}, true}});
    const PoissonReport r = poisson_cohomology_report(a, Partition{{{"A", "B"}}, {}});
    REQUIRE(r.terms.size() == 2);
    CHECK(r.terms[1].empty_stratum);
    CHECK(r.terms[1].dims.is_zero());
    CHECK(r.total == b_cohomology(a));
}

TEST_CASE("Poisson cohomology dominates b-cohomology and ignores relabeling") {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 * gen::uniform(1, 4);
        const int k = gen::uniform(0, n / 2);
        const int ell = gen::uniform(0, std::min(n - 2 * k, 3));
        std::vector<int> coords;
        std::vector<std::string> ids;
        for (int c = 0; c < 2 * k + ell; ++c) {
            coords.push_back(c);
            ids.push_back("H" + std::to_string(c));
        }
        const Arrangement arr = torus_model(n, coords, ids);
        Partition p;
        for (int i = 0; i < k; ++i) p.pairs.emplace_back(ids[2 * i], ids[2 * i + 1]);
        for (int j = 0; j < ell; ++j) p.zs.push_back(ids[2 * k + j]);
        const BettiVector h = poisson_cohomology(arr, p);
        const BettiVector b = b_cohomology(arr);
        for (int d = 0; d <= n; ++d) CHECK(h[d] >= b[d]);
        Partition q = p;
        std::shuffle(q.pairs.begin(), q.pairs.end(), gen::rng());
        std::shuffle(q.zs.begin(), q.zs.end(), gen::rng());
        for (auto& pr : q.pairs)
            if (gen::uniform(0, 1)) std::swap(pr.first, pr.second);
        CHECK(poisson_cohomology(arr, q) == h);
    }
}
