#include "doctest.h"
#include "generators.hpp"

#include <cmath>
#include <numbers>

#include "logsym/error.hpp"
#include "logsym/trigpoly.hpp"

using namespace logsym;

namespace {

std::vector<long double> random_point(int dim) {
    std::vector<long double> t(dim);
    for (auto& x : t) x = gen::uniform(0, 100000) * 2 * std::numbers::pi_v<long double> / 100000;
    return t;
}

} // namespace

TEST_CASE("pythagoras and double angles") {
    const TrigPoly s = TrigPoly::sin(0, 1), c = TrigPoly::cos(0, 1);
    CHECK(s * s + c * c == TrigPoly(1));
    CHECK(mpq_class(2) * s * c == TrigPoly::sin(0, 2));
    CHECK(c * c - s * s == TrigPoly::cos(0, 2));
    CHECK(TrigPoly::sin(0, -3) == -TrigPoly::sin(0, 3));
    CHECK(TrigPoly::cos(0, -3) == TrigPoly::cos(0, 3));
    CHECK(TrigPoly::sin(1, 0).is_zero());
}

TEST_CASE("derivatives") {
    CHECK(TrigPoly::sin(1, 3).derivative(1) == mpq_class(3) * TrigPoly::cos(1, 3));
    CHECK(TrigPoly::cos(1, 2).derivative(1) == mpq_class(-2) * TrigPoly::sin(1, 2));
    CHECK(TrigPoly::cos(1, 2).derivative(0).is_zero());
}

TEST_CASE("quarter-turn substitution") {
    const TrigPoly f = TrigPoly::cos(0, 1) * TrigPoly::sin(1, 1) + TrigPoly::sin(0, 2);
    CHECK(f.substitute(0, 0) == TrigPoly::sin(1, 1));
    CHECK(f.substitute(0, 2) == -TrigPoly::sin(1, 1));
    CHECK(f.substitute(0, 1).is_zero());
    const std::vector<int> q{2, 1};
    CHECK(f.evaluate_quarter(q) == -1);
}

TEST_CASE("division by sine") {
    const TrigPoly s = TrigPoly::sin(0, 1);
    CHECK(TrigPoly::sin(0, 2).divide_by_sin(0) == mpq_class(2) * TrigPoly::cos(0, 1));
    CHECK_THROWS_AS(TrigPoly::cos(0, 1).divide_by_sin(0), Error);
    CHECK_THROWS_AS(TrigPoly(1).divide_by_sin(0), Error);
    CHECK((1 - TrigPoly::cos(0, 2)).divide_by_sin(0) == mpq_class(2) * s);
}

TEST_CASE("text form") {
    const std::vector<std::string> names{"x", "y"};
    CHECK(TrigPoly(0).to_string(names) == "0");
    CHECK((mpq_class(1, 2) * TrigPoly::cos(0, 2) * TrigPoly::sin(1, 1) - 3).to_string(names) ==
          "-3 + 1/2*cos(2x)*sin(y)");
}

TEST_CASE("lipschitz and sup bounds") {
    const TrigPoly f = mpq_class(3) * TrigPoly::cos(0, 2) - TrigPoly::sin(0, 1) * TrigPoly::sin(1, 1);
    CHECK(f.abs_sum() == 4);
    CHECK(f.lipschitz_bound() == 8);
    CHECK(f.support() == 3u);
    CHECK(f.max_frequency() == 2);
}

TEST_CASE("algebra matches pointwise evaluation") {
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = gen::uniform(1, 4);
        const TrigPoly a = gen::trig(dim, 3), b = gen::trig(dim, 3);
        const auto t = random_point(dim);
        const long double fa = a.evaluate(t), fb = b.evaluate(t);
        CHECK(std::abs((a * b).evaluate(t) - fa * fb) < 1e-9L);
        CHECK(std::abs((a + b).evaluate(t) - (fa + fb)) < 1e-9L);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("product rule and exact division on random polynomials") {
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = gen::uniform(1, 3);
        const TrigPoly a = gen::trig(dim), b = gen::trig(dim);
        const int i = gen::uniform(0, dim - 1);
        CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
        CHECK((TrigPoly::sin(i, 1) * a).divide_by_sin(i) == a);
        const TrigPoly c = gen::trig(dim);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("coordinate remapping") {
    const TrigPoly f = TrigPoly::cos(2, 1) * TrigPoly::sin(0, 2);
    CHECK(remap_coordinates(f, {1, -1, 0}) == TrigPoly::cos(0, 1) * TrigPoly::sin(1, 2));
    CHECK_THROWS_AS(remap_coordinates(f, {-1, 0, 1}), Error);
}
