#include "doctest.h"
#include "generators.hpp"

#include <filesystem>

#include "logsym/error.hpp"
#include "logsym/logcohom.hpp"
#include "logsym/model.hpp"

using namespace logsym;

namespace {

const std::filesystem::path models_dir = LOGSYM_MODELS_DIR;

std::string text_of(const char* body) { return body; }

ModelSpec random_torus_spec() {
    static const std::vector<std::string> pool{"u", "v", "w", "r", "s", "q"};
    ModelSpec s;
    s.name = gen::uniform(0, 1) ? "" : "random";
    s.kind = ModelKind::Torus;
    s.dimension = 2 * gen::uniform(1, 2);
    std::vector<std::string> names = pool;
    std::shuffle(names.begin(), names.end(), gen::rng());
    names.resize(s.dimension);
    s.coordinates = names;
    const IndexMask poles = gen::subset(s.dimension, gen::uniform(0, s.dimension));
    int pair = 1;
    for (int i = 0; i < s.dimension; ++i) {
        if (!(poles >> i & 1)) continue;
        DivisorDecl d{"H" + names[i], names[i], std::nullopt};
        if (gen::uniform(0, 1)) d.role = RoleLabel{Role::Z, pair++};
        s.divisor.push_back(d);
    }
    if (gen::uniform(0, 1)) {
        const LogForm w = gen::form(s.dimension, poles, 2);
        s.omega = Expression{w.is_zero() ? "d" + names[0] + " ^ d" + names[1] : w.to_string(names), {}};
    }
    if (gen::uniform(0, 1)) {
        const Multivector p = gen::multivector(s.dimension, 2);
        if (!p.is_zero()) s.pi = Expression{p.to_string(names), {}};
    }
    if (gen::uniform(0, 1)) {
        s.oracle.cutoff = gen::uniform(1, 3);
        s.oracle.max_matrix = gen::uniform(1, 100000);
        s.oracle.degrees = {gen::uniform(0, s.dimension)};
    }
    return s;
}

ModelSpec random_custom_spec() {
    ModelSpec s;
    s.name = "custom";
    s.kind = ModelKind::Custom;
    s.dimension = 2;
    s.manifold_betti = BettiVector({1, gen::uniform(0, 4), 1});
    const int count = gen::uniform(1, 2);
    for (int i = 0; i < count; ++i) s.divisor.push_back({"D" + std::to_string(i), std::nullopt, std::nullopt});
    for (int i = 0; i < count; ++i) s.strata.push_back({{"D" + std::to_string(i)}, BettiVector({1, 1}), false});
    ClassDecomposition dec;
    dec.a.present = gen::uniform(0, 1);
    for (const auto& d : s.divisor) dec.b[d.id].nonzero = gen::uniform(0, 1);
    if (count == 2) {
        const bool empty = gen::uniform(0, 1);
        const int points = gen::uniform(1, 3);
        s.strata.push_back({{"D0", "D1"}, empty ? BettiVector{} : BettiVector({points}), empty});
        if (!empty) {
            std::vector<mpq_class> values;
            for (int k = 0; k < points; ++k) values.push_back(mpq_class(gen::uniform(-3, 3), gen::uniform(1, 3)));
            for (auto& v : values) v.canonicalize();
            dec.c[{"D0", "D1"}] = values;
            dec.b["D0"].restriction_vanishes["D1"] = gen::uniform(0, 1);
        }
    }
    s.decomposition = dec;
    return s;
}

} // namespace

TEST_CASE("shipped models load and round-trip") {
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(models_dir)) {
        if (entry.path().extension() != ".json") continue;
        ++count;
        CAPTURE(entry.path().string());
        const ModelSpec spec = load_model(entry.path().string());
        CHECK(parse_model(serialize_model(spec)) == spec);
        CHECK_NOTHROW(build_arrangement(spec));
    }
    CHECK(count >= 7);
}

TEST_CASE("round trip on generated specs") {
    for (int trial = 0; trial < 80; ++trial) {
        const ModelSpec spec = trial % 3 == 2 ? random_custom_spec() : random_torus_spec();
        const std::string text = serialize_model(spec);
        CAPTURE(text);
        const ModelSpec back = parse_model(text);
        CHECK(back == spec);
        CHECK(serialize_model(back) == text);
    }
}

TEST_CASE("the four-torus example model") {
    const ModelSpec spec = load_model((models_dir / "t4_section3.json").string());
    CHECK(spec.coordinates == std::vector<std::string>{"x", "y", "z", "t"});
    const Arrangement arr = build_arrangement(spec);
    CHECK(b_cohomology(arr) == BettiVector({1, 10, 36, 54, 27}));
    CHECK(arr.hypersurfaces()[0].label == RoleLabel{Role::X, 1});
    const LogForm w = *model_form(spec);
    CHECK(w == parse_form("dx/sin(x) ^ dy/sin(y) + dz/sin(z) ^ dt", spec.coordinates));
    CHECK(w.poles() == 0b0111);
    CHECK(spec.omega->at.line == 11);
    CHECK(spec.omega->at.column == 13);
}

TEST_CASE("products concatenate coordinates and offset labels") {
    const ModelSpec spec = load_model((models_dir / "product_t2_t2.json").string());
    CHECK(spec.dimension == 4);
    CHECK(coordinate_names(spec) == std::vector<std::string>{"x", "y", "z", "t"});
    const Arrangement arr = build_arrangement(spec);
    CHECK(arr.hypersurfaces()[2].coordinate == 2);
    CHECK(arr.hypersurfaces()[2].label == RoleLabel{Role::Z, 1});
    CHECK(model_form(spec)->poles() == 0b0111);
}

TEST_CASE("model errors") {
    auto message = [](const std::string& text) {
        try {
            parse_model(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    const std::string pole = text_of(R"J({
  "kind": "torus", "dimension": 2, "coordinates": ["x", "y"],
  "divisor": [{"coordinate": "x"}],
  "omega": "dx/sin(y) ^ dy"
})J");
    CHECK(message(pole) == "line 4, column 20: pole coordinate mismatch (at 'y')");
    CHECK_THROWS_AS(parse_model(pole), ParseError);

    CHECK(message(R"J({"kind": "torus", "dimension": 2.5})J") ==
          "dimension: decimal numbers are not supported; write a fraction");
    CHECK(message(R"J({"kind": "torus", "dimension": 2, "colour": 1})J") == "model: unknown key 'colour'");
    CHECK(message(R"J({"kind": "sphere"})J").find("expected torus, product or custom") != std::string::npos);
    CHECK(message(R"J({"kind": "torus", "dimension": 2, "divisor": [{"coordinate": "x"}]})J") ==
          "divisor: unknown coordinate 'x'");
    CHECK(message(R"J({"kind": "torus", "dimension": 3})J").find("even") != std::string::npos);
    CHECK(message(R"J({"kind": "torus", "dimension": 2, "coordinates": ["x", "y"], "omega": "dx/sin(x) ^ dy"})J") ==
          "line 1, column 72: log pole on coordinate outside the divisor (at 'x')");
    CHECK(message(R"J({"kind": "torus", "dimension": 2, "coordinates": ["x", "y"], "omega": "dx"})J").find(
              "degree 2") != std::string::npos);
    CHECK(message(R"J({"kind": "torus", "dimension": 2, "coordinates": ["x", "y"], "omega": "dq ^ dy"})J").find(
              "unknown identifier") != std::string::npos);
    CHECK(message(R"J({"kind": "custom", "dimension": 2, "manifold_betti": [1, 0, 1], "omega": "dx"})J").find(
              "torus") != std::string::npos);
    CHECK(message(R"J({"kind": "product", "factors": [{"kind": "torus", "dimension": 2}], "dimension": 4})J")
              .find("total dimension 2") != std::string::npos);
    CHECK(message(R"J({"kind": "custom", "dimension": 2, "manifold_betti": [1, 0, 1],
                      "divisor": [{"id": "A"}], "strata": [{"subset": ["A"], "betti": [1, 1]}],
                      "decomposition": {"b": {"B": true}}})J")
              .find("unknown hypersurface 'B'") != std::string::npos);
    CHECK(message(R"J({"kind": "custom", "dimension": 2, "manifold_betti": [1, 0, 1],
                      "divisor": [{"id": "A"}, {"id": "B"}],
                      "strata": [{"subset": ["A"], "betti": [1, 1]}, {"subset": ["B"], "betti": [1, 1]},
                                 {"subset": ["A", "B"], "betti": [2]}],
                      "decomposition": {"c": [{"pair": ["A", "B"], "values": ["1/2", "0.5"]}]}})J")
              .find("not a rational number") != std::string::npos);
    CHECK(message(R"J({"kind": "torus", "dimension": 2,)J").find("invalid JSON") != std::string::npos);
    CHECK_THROWS_AS(load_model("/nonexistent/model.json"), InputError);
}

TEST_CASE("valid edge cases") {
    const ModelSpec plain = parse_model(R"J({"kind": "torus", "dimension": 2, "omega": "dt1 ^ dt2"})J");
    CHECK(plain.divisor.empty());
    CHECK(plain.coordinates == std::vector<std::string>{"t1", "t2"});
    CHECK(model_form(plain)->poles() == 0);

    const ModelSpec custom = parse_model(R"J({"kind": "custom", "dimension": 2, "manifold_betti": [1, 0, 1],
        "divisor": [{"id": "A"}, {"id": "B"}],
        "strata": [{"subset": ["A"], "betti": [1, 1]}, {"subset": ["B"], "betti": [1, 1]},
                   {"subset": ["A", "B"], "betti": [2]}],
        "decomposition": {"c": [{"pair": ["B", "A"], "values": ["1/2", -1]}]}})J");
    const auto& c = custom.decomposition->c;
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->first == std::pair<std::string, std::string>{"A", "B"});
    CHECK(c.begin()->second == std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-1)});
}
