#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logsym/arrangement.hpp"
#include "logsym/decomposition.hpp"
#include "logsym/exterior.hpp"
#include "logsym/parse.hpp"

namespace logsym {

enum class ModelKind { Torus, Product, Custom };
std::string to_string(ModelKind kind);

/// Expression text plus where it sits in the model file.
struct Expression {
    std::string text;
    SourceLocation at;
    /// Locations are bookkeeping only.
    friend bool operator==(const Expression& a, const Expression& b) { return a.text == b.text; }
};

struct DivisorDecl {
    std::string id;
    /// Coordinate name; torus models only.
    std::optional<std::string> coordinate;
    std::optional<RoleLabel> role;
    friend bool operator==(const DivisorDecl&, const DivisorDecl&) = default;
};

struct CustomStratum {
    std::vector<std::string> subset;
    BettiVector betti;
    bool empty = false;
    friend bool operator==(const CustomStratum&, const CustomStratum&) = default;
};

struct OracleSettings {
    int cutoff = 2;
    long max_matrix = 50'000;
    /// Degrees for the truncated Lichnerowicz estimates.
    std::vector<int> degrees{0, 1};
    friend bool operator==(const OracleSettings&, const OracleSettings&) = default;
};

struct CosymplecticInput {
    std::vector<Expression> alphas;
    std::optional<Expression> beta;
    friend bool operator==(const CosymplecticInput&, const CosymplecticInput&) = default;
};

struct ModelSpec {
    std::string name;
    ModelKind kind = ModelKind::Torus;
    int dimension = 0;
    /// Torus coordinate names (all factors concatenated for products).
    std::vector<std::string> coordinates;
    std::vector<DivisorDecl> divisor;
    std::vector<ModelSpec> factors;
    std::optional<BettiVector> manifold_betti;
    std::vector<CustomStratum> strata;
    std::optional<Expression> omega;
    std::optional<Expression> pi;
    std::optional<ClassDecomposition> decomposition;
    std::optional<CosymplecticInput> cosymplectic;
    OracleSettings oracle;

    friend bool operator==(const ModelSpec&, const ModelSpec&);
};

bool operator==(const ClassDecomposition& a, const ClassDecomposition& b);

/// Reads and validates a model file; errors carry line and column in `source`.
ModelSpec parse_model(std::string_view source);
ModelSpec load_model(const std::string& path);
/// Pretty-printed JSON that parse_model reads back to an equal spec.
std::string serialize_model(const ModelSpec& spec);

Arrangement build_arrangement(const ModelSpec& spec);
/// Coordinate names of the whole torus (products concatenate their factors).
std::vector<std::string> coordinate_names(const ModelSpec& spec);

/// ω in the frame with poles on every divisor coordinate.
std::optional<LogForm> model_form(const ModelSpec& spec);
std::optional<Multivector> model_bivector(const ModelSpec& spec);
/// Explicit cosymplectic data, in the same frame as ω.
std::vector<LogForm> model_alphas(const ModelSpec& spec);
std::optional<LogForm> model_beta(const ModelSpec& spec);

} // namespace logsym
