#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace logsym {

/// Maximum number of torus coordinates supported by the symbolic engine.
inline constexpr int kMaxCoords = 12;

/// A product ∏_i h_i(θ_i) of one harmonic per coordinate.
///
/// Entry k ≥ 0 encodes cos(kθ_i) (k = 0 is the constant 1); entry k < 0 encodes sin(|k|θ_i).
struct TrigMonomial {
    std::array<std::int16_t, kMaxCoords> f{};

    bool is_one() const noexcept;
    /// |k|_1 over all coordinates.
    int l1_frequency() const noexcept;
    int frequency(int coord) const noexcept { return f[coord] < 0 ? -f[coord] : f[coord]; }

    friend auto operator<=>(const TrigMonomial&, const TrigMonomial&) = default;
};

/// Real trigonometric polynomial on a torus with exact rational coefficients,
/// stored in the product basis of cos(kθ_i), sin(kθ_i). Zero terms are never stored.
class TrigPoly {
public:
    using TermMap = std::map<TrigMonomial, mpq_class>;

    TrigPoly() = default;
    TrigPoly(const mpq_class& c); // NOLINT: implicit constant
    TrigPoly(long c) : TrigPoly(mpq_class(c)) {} // NOLINT

    static TrigPoly cos(int coord, int k);
    static TrigPoly sin(int coord, int k);
    static TrigPoly monomial(const TrigMonomial& m, const mpq_class& c);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Coefficient of the constant mode (the average over the torus).
    mpq_class constant_term() const;
    bool depends_on(int coord) const noexcept;
    /// Largest |k| in coordinate `coord`.
    int frequency(int coord) const noexcept;
    /// Largest per-coordinate frequency over all coordinates (sup norm).
    int max_frequency() const noexcept;
    /// Bitmask of coordinates the polynomial depends on.
    std::uint32_t support() const noexcept;

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    TrigPoly& operator*=(const mpq_class& c);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator-(TrigPoly a) { return a *= mpq_class(-1); }
    friend TrigPoly operator*(TrigPoly a, const mpq_class& c) { return a *= c; }
    friend TrigPoly operator*(const mpq_class& c, TrigPoly a) { return a *= c; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

    /// ∂/∂θ_coord.
    TrigPoly derivative(int coord) const;
    /// Substitutes θ_coord = quarter_turns · π/2 (exact: sin and cos become 0 or ±1).
    TrigPoly substitute(int coord, int quarter_turns) const;
    /// Exact quotient by sin(θ_coord); throws Error if not divisible.
    TrigPoly divide_by_sin(int coord) const;
    /// Exact value at θ_i = quarter_turns[i] · π/2.
    mpq_class evaluate_quarter(std::span<const int> quarter_turns) const;
    /// Floating-point value at the given angles.
    long double evaluate(std::span<const long double> theta) const;
    /// Σ |c| over all terms (a sup-norm bound).
    mpq_class abs_sum() const;
    /// Σ |c|·|k|_1: Lipschitz constant with respect to the sup norm on angles.
    mpq_class lipschitz_bound() const;

    /// Text in the model-file grammar, e.g. "-3 + 1/2*cos(2x)*sin(y)".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(const TrigMonomial& m, const mpq_class& c);

    TermMap terms_;
};

/// Renames coordinates: old index i becomes new_index[i]. Coordinates mapped to -1 must
/// not occur in p.
TrigPoly remap_coordinates(const TrigPoly& p, const std::vector<int>& new_index);

std::string coordinate_name(const std::vector<std::string>& names, int coord);

} // namespace logsym
