#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logsym/exterior.hpp"

namespace logsym {

enum class Verdict { True, False, Undetermined };
std::string to_string(Verdict v);

/// Outcome of certifying that a trigonometric polynomial has no zero on the torus.
struct NonvanishingCertificate {
    Verdict verdict = Verdict::Undetermined;
    /// "constant", "zero-polynomial", "lattice-zero", "sign-change", "grid" or "budget".
    std::string method;
    /// Exact zero at θ_i = quarter_turns[i]·π/2 (lattice-zero).
    std::optional<std::vector<int>> zero_witness;
    /// Two grid points with values of opposite sign (sign-change), angles in radians.
    std::optional<std::pair<std::vector<double>, std::vector<double>>> sign_witness;
    int grid_points_per_axis = 0;
    double min_abs_value = 0;
    double lipschitz = 0;
};

struct CertifyOptions {
    /// Upper bound on the number of grid evaluations before giving up.
    long max_evaluations = 4'000'000;
};

/// Decides whether f vanishes somewhere on T^dim.
///
/// Exact for constants and for zeros on the quarter-turn lattice. Otherwise a grid
/// with spacing h certifies nonvanishing when min |f| exceeds L·h/2 plus rounding,
/// L being the sup-norm Lipschitz bound Σ|c_k|·|k|₁; a certified sign change proves a zero.
NonvanishingCertificate certify_nonvanishing(const TrigPoly& f, int dim,
                                             const CertifyOptions& options = {});

struct SymplecticCertificate {
    bool closed = false;
    NonvanishingCertificate nondegenerate;
    /// Coefficient of ω^{n/2} on the top frame element.
    TrigPoly top_coefficient;
};

/// Closedness (exact) and nondegeneracy of ω^{n/2} in the log frame of `w`.
SymplecticCertificate is_log_symplectic(const LogForm& w, const CertifyOptions& options = {});

struct CosymplecticCertificate {
    bool closed = false;
    NonvanishingCertificate nonvanishing;
    int ell = 0;
    TrigPoly top_coefficient;
    bool holds() const { return closed && nonvanishing.verdict == Verdict::True; }
};

/// k closed one-forms α_i and a closed two-form β with (∧α_i) ∧ β^ℓ nowhere zero,
/// dim = k + 2ℓ. Certification happens in the frame of the inputs.
CosymplecticCertificate is_k_cosymplectic(const std::vector<LogForm>& alphas, const LogForm& beta,
                                          int dim, const CertifyOptions& options = {});

/// π^♯ = (ω^♭)^{-1}: the coordinate matrices of ω and π are inverse to each other,
/// checked as exact trigonometric identities after clearing the sin denominators.
bool verify_inverse(const LogForm& w, const Multivector& pi);

struct FixedCoordinate {
    int coord;
    bool at_pi = false; // θ = π instead of θ = 0
};

/// Restriction of a log form to the sub-torus {θ_c = 0 or π : c fixed}.
struct Restriction {
    /// Original indices of the surviving coordinates, in order.
    std::vector<int> kept;
    /// Components free of fixed log covectors, restricted.
    LogForm residual;
    /// For each non-empty G ⊆ fixed (mask in original coordinates): the (iterated)
    /// residue, i.e. the coefficient form of e_G moved to the front, restricted.
    std::map<IndexMask, LogForm> residues;
};

/// Fixed coordinates must be pole coordinates of the frame.
Restriction restrict_form(const LogForm& w, const std::vector<FixedCoordinate>& fixed);

/// Residue along {sin θ_coord = 0}: one log form on T^{n-1} per component (θ = 0, θ = π).
std::vector<LogForm> residue(const LogForm& w, int coord);

/// Names of the coordinates that survive fixing `fixed`.
std::vector<std::string> kept_names(const std::vector<std::string>& names,
                                    const std::vector<int>& kept);

} // namespace logsym
