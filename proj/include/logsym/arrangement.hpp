#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logsym/graded.hpp"

namespace logsym {

/// Bitmask over the hypersurfaces of an arrangement (bit i = i-th hypersurface).
using SubsetMask = std::uint32_t;

enum class Role { X, Y, Z };

/// Partition role carried by a hypersurface, e.g. x1 / y1 / z2.
struct RoleLabel {
    Role role;
    int index; // 1-based pair or z index

    friend bool operator==(const RoleLabel&, const RoleLabel&) = default;
};

std::string to_string(const RoleLabel& label);
/// Parses "x1", "y2", "z3"; throws InputError otherwise.
RoleLabel parse_role(std::string_view text);

struct Hypersurface {
    std::string id;
    std::optional<RoleLabel> label;
    /// Coordinate index θ with Z = {sin θ = 0}; torus models only.
    std::optional<int> coordinate;

    friend bool operator==(const Hypersurface&, const Hypersurface&) = default;
};

/// An intersection of hypersurfaces (the manifold itself for the empty subset).
struct Stratum {
    std::vector<std::string> subset;
    BettiVector betti;
    std::uint64_t components = 0;
    int dim = 0;
    bool empty = false;
};

struct ArrangementLimits {
    std::size_t max_hypersurfaces = 8;
};

/// A compact manifold with a finite set of transversely intersecting hypersurfaces.
///
/// Every subset of hypersurfaces has exactly one stored stratum, indexed by its
/// bitmask. Instances are immutable once constructed and validated.
class Arrangement {
public:
    /// Raw constructor; validates every structural invariant.
    Arrangement(int manifold_dim, std::vector<Hypersurface> hypersurfaces,
                std::vector<Stratum> strata, const ArrangementLimits& limits = {});

    int manifold_dim() const noexcept { return dim_; }
    const BettiVector& manifold_betti() const noexcept { return strata_.front().betti; }
    const std::vector<Hypersurface>& hypersurfaces() const noexcept { return hypersurfaces_; }
    std::size_t size() const noexcept { return hypersurfaces_.size(); }
    SubsetMask full_mask() const noexcept;

    /// Position of a hypersurface; throws InputError for unknown ids.
    std::size_t index_of(std::string_view id) const;
    bool contains(std::string_view id) const noexcept;
    SubsetMask mask_of(const std::vector<std::string>& ids) const;
    std::vector<std::string> ids_of(SubsetMask mask) const;

    const Stratum& stratum(SubsetMask mask) const;
    const Stratum& stratum(const std::vector<std::string>& ids) const;
    const std::vector<Stratum>& strata() const noexcept { return strata_; }

    /// Sub-arrangement keeping only the hypersurfaces in `keep`.
    Arrangement restricted_to(SubsetMask keep) const;

    /// True when every hypersurface has a defining coordinate.
    bool is_torus_model() const noexcept;

private:
    int dim_;
    std::vector<Hypersurface> hypersurfaces_;
    std::vector<Stratum> strata_;
};

/// The n-torus with divisor {sin θ_c = 0 : c in divisor_coords}.
/// Hypersurface ids default to "Z<c>"; pass `ids` to name them.
Arrangement torus_model(int n, const std::vector<int>& divisor_coords,
                        const std::vector<std::string>& ids = {},
                        const ArrangementLimits& limits = {});

/// (M1 x M2, D1 x M2 ∪ M1 x D2). Colliding ids from `b` get primes appended;
/// coordinates and role indices of `b` are offset past those of `a`.
Arrangement product(const Arrangement& a, const Arrangement& b,
                    const ArrangementLimits& limits = {});

/// The point (dimension 0, no divisor); unit for `product`.
Arrangement point_arrangement();

struct StratumEntry {
    std::vector<std::string> subset;
    BettiVector betti;
    bool empty = false;
};

/// User-supplied Betti data. Every non-empty subset of hypersurfaces must have an entry.
Arrangement custom_arrangement(const BettiVector& manifold_betti, int dim,
                               std::vector<Hypersurface> hypersurfaces,
                               const std::vector<StratumEntry>& strata_table,
                               const ArrangementLimits& limits = {});

} // namespace logsym
