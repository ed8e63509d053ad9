#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "logsym/arrangement.hpp"
#include "logsym/exterior.hpp"
#include "logsym/symcalc.hpp"

namespace logsym {

/// Class of a log 2-form split into its H²(M), H¹(Z_i) and H⁰(Z_i ∩ Z_j) parts.
struct ClassDecomposition {
    struct AClass {
        bool present = false;
        std::optional<std::string> representative;
    };
    struct BClass {
        bool nonzero = false;
        /// Keyed by the other hypersurface t: whether i_t^* b vanishes on Z ∩ Z_t.
        std::map<std::string, bool> restriction_vanishes;
        std::optional<std::string> representative;
    };
    /// Unordered pair stored in arrangement order.
    using Pair = std::pair<std::string, std::string>;

    AClass a;
    std::map<std::string, BClass> b;
    /// One scalar per connected component of Z_i ∩ Z_j.
    std::map<Pair, std::vector<mpq_class>> c;
};

/// Throws InputError for unknown ids, entries on empty intersections, or component
/// vectors whose length differs from the component count.
void validate(const ClassDecomposition& dec, const Arrangement& arr);

/// Extracts the decomposition of a log 2-form on a torus model by residues and constant
/// Fourier modes. Components of Z_i ∩ Z_j are ordered (0,0), (0,π), (π,0), (π,π).
ClassDecomposition decompose_class(const LogForm& w, const Arrangement& arr,
                                   const std::vector<std::string>& names = {});

struct Partition {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> zs;

    int k() const { return static_cast<int>(pairs.size()); }
    int ell() const { return static_cast<int>(zs.size()); }
    std::vector<std::string> ids() const;
    /// Sorts into canonical order: x < y within pairs, pairs by min id, zs by id.
    Partition canonical() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);

struct Violation {
    /// "condition-1", "condition-2", "unpaired" or "components".
    std::string clause;
    std::vector<std::string> ids;
    std::string detail;
};

struct PartitionReport {
    bool partitionable = true;
    std::vector<Violation> violations;
};

struct PartitionOptions {
    /// Require c to be nonzero on every component of the intersection.
    bool strict_components = false;
};

PartitionReport is_partitionable(const ClassDecomposition& dec, const Arrangement& arr,
                                 const PartitionOptions& options = {});

/// Throws InputError unless every b = 0 hypersurface has exactly one nonzero-c partner.
Partition derive_partition(const ClassDecomposition& dec, const Arrangement& arr,
                           const PartitionOptions& options = {});

/// Partition read from declared role labels, if every hypersurface carries one.
std::optional<Partition> partition_from_labels(const Arrangement& arr);

/// Throws InputError unless `p` covers exactly the hypersurfaces of `arr`.
void check_covers(const Partition& p, const Arrangement& arr);

Partition subpartition(const Partition& p, const std::vector<std::string>& subset);

/// Foliation at Z_s ∩ Z_t: a pair meets in a symplectic leaf (type 1); any other two
/// hypersurfaces meet in a codimension-2 foliation (type 2).
struct IntersectionType {
    std::pair<std::string, std::string> ids;
    int type = 2;
    /// Codimension of the leaves inside Z_s ∩ Z_t.
    int leaf_codimension = 2;
};

/// One entry per non-empty pairwise intersection, in arrangement order.
std::vector<IntersectionType> intersection_types(const Partition& p, const Arrangement& arr);

/// Σ e_x∧e_y + Σ e_z∧α_j + δ in the frame with poles on the partition coordinates.
/// α_j and δ must be closed, free of divisor coordinates, and each α_j must have a
/// nonzero class.
LogForm normal_form(const Partition& p, const Arrangement& arr, const std::vector<LogForm>& alphas,
                    const LogForm& delta);

struct InducedComponent {
    /// θ = 0 or π for each hypersurface of the stratum, in subset order.
    std::vector<bool> at_pi;
    std::vector<LogForm> alphas;
    LogForm beta;
    CosymplecticCertificate certificate;
};

struct InducedStructure {
    Partition subpartition;
    std::vector<std::string> subset;
    /// Surviving coordinate names.
    std::vector<std::string> names;
    std::vector<InducedComponent> components;
    bool verified() const;
};

InducedStructure induced_cosymplectic(const LogForm& w, const Arrangement& arr,
                                      const std::vector<std::string>& subset,
                                      const std::vector<std::string>& names = {},
                                      const PartitionOptions& options = {},
                                      const CertifyOptions& certify = {});

} // namespace logsym
