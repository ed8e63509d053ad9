#pragma once

#include <optional>

#include "logsym/exterior.hpp"
#include "logsym/graded.hpp"

namespace logsym {

enum class ImageConvention {
    /// Image of degree p-1 truncated at cutoff minus the frequency of π.
    Shifted,
    /// Image of degree p-1 at the cutoff, intersected with the truncation.
    Intersection,
};

struct OracleOptions {
    ImageConvention image = ImageConvention::Intersection;
    /// Largest number of columns of any assembled matrix.
    long max_columns = 50'000;
};

/// Betti numbers of T^n from the de Rham complex of trigonometric polynomials with
/// per-variable frequency ≤ cutoff, one Fourier mode at a time.
BettiVector de_rham_betti_oracle(int n, int cutoff, const OracleOptions& options = {});

/// Dimension estimate for H^p_π from the complex truncated at frequency ≤ cutoff.
///
/// Kernel of d_π on degree p is taken at the cutoff. The image is either the part of
/// d_π(degree p-1 at the cutoff) inside the truncation, or the image of degree p-1 truncated
/// at cutoff minus the frequency of π, which lands inside automatically.
struct LichnerowiczEstimate {
    int degree = 0;
    int cutoff = 0;
    int image_cutoff = 0;
    long kernel_dim = 0;
    long image_rank = 0;
    long dim_estimate = 0;
    /// Same estimate at cutoff - 1.
    long previous_estimate = 0;
    bool stabilized = false;
    /// Columns of the kernel matrix.
    long columns = 0;
};

LichnerowiczEstimate truncated_lichnerowicz(const Multivector& pi, int p, int cutoff,
                                            const OracleOptions& options = {});

struct CocycleReport {
    bool closed = false;
    int cutoff = 0;
    /// X with d_π X = P and frequency ≤ cutoff, if one exists.
    std::optional<Multivector> exactness_witness;
};

CocycleReport verify_cocycle(const Multivector& pi, const Multivector& P, int cutoff,
                             const OracleOptions& options = {});

} // namespace logsym
