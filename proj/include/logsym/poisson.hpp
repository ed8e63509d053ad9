#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logsym/arrangement.hpp"
#include "logsym/decomposition.hpp"
#include "logsym/graded.hpp"

namespace logsym {

/// One member (I, J, K, L) of the index family; indices are 1-based and sorted.
struct IndexCollection {
    std::vector<int> I, J, K, L;
    int m = 0;

    friend bool operator==(const IndexCollection&, const IndexCollection&) = default;
};

/// Order by (m, I, J, K, L), sets compared as sorted sequences.
bool operator<(const IndexCollection& a, const IndexCollection& b);
std::string to_string(const IndexCollection& c);

/// Pairs whose conormal density bundles twist the coefficients of a term.
struct TwistData {
    std::vector<int> twisted_pairs;
};

struct PoissonOptions {
    /// Also require J ∩ K = ∅.
    bool strict_jk = false;
};

/// All collections with I ≠ ∅, I ∩ J = I ∩ K = ∅ and m ≤ p_max, in canonical order.
std::vector<IndexCollection> enumerate_index_sets(int k, int ell, int p_max,
                                                  const PoissonOptions& options = {});

/// {x_i, y_i : i ∈ I} ∪ {x_j : j ∈ J} ∪ {y_k : k ∈ K} ∪ {z_l : l ∈ L}, without repeats.
std::vector<std::string> collection_stratum(const IndexCollection& col, const Partition& partition);

struct PoissonTerm {
    /// Empty for the b-cohomology term.
    std::optional<IndexCollection> collection;
    std::vector<std::string> stratum;
    int shift = 0;
    /// Contribution in degrees 0..dim M.
    BettiVector dims;
    bool empty_stratum = false;
    TwistData twist;
};

struct PoissonReport {
    BettiVector total;
    std::vector<PoissonTerm> terms;
};

PoissonReport poisson_cohomology_report(const Arrangement& arr, const Partition& partition,
                                        const PoissonOptions& options = {});
BettiVector poisson_cohomology(const Arrangement& arr, const Partition& partition,
                               const PoissonOptions& options = {});

} // namespace logsym
