#pragma once

#include <string>
#include <vector>

#include "logsym/arrangement.hpp"
#include "logsym/graded.hpp"

namespace logsym {

/// Cohomology of the b-tangent (log tangent) bundle of (M, D):
/// H^p(M) ⊕ ⊕_{∅≠τ⊆D} H^{p-|τ|}(∩_{t∈τ} Z_t), for 0 ≤ p ≤ dim M.
BettiVector b_cohomology(const Arrangement& arr);

/// The same sum with the divisor replaced by the sub-divisor `keep`.
BettiVector b_cohomology_restricted(const Arrangement& arr, const std::vector<std::string>& keep);
BettiVector b_cohomology_restricted(const Arrangement& arr, SubsetMask keep);

} // namespace logsym
