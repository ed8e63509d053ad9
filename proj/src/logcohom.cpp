#include "logsym/logcohom.hpp"

#include <bit>

namespace logsym {

BettiVector b_cohomology_restricted(const Arrangement& arr, SubsetMask keep) {
    BettiVector total = arr.manifold_betti().resized(arr.manifold_dim());
    for (SubsetMask tau = keep; tau != 0; tau = (tau - 1) & keep) {
        const Stratum& s = arr.stratum(tau);
        if (s.empty) continue;
        total = direct_sum(total, shift(s.betti, std::popcount(tau)));
    }
    return total.resized(arr.manifold_dim());
}

BettiVector b_cohomology_restricted(const Arrangement& arr, const std::vector<std::string>& keep) {
    return b_cohomology_restricted(arr, arr.mask_of(keep));
}

BettiVector b_cohomology(const Arrangement& arr) {
    return b_cohomology_restricted(arr, arr.full_mask());
}

} // namespace logsym
