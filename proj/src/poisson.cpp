#include "logsym/poisson.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "logsym/error.hpp"
#include "logsym/logcohom.hpp"

namespace logsym {

namespace {

std::string set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

// Per pair index: 0 none, 1 in I, 2 in J, 3 in K, 4 in J and K.
void enumerate_pairs(int k, int ell, int p_max, bool strict_jk, int i, int m, std::vector<int>& role,
                     std::vector<IndexCollection>& out) {
    if (m > p_max) return;
    if (i == k) {
        if (std::find(role.begin(), role.end(), 1) == role.end()) return;
        IndexCollection base;
        for (int j = 0; j < k; ++j) {
            if (role[j] == 1) base.I.push_back(j + 1);
            if (role[j] == 2 || role[j] == 4) base.J.push_back(j + 1);
            if (role[j] == 3 || role[j] == 4) base.K.push_back(j + 1);
        }
        for (std::uint64_t lmask = 0; lmask < (std::uint64_t{1} << ell); ++lmask) {
            IndexCollection c = base;
            for (int l = 0; l < ell; ++l)
                if (lmask >> l & 1) c.L.push_back(l + 1);
            c.m = m + static_cast<int>(c.L.size());
            if (c.m <= p_max) out.push_back(std::move(c));
        }
        return;
    }
    static constexpr int weight[] = {0, 2, 1, 1, 2};
    for (int r = 0; r <= 4; ++r) {
        if (r == 4 && strict_jk) continue;
        role[i] = r;
        enumerate_pairs(k, ell, p_max, strict_jk, i + 1, m + weight[r], role, out);
    }
}

} // namespace

bool operator<(const IndexCollection& a, const IndexCollection& b) {
    return std::tie(a.m, a.I, a.J, a.K, a.L) < std::tie(b.m, b.I, b.J, b.K, b.L);
}

std::string to_string(const IndexCollection& c) {
    return "I=" + set_text(c.I) + " J=" + set_text(c.J) + " K=" + set_text(c.K) + " L=" + set_text(c.L) +
           " m=" + std::to_string(c.m);
}

std::vector<IndexCollection> enumerate_index_sets(int k, int ell, int p_max, const PoissonOptions& options) {
    if (k < 0 || ell < 0) throw InputError("k and ell must be non-negative");
    if (ell > 62) throw ResourceError("too many z-type hypersurfaces to enumerate");
    std::vector<IndexCollection> out;
    if (k == 0 || p_max < 2) return out;
    std::vector<int> role(k, 0);
    enumerate_pairs(k, ell, p_max, options.strict_jk, 0, 0, role, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> collection_stratum(const IndexCollection& col, const Partition& partition) {
    auto pair = [&](int i) -> const std::pair<std::string, std::string>& {
        if (i < 1 || i > partition.k()) throw InputError("pair index " + std::to_string(i) + " out of range");
        return partition.pairs[i - 1];
    };
    std::vector<std::string> out;
    auto put = [&](const std::string& id) {
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    };
    for (int i : col.I) put(pair(i).first), put(pair(i).second);
    for (int j : col.J) put(pair(j).first);
    for (int k : col.K) put(pair(k).second);
    for (int l : col.L) {
        if (l < 1 || l > partition.ell()) throw InputError("z index " + std::to_string(l) + " out of range");
        put(partition.zs[l - 1]);
    }
    return out;
}

PoissonReport poisson_cohomology_report(const Arrangement& arr, const Partition& partition,
                                        const PoissonOptions& options) {
    check_covers(partition, arr);
    const int dim = arr.manifold_dim();
    PoissonReport report;
    PoissonTerm bh;
    bh.dims = b_cohomology(arr).resized(dim);
    report.total = bh.dims;
    report.terms.push_back(bh);
    for (auto& col : enumerate_index_sets(partition.k(), partition.ell(), dim, options)) {
        PoissonTerm t;
        t.stratum = collection_stratum(col, partition);
        const Stratum& st = arr.stratum(t.stratum);
        t.shift = col.m;
        t.empty_stratum = st.empty;
        t.dims = st.empty ? BettiVector::zero(dim) : shift(st.betti, col.m).resized(dim);
        t.twist.twisted_pairs = col.I;
        t.collection = std::move(col);
        report.total = direct_sum(report.total, t.dims);
        report.terms.push_back(std::move(t));
    }
    report.total = report.total.resized(dim);
    return report;
}

BettiVector poisson_cohomology(const Arrangement& arr, const Partition& partition, const PoissonOptions& options) {
    return poisson_cohomology_report(arr, partition, options).total;
}

} // namespace logsym
