#include "logsym/oracle.hpp"

#include <bit>
#include <functional>
#include <map>
#include <tuple>
#include <utility>

#include "logsym/error.hpp"
#include "logsym/linalg.hpp"

namespace logsym {

namespace {

using Element = std::pair<IndexMask, TrigMonomial>;

class Basis {
public:
    int add(const Element& e) {
        auto [it, inserted] = index_.try_emplace(e, static_cast<int>(elements_.size()));
        if (inserted) elements_.push_back(e);
        return it->second;
    }
    std::optional<int> find(const Element& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    int size() const { return static_cast<int>(elements_.size()); }
    const Element& operator[](int i) const { return elements_[i]; }

private:
    std::map<Element, int> index_;
    std::vector<Element> elements_;
};

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void check_cap(long columns, const OracleOptions& options) {
    if (columns > options.max_columns)
        throw ResourceError("matrix with " + std::to_string(columns) + " columns exceeds the cap of " +
                            std::to_string(options.max_columns));
}

std::vector<IndexMask> masks_of_degree(int n, int p) {
    std::vector<IndexMask> out;
    for (IndexMask m = 0; m < (IndexMask{1} << n); ++m)
        if (std::popcount(m) == p) out.push_back(m);
    return out;
}

// All monomials with |k_i| ≤ cutoff in the first n coordinates.
std::vector<TrigMonomial> monomials(int n, int cutoff) {
    std::vector<TrigMonomial> out;
    if (cutoff < 0) return out;
    TrigMonomial m;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(m);
            return;
        }
        for (int k = -cutoff; k <= cutoff; ++k) {
            m.f[i] = static_cast<std::int16_t>(k);
            rec(i + 1);
        }
        m.f[i] = 0;
    };
    rec(0);
    return out;
}

Basis multivector_basis(int n, int p, int cutoff) {
    Basis b;
    if (p < 0 || p > n) return b;
    for (IndexMask mask : masks_of_degree(n, p))
        for (const auto& m : monomials(n, cutoff)) b.add({mask, m});
    return b;
}

// Matrix of d_π from `domain`; target elements are appended to `target`.
SparseMatrix lichnerowicz_matrix(const Multivector& pi, int p, const Basis& domain, Basis& target) {
    const int n = pi.dim();
    std::vector<std::tuple<int, int, mpq_class>> entries;
    for (int j = 0; j < domain.size(); ++j) {
        const auto& [mask, mono] = domain[j];
        Multivector x(n, p);
        x.add(mask, TrigPoly::monomial(mono, 1));
        const Multivector image = lichnerowicz(pi, x);
        for (const auto& [idx, coeff] : image.components())
            for (const auto& [m, c] : coeff.terms()) entries.emplace_back(target.add({idx, m}), j, c);
    }
    SparseMatrix a(target.size(), domain.size());
    for (const auto& [r, c, v] : entries) a.add(r, c, v);
    return a;
}

// Rows of `a` (indexed by `rows`) re-indexed into `into`; throws if a row is missing.
SparseMatrix reindex_rows(const SparseMatrix& a, const Basis& rows, const Basis& into) {
    SparseMatrix out(into.size(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [r, v] : a.column(j)) {
            auto i = into.find(rows[r]);
            if (!i) throw Error("image of the truncation leaves the kernel truncation");
            out.add(*i, j, v);
        }
    return out;
}

void check_poisson(const Multivector& pi) {
    if (pi.degree() != 2) throw InputError("a Poisson structure is a bivector");
    if (!schouten(pi, pi).is_zero()) throw InputError("[pi, pi] is not zero");
}

struct Estimate {
    long kernel_dim = 0;
    long image_rank = 0;
    long columns = 0;
};

Estimate estimate_at(const Multivector& pi, int p, int cutoff, const OracleOptions& options) {
    const int n = pi.dim();
    const int raise = pi.max_frequency();
    long per_mask = 1;
    for (int i = 0; i < n; ++i) per_mask *= 2L * cutoff + 1;
    check_cap(per_mask * binomial(n, p), options);

    const Basis space = multivector_basis(n, p, cutoff);
    Basis next;
    const SparseMatrix outgoing = lichnerowicz_matrix(pi, p, space, next);
    Estimate e;
    e.columns = space.size();
    e.kernel_dim = space.size() - rank(outgoing);
    if (options.image == ImageConvention::Shifted) {
        const Basis previous = multivector_basis(n, p - 1, cutoff - raise);
        check_cap(previous.size(), options);
        Basis landing;
        const SparseMatrix incoming = lichnerowicz_matrix(pi, p - 1, previous, landing);
        const SparseMatrix incoming_in_space = reindex_rows(incoming, landing, space);
        if (!multiply(outgoing, incoming_in_space).is_zero())
            throw Error("consecutive truncated differentials do not compose to zero");
        e.image_rank = rank(incoming_in_space);
        return e;
    }
    // dim(d V_{≤N} ∩ W_{≤N}) = rank d − rank(d followed by projection off W_{≤N}).
    const Basis previous = multivector_basis(n, p - 1, cutoff);
    check_cap(previous.size(), options);
    Basis landing;
    const SparseMatrix incoming = lichnerowicz_matrix(pi, p - 1, previous, landing);
    SparseMatrix inside(space.size(), incoming.cols());
    SparseMatrix outside(landing.size(), incoming.cols());
    for (int j = 0; j < incoming.cols(); ++j)
        for (const auto& [r, v] : incoming.column(j)) {
            if (auto i = space.find(landing[r])) inside.add(*i, j, v);
            else outside.add(r, j, v);
        }
    check_cap(landing.size(), options);
    Basis beyond;
    SparseMatrix after = lichnerowicz_matrix(pi, p, landing, beyond);
    SparseMatrix before = incoming;
    before.set_rows(landing.size());
    if (!multiply(after, before).is_zero())
        throw Error("consecutive truncated differentials do not compose to zero");
    e.image_rank = rank(incoming) - rank(outside);
    return e;
}

} // namespace

BettiVector de_rham_betti_oracle(int n, int cutoff, const OracleOptions& options) {
    if (n < 0 || n > 4) throw InputError("the de Rham oracle supports tori of dimension 0 to 4");
    if (cutoff < 1) throw InputError("cutoff must be at least 1");
    long columns = 1;
    for (int i = 0; i < n; ++i) columns *= 2L * cutoff + 1;
    check_cap(columns * binomial(n, n / 2), options);

    std::vector<mpz_class> betti(n + 1, 0);
    // Modes are vectors of absolute frequencies; d preserves them.
    std::vector<int> mode(n, 0);
    while (true) {
        std::vector<TrigMonomial> monos{TrigMonomial{}};
        for (int i = 0; i < n; ++i) {
            if (mode[i] == 0) continue;
            std::vector<TrigMonomial> grown;
            for (auto m : monos)
                for (int s : {1, -1}) {
                    m.f[i] = static_cast<std::int16_t>(s * mode[i]);
                    grown.push_back(m);
                }
            monos = std::move(grown);
        }
        std::vector<Basis> spaces(n + 2);
        for (int p = 0; p <= n; ++p)
            for (IndexMask mask : masks_of_degree(n, p))
                for (const auto& m : monos) spaces[p].add({mask, m});
        std::vector<SparseMatrix> d(n + 1);
        for (int p = 0; p <= n; ++p) {
            std::vector<std::tuple<int, int, mpq_class>> entries;
            for (int j = 0; j < spaces[p].size(); ++j) {
                const auto& [mask, mono] = spaces[p][j];
                LogForm w(n, 0, p);
                w.add(mask, TrigPoly::monomial(mono, 1));
                const LogForm dw = exterior_d(w);
                for (const auto& [idx, coeff] : dw.components())
                    for (const auto& [m, c] : coeff.terms()) {
                        auto r = spaces[p + 1].find({idx, m});
                        if (!r) throw Error("exterior derivative left its Fourier mode");
                        entries.emplace_back(*r, j, c);
                    }
            }
            d[p] = SparseMatrix(spaces[p + 1].size(), spaces[p].size());
            for (const auto& [r, c, v] : entries) d[p].add(r, c, v);
        }
        for (int p = 0; p + 1 <= n; ++p)
            if (!multiply(d[p + 1], d[p]).is_zero()) throw Error("d∘d is not zero on a Fourier mode");
        std::vector<long> ranks(n + 1);
        for (int p = 0; p <= n; ++p) ranks[p] = rank(d[p]);
        for (int p = 0; p <= n; ++p)
            betti[p] += spaces[p].size() - ranks[p] - (p > 0 ? ranks[p - 1] : 0);

        int i = 0;
        while (i < n && ++mode[i] > cutoff) mode[i++] = 0;
        if (i == n) break;
    }
    return BettiVector(std::move(betti));
}

LichnerowiczEstimate truncated_lichnerowicz(const Multivector& pi, int p, int cutoff, const OracleOptions& options) {
    check_poisson(pi);
    if (cutoff < 1) throw InputError("cutoff must be at least 1");
    if (p < 0 || p > pi.dim()) throw InputError("degree outside 0..n");
    LichnerowiczEstimate out;
    out.degree = p;
    out.cutoff = cutoff;
    out.image_cutoff = cutoff - pi.max_frequency();
    const Estimate now = estimate_at(pi, p, cutoff, options);
    const Estimate before = estimate_at(pi, p, cutoff - 1, options);
    out.kernel_dim = now.kernel_dim;
    out.image_rank = now.image_rank;
    out.columns = now.columns;
    out.dim_estimate = now.kernel_dim - now.image_rank;
    out.previous_estimate = before.kernel_dim - before.image_rank;
    out.stabilized = out.dim_estimate == out.previous_estimate;
    return out;
}

CocycleReport verify_cocycle(const Multivector& pi, const Multivector& P, int cutoff, const OracleOptions& options) {
    check_poisson(pi);
    if (P.dim() != pi.dim()) throw InputError("frame mismatch: cocycle and bivector on different tori");
    if (cutoff < 0) throw InputError("cutoff must be non-negative");
    CocycleReport out;
    out.cutoff = cutoff;
    out.closed = lichnerowicz(pi, P).is_zero();
    if (!out.closed || P.degree() == 0) return out;

    const int n = pi.dim();
    long per_mask = 1;
    for (int i = 0; i < n; ++i) per_mask *= 2L * cutoff + 1;
    check_cap(per_mask * binomial(n, P.degree() - 1), options);
    const Basis domain = multivector_basis(n, P.degree() - 1, cutoff);
    Basis target;
    SparseMatrix a = lichnerowicz_matrix(pi, P.degree() - 1, domain, target);
    SparseMatrix::Column rhs;
    for (const auto& [idx, coeff] : P.components())
        for (const auto& [m, c] : coeff.terms()) rhs[target.add({idx, m})] += c;
    a.set_rows(target.size());
    const auto x = solve(a, rhs);
    if (!x) return out;
    Multivector witness(n, P.degree() - 1);
    for (int j = 0; j < domain.size(); ++j)
        if ((*x)[j] != 0) witness.add(domain[j].first, TrigPoly::monomial(domain[j].second, (*x)[j]));
    if (lichnerowicz(pi, witness) != P) throw Error("exactness witness failed verification");
    out.exactness_witness = std::move(witness);
    return out;
}

} // namespace logsym
