#include "logsym/symcalc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "logsym/error.hpp"

namespace logsym {

namespace {

IndexMask bit(int i) { return IndexMask{1} << i; }

constexpr int kMaxLatticeCoords = 8;

// Exact lattice search over {0, π/2, π, 3π/2}^u in the used coordinates.
std::optional<std::vector<int>> lattice_zero(const TrigPoly& f, int dim, const std::vector<int>& used) {
    if (used.size() > kMaxLatticeCoords) return std::nullopt;
    std::vector<int> q(dim, 0);
    const long total = 1L << (2 * used.size());
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int u : used) {
            q[u] = static_cast<int>(c & 3);
            c >>= 2;
        }
        if (f.evaluate_quarter(q) == 0) return q;
    }
    return std::nullopt;
}

struct GridTerm {
    double coefficient;
    std::vector<int> freq; // per used coordinate, same encoding as TrigMonomial
};

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

NonvanishingCertificate certify_nonvanishing(const TrigPoly& f, int dim, const CertifyOptions& options) {
    NonvanishingCertificate cert;
    if (f.is_zero()) {
        cert.verdict = Verdict::False;
        cert.method = "zero-polynomial";
        cert.zero_witness = std::vector<int>(dim, 0);
        return cert;
    }
    if (f.is_constant()) {
        cert.verdict = Verdict::True;
        cert.method = "constant";
        cert.min_abs_value = std::abs(f.constant_term().get_d());
        return cert;
    }
    if (f.support() & ~full_index_mask(dim)) throw InputError("polynomial uses coordinates beyond the torus");
    const std::vector<int> used = mask_indices(f.support());
    if (auto z = lattice_zero(f, dim, used)) {
        cert.verdict = Verdict::False;
        cert.method = "lattice-zero";
        cert.zero_witness = std::move(z);
        return cert;
    }

    const int u = static_cast<int>(used.size());
    std::vector<GridTerm> terms;
    for (const auto& [m, c] : f.terms()) {
        GridTerm t{c.get_d(), {}};
        for (int i : used) t.freq.push_back(m.f[i]);
        terms.push_back(std::move(t));
    }
    const double abs_sum = f.abs_sum().get_d();
    const double lipschitz = f.lipschitz_bound().get_d();
    cert.lipschitz = lipschitz;
    // Generous bound on accumulated floating-point error of one evaluation.
    const double rounding = abs_sum * 1e-12 * static_cast<double>(terms.size() * (u + 1));

    for (long m = 8;; m *= 2) {
        double points = 1;
        for (int i = 0; i < u; ++i) points *= static_cast<double>(m);
        if (points > static_cast<double>(options.max_evaluations)) break;
        std::vector<double> cos_t(m), sin_t(m);
        for (long r = 0; r < m; ++r) {
            const double a = 2 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
            cos_t[r] = std::cos(a);
            sin_t[r] = std::sin(a);
        }
        std::vector<long> idx(u, 0);
        double min_abs = std::numeric_limits<double>::infinity();
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        std::vector<long> lo_at, hi_at;
        const long n_points = static_cast<long>(points);
        for (long p = 0; p < n_points; ++p) {
            double value = 0;
            for (const auto& t : terms) {
                double v = t.coefficient;
                for (int i = 0; i < u; ++i) {
                    const int k = t.freq[i];
                    if (k == 0) continue;
                    const long r = (static_cast<long>(k < 0 ? -k : k) * idx[i]) % m;
                    v *= k > 0 ? cos_t[r] : sin_t[r];
                }
                value += v;
            }
            min_abs = std::min(min_abs, std::abs(value));
            if (value < lo) lo = value, lo_at = idx;
            if (value > hi) hi = value, hi_at = idx;
            for (int i = 0; i < u; ++i) {
                if (++idx[i] < m) break;
                idx[i] = 0;
            }
        }
        cert.grid_points_per_axis = static_cast<int>(m);
        cert.min_abs_value = min_abs;
        if (lo < -rounding && hi > rounding) {
            auto angles = [&](const std::vector<long>& at) {
                std::vector<double> theta(dim, 0.0);
                for (int i = 0; i < u; ++i)
                    theta[used[i]] = 2 * std::numbers::pi * static_cast<double>(at[i]) / static_cast<double>(m);
                return theta;
            };
            cert.verdict = Verdict::False;
            cert.method = "sign-change";
            cert.sign_witness = std::make_pair(angles(lo_at), angles(hi_at));
            return cert;
        }
        const double half_step = std::numbers::pi / static_cast<double>(m) * (1 + 1e-9);
        if (min_abs - rounding > lipschitz * half_step) {
            cert.verdict = Verdict::True;
            cert.method = "grid";
            return cert;
        }
    }
    cert.verdict = Verdict::Undetermined;
    cert.method = "budget";
    return cert;
}

SymplecticCertificate is_log_symplectic(const LogForm& w, const CertifyOptions& options) {
    if (w.degree() != 2) throw InputError("a symplectic form has degree 2");
    if (w.dim() % 2) throw InputError("log symplectic forms need an even-dimensional torus");
    SymplecticCertificate cert;
    cert.closed = exterior_d(w).is_zero();
    cert.top_coefficient = wedge_power(w, w.dim() / 2).coefficient(full_index_mask(w.dim()));
    cert.nondegenerate = certify_nonvanishing(cert.top_coefficient, w.dim(), options);
    return cert;
}

CosymplecticCertificate is_k_cosymplectic(const std::vector<LogForm>& alphas, const LogForm& beta, int dim,
                                          const CertifyOptions& options) {
    const int k = static_cast<int>(alphas.size());
    if (k > dim || (dim - k) % 2) throw InputError("dimension minus k must be even and non-negative");
    CosymplecticCertificate cert;
    cert.ell = (dim - k) / 2;
    cert.closed = true;
    LogForm top = LogForm::scalar(dim, 0, TrigPoly(1));
    for (const auto& a : alphas) {
        if (a.dim() != dim || a.degree() != 1) throw InputError("each alpha must be a one-form on the torus");
        cert.closed = cert.closed && exterior_d(a).is_zero();
        top = wedge(top, a);
    }
    if (cert.ell > 0) {
        if (beta.dim() != dim || beta.degree() != 2) throw InputError("beta must be a two-form on the torus");
        cert.closed = cert.closed && exterior_d(beta).is_zero();
        top = wedge(top, wedge_power(beta, cert.ell));
    }
    cert.top_coefficient = top.coefficient(full_index_mask(dim));
    cert.nonvanishing = certify_nonvanishing(cert.top_coefficient, dim, options);
    return cert;
}

bool verify_inverse(const LogForm& w, const Multivector& pi) {
    if (w.degree() != 2 || pi.degree() != 2) throw InputError("expected a two-form and a bivector");
    if (w.dim() != pi.dim()) throw InputError("frame mismatch: form and bivector on different tori");
    const int n = w.dim();
    const IndexMask poles = w.poles();
    auto sine_product = [&](IndexMask skip) {
        TrigPoly s(1);
        for (int l : mask_indices(poles & ~skip)) s = s * TrigPoly::sin(l, 1);
        return s;
    };
    // N = D·W with D = ∏_{poles} sin θ_l, so W·P = I becomes N·P = D·I.
    auto entry = [&](const LogForm::Components& comps, int i, int j) -> TrigPoly {
        if (i == j) return {};
        const IndexMask m = bit(i) | bit(j);
        auto it = comps.find(m);
        if (it == comps.end()) return {};
        return i < j ? it->second : -it->second;
    };
    const TrigPoly d = sine_product(0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            TrigPoly sum;
            for (int j = 0; j < n; ++j) {
                const TrigPoly wij = entry(w.components(), i, j);
                const TrigPoly pjk = entry(pi.components(), j, k);
                if (wij.is_zero() || pjk.is_zero()) continue;
                sum += wij * sine_product(bit(i) | bit(j)) * pjk;
            }
            if (sum != (i == k ? d : TrigPoly{})) return false;
        }
    }
    return true;
}

Restriction restrict_form(const LogForm& w, const std::vector<FixedCoordinate>& fixed) {
    const int n = w.dim();
    IndexMask fixed_mask = 0;
    for (const auto& f : fixed) {
        if (f.coord < 0 || f.coord >= n) throw InputError("fixed coordinate out of range");
        if (!(w.poles() & bit(f.coord))) throw InputError("can only restrict to a pole hypersurface");
        if (fixed_mask & bit(f.coord)) throw InputError("coordinate fixed twice");
        fixed_mask |= bit(f.coord);
    }
    Restriction r;
    std::vector<int> new_index(n, -1);
    for (int i = 0; i < n; ++i)
        if (!(fixed_mask & bit(i))) {
            new_index[i] = static_cast<int>(r.kept.size());
            r.kept.push_back(i);
        }
    const int m = static_cast<int>(r.kept.size());
    auto remap_mask = [&](IndexMask idx) {
        IndexMask out = 0;
        for (int i : mask_indices(idx)) out |= bit(new_index[i]);
        return out;
    };
    const IndexMask new_poles = remap_mask(w.poles() & ~fixed_mask);
    r.residual = LogForm(m, new_poles, w.degree());
    for (const auto& [idx, c] : w.components()) {
        TrigPoly f = c;
        for (const auto& fc : fixed) f = f.substitute(fc.coord, fc.at_pi ? 2 : 0);
        if (f.is_zero()) continue;
        f = remap_coordinates(f, new_index);
        const IndexMask g = idx & fixed_mask;
        const IndexMask rest = idx & ~fixed_mask;
        if (g == 0) {
            r.residual.add(remap_mask(rest), f);
            continue;
        }
        // e_idx = sign · e_G ∧ e_rest
        const int sign = wedge_sign(g, rest);
        auto it = r.residues.try_emplace(g, LogForm(m, new_poles, w.degree() - std::popcount(g))).first;
        it->second.add(remap_mask(rest), sign > 0 ? f : -f);
    }
    return r;
}

std::vector<LogForm> residue(const LogForm& w, int coord) {
    if (w.degree() < 1) throw InputError("a function has no residue");
    std::vector<LogForm> out;
    for (bool at_pi : {false, true}) {
        Restriction r = restrict_form(w, {FixedCoordinate{coord, at_pi}});
        auto it = r.residues.find(bit(coord));
        out.push_back(it != r.residues.end() ? it->second
                                             : LogForm(w.dim() - 1, r.residual.poles(), w.degree() - 1));
    }
    return out;
}

std::vector<std::string> kept_names(const std::vector<std::string>& names, const std::vector<int>& kept) {
    std::vector<std::string> out;
    for (int i : kept) out.push_back(coordinate_name(names, i));
    return out;
}

} // namespace logsym
