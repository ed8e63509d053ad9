#include "logsym/exterior.hpp"

#include <bit>
#include <sstream>

#include "logsym/error.hpp"

namespace logsym {

namespace {

void check_dim(int dim) {
    if (dim < 0 || dim > kMaxCoords)
        throw InputError("torus dimension " + std::to_string(dim) + " is outside 0.." +
                         std::to_string(kMaxCoords));
}

IndexMask bit(int i) { return IndexMask{1} << i; }

// Right derivative ∂/∂ξ_i of ξ_I: moves ξ_i to the right end, then drops it.
int right_derivative_sign(IndexMask idx, int i) {
    return std::popcount(idx >> (i + 1)) % 2 ? -1 : 1;
}

void add_into(std::map<IndexMask, TrigPoly>& comps, IndexMask idx, const TrigPoly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = comps.try_emplace(idx, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) comps.erase(it);
    }
}

// Splits a coefficient into (sign, text) so terms print as "a - b" rather than "a + -b".
std::pair<int, std::string> coefficient_text(const TrigPoly& c,
                                             const std::vector<std::string>& names) {
    if (c.terms().size() == 1) {
        const int sign = sgn(c.terms().begin()->second) < 0 ? -1 : 1;
        const TrigPoly mag = sign < 0 ? -c : c;
        if (mag == TrigPoly(1)) return {sign, ""};
        return {sign, mag.to_string(names)};
    }
    return {1, "(" + c.to_string(names) + ")"};
}

template <class BasisText>
std::string render(const std::map<IndexMask, TrigPoly>& comps, const std::vector<std::string>& names,
                   BasisText basis_text) {
    if (comps.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : comps) {
        auto [sign, coef] = coefficient_text(c, names);
        if (first) {
            if (sign < 0) os << '-';
        } else {
            os << (sign < 0 ? " - " : " + ");
        }
        first = false;
        const std::string b = basis_text(idx);
        if (b.empty()) os << (coef.empty() ? "1" : coef);
        else if (coef.empty()) os << b;
        else os << coef << ' ' << b;
    }
    return os.str();
}

} // namespace

int wedge_sign(IndexMask a, IndexMask b) noexcept {
    if (a & b) return 0;
    int swaps = 0;
    for (IndexMask rest = b; rest; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        swaps += std::popcount(a >> (j + 1));
    }
    return swaps % 2 ? -1 : 1;
}

std::vector<int> mask_indices(IndexMask mask) {
    std::vector<int> out;
    for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
}

IndexMask full_index_mask(int dim) { return dim >= 32 ? ~IndexMask{0} : bit(dim) - 1; }

// ---------------------------------------------------------------------------
// LogForm

LogForm::LogForm(int dim, IndexMask poles, int degree) : dim_(dim), poles_(poles), degree_(degree) {
    check_dim(dim);
    if (poles & ~full_index_mask(dim)) throw InputError("pole flag outside the torus dimension");
    if (degree < 0) throw InputError("form degree out of range");
}

LogForm LogForm::scalar(int dim, IndexMask poles, const TrigPoly& f) {
    LogForm w(dim, poles, 0);
    w.add(0, f);
    return w;
}

LogForm LogForm::covector(int dim, IndexMask poles, int coord) {
    LogForm w(dim, poles, 1);
    if (coord < 0 || coord >= dim) throw InputError("coordinate out of range");
    w.add(bit(coord), TrigPoly(1));
    return w;
}

LogForm LogForm::differential(int dim, IndexMask poles, int coord) {
    LogForm w(dim, poles, 1);
    if (coord < 0 || coord >= dim) throw InputError("coordinate out of range");
    w.add(bit(coord), (poles & bit(coord)) ? TrigPoly::sin(coord, 1) : TrigPoly(1));
    return w;
}

TrigPoly LogForm::coefficient(IndexMask idx) const {
    auto it = components_.find(idx);
    return it == components_.end() ? TrigPoly{} : it->second;
}

void LogForm::add(IndexMask idx, const TrigPoly& f) {
    if (std::popcount(idx) != degree_) throw InputError("component degree does not match form");
    if (idx & ~full_index_mask(dim_)) throw InputError("component index outside the torus");
    add_into(components_, idx, f);
}

LogForm LogForm::with_poles(IndexMask poles) const {
    if ((poles & poles_) != poles_) throw InputError("a frame can only gain poles");
    LogForm out(dim_, poles, degree_);
    const IndexMask gained = poles & ~poles_;
    for (const auto& [idx, c] : components_) {
        TrigPoly f = c;
        for (int i : mask_indices(idx & gained)) f = f * TrigPoly::sin(i, 1);
        out.add(idx, f);
    }
    return out;
}

LogForm& LogForm::operator+=(const LogForm& o) {
    if (dim_ != o.dim_) throw InputError("frame mismatch: forms on tori of different dimension");
    if (degree_ != o.degree_) throw InputError("cannot add forms of different degree");
    if (poles_ != o.poles_) {
        const IndexMask u = poles_ | o.poles_;
        *this = with_poles(u);
        return *this += o.with_poles(u);
    }
    for (const auto& [idx, c] : o.components_) add_into(components_, idx, c);
    return *this;
}

LogForm& LogForm::operator-=(const LogForm& o) { return *this += -o; }

LogForm operator-(const LogForm& a) {
    LogForm out = a;
    for (auto& [idx, c] : out.components_) c = -c;
    return out;
}

LogForm operator*(const TrigPoly& f, const LogForm& a) {
    LogForm out(a.dim_, a.poles_, a.degree_);
    for (const auto& [idx, c] : a.components_) out.add(idx, f * c);
    return out;
}

bool operator==(const LogForm& a, const LogForm& b) {
    if (a.dim_ != b.dim_ || a.degree_ != b.degree_) return false;
    if (a.poles_ == b.poles_) return a.components_ == b.components_;
    const IndexMask u = a.poles_ | b.poles_;
    return a.with_poles(u).components_ == b.with_poles(u).components_;
}

std::string LogForm::to_string(const std::vector<std::string>& names) const {
    return render(components_, names, [&](IndexMask idx) {
        std::string s;
        for (int i : mask_indices(idx)) {
            if (!s.empty()) s += " ^ ";
            const std::string n = coordinate_name(names, i);
            s += "d" + n;
            if (poles_ & bit(i)) s += "/sin(" + n + ")";
        }
        return s;
    });
}

LogForm exterior_d(const LogForm& w) {
    if (w.degree() >= w.dim()) return LogForm(w.dim(), w.poles(), w.degree() + 1);
    LogForm out(w.dim(), w.poles(), w.degree() + 1);
    for (const auto& [idx, c] : w.components()) {
        for (int j = 0; j < w.dim(); ++j) {
            if (idx & bit(j)) continue;
            TrigPoly dj = c.derivative(j);
            if (dj.is_zero()) continue;
            // dθ_j = sin θ_j · (dθ_j / sin θ_j) in a pole direction.
            if (w.poles() & bit(j)) dj = dj * TrigPoly::sin(j, 1);
            const int s = wedge_sign(bit(j), idx);
            out.add(idx | bit(j), s > 0 ? dj : -dj);
        }
    }
    return out;
}

LogForm wedge(const LogForm& a0, const LogForm& b0) {
    if (a0.dim() != b0.dim()) throw InputError("frame mismatch: forms on tori of different dimension");
    const IndexMask u = a0.poles() | b0.poles();
    const LogForm a = a0.poles() == u ? a0 : a0.with_poles(u);
    const LogForm b = b0.poles() == u ? b0 : b0.with_poles(u);
    const int degree = a.degree() + b.degree();
    if (degree > a.dim()) return LogForm(a.dim(), u, degree);
    LogForm out(a.dim(), u, degree);
    for (const auto& [ia, ca] : a.components())
        for (const auto& [ib, cb] : b.components()) {
            const int s = wedge_sign(ia, ib);
            if (s == 0) continue;
            const TrigPoly f = ca * cb;
            out.add(ia | ib, s > 0 ? f : -f);
        }
    return out;
}

LogForm wedge_power(const LogForm& w, int k) {
    if (k < 0) throw InputError("negative wedge power");
    LogForm out = LogForm::scalar(w.dim(), w.poles(), TrigPoly(1));
    for (int i = 0; i < k; ++i) out = wedge(out, w);
    return out;
}

// ---------------------------------------------------------------------------
// Multivector

Multivector::Multivector(int dim, int degree) : dim_(dim), degree_(degree) {
    check_dim(dim);
    if (degree < 0) throw InputError("multivector degree out of range");
}

Multivector Multivector::scalar(int dim, const TrigPoly& f) {
    Multivector m(dim, 0);
    m.add(0, f);
    return m;
}

Multivector Multivector::basis(int dim, IndexMask idx, const TrigPoly& f) {
    Multivector m(dim, std::popcount(idx));
    m.add(idx, f);
    return m;
}

TrigPoly Multivector::coefficient(IndexMask idx) const {
    auto it = components_.find(idx);
    return it == components_.end() ? TrigPoly{} : it->second;
}

void Multivector::add(IndexMask idx, const TrigPoly& f) {
    if (std::popcount(idx) != degree_) throw InputError("component degree does not match multivector");
    if (idx & ~full_index_mask(dim_)) throw InputError("component index outside the torus");
    add_into(components_, idx, f);
}

int Multivector::max_frequency() const noexcept {
    int k = 0;
    for (const auto& [idx, c] : components_) k = std::max(k, c.max_frequency());
    return k;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (dim_ != o.dim_) throw InputError("multivectors on tori of different dimension");
    if (degree_ != o.degree_) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        throw InputError("cannot add multivectors of different degree");
    }
    for (const auto& [idx, c] : o.components_) add_into(components_, idx, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) { return *this += -o; }

Multivector operator-(const Multivector& a) {
    Multivector out = a;
    for (auto& [idx, c] : out.components_) c = -c;
    return out;
}

Multivector operator*(const TrigPoly& f, const Multivector& a) {
    Multivector out(a.dim_, a.degree_);
    for (const auto& [idx, c] : a.components_) out.add(idx, f * c);
    return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
    if (a.dim_ != b.dim_ || a.components_ != b.components_) return false;
    return a.degree_ == b.degree_ || a.is_zero();
}

std::string Multivector::to_string(const std::vector<std::string>& names) const {
    return render(components_, names, [&](IndexMask idx) {
        std::string s;
        for (int i : mask_indices(idx)) {
            if (!s.empty()) s += "^";
            s += "d" + coordinate_name(names, i);
        }
        return s;
    });
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw InputError("multivectors on tori of different dimension");
    const int degree = a.degree() + b.degree();
    if (degree > a.dim()) return Multivector(a.dim(), degree);
    Multivector out(a.dim(), degree);
    for (const auto& [ia, ca] : a.components())
        for (const auto& [ib, cb] : b.components()) {
            const int s = wedge_sign(ia, ib);
            if (s == 0) continue;
            const TrigPoly f = ca * cb;
            out.add(ia | ib, s > 0 ? f : -f);
        }
    return out;
}

Multivector schouten(const Multivector& p, const Multivector& q) {
    if (p.dim() != q.dim()) throw InputError("multivectors on tori of different dimension");
    const int n = p.dim();
    const int degree = p.degree() + q.degree() - 1;
    if (degree < 0) return Multivector(n, 0);
    Multivector out(n, degree);
    if (degree > n) return out;
    const int graded = ((p.degree() - 1) * (q.degree() - 1)) % 2 ? -1 : 1;
    // [P,Q] = Σ_i (P ∂⃖/∂ξ_i)(∂_i Q) − (−1)^{(p−1)(q−1)} (Q ∂⃖/∂ξ_i)(∂_i P)
    auto half = [&](const Multivector& a, const Multivector& b, int sign) {
        for (const auto& [ia, ca] : a.components()) {
            for (int i : mask_indices(ia)) {
                const IndexMask ra = ia & ~bit(i);
                const int rs = right_derivative_sign(ia, i) * sign;
                for (const auto& [ib, cb] : b.components()) {
                    const int ws = wedge_sign(ra, ib);
                    if (ws == 0) continue;
                    const TrigPoly db = cb.derivative(i);
                    if (db.is_zero()) continue;
                    const TrigPoly f = ca * db;
                    out.add(ra | ib, rs * ws > 0 ? f : -f);
                }
            }
        }
    };
    half(p, q, 1);
    half(q, p, -graded);
    return out;
}

Multivector lichnerowicz(const Multivector& pi, const Multivector& p) { return schouten(pi, p); }

} // namespace logsym
