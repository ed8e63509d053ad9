#include "logsym/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "logsym/error.hpp"

namespace logsym {

namespace {

void check_coord(int coord) {
    if (coord < 0 || coord >= kMaxCoords)
        throw InputError("coordinate index " + std::to_string(coord) + " out of range");
}

// One term of a per-coordinate product-to-sum expansion.
struct Partial {
    TrigMonomial mono;
    int sign;
    int halves;
};

// Writes harmonic r (cos if !is_sin) into slot, normalizing negative frequencies.
// Returns the sign picked up, or 0 when the harmonic vanishes (sin 0).
int place(std::int16_t& slot, bool is_sin, int r) {
    if (!is_sin) {
        slot = static_cast<std::int16_t>(r < 0 ? -r : r);
        return 1;
    }
    if (r == 0) return 0;
    slot = static_cast<std::int16_t>(r < 0 ? r : -r);
    return r < 0 ? -1 : 1;
}

mpq_class half_power(int halves) {
    mpq_class q(1);
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(halves));
    q.canonicalize();
    return q;
}

} // namespace

bool TrigMonomial::is_one() const noexcept {
    return std::all_of(f.begin(), f.end(), [](std::int16_t k) { return k == 0; });
}

int TrigMonomial::l1_frequency() const noexcept {
    int s = 0;
    for (auto k : f) s += k < 0 ? -k : k;
    return s;
}

TrigPoly::TrigPoly(const mpq_class& c) {
    add_term(TrigMonomial{}, c);
}

TrigPoly TrigPoly::cos(int coord, int k) {
    check_coord(coord);
    TrigMonomial m;
    m.f[coord] = static_cast<std::int16_t>(k < 0 ? -k : k);
    return monomial(m, 1);
}

TrigPoly TrigPoly::sin(int coord, int k) {
    check_coord(coord);
    if (k == 0) return {};
    TrigMonomial m;
    m.f[coord] = static_cast<std::int16_t>(k < 0 ? k : -k);
    return monomial(m, k < 0 ? -1 : 1);
}

TrigPoly TrigPoly::monomial(const TrigMonomial& m, const mpq_class& c) {
    TrigPoly p;
    p.add_term(m, c);
    return p;
}

void TrigPoly::add_term(const TrigMonomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool TrigPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpq_class TrigPoly::constant_term() const {
    auto it = terms_.find(TrigMonomial{});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

bool TrigPoly::depends_on(int coord) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.f[coord] != 0; });
}

int TrigPoly::frequency(int coord) const noexcept {
    int k = 0;
    for (const auto& [m, c] : terms_) k = std::max(k, m.frequency(coord));
    return k;
}

int TrigPoly::max_frequency() const noexcept {
    int k = 0;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kMaxCoords; ++i) k = std::max(k, m.frequency(i));
    return k;
}

std::uint32_t TrigPoly::support() const noexcept {
    std::uint32_t mask = 0;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kMaxCoords; ++i)
            if (m.f[i] != 0) mask |= std::uint32_t{1} << i;
    return mask;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TrigPoly& TrigPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly out;
    std::vector<Partial> cur, next;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            cur.assign(1, Partial{TrigMonomial{}, 1, 0});
            for (int i = 0; i < kMaxCoords; ++i) {
                const int x = ma.f[i];
                const int y = mb.f[i];
                if (x == 0 && y == 0) continue;
                if (x == 0 || y == 0) {
                    for (auto& p : cur) p.mono.f[i] = static_cast<std::int16_t>(x == 0 ? y : x);
                    continue;
                }
                const bool xs = x < 0, ys = y < 0;
                const int xa = xs ? -x : x, ya = ys ? -y : y;
                // Product-to-sum: each branch is (harmonic, frequency, sign).
                struct Branch { bool is_sin; int r; int sign; };
                Branch br[2];
                if (!xs && !ys) br[0] = {false, xa - ya, 1}, br[1] = {false, xa + ya, 1};
                else if (xs && ys) br[0] = {false, xa - ya, 1}, br[1] = {false, xa + ya, -1};
                else if (xs) br[0] = {true, xa + ya, 1}, br[1] = {true, xa - ya, 1};
                else br[0] = {true, ya + xa, 1}, br[1] = {true, ya - xa, 1};
                next.clear();
                for (const auto& p : cur) {
                    for (const auto& b2 : br) {
                        Partial q = p;
                        const int s = place(q.mono.f[i], b2.is_sin, b2.r);
                        if (s == 0) continue;
                        q.sign *= s * b2.sign;
                        q.halves += 1;
                        next.push_back(q);
                    }
                }
                cur.swap(next);
            }
            const mpq_class base = ca * cb;
            for (const auto& p : cur) {
                mpq_class c = base * half_power(p.halves);
                if (p.sign < 0) c = -c;
                out.add_term(p.mono, c);
            }
        }
    }
    return out;
}

TrigPoly TrigPoly::derivative(int coord) const {
    check_coord(coord);
    TrigPoly out;
    for (const auto& [m, c] : terms_) {
        const int k = m.f[coord];
        if (k == 0) continue;
        TrigMonomial d = m;
        d.f[coord] = static_cast<std::int16_t>(-k);
        // cos(kθ)' = -k sin(kθ); sin(kθ)' = k cos(kθ)
        out.add_term(d, k > 0 ? mpq_class(-k) * c : mpq_class(-k) * c);
    }
    return out;
}

TrigPoly TrigPoly::substitute(int coord, int quarter_turns) const {
    check_coord(coord);
    TrigPoly out;
    const int q = ((quarter_turns % 4) + 4) % 4;
    for (const auto& [m, c] : terms_) {
        const int k = m.f[coord];
        const int phase = ((k < 0 ? -k : k) * q) % 4; // angle = phase · π/2
        int v;
        if (k >= 0) v = phase == 0 ? 1 : phase == 2 ? -1 : 0;
        else v = phase == 1 ? 1 : phase == 3 ? -1 : 0;
        if (v == 0) continue;
        TrigMonomial r = m;
        r.f[coord] = 0;
        out.add_term(r, v > 0 ? c : mpq_class(-c));
    }
    return out;
}

TrigPoly TrigPoly::divide_by_sin(int coord) const {
    check_coord(coord);
    // Group terms by the monomial in the remaining coordinates and solve the
    // univariate recurrences sin·g = h from the top frequency down.
    std::map<TrigMonomial, std::map<int, mpq_class>> groups;
    for (const auto& [m, c] : terms_) {
        TrigMonomial rest = m;
        rest.f[coord] = 0;
        groups[rest][m.f[coord]] += c;
    }
    TrigPoly quotient;
    for (auto& [rest, h] : groups) {
        int top = 0;
        for (const auto& [k, c] : h) top = std::max(top, k < 0 ? -k : k);
        auto a = [&](int k) { auto it = h.find(k); return it == h.end() ? mpq_class(0) : it->second; };
        auto b = [&](int k) { return k == 0 ? mpq_class(0) : a(-k); };
        // g = Σ α_k cos kθ + β_k sin kθ with frequencies < top.
        std::vector<mpq_class> alpha(static_cast<std::size_t>(top + 2), 0);
        std::vector<mpq_class> beta(static_cast<std::size_t>(top + 2), 0);
        // sin part of h: b_1 = α_0 - α_2/2, b_m = (α_{m-1} - α_{m+1})/2 for m ≥ 2.
        for (int m = top; m >= 2; --m) alpha[m - 1] = 2 * b(m) + alpha[m + 1];
        if (top >= 1) alpha[0] = b(1) + alpha[2] / 2;
        // cos part: a_m = (β_{m+1} - β_{m-1})/2 for m ≥ 1, a_0 = β_1/2.
        for (int m = top; m >= 1; --m) beta[m - 1] = beta[m + 1] - 2 * a(m);
        beta[0] = 0;
        for (int k = 0; k <= top; ++k) {
            TrigMonomial mc = rest;
            mc.f[coord] = static_cast<std::int16_t>(k);
            quotient.add_term(mc, alpha[k]);
            if (k > 0) {
                TrigMonomial ms = rest;
                ms.f[coord] = static_cast<std::int16_t>(-k);
                quotient.add_term(ms, beta[k]);
            }
        }
    }
    if (quotient * TrigPoly::sin(coord, 1) != *this)
        throw Error("trigonometric polynomial is not divisible by sin of coordinate " +
                    std::to_string(coord));
    return quotient;
}

mpq_class TrigPoly::evaluate_quarter(std::span<const int> quarter_turns) const {
    TrigPoly p = *this;
    for (std::size_t i = 0; i < quarter_turns.size() && i < static_cast<std::size_t>(kMaxCoords);
         ++i)
        p = p.substitute(static_cast<int>(i), quarter_turns[i]);
    if (!p.is_constant())
        throw InputError("evaluation point does not fix every coordinate the polynomial uses");
    return p.constant_term();
}

long double TrigPoly::evaluate(std::span<const long double> theta) const {
    long double total = 0;
    for (const auto& [m, c] : terms_) {
        long double v = c.get_d();
        for (int i = 0; i < kMaxCoords; ++i) {
            const int k = m.f[i];
            if (k == 0) continue;
            const long double t = i < static_cast<int>(theta.size()) ? theta[i] : 0.0L;
            v *= k > 0 ? std::cos(static_cast<long double>(k) * t)
                       : std::sin(static_cast<long double>(-k) * t);
        }
        total += v;
    }
    return total;
}

mpq_class TrigPoly::abs_sum() const {
    mpq_class s = 0;
    for (const auto& [m, c] : terms_) s += abs(c);
    return s;
}

mpq_class TrigPoly::lipschitz_bound() const {
    mpq_class s = 0;
    for (const auto& [m, c] : terms_) s += abs(c) * m.l1_frequency();
    return s;
}

TrigPoly remap_coordinates(const TrigPoly& p, const std::vector<int>& new_index) {
    TrigPoly out;
    for (const auto& [m, c] : p.terms()) {
        TrigMonomial r;
        for (int i = 0; i < kMaxCoords; ++i) {
            if (m.f[i] == 0) continue;
            const int j = i < static_cast<int>(new_index.size()) ? new_index[i] : -1;
            if (j < 0) throw Error("coordinate " + std::to_string(i) + " has no image");
            r.f[j] = m.f[i];
        }
        out += TrigPoly::monomial(r, c);
    }
    return out;
}

std::string coordinate_name(const std::vector<std::string>& names, int coord) {
    if (coord >= 0 && coord < static_cast<int>(names.size())) return names[coord];
    return "x" + std::to_string(coord);
}

std::string TrigPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || m.is_one()) {
            os << mag.get_str();
            wrote = true;
        }
        for (int i = 0; i < kMaxCoords; ++i) {
            const int k = m.f[i];
            if (k == 0) continue;
            if (wrote) os << '*';
            os << (k > 0 ? "cos(" : "sin(");
            const int a = k < 0 ? -k : k;
            if (a != 1) os << a;
            os << coordinate_name(names, i) << ')';
            wrote = true;
        }
    }
    return os.str();
}

} // namespace logsym
