#include "logsym/graded.hpp"

#include <algorithm>
#include <sstream>

#include "logsym/error.hpp"

namespace logsym {

BettiVector::BettiVector(std::initializer_list<long> dims) {
    dims_.reserve(dims.size());
    for (long d : dims) {
        if (d < 0) throw InputError("Betti numbers must be non-negative");
        dims_.emplace_back(d);
    }
}

BettiVector::BettiVector(std::vector<mpz_class> dims) : dims_(std::move(dims)) {
    for (const auto& d : dims_)
        if (sgn(d) < 0) throw InputError("Betti numbers must be non-negative");
}

BettiVector BettiVector::zero(int top_degree) {
    BettiVector v;
    v.dims_.assign(static_cast<std::size_t>(std::max(top_degree + 1, 0)), mpz_class(0));
    return v;
}

BettiVector BettiVector::point() { return BettiVector{1}; }

BettiVector BettiVector::torus(int n) {
    BettiVector v = point();
    const BettiVector circle{1, 1};
    for (int i = 0; i < n; ++i) v = kunneth(v, circle);
    return v;
}

mpz_class BettiVector::operator[](int p) const {
    if (p < 0 || p > top_degree()) return 0;
    return dims_[static_cast<std::size_t>(p)];
}

bool BettiVector::is_zero() const {
    return std::all_of(dims_.begin(), dims_.end(), [](const mpz_class& d) { return d == 0; });
}

mpz_class BettiVector::total() const {
    mpz_class s = 0;
    for (const auto& d : dims_) s += d;
    return s;
}

BettiVector BettiVector::resized(int top_degree) const {
    BettiVector v = *this;
    v.dims_.resize(static_cast<std::size_t>(std::max(top_degree + 1, 0)), mpz_class(0));
    return v;
}

BettiVector BettiVector::trimmed() const {
    BettiVector v = *this;
    while (!v.dims_.empty() && v.dims_.back() == 0) v.dims_.pop_back();
    return v;
}

std::vector<long> BettiVector::to_longs() const {
    std::vector<long> out;
    out.reserve(dims_.size());
    for (const auto& d : dims_) {
        if (!d.fits_slong_p()) throw Error("Betti number does not fit in a long");
        out.push_back(d.get_si());
    }
    return out;
}

bool operator==(const BettiVector& a, const BettiVector& b) {
    const int top = std::max(a.top_degree(), b.top_degree());
    for (int p = 0; p <= top; ++p)
        if (a[p] != b[p]) return false;
    return true;
}

BettiVector direct_sum(const BettiVector& a, const BettiVector& b) {
    const int top = std::max(a.top_degree(), b.top_degree());
    std::vector<mpz_class> dims(static_cast<std::size_t>(top + 1));
    for (int p = 0; p <= top; ++p) dims[static_cast<std::size_t>(p)] = a[p] + b[p];
    return BettiVector(std::move(dims));
}

BettiVector shift(const BettiVector& a, int m) {
    if (m < 0) throw InputError("degree shift must be non-negative");
    if (a.size() == 0) return a;
    std::vector<mpz_class> dims(a.size() + static_cast<std::size_t>(m), mpz_class(0));
    std::copy(a.dims().begin(), a.dims().end(), dims.begin() + m);
    return BettiVector(std::move(dims));
}

BettiVector kunneth(const BettiVector& a, const BettiVector& b) {
    if (a.size() == 0 || b.size() == 0) return {};
    std::vector<mpz_class> dims(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) dims[i + j] += a.dims()[i] * b.dims()[j];
    return BettiVector(std::move(dims));
}

std::string to_string(const BettiVector& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BettiVector& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v.dims()[i];
    }
    return os << ']';
}

} // namespace logsym
