#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace logsym {

/// Dimensions of a finite-dimensional graded real vector space, indexed by degree.
///
/// The stored length is `top_degree() + 1`; the empty space has length zero
/// (top degree -1). Entries are arbitrary-precision and never negative.
/// Equality is mathematical: trailing zeros are ignored.
class BettiVector {
public:
    BettiVector() = default;
    BettiVector(std::initializer_list<long> dims);
    explicit BettiVector(std::vector<mpz_class> dims);

    static BettiVector zero(int top_degree);
    /// The point: [1].
    static BettiVector point();
    /// n-fold Künneth power of the circle.
    static BettiVector torus(int n);

    int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }
    std::size_t size() const noexcept { return dims_.size(); }
    /// Dimension in degree p; zero outside the stored range (including p < 0).
    mpz_class operator[](int p) const;
    const std::vector<mpz_class>& dims() const noexcept { return dims_; }

    bool is_zero() const;
    mpz_class total() const;
    /// Copy padded or truncated to exactly `top_degree + 1` entries.
    BettiVector resized(int top_degree) const;
    /// Copy with trailing zeros removed.
    BettiVector trimmed() const;
    std::vector<long> to_longs() const;

    friend bool operator==(const BettiVector& a, const BettiVector& b);
    friend bool operator!=(const BettiVector& a, const BettiVector& b) { return !(a == b); }

private:
    std::vector<mpz_class> dims_;
};

BettiVector direct_sum(const BettiVector& a, const BettiVector& b);
/// Degree shift: result[p] = a[p - m].
BettiVector shift(const BettiVector& a, int m);
/// Künneth product: result[p] = sum_{i+j=p} a[i] * b[j].
BettiVector kunneth(const BettiVector& a, const BettiVector& b);

std::string to_string(const BettiVector& v);
std::ostream& operator<<(std::ostream& os, const BettiVector& v);

} // namespace logsym
