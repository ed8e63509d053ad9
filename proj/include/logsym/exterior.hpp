#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "logsym/trigpoly.hpp"

namespace logsym {

/// Bitmask of coordinate indices; a basis element is the wedge over set bits in increasing order.
using IndexMask = std::uint32_t;

/// Sign of e_A ∧ e_B relative to e_{A∪B} (0 if A and B overlap).
int wedge_sign(IndexMask a, IndexMask b) noexcept;

/// Differential form on T^n in a log frame.
///
/// Basis covector for coordinate i is dθ_i / sin(θ_i) when bit i of `poles` is set and
/// dθ_i otherwise. Components are keyed by index masks and carry TrigPoly coefficients.
class LogForm {
public:
    using Components = std::map<IndexMask, TrigPoly>;

    LogForm() = default;
    LogForm(int dim, IndexMask poles, int degree);

    static LogForm scalar(int dim, IndexMask poles, const TrigPoly& f);
    /// The frame covector for coordinate i (log covector if i is a pole).
    static LogForm covector(int dim, IndexMask poles, int coord);
    /// The plain differential dθ_i expressed in the frame.
    static LogForm differential(int dim, IndexMask poles, int coord);

    int dim() const noexcept { return dim_; }
    int degree() const noexcept { return degree_; }
    IndexMask poles() const noexcept { return poles_; }
    const Components& components() const noexcept { return components_; }
    TrigPoly coefficient(IndexMask idx) const;
    bool is_zero() const noexcept { return components_.empty(); }

    /// Adds f · e_idx.
    void add(IndexMask idx, const TrigPoly& f);
    /// Same form re-expressed in a frame with more poles.
    LogForm with_poles(IndexMask poles) const;

    LogForm& operator+=(const LogForm& o);
    LogForm& operator-=(const LogForm& o);
    friend LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
    friend LogForm operator-(LogForm a, const LogForm& b) { return a -= b; }
    friend LogForm operator-(const LogForm& a);
    friend LogForm operator*(const TrigPoly& f, const LogForm& a);
    friend bool operator==(const LogForm& a, const LogForm& b);

    /// Text in the model-file grammar, e.g. "dx/sin(x) ^ dy/sin(y) + dz/sin(z) ^ dt".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int dim_ = 0;
    IndexMask poles_ = 0;
    int degree_ = 0;
    Components components_;
};

/// Multivector field on T^n in the coordinate frame ∂/∂θ_i.
class Multivector {
public:
    using Components = std::map<IndexMask, TrigPoly>;

    Multivector() = default;
    Multivector(int dim, int degree);

    static Multivector scalar(int dim, const TrigPoly& f);
    static Multivector basis(int dim, IndexMask idx, const TrigPoly& f = TrigPoly(1));

    int dim() const noexcept { return dim_; }
    int degree() const noexcept { return degree_; }
    const Components& components() const noexcept { return components_; }
    TrigPoly coefficient(IndexMask idx) const;
    bool is_zero() const noexcept { return components_.empty(); }
    void add(IndexMask idx, const TrigPoly& f);
    int max_frequency() const noexcept;

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator-(const Multivector& a);
    friend Multivector operator*(const TrigPoly& f, const Multivector& a);
    /// Zero multivectors compare equal regardless of degree.
    friend bool operator==(const Multivector& a, const Multivector& b);

    /// Text in the model-file grammar; "dy^dx" denotes ∂/∂y ∧ ∂/∂x.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int dim_ = 0;
    int degree_ = 0;
    Components components_;
};

/// Exterior derivative; frames with poles stay closed under d.
LogForm exterior_d(const LogForm& w);
/// Wedge product. Frames are merged by promoting both to the union of poles.
LogForm wedge(const LogForm& a, const LogForm& b);
/// k-fold wedge power (k = 0 gives the constant 1).
LogForm wedge_power(const LogForm& w, int k);

Multivector wedge(const Multivector& a, const Multivector& b);
/// Schouten–Nijenhuis bracket; reduces to the Lie bracket on vector fields.
Multivector schouten(const Multivector& p, const Multivector& q);
/// Lichnerowicz differential d_π(P) = [π, P].
Multivector lichnerowicz(const Multivector& pi, const Multivector& p);

/// Sorted coordinate indices of a mask.
std::vector<int> mask_indices(IndexMask mask);
IndexMask full_index_mask(int dim);

} // namespace logsym
