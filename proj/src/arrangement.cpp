#include "logsym/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>

#include "logsym/error.hpp"

namespace logsym {

namespace {

constexpr std::size_t kHardHypersurfaceCap = 24;

std::string subset_text(const std::vector<std::string>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ", ";
        s += ids[i];
    }
    return s + "}";
}

} // namespace

std::string to_string(const RoleLabel& label) {
    const char c = label.role == Role::X ? 'x' : label.role == Role::Y ? 'y' : 'z';
    return std::string(1, c) + std::to_string(label.index);
}

RoleLabel parse_role(std::string_view text) {
    if (text.size() < 2) throw InputError("bad role label '" + std::string(text) + "'");
    RoleLabel out{};
    switch (text.front()) {
    case 'x': out.role = Role::X; break;
    case 'y': out.role = Role::Y; break;
    case 'z': out.role = Role::Z; break;
    default: throw InputError("bad role label '" + std::string(text) + "'");
    }
    const auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out.index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || out.index < 1)
        throw InputError("bad role label '" + std::string(text) + "'");
    return out;
}

Arrangement::Arrangement(int manifold_dim, std::vector<Hypersurface> hypersurfaces,
                         std::vector<Stratum> strata, const ArrangementLimits& limits)
    : dim_(manifold_dim), hypersurfaces_(std::move(hypersurfaces)), strata_(std::move(strata)) {
    if (dim_ < 0 || dim_ % 2 != 0)
        throw InputError("manifold dimension must be even and non-negative, got " +
                         std::to_string(dim_));
    const std::size_t cap = std::min(limits.max_hypersurfaces, kHardHypersurfaceCap);
    if (hypersurfaces_.size() > cap)
        throw ResourceError("arrangement has " + std::to_string(hypersurfaces_.size()) +
                            " hypersurfaces; limit is " + std::to_string(cap));

    std::set<std::string> seen;
    std::set<int> coords;
    for (const auto& h : hypersurfaces_) {
        if (h.id.empty()) throw InputError("hypersurface id must not be empty");
        if (!seen.insert(h.id).second) throw InputError("duplicate hypersurface id '" + h.id + "'");
        if (h.coordinate) {
            if (*h.coordinate < 0 || *h.coordinate >= dim_)
                throw InputError("coordinate of '" + h.id + "' out of range");
            if (!coords.insert(*h.coordinate).second)
                throw InputError("two hypersurfaces share coordinate " +
                                 std::to_string(*h.coordinate));
        }
    }

    const std::size_t count = std::size_t{1} << hypersurfaces_.size();
    if (strata_.size() != count)
        throw InputError("expected " + std::to_string(count) + " strata, got " +
                         std::to_string(strata_.size()));

    for (SubsetMask mask = 0; mask < count; ++mask) {
        Stratum& s = strata_[mask];
        s.subset = ids_of(mask);
        const int codim = std::popcount(mask);
        const std::string where = subset_text(s.subset);
        if (s.empty) {
            if (!s.betti.is_zero())
                throw InputError("empty stratum " + where + " carries non-zero Betti numbers");
            s.betti = BettiVector{};
            s.components = 0;
            s.dim = dim_ - codim;
            continue;
        }
        if (mask == 0 && s.betti[0] == 0) throw InputError("the manifold must be non-empty");
        if (dim_ - codim < 0)
            throw InputError("stratum " + where + " would have negative dimension");
        s.dim = dim_ - codim;
        if (s.betti[0] == 0)
            throw InputError("non-empty stratum " + where + " has betti[0] = 0");
        for (int p = s.dim + 1; p <= s.betti.top_degree(); ++p)
            if (s.betti[p] != 0)
                throw InputError("stratum " + where + " has cohomology above its dimension");
        if (!s.betti[0].fits_ulong_p()) throw InputError("component count too large");
        s.components = s.betti[0].get_ui();
        s.betti = s.betti.resized(s.dim);
    }

    // Monotonicity: every superset of an empty stratum is empty.
    for (SubsetMask mask = 0; mask < count; ++mask) {
        if (!strata_[mask].empty) continue;
        for (std::size_t i = 0; i < hypersurfaces_.size(); ++i) {
            const SubsetMask sup = mask | (SubsetMask{1} << i);
            if (sup != mask && !strata_[sup].empty)
                throw InputError("monotonicity violated: " + subset_text(strata_[mask].subset) +
                                 " is empty but " + subset_text(strata_[sup].subset) + " is not");
        }
    }
}

SubsetMask Arrangement::full_mask() const noexcept {
    return static_cast<SubsetMask>((std::size_t{1} << hypersurfaces_.size()) - 1);
}

std::size_t Arrangement::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < hypersurfaces_.size(); ++i)
        if (hypersurfaces_[i].id == id) return i;
    throw InputError("unknown hypersurface '" + std::string(id) + "'");
}

bool Arrangement::contains(std::string_view id) const noexcept {
    return std::any_of(hypersurfaces_.begin(), hypersurfaces_.end(),
                       [&](const Hypersurface& h) { return h.id == id; });
}

SubsetMask Arrangement::mask_of(const std::vector<std::string>& ids) const {
    SubsetMask mask = 0;
    for (const auto& id : ids) mask |= SubsetMask{1} << index_of(id);
    return mask;
}

std::vector<std::string> Arrangement::ids_of(SubsetMask mask) const {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < hypersurfaces_.size(); ++i)
        if (mask & (SubsetMask{1} << i)) ids.push_back(hypersurfaces_[i].id);
    return ids;
}

const Stratum& Arrangement::stratum(SubsetMask mask) const {
    if (mask & ~full_mask()) throw InputError("subset mask out of range");
    return strata_[mask];
}

const Stratum& Arrangement::stratum(const std::vector<std::string>& ids) const {
    return strata_[mask_of(ids)];
}

Arrangement Arrangement::restricted_to(SubsetMask keep) const {
    if (keep & ~full_mask()) throw InputError("subset mask out of range");
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < hypersurfaces_.size(); ++i)
        if (keep & (SubsetMask{1} << i)) kept.push_back(i);
    std::vector<Hypersurface> hs;
    for (auto i : kept) hs.push_back(hypersurfaces_[i]);
    std::vector<Stratum> strata(std::size_t{1} << kept.size());
    for (SubsetMask sub = 0; sub < strata.size(); ++sub) {
        SubsetMask full = 0;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (sub & (SubsetMask{1} << j)) full |= SubsetMask{1} << kept[j];
        strata[sub] = strata_[full];
    }
    return Arrangement(dim_, std::move(hs), std::move(strata),
                       ArrangementLimits{kHardHypersurfaceCap});
}

bool Arrangement::is_torus_model() const noexcept {
    return std::all_of(hypersurfaces_.begin(), hypersurfaces_.end(),
                       [](const Hypersurface& h) { return h.coordinate.has_value(); });
}

Arrangement torus_model(int n, const std::vector<int>& divisor_coords,
                        const std::vector<std::string>& ids, const ArrangementLimits& limits) {
    if (n <= 0 || n % 2 != 0)
        throw InputError("torus dimension must be positive and even, got " + std::to_string(n));
    if (!ids.empty() && ids.size() != divisor_coords.size())
        throw InputError("one id per divisor coordinate is required");
    std::set<int> seen;
    for (int c : divisor_coords) {
        if (c < 0 || c >= n) throw InputError("divisor coordinate " + std::to_string(c) +
                                              " out of range for T^" + std::to_string(n));
        if (!seen.insert(c).second)
            throw InputError("duplicate divisor coordinate " + std::to_string(c));
    }
    if (divisor_coords.size() > std::min(limits.max_hypersurfaces, kHardHypersurfaceCap))
        throw ResourceError("too many hypersurfaces for the configured limit");

    std::vector<Hypersurface> hs;
    for (std::size_t i = 0; i < divisor_coords.size(); ++i) {
        Hypersurface h;
        h.id = ids.empty() ? "Z" + std::to_string(divisor_coords[i]) : ids[i];
        h.coordinate = divisor_coords[i];
        hs.push_back(std::move(h));
    }
    // Each {sin θ = 0} has two components; s of them meet in 2^s copies of T^{n-s}.
    std::vector<Stratum> strata(std::size_t{1} << hs.size());
    for (SubsetMask mask = 0; mask < strata.size(); ++mask) {
        const int s = std::popcount(mask);
        BettiVector copies{1L << s};
        strata[mask].betti = kunneth(copies, BettiVector::torus(n - s));
    }
    return Arrangement(n, std::move(hs), std::move(strata), limits);
}

Arrangement product(const Arrangement& a, const Arrangement& b, const ArrangementLimits& limits) {
    std::vector<Hypersurface> hs = a.hypersurfaces();
    int pair_offset = 0;
    int z_offset = 0;
    for (const auto& h : a.hypersurfaces()) {
        if (!h.label) continue;
        if (h.label->role == Role::Z) z_offset = std::max(z_offset, h.label->index);
        else pair_offset = std::max(pair_offset, h.label->index);
    }
    std::set<std::string> taken;
    for (const auto& h : hs) taken.insert(h.id);
    for (auto h : b.hypersurfaces()) {
        while (taken.count(h.id)) h.id += "'";
        taken.insert(h.id);
        if (h.coordinate) *h.coordinate += a.manifold_dim();
        if (h.label) h.label->index += h.label->role == Role::Z ? z_offset : pair_offset;
        hs.push_back(std::move(h));
    }
    const std::size_t na = a.size();
    std::vector<Stratum> strata(std::size_t{1} << hs.size());
    for (SubsetMask mask = 0; mask < strata.size(); ++mask) {
        const SubsetMask ma = mask & a.full_mask();
        const SubsetMask mb = mask >> na;
        const Stratum& sa = a.stratum(ma);
        const Stratum& sb = b.stratum(mb);
        strata[mask].empty = sa.empty || sb.empty;
        if (!strata[mask].empty) strata[mask].betti = kunneth(sa.betti, sb.betti);
    }
    return Arrangement(a.manifold_dim() + b.manifold_dim(), std::move(hs), std::move(strata),
                       limits);
}

Arrangement point_arrangement() {
    std::vector<Stratum> strata(1);
    strata[0].betti = BettiVector::point();
    return Arrangement(0, {}, std::move(strata));
}

Arrangement custom_arrangement(const BettiVector& manifold_betti, int dim,
                               std::vector<Hypersurface> hypersurfaces,
                               const std::vector<StratumEntry>& strata_table,
                               const ArrangementLimits& limits) {
    if (dim < 0 || dim % 2 != 0)
        throw InputError("manifold dimension must be even and non-negative, got " +
                         std::to_string(dim));
    if (hypersurfaces.size() > std::min(limits.max_hypersurfaces, kHardHypersurfaceCap))
        throw ResourceError("too many hypersurfaces for the configured limit");
    std::vector<std::optional<Stratum>> table(std::size_t{1} << hypersurfaces.size());
    table[0] = Stratum{{}, manifold_betti, 0, dim, false};
    for (const auto& entry : strata_table) {
        SubsetMask mask = 0;
        for (const auto& id : entry.subset) {
            auto it = std::find_if(hypersurfaces.begin(), hypersurfaces.end(),
                                   [&](const Hypersurface& h) { return h.id == id; });
            if (it == hypersurfaces.end()) throw InputError("unknown hypersurface '" + id + "'");
            const SubsetMask bit = SubsetMask{1} << (it - hypersurfaces.begin());
            if (mask & bit) throw InputError("repeated id '" + id + "' in stratum subset");
            mask |= bit;
        }
        if (mask == 0) throw InputError("the manifold stratum is given by manifold_betti");
        if (table[mask]) throw InputError("stratum " + subset_text(entry.subset) + " given twice");
        table[mask] = Stratum{{}, entry.betti, 0, 0, entry.empty};
    }
    std::vector<Stratum> strata;
    strata.reserve(table.size());
    for (SubsetMask mask = 0; mask < table.size(); ++mask) {
        if (!table[mask]) {
            std::vector<std::string> ids;
            for (std::size_t i = 0; i < hypersurfaces.size(); ++i)
                if (mask & (SubsetMask{1} << i)) ids.push_back(hypersurfaces[i].id);
            throw InputError("missing stratum " + subset_text(ids) +
                             " (mark it \"empty\" if the intersection is empty)");
        }
        strata.push_back(std::move(*table[mask]));
    }
    return Arrangement(dim, std::move(hypersurfaces), std::move(strata), limits);
}

} // namespace logsym
