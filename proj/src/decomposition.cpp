#include "logsym/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "logsym/error.hpp"

namespace logsym {

namespace {

IndexMask bit(int i) { return IndexMask{1} << i; }

bool any_nonzero(const std::vector<mpq_class>& v) {
    return std::any_of(v.begin(), v.end(), [](const mpq_class& q) { return q != 0; });
}

bool all_nonzero(const std::vector<mpq_class>& v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [](const mpq_class& q) { return q != 0; });
}

const std::vector<mpq_class>* find_c(const ClassDecomposition& dec, const std::string& i,
                                     const std::string& j) {
    auto it = dec.c.find({i, j});
    if (it != dec.c.end()) return &it->second;
    it = dec.c.find({j, i});
    return it == dec.c.end() ? nullptr : &it->second;
}

bool c_nonzero(const ClassDecomposition& dec, const std::string& i, const std::string& j) {
    const auto* v = find_c(dec, i, j);
    return v && any_nonzero(*v);
}

bool b_nonzero(const ClassDecomposition& dec, const std::string& s) {
    auto it = dec.b.find(s);
    return it != dec.b.end() && it->second.nonzero;
}

// Absent flags carry no evidence of a nonvanishing restriction.
bool restriction_vanishes(const ClassDecomposition& dec, const std::string& s, const std::string& t) {
    auto it = dec.b.find(s);
    if (it == dec.b.end()) return true;
    auto jt = it->second.restriction_vanishes.find(t);
    return jt == it->second.restriction_vanishes.end() || jt->second;
}

int coordinate_of(const Arrangement& arr, const std::string& id) {
    const auto& h = arr.hypersurfaces()[arr.index_of(id)];
    if (!h.coordinate) throw InputError("hypersurface '" + id + "' has no defining coordinate");
    return *h.coordinate;
}

IndexMask divisor_mask(const Arrangement& arr) {
    IndexMask m = 0;
    for (const auto& h : arr.hypersurfaces()) {
        if (!h.coordinate) throw InputError("hypersurface '" + h.id + "' has no defining coordinate");
        m |= bit(*h.coordinate);
    }
    return m;
}

// Class in H¹ of a closed log 1-form on a sub-torus: constant modes after removing the
// log parts A(1+cos θ)/(2 sin θ) dθ + B(1-cos θ)/(2 sin θ) dθ in each pole direction.
std::vector<mpq_class> smooth_class(const LogForm& rho) {
    std::vector<mpq_class> out(rho.dim());
    for (int j = 0; j < rho.dim(); ++j) {
        TrigPoly r = rho.coefficient(bit(j));
        if (r.is_zero()) continue;
        if (rho.poles() & bit(j)) {
            const TrigPoly a = r.substitute(j, 0), b = r.substitute(j, 2);
            const TrigPoly half(mpq_class(1, 2));
            const TrigPoly c = TrigPoly::cos(j, 1);
            const TrigPoly n = r - a * half * (1 + c) - b * half * (1 - c);
            r = n.divide_by_sin(j);
        }
        out[j] = r.constant_term();
    }
    return out;
}

LogForm constant_one_form(int dim, const std::vector<mpq_class>& cls) {
    LogForm f(dim, 0, 1);
    for (int j = 0; j < dim; ++j) f.add(bit(j), cls[j]);
    return f;
}

std::string join(const std::vector<std::string>& ids) {
    std::string s;
    for (const auto& id : ids) s += (s.empty() ? "" : ", ") + id;
    return s;
}

} // namespace

void validate(const ClassDecomposition& dec, const Arrangement& arr) {
    for (const auto& [id, b] : dec.b) {
        const std::size_t i = arr.index_of(id);
        for (const auto& [t, flag] : b.restriction_vanishes) {
            const std::size_t j = arr.index_of(t);
            if (i == j) throw InputError("restriction flag of '" + id + "' refers to itself");
            if (arr.stratum(arr.mask_of({id, t})).empty)
                throw InputError("restriction flag for empty intersection " + id + " ∩ " + t);
        }
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [pair, values] : dec.c) {
        const auto& [i, j] = pair;
        if (arr.index_of(i) == arr.index_of(j)) throw InputError("c entry pairs '" + i + "' with itself");
        const auto key = std::minmax(i, j);
        if (!seen.insert({key.first, key.second}).second)
            throw InputError("c entry for " + i + ", " + j + " given twice");
        const Stratum& st = arr.stratum(arr.mask_of({i, j}));
        if (st.empty) {
            if (!values.empty()) throw InputError("c entry for empty intersection " + i + " ∩ " + j);
            continue;
        }
        if (values.size() != st.components)
            throw InputError("c entry for " + i + ", " + j + " has " + std::to_string(values.size()) +
                             " values but the intersection has " + std::to_string(st.components) +
                             " components");
    }
}

ClassDecomposition decompose_class(const LogForm& w0, const Arrangement& arr,
                                   const std::vector<std::string>& names) {
    if (!arr.is_torus_model()) throw InputError("class extraction needs a torus model");
    if (w0.degree() != 2) throw InputError("class extraction needs a 2-form");
    if (w0.dim() != arr.manifold_dim()) throw InputError("frame mismatch: form and model dimensions differ");
    const IndexMask divisor = divisor_mask(arr);
    if (w0.poles() & ~divisor) throw InputError("form has poles outside the divisor");
    const LogForm w = w0.with_poles(divisor);
    const int n = w.dim();

    ClassDecomposition dec;
    LogForm smooth(n, 0, 2);
    for (const auto& [idx, c] : w.components())
        if (!(idx & divisor)) smooth.add(idx, c.constant_term());
    dec.a.present = !smooth.is_zero();
    if (dec.a.present) dec.a.representative = smooth.to_string(names);

    const auto& hs = arr.hypersurfaces();
    for (const auto& h : hs) {
        const int ci = *h.coordinate;
        std::vector<std::vector<mpq_class>> classes;
        std::vector<int> kept;
        for (bool at_pi : {false, true}) {
            const Restriction r = restrict_form(w, {FixedCoordinate{ci, at_pi}});
            kept = r.kept;
            auto it = r.residues.find(bit(ci));
            classes.push_back(it == r.residues.end() ? std::vector<mpq_class>(n - 1)
                                                     : smooth_class(it->second));
        }
        ClassDecomposition::BClass b;
        b.nonzero = any_nonzero(classes[0]) || any_nonzero(classes[1]);
        for (const auto& t : hs) {
            if (t.id == h.id) continue;
            const int ct = *t.coordinate;
            bool vanishes = true;
            for (const auto& cls : classes)
                for (std::size_t j = 0; j < kept.size(); ++j)
                    if (kept[j] != ct && cls[j] != 0) vanishes = false;
            b.restriction_vanishes[t.id] = vanishes;
        }
        if (b.nonzero) {
            const auto& cls = any_nonzero(classes[0]) ? classes[0] : classes[1];
            b.representative = constant_one_form(n - 1, cls).to_string(kept_names(names, kept));
        }
        dec.b[h.id] = std::move(b);
    }

    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const int ci = *hs[i].coordinate, cj = *hs[j].coordinate;
            const int sign = ci < cj ? 1 : -1;
            std::vector<mpq_class> values;
            for (bool pi_i : {false, true})
                for (bool pi_j : {false, true}) {
                    const Restriction r =
                        restrict_form(w, {FixedCoordinate{ci, pi_i}, FixedCoordinate{cj, pi_j}});
                    auto it = r.residues.find(bit(ci) | bit(cj));
                    mpq_class v = it == r.residues.end() ? mpq_class(0)
                                                         : it->second.coefficient(0).constant_term();
                    values.push_back(sign > 0 ? v : mpq_class(-v));
                }
            dec.c[{hs[i].id, hs[j].id}] = std::move(values);
        }
    }
    return dec;
}

std::vector<std::string> Partition::ids() const {
    std::vector<std::string> out;
    for (const auto& [x, y] : pairs) {
        out.push_back(x);
        out.push_back(y);
    }
    out.insert(out.end(), zs.begin(), zs.end());
    return out;
}

Partition Partition::canonical() const {
    Partition p = *this;
    for (auto& [x, y] : p.pairs)
        if (y < x) std::swap(x, y);
    std::sort(p.pairs.begin(), p.pairs.end());
    std::sort(p.zs.begin(), p.zs.end());
    return p;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "pairs=[";
    for (std::size_t i = 0; i < p.pairs.size(); ++i)
        os << (i ? ", " : "") << '(' << p.pairs[i].first << ", " << p.pairs[i].second << ')';
    os << "] zs=[" << join(p.zs) << ']';
    return os.str();
}

PartitionReport is_partitionable(const ClassDecomposition& dec, const Arrangement& arr,
                                 const PartitionOptions& options) {
    validate(dec, arr);
    PartitionReport report;
    const auto& hs = arr.hypersurfaces();
    auto add = [&](std::string clause, std::vector<std::string> ids, std::string detail) {
        report.violations.push_back({std::move(clause), std::move(ids), std::move(detail)});
    };
    for (const auto& s : hs) {
        if (!b_nonzero(dec, s.id)) continue;
        for (const auto& i : hs)
            if (i.id != s.id && c_nonzero(dec, i.id, s.id))
                add("condition-1", {s.id, i.id}, "b of " + s.id + " is nonzero but c(" + i.id + ", " + s.id +
                                                     ") is nonzero");
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const std::string& s = hs[i].id;
            const std::string& t = hs[j].id;
            if (!c_nonzero(dec, s, t)) continue;
            for (const auto& [u, v] : {std::pair{s, t}, std::pair{t, s}})
                if (!restriction_vanishes(dec, u, v))
                    add("condition-2", {u, v}, "c(" + s + ", " + t + ") is nonzero but b of " + u +
                                                   " restricts nontrivially to " + s + " ∩ " + t);
            if (options.strict_components && !all_nonzero(*find_c(dec, s, t)))
                add("components", {s, t}, "c(" + s + ", " + t + ") vanishes on some component");
        }
    }
    for (const auto& s : hs) {
        std::vector<std::string> partners;
        for (const auto& t : hs)
            if (t.id != s.id && c_nonzero(dec, s.id, t.id)) partners.push_back(t.id);
        if (partners.size() > 1) {
            std::vector<std::string> ids{s.id};
            ids.insert(ids.end(), partners.begin(), partners.end());
            add("condition-2", ids, s.id + " has nonzero c with several hypersurfaces: " + join(partners));
        }
        if (partners.empty() && !b_nonzero(dec, s.id))
            add("unpaired", {s.id}, s.id + " has b = 0 and no nonzero c partner");
    }
    report.partitionable = report.violations.empty();
    return report;
}

Partition derive_partition(const ClassDecomposition& dec, const Arrangement& arr,
                           const PartitionOptions& options) {
    const PartitionReport report = is_partitionable(dec, arr, options);
    if (!report.partitionable) {
        std::string msg = "decomposition is not partitionable:";
        for (const auto& v : report.violations) msg += " [" + v.clause + "] " + v.detail + ";";
        throw InputError(msg);
    }
    Partition p;
    std::set<std::string> placed;
    for (const auto& s : arr.hypersurfaces()) {
        if (placed.count(s.id)) continue;
        if (b_nonzero(dec, s.id)) {
            p.zs.push_back(s.id);
            placed.insert(s.id);
            continue;
        }
        for (const auto& t : arr.hypersurfaces())
            if (t.id != s.id && c_nonzero(dec, s.id, t.id)) {
                p.pairs.emplace_back(s.id, t.id);
                placed.insert(s.id);
                placed.insert(t.id);
                break;
            }
    }
    return p.canonical();
}

std::optional<Partition> partition_from_labels(const Arrangement& arr) {
    if (arr.size() == 0) return Partition{};
    std::map<int, std::pair<std::string, std::string>> pairs;
    std::map<int, std::string> zs;
    for (const auto& h : arr.hypersurfaces()) {
        if (!h.label) return std::nullopt;
        const auto [role, index] = *h.label;
        if (role == Role::Z) {
            if (!zs.emplace(index, h.id).second) throw InputError("label z" + std::to_string(index) + " used twice");
            continue;
        }
        auto& slot = role == Role::X ? pairs[index].first : pairs[index].second;
        if (!slot.empty()) throw InputError("label " + to_string(*h.label) + " used twice");
        slot = h.id;
    }
    Partition p;
    for (const auto& [index, pr] : pairs) {
        if (pr.first.empty() || pr.second.empty())
            throw InputError("pair " + std::to_string(index) + " needs both an x and a y label");
        p.pairs.push_back(pr);
    }
    for (const auto& [index, id] : zs) p.zs.push_back(id);
    return p.canonical();
}

void check_covers(const Partition& p, const Arrangement& arr) {
    std::vector<std::string> ids = p.ids();
    std::vector<std::string> expected = arr.ids_of(arr.full_mask());
    std::sort(ids.begin(), ids.end());
    std::sort(expected.begin(), expected.end());
    if (ids != expected)
        throw InputError("partition {" + join(ids) + "} does not match the divisor {" + join(expected) + "}");
}

Partition subpartition(const Partition& p, const std::vector<std::string>& subset) {
    const std::set<std::string> s(subset.begin(), subset.end());
    Partition out;
    for (const auto& [x, y] : p.pairs) {
        const bool hx = s.count(x), hy = s.count(y);
        if (hx && hy) out.pairs.emplace_back(x, y);
        else if (hx) out.zs.push_back(x);
        else if (hy) out.zs.push_back(y);
    }
    for (const auto& z : p.zs)
        if (s.count(z)) out.zs.push_back(z);
    return out.canonical();
}

std::vector<IntersectionType> intersection_types(const Partition& p, const Arrangement& arr) {
    check_covers(p, arr);
    std::vector<IntersectionType> out;
    const auto& hs = arr.hypersurfaces();
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            if (arr.stratum(arr.mask_of({hs[i].id, hs[j].id})).empty) continue;
            const Partition sub = subpartition(p, {hs[i].id, hs[j].id});
            IntersectionType t;
            t.ids = {hs[i].id, hs[j].id};
            t.type = sub.k() == 1 ? 1 : 2;
            t.leaf_codimension = sub.ell();
            out.push_back(t);
        }
    return out;
}

LogForm normal_form(const Partition& p, const Arrangement& arr, const std::vector<LogForm>& alphas,
                    const LogForm& delta) {
    check_covers(p, arr);
    if (static_cast<int>(alphas.size()) != p.ell())
        throw InputError("normal form needs one alpha per z-type hypersurface");
    const int n = arr.manifold_dim();
    const IndexMask divisor = divisor_mask(arr);
    auto check_free = [&](const LogForm& f, const std::string& what) {
        if (f.dim() != n) throw InputError("frame mismatch: " + what + " lives on a different torus");
        if (!exterior_d(f).is_zero()) throw InputError(what + " is not closed");
        for (const auto& [idx, c] : f.components()) {
            if (idx & divisor) throw InputError("coordinate collision: " + what + " involves a divisor coordinate");
            if (c.support() & divisor)
                throw InputError("coordinate collision: " + what + " depends on a divisor coordinate");
        }
    };
    LogForm w(n, divisor, 2);
    for (const auto& [x, y] : p.pairs) {
        const int cx = coordinate_of(arr, x), cy = coordinate_of(arr, y);
        w.add(bit(cx) | bit(cy), cx < cy ? 1 : -1);
    }
    for (int j = 0; j < p.ell(); ++j) {
        const LogForm& a = alphas[j];
        if (a.degree() != 1) throw InputError("alpha must be a 1-form");
        check_free(a, "alpha for " + p.zs[j]);
        bool has_class = false;
        for (const auto& [idx, c] : a.components()) has_class = has_class || c.constant_term() != 0;
        if (!has_class) throw InputError("alpha for " + p.zs[j] + " must represent a nonzero class");
        w += wedge(LogForm::covector(n, divisor, coordinate_of(arr, p.zs[j])), a);
    }
    if (!(delta.is_zero() && delta.dim() == 0)) {
        if (delta.degree() != 2) throw InputError("delta must be a 2-form");
        check_free(delta, "delta");
        w += delta;
    }
    return w;
}

bool InducedStructure::verified() const {
    return std::all_of(components.begin(), components.end(),
                       [](const InducedComponent& c) { return c.certificate.holds(); });
}

InducedStructure induced_cosymplectic(const LogForm& w0, const Arrangement& arr,
                                      const std::vector<std::string>& subset,
                                      const std::vector<std::string>& names,
                                      const PartitionOptions& options, const CertifyOptions& certify) {
    const SubsetMask mask = arr.mask_of(subset);
    if (static_cast<std::size_t>(std::popcount(mask)) != subset.size())
        throw InputError("repeated hypersurface in stratum subset");
    if (arr.stratum(mask).empty) throw InputError("stratum {" + join(subset) + "} is empty");
    const ClassDecomposition dec = decompose_class(w0, arr, names);
    const PartitionReport report = is_partitionable(dec, arr, options);
    if (!report.partitionable) throw InputError("form is not partitionable");
    InducedStructure out;
    out.subset = subset;
    out.subpartition = subpartition(derive_partition(dec, arr, options), subset);
    const LogForm w = w0.with_poles(divisor_mask(arr));
    const std::size_t s = subset.size();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << s); ++code) {
        InducedComponent comp;
        std::vector<FixedCoordinate> fixed;
        for (std::size_t i = 0; i < s; ++i) {
            const bool at_pi = (code >> (s - 1 - i)) & 1;
            comp.at_pi.push_back(at_pi);
            fixed.push_back({coordinate_of(arr, subset[i]), at_pi});
        }
        const Restriction r = restrict_form(w, fixed);
        if (out.names.empty()) out.names = kept_names(names, r.kept);
        const int m = static_cast<int>(r.kept.size());
        for (const auto& z : out.subpartition.zs) {
            auto it = r.residues.find(bit(coordinate_of(arr, z)));
            comp.alphas.push_back(it != r.residues.end() ? it->second : LogForm(m, r.residual.poles(), 1));
        }
        comp.beta = r.residual;
        comp.certificate = is_k_cosymplectic(comp.alphas, comp.beta, m, certify);
        out.components.push_back(std::move(comp));
    }
    return out;
}

} // namespace logsym
