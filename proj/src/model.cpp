#include "logsym/model.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "logsym/error.hpp"

namespace logsym {

namespace {

using json = nlohmann::ordered_json;

IndexMask bit(int i) { return IndexMask{1} << i; }

SourceLocation location_at(std::string_view source, std::size_t offset) {
    SourceLocation at;
    for (std::size_t i = 0; i < offset && i < source.size(); ++i) {
        if (source[i] == '\n') {
            ++at.line;
            at.column = 1;
        } else {
            ++at.column;
        }
    }
    return at;
}

// Finds string literals in the raw file so expression errors point into the file.
class Locator {
public:
    explicit Locator(std::string_view source) : source_(source) {}

    // Repeated keys (list entries) continue after the previous match.
    Expression expression(const std::string& key, const std::string& text) {
        auto [it, fresh] = cursors_.try_emplace(key, 0);
        if (fresh) {
            const std::size_t k = source_.find("\"" + key + "\"");
            it->second = k == std::string_view::npos ? 0 : k;
        }
        const std::string literal = json(text).dump();
        const std::size_t at = source_.find(literal, it->second);
        if (at == std::string_view::npos) return {text, SourceLocation{}};
        it->second = at + literal.size();
        return {text, location_at(source_, at + 1)};
    }

private:
    std::string_view source_;
    std::map<std::string, std::size_t> cursors_;
};

std::string where(const std::string& path) { return path.empty() ? "model" : path; }

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) throw InputError(where(path) + ": expected an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw InputError(where(path) + ": unknown key '" + key + "'");
}

const json& require(const json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where(path) + ": missing key '" + key + "'");
    return *it;
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw InputError(path + ": expected a string");
    return j.get<std::string>();
}

long get_integer(const json& j, const std::string& path) {
    if (j.is_number_float()) throw InputError(path + ": decimal numbers are not supported; write a fraction");
    if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
    return j.get<long>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw InputError(path + ": expected true or false");
    return j.get<bool>();
}

const json& get_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw InputError(path + ": expected an array");
    return j;
}

std::vector<std::string> get_strings(const json& j, const std::string& path) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < get_array(j, path).size(); ++i)
        out.push_back(get_string(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

mpq_class get_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_number_float()) throw InputError(path + ": decimal numbers are not supported; write a fraction");
    if (!j.is_string()) throw InputError(path + ": expected an integer or a fraction string");
    static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
    const std::string s = j.get<std::string>();
    if (!std::regex_match(s, pattern)) throw InputError(path + ": '" + s + "' is not a rational number");
    mpq_class q(s);
    if (q.get_den() == 0) throw InputError(path + ": division by zero");
    q.canonicalize();
    return q;
}

json rational_json(const mpq_class& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

BettiVector get_betti(const json& j, const std::string& path) {
    std::vector<mpz_class> dims;
    for (std::size_t i = 0; i < get_array(j, path).size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        mpz_class d;
        if (j[i].is_string() && std::regex_match(j[i].get<std::string>(), std::regex("[0-9]+")))
            d = mpz_class(j[i].get<std::string>());
        else
            d = get_integer(j[i], p);
        if (d < 0) throw InputError(p + ": Betti numbers are non-negative");
        dims.push_back(d);
    }
    return BettiVector(std::move(dims));
}

json betti_json(const BettiVector& v) {
    json out = json::array();
    for (const auto& d : v.dims()) {
        if (d.fits_slong_p()) out.push_back(d.get_si());
        else out.push_back(d.get_str());
    }
    return out;
}

std::vector<std::string> default_coordinates(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("t" + std::to_string(i));
    return out;
}

ModelSpec parse_spec(const json& j, const std::string& path, Locator& locate, bool factor) {
    check_keys(j, path,
               factor ? std::set<std::string>{"name", "kind", "dimension", "coordinates", "divisor", "factors",
                                               "manifold_betti", "strata"}
                      : std::set<std::string>{"name", "kind", "dimension", "coordinates", "divisor", "factors",
                                               "manifold_betti", "strata", "omega", "pi", "decomposition",
                                               "cosymplectic", "oracle"});
    const std::string prefix = path.empty() ? "" : path + ".";
    ModelSpec spec;
    if (j.contains("name")) spec.name = get_string(j["name"], prefix + "name");
    const std::string kind = get_string(require(j, "kind", path), prefix + "kind");
    if (kind == "torus") spec.kind = ModelKind::Torus;
    else if (kind == "product") spec.kind = ModelKind::Product;
    else if (kind == "custom") spec.kind = ModelKind::Custom;
    else throw InputError(prefix + "kind: expected torus, product or custom, got '" + kind + "'");

    auto read_divisor = [&](bool with_coordinates) {
        if (!j.contains("divisor")) return;
        const json& d = get_array(j["divisor"], prefix + "divisor");
        for (std::size_t i = 0; i < d.size(); ++i) {
            const std::string p = prefix + "divisor[" + std::to_string(i) + "]";
            check_keys(d[i], p, with_coordinates ? std::set<std::string>{"id", "coordinate", "role"}
                                                 : std::set<std::string>{"id", "role"});
            DivisorDecl decl;
            if (with_coordinates) decl.coordinate = get_string(require(d[i], "coordinate", p), p + ".coordinate");
            if (d[i].contains("id")) decl.id = get_string(d[i]["id"], p + ".id");
            else if (decl.coordinate) decl.id = "Z" + *decl.coordinate;
            else throw InputError(p + ": missing key 'id'");
            if (d[i].contains("role")) decl.role = parse_role(get_string(d[i]["role"], p + ".role"));
            spec.divisor.push_back(std::move(decl));
        }
    };

    switch (spec.kind) {
    case ModelKind::Torus: {
        for (const char* k : {"factors", "manifold_betti", "strata"})
            if (j.contains(k)) throw InputError(prefix + k + ": not allowed for a torus model");
        spec.dimension = static_cast<int>(get_integer(require(j, "dimension", path), prefix + "dimension"));
        if (spec.dimension <= 0 || spec.dimension % 2 || spec.dimension > kMaxCoords)
            throw InputError(prefix + "dimension: torus dimension must be even and between 2 and " +
                             std::to_string(kMaxCoords));
        spec.coordinates = j.contains("coordinates") ? get_strings(j["coordinates"], prefix + "coordinates")
                                                     : default_coordinates(spec.dimension);
        if (static_cast<int>(spec.coordinates.size()) != spec.dimension)
            throw InputError(prefix + "coordinates: expected " + std::to_string(spec.dimension) + " names");
        check_coordinate_names(spec.coordinates);
        read_divisor(true);
        for (const auto& d : spec.divisor)
            if (std::find(spec.coordinates.begin(), spec.coordinates.end(), *d.coordinate) == spec.coordinates.end())
                throw InputError(prefix + "divisor: unknown coordinate '" + *d.coordinate + "'");
        break;
    }
    case ModelKind::Product: {
        for (const char* k : {"coordinates", "divisor", "manifold_betti", "strata"})
            if (j.contains(k)) throw InputError(prefix + k + ": declare it on the factors of a product");
        const json& fs = get_array(require(j, "factors", path), prefix + "factors");
        if (fs.empty()) throw InputError(prefix + "factors: a product needs at least one factor");
        for (std::size_t i = 0; i < fs.size(); ++i)
            spec.factors.push_back(parse_spec(fs[i], prefix + "factors[" + std::to_string(i) + "]", locate, true));
        int dim = 0;
        for (const auto& f : spec.factors) dim += f.dimension;
        if (j.contains("dimension") && get_integer(j["dimension"], prefix + "dimension") != dim)
            throw InputError(prefix + "dimension: factors have total dimension " + std::to_string(dim));
        spec.dimension = dim;
        spec.coordinates = coordinate_names(spec);
        if (!spec.coordinates.empty()) check_coordinate_names(spec.coordinates);
        break;
    }
    case ModelKind::Custom: {
        for (const char* k : {"coordinates", "factors"})
            if (j.contains(k)) throw InputError(prefix + k + ": not allowed for a custom model");
        spec.dimension = static_cast<int>(get_integer(require(j, "dimension", path), prefix + "dimension"));
        spec.manifold_betti = get_betti(require(j, "manifold_betti", path), prefix + "manifold_betti");
        read_divisor(false);
        if (j.contains("strata")) {
            const json& st = get_array(j["strata"], prefix + "strata");
            for (std::size_t i = 0; i < st.size(); ++i) {
                const std::string p = prefix + "strata[" + std::to_string(i) + "]";
                check_keys(st[i], p, {"subset", "betti", "empty"});
                CustomStratum s;
                s.subset = get_strings(require(st[i], "subset", p), p + ".subset");
                if (st[i].contains("empty")) s.empty = get_bool(st[i]["empty"], p + ".empty");
                if (st[i].contains("betti")) s.betti = get_betti(st[i]["betti"], p + ".betti");
                else if (!s.empty) throw InputError(p + ": missing key 'betti'");
                spec.strata.push_back(std::move(s));
            }
        }
        break;
    }
    }
    if (factor) return spec;

    if (j.contains("omega")) spec.omega = locate.expression("omega", get_string(j["omega"], "omega"));
    if (j.contains("pi")) spec.pi = locate.expression("pi", get_string(j["pi"], "pi"));
    if (j.contains("cosymplectic")) {
        const json& c = j["cosymplectic"];
        check_keys(c, "cosymplectic", {"alphas", "beta"});
        CosymplecticInput in;
        if (c.contains("alphas"))
            for (const auto& a : get_strings(c["alphas"], "cosymplectic.alphas"))
                in.alphas.push_back(locate.expression("alphas", a));
        if (c.contains("beta")) in.beta = locate.expression("beta", get_string(c["beta"], "cosymplectic.beta"));
        spec.cosymplectic = std::move(in);
    }
    if (j.contains("oracle")) {
        const json& o = j["oracle"];
        check_keys(o, "oracle", {"cutoff", "max_matrix", "degrees"});
        if (o.contains("cutoff")) spec.oracle.cutoff = static_cast<int>(get_integer(o["cutoff"], "oracle.cutoff"));
        if (o.contains("max_matrix")) spec.oracle.max_matrix = get_integer(o["max_matrix"], "oracle.max_matrix");
        if (o.contains("degrees")) {
            spec.oracle.degrees.clear();
            for (std::size_t i = 0; i < get_array(o["degrees"], "oracle.degrees").size(); ++i)
                spec.oracle.degrees.push_back(
                    static_cast<int>(get_integer(o["degrees"][i], "oracle.degrees[" + std::to_string(i) + "]")));
        }
        if (spec.oracle.cutoff < 1) throw InputError("oracle.cutoff: must be at least 1");
        if (spec.oracle.max_matrix < 1) throw InputError("oracle.max_matrix: must be positive");
        for (int p : spec.oracle.degrees)
            if (p < 0 || p > spec.dimension) throw InputError("oracle.degrees: degree outside 0.." +
                                                              std::to_string(spec.dimension));
    }
    return spec;
}

ClassDecomposition parse_decomposition(const json& j, const Arrangement& arr) {
    check_keys(j, "decomposition", {"a", "b", "c"});
    ClassDecomposition dec;
    if (j.contains("a")) {
        const json& a = j["a"];
        if (a.is_boolean()) {
            dec.a.present = a.get<bool>();
        } else {
            check_keys(a, "decomposition.a", {"present", "representative"});
            dec.a.present = get_bool(require(a, "present", "decomposition.a"), "decomposition.a.present");
            if (a.contains("representative"))
                dec.a.representative = get_string(a["representative"], "decomposition.a.representative");
        }
    }
    if (j.contains("b")) {
        const json& b = j["b"];
        if (!b.is_object()) throw InputError("decomposition.b: expected an object keyed by hypersurface id");
        for (const auto& [id, entry] : b.items()) {
            const std::string p = "decomposition.b." + id;
            ClassDecomposition::BClass cls;
            if (entry.is_boolean()) {
                cls.nonzero = entry.get<bool>();
            } else {
                check_keys(entry, p, {"nonzero", "restriction_vanishes", "representative"});
                cls.nonzero = get_bool(require(entry, "nonzero", p), p + ".nonzero");
                if (entry.contains("restriction_vanishes")) {
                    const json& r = entry["restriction_vanishes"];
                    if (!r.is_object()) throw InputError(p + ".restriction_vanishes: expected an object");
                    for (const auto& [t, flag] : r.items())
                        cls.restriction_vanishes[t] = get_bool(flag, p + ".restriction_vanishes." + t);
                }
                if (entry.contains("representative"))
                    cls.representative = get_string(entry["representative"], p + ".representative");
            }
            if (!arr.contains(id)) throw InputError(p + ": unknown hypersurface '" + id + "'");
            dec.b[id] = std::move(cls);
        }
    }
    if (j.contains("c")) {
        const json& c = get_array(j["c"], "decomposition.c");
        for (std::size_t i = 0; i < c.size(); ++i) {
            const std::string p = "decomposition.c[" + std::to_string(i) + "]";
            check_keys(c[i], p, {"pair", "values"});
            const auto ids = get_strings(require(c[i], "pair", p), p + ".pair");
            if (ids.size() != 2) throw InputError(p + ".pair: expected two hypersurface ids");
            for (const auto& id : ids)
                if (!arr.contains(id)) throw InputError(p + ".pair: unknown hypersurface '" + id + "'");
            ClassDecomposition::Pair key{ids[0], ids[1]};
            if (arr.index_of(ids[0]) > arr.index_of(ids[1])) std::swap(key.first, key.second);
            std::vector<mpq_class> values;
            const json& v = get_array(require(c[i], "values", p), p + ".values");
            for (std::size_t k = 0; k < v.size(); ++k)
                values.push_back(get_rational(v[k], p + ".values[" + std::to_string(k) + "]"));
            if (!dec.c.emplace(key, std::move(values)).second)
                throw InputError(p + ": c entry for " + key.first + ", " + key.second + " given twice");
        }
    }
    validate(dec, arr);
    return dec;
}

json decomposition_json(const ClassDecomposition& dec) {
    json out;
    json a;
    a["present"] = dec.a.present;
    if (dec.a.representative) a["representative"] = *dec.a.representative;
    out["a"] = a;
    json b = json::object();
    for (const auto& [id, cls] : dec.b) {
        json e;
        e["nonzero"] = cls.nonzero;
        if (!cls.restriction_vanishes.empty()) {
            json r = json::object();
            for (const auto& [t, flag] : cls.restriction_vanishes) r[t] = flag;
            e["restriction_vanishes"] = r;
        }
        if (cls.representative) e["representative"] = *cls.representative;
        b[id] = e;
    }
    out["b"] = b;
    json c = json::array();
    for (const auto& [pair, values] : dec.c) {
        json v = json::array();
        for (const auto& q : values) v.push_back(rational_json(q));
        c.push_back(json{{"pair", {pair.first, pair.second}}, {"values", v}});
    }
    out["c"] = c;
    return out;
}

json spec_json(const ModelSpec& spec, bool factor) {
    json j;
    if (!spec.name.empty()) j["name"] = spec.name;
    j["kind"] = to_string(spec.kind);
    j["dimension"] = spec.dimension;
    auto divisor = [&](bool with_coordinates) {
        json d = json::array();
        for (const auto& decl : spec.divisor) {
            json e;
            e["id"] = decl.id;
            if (with_coordinates && decl.coordinate) e["coordinate"] = *decl.coordinate;
            if (decl.role) e["role"] = to_string(*decl.role);
            d.push_back(e);
        }
        return d;
    };
    switch (spec.kind) {
    case ModelKind::Torus:
        j["coordinates"] = spec.coordinates;
        j["divisor"] = divisor(true);
        break;
    case ModelKind::Product: {
        json fs = json::array();
        for (const auto& f : spec.factors) fs.push_back(spec_json(f, true));
        j["factors"] = fs;
        break;
    }
    case ModelKind::Custom: {
        j["manifold_betti"] = betti_json(spec.manifold_betti.value_or(BettiVector{}));
        j["divisor"] = divisor(false);
        json st = json::array();
        for (const auto& s : spec.strata) {
            json e;
            e["subset"] = s.subset;
            if (!s.empty || !s.betti.dims().empty()) e["betti"] = betti_json(s.betti);
            if (s.empty) e["empty"] = true;
            st.push_back(e);
        }
        j["strata"] = st;
        break;
    }
    }
    if (factor) return j;
    if (spec.omega) j["omega"] = spec.omega->text;
    if (spec.pi) j["pi"] = spec.pi->text;
    if (spec.cosymplectic) {
        json c;
        json alphas = json::array();
        for (const auto& a : spec.cosymplectic->alphas) alphas.push_back(a.text);
        c["alphas"] = alphas;
        if (spec.cosymplectic->beta) c["beta"] = spec.cosymplectic->beta->text;
        j["cosymplectic"] = c;
    }
    if (spec.decomposition) j["decomposition"] = decomposition_json(*spec.decomposition);
    if (spec.oracle != OracleSettings{}) {
        j["oracle"] = json{{"cutoff", spec.oracle.cutoff},
                           {"max_matrix", spec.oracle.max_matrix},
                           {"degrees", spec.oracle.degrees}};
    }
    return j;
}

IndexMask divisor_coordinate_mask(const ModelSpec& spec, const Arrangement& arr) {
    IndexMask m = 0;
    for (const auto& h : arr.hypersurfaces()) {
        if (!h.coordinate) throw InputError("forms need a torus model; '" + h.id + "' has no coordinate");
        m |= bit(*h.coordinate);
    }
    (void)spec;
    return m;
}

LogForm parse_checked_form(const Expression& e, const ModelSpec& spec, const Arrangement& arr, int degree,
                           const std::string& what) {
    const auto names = coordinate_names(spec);
    if (names.empty()) throw InputError(what + ": forms need a torus model");
    const LogForm w = parse_form(e.text, names, e.at);
    if (w.dim() != spec.dimension) throw InputError(what + ": dimension mismatch");
    const IndexMask divisor = divisor_coordinate_mask(spec, arr);
    if (w.poles() & ~divisor) {
        for (int i : mask_indices(w.poles() & ~divisor))
            throw ParseError("log pole on coordinate outside the divisor", e.at.line, e.at.column, names[i]);
    }
    if (!w.is_zero() && w.degree() != degree)
        throw ParseError(what + " must have degree " + std::to_string(degree), e.at.line, e.at.column, "");
    if (w.is_zero() && w.degree() != degree) return LogForm(spec.dimension, divisor, degree);
    return w.with_poles(divisor);
}

void validate_expressions(const ModelSpec& spec, const Arrangement& arr) {
    if (spec.omega) parse_checked_form(*spec.omega, spec, arr, 2, "omega");
    if (spec.pi) {
        const auto names = coordinate_names(spec);
        if (names.empty()) throw InputError("pi: bivectors need a torus model");
        const Multivector p = parse_multivector(spec.pi->text, names, spec.pi->at);
        if (!p.is_zero() && p.degree() != 2)
            throw ParseError("pi must be a bivector", spec.pi->at.line, spec.pi->at.column, "");
    }
    if (spec.cosymplectic) {
        for (const auto& a : spec.cosymplectic->alphas) parse_checked_form(a, spec, arr, 1, "alpha");
        if (spec.cosymplectic->beta) parse_checked_form(*spec.cosymplectic->beta, spec, arr, 2, "beta");
    }
}

} // namespace

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::Torus: return "torus";
    case ModelKind::Product: return "product";
    case ModelKind::Custom: return "custom";
    }
    return "torus";
}

bool operator==(const ClassDecomposition& a, const ClassDecomposition& b) {
    if (a.a.present != b.a.present || a.a.representative != b.a.representative) return false;
    if (a.b.size() != b.b.size() || a.c != b.c) return false;
    for (const auto& [id, cls] : a.b) {
        auto it = b.b.find(id);
        if (it == b.b.end() || it->second.nonzero != cls.nonzero ||
            it->second.restriction_vanishes != cls.restriction_vanishes ||
            it->second.representative != cls.representative)
            return false;
    }
    return true;
}

bool operator==(const ModelSpec& a, const ModelSpec& b) {
    return a.name == b.name && a.kind == b.kind && a.dimension == b.dimension && a.coordinates == b.coordinates &&
           a.divisor == b.divisor && a.factors == b.factors && a.manifold_betti == b.manifold_betti &&
           a.strata == b.strata && a.omega == b.omega && a.pi == b.pi && a.decomposition == b.decomposition &&
           a.cosymplectic == b.cosymplectic && a.oracle == b.oracle;
}

ModelSpec parse_model(std::string_view source) {
    json j;
    try {
        j = json::parse(source.begin(), source.end());
    } catch (const json::parse_error& e) {
        const SourceLocation at = location_at(source, e.byte > 0 ? e.byte - 1 : 0);
        std::string what = e.what();
        if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
        throw ParseError("invalid JSON: " + what, at.line, at.column, "");
    }
    Locator locate(source);
    ModelSpec spec = parse_spec(j, "", locate, false);
    const Arrangement arr = build_arrangement(spec);
    if (j.contains("decomposition")) spec.decomposition = parse_decomposition(j["decomposition"], arr);
    validate_expressions(spec, arr);
    return spec;
}

ModelSpec load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open model file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_model(text.str());
}

std::string serialize_model(const ModelSpec& spec) { return spec_json(spec, false).dump(2) + "\n"; }

std::vector<std::string> coordinate_names(const ModelSpec& spec) {
    switch (spec.kind) {
    case ModelKind::Torus: return spec.coordinates;
    case ModelKind::Custom: return {};
    case ModelKind::Product: {
        std::vector<std::string> out;
        for (const auto& f : spec.factors) {
            const auto names = coordinate_names(f);
            if (names.empty()) return {};
            out.insert(out.end(), names.begin(), names.end());
        }
        return out;
    }
    }
    return {};
}

Arrangement build_arrangement(const ModelSpec& spec) {
    auto with_labels = [&](const Arrangement& base) {
        std::vector<Hypersurface> hs = base.hypersurfaces();
        for (std::size_t i = 0; i < hs.size(); ++i) hs[i].label = spec.divisor[i].role;
        return Arrangement(base.manifold_dim(), std::move(hs), base.strata());
    };
    switch (spec.kind) {
    case ModelKind::Torus: {
        std::vector<int> coords;
        std::vector<std::string> ids;
        for (const auto& d : spec.divisor) {
            const auto it = std::find(spec.coordinates.begin(), spec.coordinates.end(), *d.coordinate);
            coords.push_back(static_cast<int>(it - spec.coordinates.begin()));
            ids.push_back(d.id);
        }
        return with_labels(torus_model(spec.dimension, coords, ids));
    }
    case ModelKind::Custom: {
        std::vector<Hypersurface> hs;
        for (const auto& d : spec.divisor) hs.push_back(Hypersurface{d.id, d.role, std::nullopt});
        std::vector<StratumEntry> table;
        for (const auto& s : spec.strata) table.push_back(StratumEntry{s.subset, s.betti, s.empty});
        return custom_arrangement(*spec.manifold_betti, spec.dimension, std::move(hs), table);
    }
    case ModelKind::Product: {
        Arrangement out = build_arrangement(spec.factors.front());
        for (std::size_t i = 1; i < spec.factors.size(); ++i) out = product(out, build_arrangement(spec.factors[i]));
        return out;
    }
    }
    throw Error("unknown model kind");
}

std::optional<LogForm> model_form(const ModelSpec& spec) {
    if (!spec.omega) return std::nullopt;
    return parse_checked_form(*spec.omega, spec, build_arrangement(spec), 2, "omega");
}

std::optional<Multivector> model_bivector(const ModelSpec& spec) {
    if (!spec.pi) return std::nullopt;
    const Multivector p = parse_multivector(spec.pi->text, coordinate_names(spec), spec.pi->at);
    return p.is_zero() ? Multivector(spec.dimension, 2) : p;
}

std::vector<LogForm> model_alphas(const ModelSpec& spec) {
    std::vector<LogForm> out;
    if (!spec.cosymplectic) return out;
    const Arrangement arr = build_arrangement(spec);
    for (const auto& a : spec.cosymplectic->alphas) out.push_back(parse_checked_form(a, spec, arr, 1, "alpha"));
    return out;
}

std::optional<LogForm> model_beta(const ModelSpec& spec) {
    if (!spec.cosymplectic || !spec.cosymplectic->beta) return std::nullopt;
    return parse_checked_form(*spec.cosymplectic->beta, spec, build_arrangement(spec), 2, "beta");
}

} // namespace logsym
