#include "logsym/cli.hpp"

#include <functional>
#include <sstream>

#include "json.hpp"

#include "logsym/error.hpp"
#include "logsym/logcohom.hpp"
#include "logsym/oracle.hpp"
#include "logsym/poisson.hpp"
#include "logsym/symcalc.hpp"

namespace logsym {

namespace {

using json = nlohmann::ordered_json;

struct Result {
    int exit_code = 0;
    std::string status = "ok";
    json body = json::object();
    std::vector<std::vector<std::string>> rows;

    void fail(const std::string& why = "failed") {
        exit_code = 2;
        if (status == "ok" || why == "failed") status = why;
    }
};

struct Context {
    const ModelSpec& spec;
    const RunFlags& flags;
    Arrangement arr;
    std::vector<std::string> names;
};

std::string join(const std::vector<std::string>& v, const std::string& sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

json betti_json(const BettiVector& v) {
    json out = json::array();
    for (const auto& d : v.dims()) {
        if (d.fits_slong_p()) out.push_back(d.get_si());
        else out.push_back(d.get_str());
    }
    return out;
}

void dims_rows(Result& r, const BettiVector& v, int n) {
    r.rows.push_back({"p", "dim"});
    for (int p = 0; p <= n; ++p) r.rows.push_back({std::to_string(p), v[p].get_str()});
}

std::string quarter_name(int q) {
    static const char* names[] = {"0", "pi/2", "pi", "3pi/2"};
    return names[((q % 4) + 4) % 4];
}

json certificate_json(const NonvanishingCertificate& c, const std::vector<std::string>& names) {
    json j;
    j["verdict"] = to_string(c.verdict);
    j["method"] = c.method;
    if (c.zero_witness) {
        json w = json::object();
        for (std::size_t i = 0; i < c.zero_witness->size(); ++i)
            w[coordinate_name(names, static_cast<int>(i))] = quarter_name((*c.zero_witness)[i]);
        j["zero_witness"] = w;
    }
    if (c.sign_witness) j["sign_witness"] = {c.sign_witness->first, c.sign_witness->second};
    if (c.method == "grid" || c.method == "budget" || c.method == "sign-change") {
        j["grid_points_per_axis"] = c.grid_points_per_axis;
        j["min_abs_value"] = c.min_abs_value;
        j["lipschitz"] = c.lipschitz;
    }
    return j;
}

json partition_json(const Partition& p) {
    json pairs = json::array();
    for (const auto& [x, y] : p.pairs) pairs.push_back({x, y});
    return json{{"pairs", pairs}, {"zs", p.zs}, {"k", p.k()}, {"ell", p.ell()}};
}

json violations_json(const PartitionReport& rep) {
    json out = json::array();
    for (const auto& v : rep.violations) out.push_back(json{{"clause", v.clause}, {"ids", v.ids}, {"detail", v.detail}});
    return out;
}

void violation_rows(Result& r, const PartitionReport& rep) {
    r.rows.push_back({"partitionable", rep.partitionable ? "true" : "false"});
    if (rep.violations.empty()) return;
    r.rows.push_back({"clause", "ids", "detail"});
    for (const auto& v : rep.violations) r.rows.push_back({v.clause, join(v.ids), v.detail});
}

PartitionOptions partition_options(const Context& c) { return PartitionOptions{c.flags.strict_components}; }

json decomposition_body(const ClassDecomposition& dec) {
    json a{{"present", dec.a.present}};
    if (dec.a.representative) a["representative"] = *dec.a.representative;
    json b = json::object();
    for (const auto& [id, cls] : dec.b) {
        json e{{"nonzero", cls.nonzero}};
        json flags = json::object();
        for (const auto& [t, f] : cls.restriction_vanishes) flags[t] = f;
        e["restriction_vanishes"] = flags;
        if (cls.representative) e["representative"] = *cls.representative;
        b[id] = e;
    }
    json c = json::array();
    for (const auto& [pair, values] : dec.c) {
        json v = json::array();
        for (const auto& q : values) {
            if (q.get_den() == 1 && q.get_num().fits_slong_p()) v.push_back(q.get_num().get_si());
            else v.push_back(q.get_str());
        }
        c.push_back(json{{"pair", {pair.first, pair.second}}, {"values", v}});
    }
    return json{{"a", a}, {"b", b}, {"c", c}};
}

ClassDecomposition decomposition_of(const Context& c, std::string* source = nullptr) {
    if (c.spec.omega && c.spec.decomposition)
        throw InputError("give either omega or an abstract decomposition, not both");
    if (c.spec.decomposition) {
        if (source) *source = "decomposition";
        return *c.spec.decomposition;
    }
    if (c.spec.omega) {
        if (source) *source = "omega";
        return decompose_class(*model_form(c.spec), c.arr, c.names);
    }
    throw InputError("this command needs omega or an abstract decomposition");
}

// Derived partition, or nothing (with the failure recorded) if the class is not partitionable.
std::optional<Partition> partition_of(const Context& c, Result& r) {
    const ClassDecomposition dec = decomposition_of(c);
    const PartitionReport rep = is_partitionable(dec, c.arr, partition_options(c));
    if (!rep.partitionable) {
        r.body["partitionable"] = false;
        r.body["violations"] = violations_json(rep);
        violation_rows(r, rep);
        r.fail();
        return std::nullopt;
    }
    const Partition p = derive_partition(dec, c.arr, partition_options(c));
    r.body["partition"] = partition_json(p);
    const auto declared = partition_from_labels(c.arr);
    if (!declared) {
        r.body["labels"] = "absent";
    } else if (declared->canonical() == p.canonical()) {
        r.body["labels"] = "agree";
    } else {
        r.body["labels"] = "disagree";
        r.body["declared_partition"] = partition_json(declared->canonical());
        r.fail();
    }
    return p;
}

Result cmd_b_cohomology(const Context& c) {
    Result r;
    const int n = c.arr.manifold_dim();
    const BettiVector dims = b_cohomology(c.arr);
    r.body["dimension"] = n;
    r.body["dims"] = betti_json(dims.resized(n));
    json terms = json::array();
    for (SubsetMask m = 0; m <= c.arr.full_mask(); ++m) {
        const Stratum& s = c.arr.stratum(m);
        const int shift_by = static_cast<int>(s.subset.size());
        terms.push_back(json{{"subset", s.subset},
                             {"shift", shift_by},
                             {"empty", s.empty},
                             {"dims", betti_json(shift(s.betti, shift_by).resized(n))}});
        if (m == c.arr.full_mask()) break;
    }
    r.body["terms"] = terms;
    dims_rows(r, dims, n);
    return r;
}

Result cmd_decompose(const Context& c) {
    Result r;
    std::string source;
    const ClassDecomposition dec = decomposition_of(c, &source);
    r.body["source"] = source;
    r.body["decomposition"] = decomposition_body(dec);
    r.rows.push_back({"class", "ids", "value"});
    r.rows.push_back({"a", "", dec.a.present ? "present" : "absent"});
    for (const auto& h : c.arr.hypersurfaces()) {
        auto it = dec.b.find(h.id);
        r.rows.push_back({"b", h.id, it != dec.b.end() && it->second.nonzero ? "nonzero" : "zero"});
    }
    for (const auto& [pair, values] : dec.c) {
        std::vector<std::string> v;
        for (const auto& q : values) v.push_back(q.get_str());
        r.rows.push_back({"c", pair.first + "," + pair.second, join(v)});
    }
    return r;
}

Result cmd_check_partitionable(const Context& c) {
    Result r;
    const PartitionReport rep = is_partitionable(decomposition_of(c), c.arr, partition_options(c));
    r.body["partitionable"] = rep.partitionable;
    r.body["violations"] = violations_json(rep);
    violation_rows(r, rep);
    if (!rep.partitionable) r.fail();
    return r;
}

Result cmd_partition(const Context& c) {
    Result r;
    const auto p = partition_of(c, r);
    if (!p) return r;
    json types = json::array();
    r.rows.push_back({"role", "ids"});
    for (const auto& [x, y] : p->pairs) r.rows.push_back({"pair", x + "," + y});
    for (const auto& z : p->zs) r.rows.push_back({"z", z});
    r.rows.push_back({"labels", r.body["labels"].get<std::string>()});
    for (const auto& t : intersection_types(*p, c.arr)) {
        types.push_back(json{{"ids", {t.ids.first, t.ids.second}},
                             {"type", t.type},
                             {"leaf_codimension", t.leaf_codimension}});
        r.rows.push_back({"type-" + std::to_string(t.type), t.ids.first + "," + t.ids.second});
    }
    r.body["intersections"] = types;
    return r;
}

json collection_json(const IndexCollection& col) {
    return json{{"I", col.I}, {"J", col.J}, {"K", col.K}, {"L", col.L}, {"m", col.m}};
}

Result cmd_poisson(const Context& c) {
    Result r;
    const auto p = partition_of(c, r);
    if (!p) return r;
    const PoissonReport rep = poisson_cohomology_report(c.arr, *p, PoissonOptions{c.flags.strict_jk});
    const int n = c.arr.manifold_dim();
    r.body["strict_jk"] = c.flags.strict_jk;
    r.body["dims"] = betti_json(rep.total.resized(n));
    json terms = json::array();
    for (const auto& t : rep.terms) {
        json e;
        e["collection"] = t.collection ? collection_json(*t.collection) : json(nullptr);
        e["stratum"] = t.stratum;
        e["shift"] = t.shift;
        e["empty_stratum"] = t.empty_stratum;
        e["twisted_pairs"] = t.twist.twisted_pairs;
        e["dims"] = betti_json(t.dims.resized(n));
        terms.push_back(e);
    }
    r.body["terms"] = terms;
    dims_rows(r, rep.total, n);
    return r;
}

Result cmd_verify_symplectic(const Context& c) {
    Result r;
    const auto w = model_form(c.spec);
    if (!w) throw InputError("verify-symplectic needs omega");
    const SymplecticCertificate cert = is_log_symplectic(*w);
    r.body["closed"] = cert.closed;
    r.body["nondegenerate"] = to_string(cert.nondegenerate.verdict);
    r.body["top_coefficient"] = cert.top_coefficient.to_string(c.names);
    r.body["certificate"] = certificate_json(cert.nondegenerate, c.names);
    r.rows.push_back({"check", "result"});
    r.rows.push_back({"closed", cert.closed ? "true" : "false"});
    r.rows.push_back({"nondegenerate", to_string(cert.nondegenerate.verdict)});
    if (!cert.closed || cert.nondegenerate.verdict == Verdict::False) r.fail();
    else if (cert.nondegenerate.verdict == Verdict::Undetermined) r.fail("undetermined");
    if (const auto pi = model_bivector(c.spec)) {
        const bool poisson = schouten(*pi, *pi).is_zero();
        const bool inverse = verify_inverse(*w, *pi);
        r.body["poisson"] = poisson;
        r.body["inverse"] = inverse;
        r.rows.push_back({"poisson", poisson ? "true" : "false"});
        r.rows.push_back({"inverse", inverse ? "true" : "false"});
        if (!poisson || !inverse) r.fail();
    }
    return r;
}

json cosymplectic_json(const CosymplecticCertificate& cert, int k, const std::vector<std::string>& names) {
    return json{{"k", k},
                {"ell", cert.ell},
                {"closed", cert.closed},
                {"nonvanishing", to_string(cert.nonvanishing.verdict)},
                {"top_coefficient", cert.top_coefficient.to_string(names)},
                {"certificate", certificate_json(cert.nonvanishing, names)}};
}

void record(Result& r, const CosymplecticCertificate& cert) {
    if (!cert.closed || cert.nonvanishing.verdict == Verdict::False) r.fail();
    else if (cert.nonvanishing.verdict == Verdict::Undetermined) r.fail("undetermined");
}

Result cmd_cosymplectic(const Context& c) {
    Result r;
    if (c.spec.cosymplectic) {
        const auto alphas = model_alphas(c.spec);
        const auto beta = model_beta(c.spec);
        const CosymplecticCertificate cert =
            is_k_cosymplectic(alphas, beta.value_or(LogForm()), c.arr.manifold_dim());
        r.body["mode"] = "explicit";
        r.body["structure"] = cosymplectic_json(cert, static_cast<int>(alphas.size()), c.names);
        r.rows.push_back({"k", "ell", "closed", "nonvanishing"});
        r.rows.push_back({std::to_string(alphas.size()), std::to_string(cert.ell), cert.closed ? "true" : "false",
                          to_string(cert.nonvanishing.verdict)});
        record(r, cert);
        return r;
    }
    const auto w = model_form(c.spec);
    if (!w) throw InputError("cosymplectic needs omega or explicit cosymplectic data");
    r.body["mode"] = "induced";
    const auto p = partition_of(c, r);
    if (!p) return r;
    json strata = json::array();
    r.rows.push_back({"stratum", "component", "k", "ell", "closed", "nonvanishing"});
    for (SubsetMask m = 1; m <= c.arr.full_mask(); ++m) {
        if (!c.arr.stratum(m).empty) {
            const auto subset = c.arr.ids_of(m);
            const InducedStructure s = induced_cosymplectic(*w, c.arr, subset, c.names, partition_options(c));
            json comps = json::array();
            for (const auto& comp : s.components) {
                std::vector<std::string> at;
                for (bool b : comp.at_pi) at.push_back(b ? "pi" : "0");
                json alphas = json::array();
                for (const auto& a : comp.alphas) alphas.push_back(a.to_string(s.names));
                json e = cosymplectic_json(comp.certificate, static_cast<int>(comp.alphas.size()), s.names);
                e["at"] = at;
                e["alphas"] = alphas;
                e["beta"] = comp.beta.to_string(s.names);
                comps.push_back(e);
                r.rows.push_back({join(subset), join(at), std::to_string(comp.alphas.size()),
                                  std::to_string(comp.certificate.ell), comp.certificate.closed ? "true" : "false",
                                  to_string(comp.certificate.nonvanishing.verdict)});
                record(r, comp.certificate);
            }
            strata.push_back(json{{"subset", subset},
                                  {"subpartition", partition_json(s.subpartition)},
                                  {"coordinates", s.names},
                                  {"verified", s.verified()},
                                  {"components", comps}});
        }
        if (m == c.arr.full_mask()) break;
    }
    r.body["strata"] = strata;
    return r;
}

Result cmd_oracle(const Context& c) {
    Result r;
    const int cutoff = c.flags.cutoff.value_or(c.spec.oracle.cutoff);
    const long cap = c.flags.max_matrix.value_or(c.spec.oracle.max_matrix);
    if (cutoff < 1) throw InputError("cutoff must be at least 1");
    if (c.names.empty()) throw InputError("the oracle needs a torus model");
    const int n = c.arr.manifold_dim();
    const OracleOptions options{ImageConvention::Intersection, cap};
    r.body["cutoff"] = cutoff;
    r.body["max_matrix"] = cap;
    r.rows.push_back({"check", "degree", "value", "expected", "stabilized"});
    if (n <= 4) {
        const BettiVector dr = de_rham_betti_oracle(n, cutoff, options);
        const bool agrees = dr == BettiVector::torus(n);
        r.body["de_rham"] = json{{"dims", betti_json(dr)}, {"agrees", agrees}};
        for (int p = 0; p <= n; ++p)
            r.rows.push_back({"de-rham", std::to_string(p), dr[p].get_str(), BettiVector::torus(n)[p].get_str(), ""});
        if (!agrees) r.fail();
    }
    const auto pi = model_bivector(c.spec);
    if (!pi) {
        r.body["lichnerowicz"] = json::array();
        return r;
    }
    std::optional<BettiVector> theorem;
    if (c.spec.omega || c.spec.decomposition) {
        const ClassDecomposition dec = decomposition_of(c);
        if (is_partitionable(dec, c.arr, partition_options(c)).partitionable)
            theorem = poisson_cohomology(c.arr, derive_partition(dec, c.arr, partition_options(c)),
                                         PoissonOptions{c.flags.strict_jk});
    }
    json estimates = json::array();
    for (int p : c.spec.oracle.degrees) {
        const LichnerowiczEstimate e = truncated_lichnerowicz(*pi, p, cutoff, options);
        json j{{"degree", p},
               {"cutoff", e.cutoff},
               {"convention", "intersection"},
               {"estimate", e.dim_estimate},
               {"previous_estimate", e.previous_estimate},
               {"stabilized", e.stabilized},
               {"kernel_dim", e.kernel_dim},
               {"image_rank", e.image_rank},
               {"columns", e.columns}};
        std::string expected;
        if (theorem) {
            const mpz_class t = (*theorem)[p];
            expected = t.get_str();
            j["theorem"] = t.get_si();
            const bool agrees = mpz_class(e.dim_estimate) == t;
            j["agrees"] = agrees;
            if (e.stabilized && !agrees) r.fail();
        }
        estimates.push_back(j);
        r.rows.push_back({"lichnerowicz", std::to_string(p), std::to_string(e.dim_estimate), expected,
                          e.stabilized ? "true" : "false"});
    }
    r.body["lichnerowicz"] = estimates;
    return r;
}

using Handler = std::function<Result(const Context&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
    static const std::vector<std::pair<std::string, Handler>> h{
        {"b-cohomology", cmd_b_cohomology},
        {"decompose", cmd_decompose},
        {"check-partitionable", cmd_check_partitionable},
        {"partition", cmd_partition},
        {"poisson-cohomology", cmd_poisson},
        {"verify-symplectic", cmd_verify_symplectic},
        {"cosymplectic", cmd_cosymplectic},
        {"oracle", cmd_oracle},
    };
    return h;
}

bool applicable(const std::string& command, const ModelSpec& spec) {
    const bool has_class = spec.omega || spec.decomposition;
    if (command == "b-cohomology") return true;
    if (command == "verify-symplectic") return spec.omega.has_value();
    if (command == "cosymplectic") return spec.omega || spec.cosymplectic;
    if (command == "oracle") return spec.pi.has_value();
    return has_class;
}

json report_json(const std::string& command, const ModelSpec& spec, const Result& r) {
    json j{{"command", command}, {"model", spec.name}, {"status", r.status}, {"exit_code", r.exit_code}};
    for (const auto& [k, v] : r.body.items()) j[k] = v;
    return j;
}

std::string table_text(const Result& r) {
    std::ostringstream out;
    for (const auto& row : r.rows) out << join(row, "\t") << "\n";
    return out.str();
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, h] : handlers()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

CommandOutput run_command(const std::string& command, const ModelSpec& spec, const RunFlags& flags) {
    Context c{spec, flags, build_arrangement(spec), coordinate_names(spec)};
    CommandOutput out;
    if (command == "all") {
        json reports = json::array();
        std::string table;
        for (const auto& [name, handler] : handlers()) {
            if (!applicable(name, spec)) continue;
            const Result r = handler(c);
            out.exit_code = std::max(out.exit_code, r.exit_code);
            reports.push_back(report_json(name, spec, r));
            table += (table.empty() ? "" : "\n") + ("# " + name + "\n") + table_text(r);
        }
        const json j{{"command", "all"},
                     {"model", spec.name},
                     {"status", out.exit_code ? "failed" : "ok"},
                     {"exit_code", out.exit_code},
                     {"reports", reports}};
        out.json = j.dump(2) + "\n";
        out.table = table;
        return out;
    }
    for (const auto& [name, handler] : handlers()) {
        if (name != command) continue;
        const Result r = handler(c);
        out.exit_code = r.exit_code;
        out.json = report_json(command, spec, r).dump(2) + "\n";
        out.table = table_text(r);
        return out;
    }
    throw InputError("unknown command '" + command + "'");
}

} // namespace logsym
