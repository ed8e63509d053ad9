#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "logsym/decomposition.hpp"
#include "logsym/logcohom.hpp"
#include "logsym/oracle.hpp"
#include "logsym/parse.hpp"
#include "logsym/poisson.hpp"
#include "logsym/symcalc.hpp"

using namespace logsym;
using nlohmann::json;

namespace {

std::string logsym_binary;
std::string models_dir;
std::string golden_dir;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double seconds_limit;
    std::function<Outcome()> run;
};

struct Process {
    int exit_code = -1;
    std::string output;
};

Process run_cli(const std::string& args) {
    Process p;
    const std::string cmd = logsym_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return p;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.output.append(buf.data(), n);
    const int status = pclose(pipe);
    p.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

long binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// H^q of 2^s disjoint copies of T^(n-s).
long torus_copies(int n, int s, int q) { return (1L << s) * binom(n - s, q); }

std::string show(const std::vector<long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

Outcome fail(Outcome& o, const std::string& why) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + why;
    return o;
}

Outcome four_torus_example() {
    Outcome o;
    const Process p = run_cli("poisson-cohomology " + models_dir + "/t4_section3.json --format json");
    if (p.exit_code != 0) return fail(o, "CLI exit code " + std::to_string(p.exit_code));
    std::vector<long> cli;
    const json report = json::parse(p.output);
    for (const auto& d : report["dims"]) cli.push_back(d.get<long>());

    // H^p(T^4) + H^{p-1}(Zz) + H^{p-1}(Zy) + H^{p-2}(Zy∩Zz) + H^{p-1}(Zx) + H^{p-2}(Zx∩Zz)
    //   + 2 H^{p-2}(Zx∩Zy) + 2 H^{p-3}(Zx∩Zy∩Zz)
    std::vector<long> expansion(5);
    for (int q = 0; q <= 4; ++q) {
        expansion[q] = torus_copies(4, 0, q) + 3 * torus_copies(4, 1, q - 1) + 2 * torus_copies(4, 2, q - 2) +
                       2 * torus_copies(4, 2, q - 2) + 2 * torus_copies(4, 3, q - 3);
    }
    const std::vector<long> expected{1, 10, 40, 70, 39};
    o.detail = "CLI " + show(cli) + ", expansion " + show(expansion);
    if (cli != expected || expansion != expected) return fail(o, "expected " + show(expected));
    return o;
}

Outcome single_hypersurface_regression() {
    Outcome o;
    int models = 0;
    for (int n = 2; n <= 8; n += 2) {
        for (int c = 0; c < n; ++c) {
            const Arrangement arr = torus_model(n, {c}, {"Z"});
            const BettiVector h = poisson_cohomology(arr, Partition{{}, {"Z"}});
            for (int p = 0; p <= n; ++p) {
                const long expected = torus_copies(n, 0, p) + torus_copies(n, 1, p - 1);
                if (h[p] != expected)
                    return fail(o, "n=" + std::to_string(n) + " coordinate " + std::to_string(c) + " degree " +
                                       std::to_string(p));
            }
            ++models;
        }
    }
    // The same through a form: the partition is derived, not declared.
    const std::vector<std::string> names{"x", "y", "z", "t"};
    const LogForm w = parse_form("dx/sin(x) ^ dy + dz ^ dt", names);
    const Arrangement arr = torus_model(4, {0}, {"Z"});
    const Partition derived = derive_partition(decompose_class(w, arr, names), arr);
    if (!(derived == Partition{{}, {"Z"}})) return fail(o, "derived partition is " + to_string(derived));
    const BettiVector via_form = poisson_cohomology(arr, derived);
    for (int p = 0; p <= 4; ++p)
        if (via_form[p] != torus_copies(4, 0, p) + torus_copies(4, 1, p - 1))
            return fail(o, "derived partition gives " + to_string(via_form));
    const Process p = run_cli("b-cohomology " + models_dir + "/t2_single_z.json --format json");
    if (p.exit_code != 0 || json::parse(p.output)["dims"] != json::array({1, 4, 3}))
        return fail(o, "single hypersurface T^2 b-cohomology from the CLI");
    o.detail = std::to_string(models) + " torus models, n = 2..8";
    return o;
}

Outcome b_cohomology_golden() {
    Outcome o;
    std::ifstream in(golden_dir + "/b_cohomology_t4_xyz.txt");
    if (!in) return fail(o, "golden file missing");
    std::vector<long> sum(5, 0), total;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string label;
        row >> label;
        std::vector<long> v(5);
        for (auto& x : v) row >> x;
        if (label == "total") total = v;
        else
            for (int p = 0; p < 5; ++p) sum[p] += v[p];
    }
    if (total != sum) return fail(o, "golden rows do not add up to the golden total");
    const BettiVector b = b_cohomology(torus_model(4, {0, 1, 2}));
    std::vector<long> got;
    for (int p = 0; p <= 4; ++p) got.push_back(b[p].get_si());
    o.detail = "b_cohomology " + show(got) + ", golden " + show(total);
    if (got != total || total != std::vector<long>{1, 10, 36, 54, 27}) return fail(o, "mismatch");
    return o;
}

// Random inputs for the calculus checks, frequency ≤ 2.
struct Random {
    std::mt19937_64 engine{7};
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
    TrigPoly trig(int dim) {
        TrigPoly p;
        for (int t = uniform(1, 3); t > 0; --t) {
            TrigMonomial m;
            for (int i = 0; i < dim; ++i)
                if (uniform(0, 1)) m.f[i] = static_cast<std::int16_t>(uniform(-2, 2));
            p += TrigPoly::monomial(m, mpq_class(uniform(-3, 3)));
        }
        return p;
    }
    IndexMask mask(int dim, int degree) {
        std::vector<int> idx(dim);
        for (int i = 0; i < dim; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), engine);
        IndexMask m = 0;
        for (int i = 0; i < degree; ++i) m |= IndexMask{1} << idx[i];
        return m;
    }
    LogForm form(int dim, IndexMask poles, int degree) {
        LogForm w(dim, poles, degree);
        for (int c = uniform(1, 3); c > 0; --c) w.add(mask(dim, degree), trig(dim));
        return w;
    }
    Multivector multivector(int dim, int degree) {
        Multivector m(dim, degree);
        for (int c = uniform(1, 3); c > 0; --c) m.add(mask(dim, degree), trig(dim));
        return m;
    }
};

Outcome symbolic_suite() {
    Outcome o;
    const std::vector<std::string> ab{"a1", "a2", "b1", "b2"};
    const std::vector<std::string> xyzt{"x", "y", "z", "t"};
    struct Pair {
        std::string name;
        LogForm w;
        Multivector pi;
    };
    const std::vector<Pair> pairs{
        {"omega_I", parse_form("da1/sin(a1) ^ da2/sin(a2) + db1 ^ db2", ab),
         parse_multivector("sin(a2)*sin(a1) da2^da1 + db2^db1", ab)},
        {"omega_II", parse_form("da1/sin(a1) ^ db1 - da2/sin(a2) ^ db2", ab),
         parse_multivector("sin(a1) db1^da1 + sin(a2) da2^db2", ab)},
        {"four-torus", parse_form("dx/sin(x) ^ dy/sin(y) + dz/sin(z) ^ dt", xyzt),
         parse_multivector("sin(x)*sin(y) dy^dx + sin(z) dt^dz", xyzt)},
    };
    for (const auto& p : pairs) {
        if (!exterior_d(p.w).is_zero()) fail(o, "d " + p.name + " != 0");
        if (!schouten(p.pi, p.pi).is_zero()) fail(o, "[pi, pi] != 0 for " + p.name);
        if (!verify_inverse(p.w, p.pi)) fail(o, "inverse check fails for " + p.name);
    }
    Random r;
    int checks = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = r.uniform(2, 4);
        const IndexMask poles = r.mask(dim, r.uniform(0, dim));
        const LogForm w = r.form(dim, poles, r.uniform(0, dim - 1));
        if (!exterior_d(exterior_d(w)).is_zero()) fail(o, "d∘d != 0");
        const int dp = r.uniform(1, 2), dq = r.uniform(1, 2), dr = r.uniform(0, 2);
        const Multivector P = r.multivector(dim, dp), Q = r.multivector(dim, dq), R = r.multivector(dim, dr);
        // [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P]
        const Multivector swapped = schouten(Q, P);
        const Multivector expected = ((dp - 1) * (dq - 1)) % 2 ? swapped : -swapped;
        if (schouten(P, Q) != expected) fail(o, "Schouten antisymmetry");
        // [P, Q∧R] = [P,Q]∧R + (-1)^{(p-1)q} Q∧[P,R]
        const Multivector right = wedge(Q, schouten(P, R));
        const Multivector leibniz = wedge(schouten(P, Q), R) + (((dp - 1) * dq) % 2 ? -right : right);
        if (schouten(P, wedge(Q, R)) != leibniz) fail(o, "Schouten Leibniz rule");
        checks += 3;
    }
    o.detail = "3 structures, " + std::to_string(checks) + " random identities";
    return o;
}

Outcome cosymplectic_checks() {
    Outcome o;
    const std::vector<std::string> b{"b1", "b2"};
    const auto good = is_k_cosymplectic({parse_form("db1", b), parse_form("db2", b)}, LogForm(), 2);
    if (!good.holds()) fail(o, "(db1, db2) rejected");
    const auto bad =
        is_k_cosymplectic({parse_form("sin(b1) db1", b), parse_form("sin(b1) db2", b)}, LogForm(), 2);
    if (bad.nonvanishing.verdict != Verdict::False) return fail(o, "(sin b1 db1, sin b1 db2) not rejected");
    if (!bad.nonvanishing.zero_witness) return fail(o, "no vanishing-locus witness");
    const auto& wit = *bad.nonvanishing.zero_witness;
    if (bad.top_coefficient.evaluate_quarter(wit) != 0) return fail(o, "witness is not a zero");
    if (wit[0] % 2 != 0) return fail(o, "witness is off the locus sin(b1) = 0");
    o.detail = std::string("(db1, db2) accepted; sin(b1)-pair rejected, zero at b1 = ") + (wit[0] ? "pi" : "0");
    return o;
}

std::vector<int> members(unsigned mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i + 1);
    return out;
}

Outcome index_family_brute_force() {
    Outcome o;
    long cases = 0;
    for (bool strict : {false, true})
        for (int k = 0; k <= 4; ++k)
            for (int ell = 0; ell <= 4; ++ell)
                for (int p_max = 0; p_max <= 12; ++p_max) {
                    std::vector<IndexCollection> expected;
                    for (unsigned i = 1; i < (1u << k); ++i)
                        for (unsigned j = 0; j < (1u << k); ++j)
                            for (unsigned kk = 0; kk < (1u << k); ++kk)
                                for (unsigned l = 0; l < (1u << ell); ++l) {
                                    if ((i & j) || (i & kk) || (strict && (j & kk))) continue;
                                    const int m = 2 * std::popcount(i) + std::popcount(j) + std::popcount(kk) +
                                                  std::popcount(l);
                                    if (m <= p_max) expected.push_back({members(i), members(j), members(kk), members(l), m});
                                }
                    std::sort(expected.begin(), expected.end());
                    if (enumerate_index_sets(k, ell, p_max, PoissonOptions{strict}) != expected)
                        return fail(o, "k=" + std::to_string(k) + " ell=" + std::to_string(ell) +
                                           " p_max=" + std::to_string(p_max));
                    ++cases;
                }
    o.detail = std::to_string(cases) + " parameter triples, J∩K free and strict";
    return o;
}

Outcome oracle_corroboration() {
    Outcome o;
    const BettiVector dr = de_rham_betti_oracle(4, 1);
    if (dr != BettiVector({1, 4, 6, 4, 1})) fail(o, "de Rham oracle gives " + to_string(dr));
    const Multivector pi =
        parse_multivector("sin(x)*sin(y) dy^dx + sin(z) dt^dz", std::vector<std::string>{"x", "y", "z", "t"});
    std::string seen;
    for (int p : {0, 1}) {
        for (int cutoff : {2, 3}) {
            const auto e = truncated_lichnerowicz(pi, p, cutoff);
            seen += " p=" + std::to_string(p) + ",N=" + std::to_string(cutoff) + ":" + std::to_string(e.dim_estimate) +
                    (e.stabilized ? "" : "(unstable)");
            const long expected = p == 0 ? 1 : 10;
            if (e.dim_estimate != expected || !e.stabilized) fail(o, "estimate for p=" + std::to_string(p));
        }
    }
    o.detail = "de Rham " + to_string(dr) + ";" + seen;
    return o;
}

Outcome partitionability_gate() {
    Outcome o;
    const std::vector<std::string> ab{"a1", "a2", "b1", "b2"};
    const Arrangement arr = torus_model(4, {0, 1}, {"Za1", "Za2"});
    for (const char* w : {"da1/sin(a1) ^ da2/sin(a2) + db1 ^ db2", "da1/sin(a1) ^ db1 - da2/sin(a2) ^ db2"})
        if (!is_partitionable(decompose_class(parse_form(w, ab), arr, ab), arr).partitionable)
            fail(o, std::string("rejected ") + w);
    ClassDecomposition synth;
    synth.b["Za1"].nonzero = true;
    synth.c[{"Za1", "Za2"}] = {1, 1, 1, 1};
    const PartitionReport rep = is_partitionable(synth, arr);
    const bool cites = std::any_of(rep.violations.begin(), rep.violations.end(),
                                   [](const Violation& v) { return v.clause == "condition-1"; });
    if (rep.partitionable || !cites) fail(o, "b1 != 0 with c12 != 0 not rejected under condition (1)");
    const Process p = run_cli("check-partitionable " + models_dir + "/t4_omega3.json --format json");
    if (p.exit_code != 2) return fail(o, "excluded form exits with " + std::to_string(p.exit_code));
    const json j = json::parse(p.output);
    if (j["partitionable"] != false || j["violations"].empty()) return fail(o, "report lacks violations");
    o.detail = "omega_I, omega_II pass; synthesized class cites condition-1; excluded form exit 2 with " +
               std::to_string(j["violations"].size()) + " violations";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 4) {
        std::cerr << "usage: acceptance <logsym binary> <models dir> <golden dir>\n";
        return 1;
    }
    logsym_binary = argv[1];
    models_dir = argv[2];
    golden_dir = argv[3];
    const std::vector<Criterion> criteria{
        {1, "four-torus example end to end", 1.0, four_torus_example},
        {2, "single z-type hypersurface regression", 1.0, single_hypersurface_regression},
        {3, "b-cohomology against golden strata sum", 1.0, b_cohomology_golden},
        {4, "symbolic calculus suite", 10.0, symbolic_suite},
        {5, "k-cosymplectic checks", 1.0, cosymplectic_checks},
        {6, "index family brute force", 1.0, index_family_brute_force},
        {7, "oracle corroboration", 300.0, oracle_corroboration},
        {8, "partitionability gate", 5.0, partitionability_gate},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.pass && secs > c.seconds_limit) {
            out.pass = false;
            out.detail += "; took longer than " + std::to_string(c.seconds_limit) + " s";
        }
        failures += !out.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", secs);
        std::cout << (out.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << timing << "): "
                  << out.detail << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures ? 1 : 0;
}
