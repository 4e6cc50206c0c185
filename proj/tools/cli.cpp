#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "ulrich/appendix.hpp"
#include "ulrich/certificate.hpp"
#include "ulrich/ci_invariants.hpp"
#include "ulrich/hypersurface.hpp"
#include "ulrich/report.hpp"
#include "ulrich/symmetric.hpp"

namespace ulrich::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::string format = "text";
    std::string output;
    unsigned workers = 1;
};

Json envelope(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    return j;
}

int emit(const Common& common, const Json& doc, const std::string& text, std::ostream& out,
         std::ostream& err) {
    const std::string body = common.format == "json" ? doc.dump(2) + "\n" : text;
    if (common.output.empty()) {
        out << body;
        return kExitOk;
    }
    std::ofstream file(common.output);
    if (!file) {
        err << "error: cannot write " << common.output << "\n";
        return kExitUsage;
    }
    file << body;
    return kExitOk;
}

std::pair<long, long> checked_range(const std::string& text, long lo_min, long hi_max,
                                    const std::string& what) {
    std::pair<long, long> r;
    try {
        r = parse_range(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(what + ": " + e.what());
    }
    if (r.first < lo_min || r.second > hi_max)
        throw UsageError(what + " must lie in " + std::to_string(lo_min) + ".." +
                         std::to_string(hi_max) + ", got " + text);
    return r;
}

std::string tuple_text(const std::vector<long>& t) { return "(" + degrees_str(t) + ")"; }

void report_text(std::ostringstream& os, const Report& r) {
    os << r.lemma;
    for (const auto& [key, value] : r.parameters.items()) os << ' ' << key << '=' << value.dump();
    os << ": " << (r.passed() ? "pass" : "FAIL") << ' ' << r.passed_count() << '/' << r.checks.size()
       << '\n';
    for (const auto& c : r.checks)
        if (!c.passed) os << "  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    if (r.witness) os << "  witness: " << *r.witness << '\n';
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    std::string s_range;
    unsigned s_max = 0;
    unsigned d_max = 6;
    unsigned samples = 100;
};

const std::vector<std::string> kSuites{"tf0", "tf1", "tf2", "tf2bis", "gl1", "gl2", "gl4", "cg"};

long suite_min_s(const std::string& suite) {
    if (suite == "tf2" || suite == "gl1" || suite == "gl4") return 4;
    if (suite == "tf2bis") return 5;
    if (suite == "cg") return 2;
    return 1;
}

std::vector<Report> run_suite(const std::string& suite, long lo, long hi, const VerifyArgs& args,
                              unsigned workers) {
    std::vector<Report> reports;
    lo = std::max(lo, suite_min_s(suite));
    const std::pair<long, long> grid[] = {{2, 0}, {3, 0}, {3, 1}};
    for (long s = lo; s <= hi && suite != "cg"; ++s) {
        const auto us = static_cast<unsigned>(s);
        if (suite == "tf0" || suite == "tf1") {
            for (auto [r, m] : grid) reports.push_back(suite == "tf0" ? verify_tf0(us, r, m) : verify_tf1(us, r, m));
        } else if (suite == "tf2") {
            reports.push_back(verify_tf2_table(us));
        } else if (suite == "tf2bis") {
            reports.push_back(verify_tf2bis(us, args.samples));
        } else if (suite == "gl1") {
            reports.push_back(verify_gl1(us));
        } else if (suite == "gl2") {
            reports.push_back(verify_gl2(us));
        } else if (suite == "gl4") {
            reports.push_back(verify_gl4(us));
        }
    }
    if (suite == "cg" && lo <= hi) {
        ScanOptions options;
        options.s_min = static_cast<unsigned>(lo);
        options.s_max = static_cast<unsigned>(hi);
        options.d_max = args.d_max;
        options.workers = workers;
        reports.push_back(scan_report(run_cg_scan(options)));
        for (long s = lo; s <= hi; ++s)
            for (long b : {8L, 9L}) reports.push_back(verify_cg_induction(static_cast<unsigned>(s), b));
    }
    return reports;
}

int cmd_verify(const VerifyArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
    if (args.suite != "all" && std::find(kSuites.begin(), kSuites.end(), args.suite) == kSuites.end())
        throw UsageError("unknown suite " + args.suite);
    if (args.d_max < 2) throw UsageError("--d-max must be at least 2");
    long lo = 1, hi = 6;
    const bool explicit_range = !args.s_range.empty();
    if (explicit_range) {
        std::tie(lo, hi) = checked_range(args.s_range, 1, kMaxVars, "--s");
        if (args.suite != "all" && lo < suite_min_s(args.suite))
            throw UsageError("suite " + args.suite + " needs s >= " +
                             std::to_string(suite_min_s(args.suite)));
    }
    if (args.s_max != 0) {
        if (args.s_max > kMaxVars) throw UsageError("--s-max exceeds " + std::to_string(kMaxVars));
        hi = args.s_max;
        if (!explicit_range) lo = 1;
    }
    if (hi < lo) throw UsageError("empty s range");

    std::vector<Report> reports;
    const std::vector<std::string> suites = args.suite == "all" ? kSuites : std::vector<std::string>{args.suite};
    for (const auto& suite : suites) {
        auto part = run_suite(suite, lo, hi, args, common.workers);
        reports.insert(reports.end(), part.begin(), part.end());
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });

    Json doc = envelope("verify");
    doc["suite"] = args.suite;
    doc["status"] = ok ? "pass" : "fail";
    doc["reports"] = Json::array();
    std::ostringstream text;
    std::size_t checks = 0;
    for (const auto& r : reports) {
        doc["reports"].push_back(to_json(r));
        report_text(text, r);
        checks += r.checks.size();
    }
    text << "verify " << args.suite << ": " << reports.size() << " reports, " << checks << " checks, "
         << (ok ? "all pass" : "FAILURES") << '\n';
    int code = emit(common, doc, text.str(), out, err);
    return code != kExitOk ? code : (ok ? kExitOk : kExitFailure);
}

// ------------------------------------------------------------ invariants

struct InvariantArgs {
    int n = 4;
    std::vector<long> degrees;
    long r = 2;
    std::string m_range = "-4..4";
};

int cmd_invariants(const InvariantArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
    CIConfig cfg{args.n, args.degrees, args.r};
    try {
        cfg.validate();
    } catch (const InvalidConfig& e) {
        throw UsageError(e.what());
    }
    const auto [m_lo, m_hi] = checked_range(args.m_range, -1000, 1000, "--m");
    const Rational u = det_twist(cfg);
    const bool integral = !parity_obstruction(cfg);
    const Rational deg = deg_Z(cfg), deg_general = deg_Z_general(cfg), e = c2_E_coeff(cfg);

    Json doc = envelope("invariants");
    Json input;
    input["n"] = cfg.n;
    input["degrees"] = cfg.degrees;
    input["r"] = cfg.r;
    doc["input"] = input;
    doc["s"] = cfg.s();
    doc["S"] = cfg.S();
    doc["S_prime"] = cfg.S_prime();
    doc["d"] = cfg.d().get_str();
    doc["i_X"] = cfg.i_X();
    doc["K_X_coeff"] = canonical_coeff(cfg);
    doc["c2_X_coeff"] = c2X_coeff(cfg).get_str();
    doc["u"] = u.str();
    doc["parity_obstruction"] = !integral;
    doc["deg_Z"] = deg.str();
    doc["deg_Z_general"] = deg_general.str();
    doc["e"] = e.str();
    doc["e_integral"] = e.is_integer();

    std::ostringstream text;
    text << "n=" << cfg.n << " degrees=" << tuple_text(cfg.degrees) << " r=" << cfg.r << "\n";
    text << "s=" << cfg.s() << " S=" << cfg.S() << " S'=" << cfg.S_prime() << " d=" << cfg.d()
         << " i_X=" << cfg.i_X() << "\n";
    text << "K_X = " << canonical_coeff(cfg) << " H\n";
    text << "c_2(X) = " << c2X_coeff(cfg) << " H^2\n";
    text << "u = " << u << (integral ? "" : "  (not integral: parity obstruction)") << "\n";
    text << "deg Z = " << deg << "  (general formula " << deg_general << ")\n";
    text << "e = " << e << (e.is_integer() ? "" : "  (not an integer)") << "\n";

    Json table = Json::array();
    text << std::setw(6) << "m" << std::setw(22) << "chi(O_X(m))" << std::setw(22) << "chi(O_Z(m))"
         << std::setw(22) << "chi(E(m))" << "\n";
    for (long m = m_lo; m <= m_hi; ++m) {
        Json row;
        row["m"] = m;
        const Integer ox = chi_OX(cfg, m), ee = chi_E(cfg, m);
        row["chi_OX"] = ox.get_str();
        std::string oz = "n/a";
        if (integral) {
            oz = chi_OZ(cfg, m).get_str();
            row["chi_OZ"] = oz;
        } else {
            row["chi_OZ"] = nullptr;
        }
        row["chi_E"] = ee.get_str();
        table.push_back(row);
        text << std::setw(6) << m << std::setw(22) << ox.get_str() << std::setw(22) << oz
             << std::setw(22) << ee.get_str() << "\n";
    }
    doc["table"] = table;

    if (cfg.n == 4 && integral && (cfg.r == 2 || cfg.r == 3)) {
        const SurfaceData sd = cfg.r == 2 ? rank2_surface_data(cfg) : rank3_surface_data(cfg);
        Json sj;
        sj["K_Z_H"] = sd.KH.str();
        sj["K_Z_squared"] = sd.K2.str();
        sj["c2_Z"] = sd.c2.str();
        sj["chi_noether"] = sd.chi_noether.str();
        sj["chi_hilb"] = sd.chi_hilb.str();
        sj["difference"] = sd.difference().str();
        doc["surface"] = sj;
        text << "surface Z: K.H = " << sd.KH << ", K^2 = " << sd.K2 << ", c_2 = " << sd.c2
             << ", chi (Noether) = " << sd.chi_noether << ", chi (Hilbert) = " << sd.chi_hilb
             << ", difference = " << sd.difference() << "\n";
    }
    return emit(common, doc, text.str(), out, err);
}

// --------------------------------------------------------------- certify

struct CertifyArgs {
    std::string n_range = "4";
    std::vector<long> degrees;
    std::vector<long> ranks{2};
    unsigned d_max = 0;
    unsigned s_max = 0;
};

void certificate_text(std::ostringstream& os, const Certificate& c) {
    os << "input: n=" << c.input.n << " degrees=" << tuple_text(c.input.degrees) << " r=" << c.input.r
       << "\n";
    os << "verdict: " << to_string(c.verdict) << "\n";
    os << "reason: " << to_string(c.reason) << "\n";
    for (const auto& w : c.witnesses)
        os << "witness: " << w.name << " = " << w.value << " (" << w.relation << ")"
           << (w.primary ? " [primary]" : "") << "\n";
    for (const auto& h : c.hypotheses) os << "hypothesis: " << h << "\n";
}

int verdict_code(const std::vector<Certificate>& certs) {
    for (const auto& c : certs)
        if (c.verdict == Verdict::Inconclusive) return kExitFailure;
    return kExitOk;
}

int cmd_certify(const CertifyArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
    const auto [n_lo, n_hi] = checked_range(args.n_range, 4, 1000, "--n");
    for (long r : args.ranks)
        if (r < 1 || r > 3) throw UsageError("--r must be 1, 2 or 3");

    std::vector<CIConfig> configs;
    if (args.d_max != 0) {
        if (!args.degrees.empty()) throw UsageError("--degrees and --d-max are exclusive");
        if (args.d_max < 2) throw UsageError("--d-max must be at least 2");
        const unsigned s_max = args.s_max == 0 ? 3 : args.s_max;
        if (s_max > kMaxVars) throw UsageError("--s-max exceeds " + std::to_string(kMaxVars));
        for (long n = n_lo; n <= n_hi; ++n)
            for (long r : args.ranks)
                for (unsigned s = 1; s <= s_max; ++s)
                    for (auto t : decreasing_tuples(s, args.d_max - 1)) {
                        for (auto& v : t) v += 1; // entries 2..d_max
                        std::sort(t.begin(), t.end(), std::greater<>());
                        configs.push_back(CIConfig{static_cast<int>(n), t, r});
                    }
    } else {
        if (args.degrees.empty()) throw UsageError("--degrees is required (or --d-max for a sweep)");
        for (long n = n_lo; n <= n_hi; ++n)
            for (long r : args.ranks) configs.push_back(CIConfig{static_cast<int>(n), args.degrees, r});
    }

    std::vector<Certificate> certs;
    try {
        certs = certify_batch(configs, common.workers);
    } catch (const InvalidConfig& e) {
        throw UsageError(e.what());
    }

    std::ostringstream text;
    Json doc;
    if (certs.size() == 1) {
        doc = to_json(certs.front());
        certificate_text(text, certs.front());
    } else {
        doc = envelope("certify");
        doc["certificates"] = Json::array();
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& c : certs) {
            doc["certificates"].push_back(to_json(c));
            ++counts[static_cast<int>(c.verdict)];
            text << "n=" << c.input.n << " " << tuple_text(c.input.degrees) << " r=" << c.input.r << ": "
                 << to_string(c.verdict) << " " << to_string(c.reason);
            for (const auto& w : c.witnesses)
                if (w.primary) text << " " << w.name << "=" << w.value;
            text << "\n";
        }
        doc["summary"] = {{"NON_EXISTENCE", counts[0]}, {"EXCLUDED", counts[1]}, {"INCONCLUSIVE", counts[2]}};
        text << certs.size() << " configurations: " << counts[0] << " NON_EXISTENCE, " << counts[1]
             << " EXCLUDED, " << counts[2] << " INCONCLUSIVE\n";
    }
    int code = emit(common, doc, text.str(), out, err);
    return code != kExitOk ? code : verdict_code(certs);
}

// ------------------------------------------------------------------ scan

struct ScanArgs {
    unsigned s_min = 2;
    unsigned s_max = 6;
    unsigned d_max = 6;
    std::vector<long> bs{8, 9};
    bool list = false;
};

int cmd_scan(const ScanArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
    if (args.s_min < 2 || args.s_max < args.s_min || args.s_max > kMaxVars)
        throw UsageError("need 2 <= --s-min <= --s-max <= " + std::to_string(kMaxVars));
    if (args.d_max < 2) throw UsageError("--d-max must be at least 2");
    if (args.bs.empty()) throw UsageError("--b needs at least one value");
    ScanOptions options;
    options.s_min = args.s_min;
    options.s_max = args.s_max;
    options.d_max = args.d_max;
    options.bs = args.bs;
    options.workers = common.workers;
    options.keep_values = args.list;
    const ScanResult result = run_cg_scan(options);
    const Report report = scan_report(result);

    Json doc = envelope("scan");
    doc["parameters"] = report.parameters;
    doc["status"] = result.violations.empty() ? "pass" : "fail";
    Json rows = Json::array();
    std::ostringstream text;
    for (const auto& row : result.rows) {
        Json rj;
        rj["b"] = row.b;
        rj["s"] = row.s;
        rj["tuples"] = row.tuples;
        rj["min_q"] = row.min_value.str();
        rj["argmin"] = row.argmin;
        rj["q_all_ones"] = row.all_ones_value.str();
        rows.push_back(rj);
        text << "b=" << row.b << " s=" << row.s << ": " << row.tuples << " tuples with prod >= 2, min q = "
             << row.min_value << " at " << tuple_text(row.argmin) << ", q(1,...,1) = " << row.all_ones_value
             << " (excluded)\n";
    }
    doc["rows"] = rows;
    Json violations = Json::array();
    for (const auto& v : result.violations)
        violations.push_back({{"b", v.b}, {"tuple", v.tuple}, {"q", v.value.str()}});
    doc["violations"] = violations;
    if (args.list) {
        Json values = Json::array();
        for (const auto& v : result.values) {
            values.push_back({{"b", v.b}, {"tuple", v.tuple}, {"q", v.value.str()}});
            text << "  b=" << v.b << " " << tuple_text(v.tuple) << " q=" << v.value << "\n";
        }
        doc["values"] = values;
    }
    text << "total " << result.total_tuples() << " tuples, " << result.violations.size() << " violations\n";
    int code = emit(common, doc, text.str(), out, err);
    return code != kExitOk ? code : (result.violations.empty() ? kExitOk : kExitFailure);
}

// ---------------------------------------------------------------- hyper3

struct HyperArgs {
    std::string n_range = "2..4";
    std::string d_range = "2..10";
};

int cmd_hyper3(const HyperArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
    const auto [n_lo, n_hi] = checked_range(args.n_range, 2, 1000, "--n");
    const auto [d_lo, d_hi] = checked_range(args.d_range, 2, 100000, "--d");
    Json doc = envelope("hyper3");
    doc["rows"] = Json::array();
    std::ostringstream text;
    std::vector<Certificate> certs;
    for (long n = n_lo; n <= n_hi; ++n)
        for (long d = d_lo; d <= d_hi; ++d) {
            const Resolution res = hypersurface_resolution(static_cast<int>(n), d);
            const Certificate cert = certify_hypersurface(static_cast<int>(n), d);
            certs.push_back(cert);
            Json row;
            row["n"] = n;
            row["d"] = d;
            row["h0_J_Z_d_minus_1"] = res.h0_ideal_d_minus_1.get_str();
            row["h0_J_Z_d"] = res.h0_ideal_d.get_str();
            row["h0_O_Z_d_minus_1"] = res.h0_OZ_d_minus_1.get_str();
            row["h0_N"] = res.h0_normal.get_str();
            text << "n=" << n << " d=" << d << ": h0(J_Z(d-1)) = " << res.h0_ideal_d_minus_1
                 << ", h0(N) = " << res.h0_normal;
            if (n <= 4) {
                const DimensionCheck c = hyper3_dimension_check(static_cast<int>(n), d);
                row["lhs"] = c.lhs.get_str();
                row["rhs"] = c.rhs.get_str();
                row["contradiction"] = c.contradiction;
                text << ", lhs = " << c.lhs << ", rhs = " << c.rhs
                     << (c.contradiction ? " (contradiction)" : "");
            }
            row["certificate"] = to_json(cert);
            text << ": " << to_string(cert.verdict) << "\n";
            doc["rows"].push_back(row);
        }
    return emit(common, doc, text.str(), out, err);
}

} // namespace

std::pair<long, long> parse_range(const std::string& text) {
    auto parse_long = [&](const std::string& part) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad range '" + text + "'");
        }
        if (pos != part.size()) throw std::invalid_argument("bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        long v = parse_long(text);
        return {v, v};
    }
    long lo = parse_long(text.substr(0, dots)), hi = parse_long(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
    return {lo, hi};
}

unsigned default_workers() {
    if (const char* env = std::getenv("ULRICH_WORKERS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symmetric-function and invariant computations for Ulrich bundles on "
                 "complete intersections",
                 "ulrich"};
    app.require_subcommand(1);
    Common common;
    common.workers = default_workers();
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", common.output, "Write the document to this file");
        sub->add_option("--workers", common.workers, "Worker threads (default $ULRICH_WORKERS or 1)")
            ->check(CLI::PositiveNumber);
    };

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check the polynomial identities");
    v->add_option("--suite", verify.suite, "all|tf0|tf1|tf2|tf2bis|gl1|gl2|gl4|cg");
    v->add_option("--s", verify.s_range, "Number of variables, a or a..b (default up to 6)");
    v->add_option("--s-max", verify.s_max, "Upper bound for s");
    v->add_option("--d-max", verify.d_max, "Largest degree in the cg scan");
    v->add_option("--samples", verify.samples, "Random polynomials per s for tf2bis");
    add_common(v);

    InvariantArgs inv;
    auto* i = app.add_subcommand("invariants", "Numerical invariants of X, E and Z");
    i->add_option("--n", inv.n, "Dimension of X")->required();
    i->add_option("--degrees", inv.degrees, "Degrees, comma separated")->required()->delimiter(',');
    i->add_option("--r", inv.r, "Rank of E");
    i->add_option("--m", inv.m_range, "Twists, a or a..b");
    add_common(i);

    CertifyArgs cert;
    auto* c = app.add_subcommand("certify", "Non-existence certificate for ranks 1..3");
    c->add_option("--n", cert.n_range, "Dimension of X, a or a..b");
    c->add_option("--degrees", cert.degrees, "Degrees, comma separated")->delimiter(',');
    c->add_option("--r", cert.ranks, "Rank(s), comma separated")->delimiter(',');
    c->add_option("--d-max", cert.d_max, "Sweep all degree tuples with entries 2..d-max");
    c->add_option("--s-max", cert.s_max, "Longest tuple in a sweep (default 3)");
    add_common(c);

    ScanArgs scan;
    auto* s = app.add_subcommand("scan", "Evaluate q_{s,b} on all degree tuples");
    s->add_option("--s-min", scan.s_min, "Smallest s");
    s->add_option("--s-max", scan.s_max, "Largest s");
    s->add_option("--d-max", scan.d_max, "Largest degree");
    s->add_option("--b", scan.bs, "Values of b, comma separated")->delimiter(',');
    s->add_flag("--list", scan.list, "List every tuple with its value");
    add_common(s);

    HyperArgs hyper;
    auto* h = app.add_subcommand("hyper3", "Rank 2 bundles on hypersurfaces: dimension count");
    h->add_option("--n", hyper.n_range, "Dimension, a or a..b");
    h->add_option("--d", hyper.d_range, "Degree, a or a..b");
    add_common(h);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        for (auto* sub : app.get_subcommands()) err << sub->help();
        return kExitUsage;
    }

    try {
        if (v->parsed()) return cmd_verify(verify, common, out, err);
        if (i->parsed()) return cmd_invariants(inv, common, out, err);
        if (c->parsed()) return cmd_certify(cert, common, out, err);
        if (s->parsed()) return cmd_scan(scan, common, out, err);
        if (h->parsed()) return cmd_hyper3(hyper, common, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace ulrich::cli
