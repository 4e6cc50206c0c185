#include "ulrich/certificate.hpp"

#include <algorithm>
#include <thread>

#include "ulrich/hypersurface.hpp"
#include "ulrich/ulrich_functions.hpp"

namespace ulrich {

namespace {

constexpr const char* kSmooth = "X is a smooth complete intersection";
constexpr const char* kVeryGeneral =
    "X is very general in its family, so that c_2(E) is an integral multiple of H^2";

void validate_for_certify(const CIConfig& cfg) {
    if (cfg.n < 4) throw InvalidConfig("the certifier needs n >= 4, got n=" + std::to_string(cfg.n));
    if (cfg.r < 1 || cfg.r > 3)
        throw InvalidConfig("the certifier handles ranks 1, 2, 3, got r=" + std::to_string(cfg.r));
    if (cfg.degrees.empty()) throw InvalidConfig("at least one degree is required");
    for (long v : cfg.degrees)
        if (v < 2)
            throw InvalidConfig("every degree must be >= 2 (linear equations are not allowed), got " +
                                degrees_str(cfg.degrees));
    if (cfg.s() > kMaxVars)
        throw InvalidConfig("at most " + std::to_string(kMaxVars) + " degrees are supported");
}

std::string point_str(const std::vector<long>& degrees) { return "(" + degrees_str(degrees) + ")"; }

std::vector<long> sorted_desc(std::vector<long> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::vector<std::string> base_hypotheses(const CIConfig& cfg) {
    std::vector<std::string> h{kSmooth};
    if (cfg.n == 4) h.emplace_back(kVeryGeneral);
    return h;
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::NonExistence: return "NON_EXISTENCE";
    case Verdict::Excluded: return "EXCLUDED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

std::string to_string(Reason r) {
    switch (r) {
    case Reason::LineBundle: return "line_bundle";
    case Reason::ParityObstruction: return "parity_obstruction";
    case Reason::QPositivity: return "q_positivity";
    case Reason::QuadricException: return "quadric_exception";
    case Reason::Type22Exception: return "type_2_2_exception";
    case Reason::HypersurfaceDimensionCount: return "hypersurface_dimension_count";
    case Reason::OutOfHypotheses: return "out_of_hypotheses";
    }
    return "out_of_hypotheses";
}

Certificate certify_padded(const CIConfig& cfg, unsigned s_pad) {
    validate_for_certify(cfg);
    if (s_pad < std::max<unsigned>(4, cfg.s()) || s_pad > kMaxVars)
        throw InvalidConfig("padding length must lie in max(4, s).." + std::to_string(kMaxVars));

    Certificate cert;
    cert.input = cfg;
    cert.hypotheses = base_hypotheses(cfg);
    const std::vector<long> degs = sorted_desc(cfg.degrees);

    if (cfg.r == 1) {
        // O_X(l) is Ulrich only on (P^n, O(1), 0), and d >= 2 rules that out.
        cert.verdict = Verdict::NonExistence;
        cert.reason = Reason::LineBundle;
        cert.witnesses.push_back({"d", Rational(cfg.d()), ">= 2, so X is not a linear space", true});
        return cert;
    }
    if (cfg.n == 4 && degs == std::vector<long>{2} && cfg.r == 2) {
        cert.verdict = Verdict::Excluded;
        cert.reason = Reason::QuadricException;
        cert.hypotheses = {"the quadric fourfold is the stated exception for rank 2"};
        return cert;
    }
    if (cfg.n == 4 && degs == std::vector<long>{2, 2}) {
        cert.verdict = Verdict::Excluded;
        cert.reason = Reason::Type22Exception;
        cert.hypotheses = {"complete intersections of type (2,2) in P^6 are outside the n = 4 hypotheses"};
        return cert;
    }

    // Hyperplane sections carry Ulrich restrictions, so n > 4 reduces to n = 4.
    CIConfig four = cfg;
    four.n = 4;
    four.degrees = degs;
    const CIConfig padded = four.padded_to(s_pad);
    padded.validate();

    if (parity_obstruction(padded)) {
        const long rs = cfg.r * (padded.S() - static_cast<long>(padded.s()));
        cert.verdict = Verdict::NonExistence;
        cert.reason = Reason::ParityObstruction;
        cert.witnesses.push_back(
            {"r(S-s)", Rational(rs), "odd, so c_1(E) = (r/2)(S-s)H is not an integral class", true});
        return cert;
    }

    const long b = cfg.r == 2 ? 8 : 9;
    const long denom = cfg.r == 2 ? 4320 : 3840;
    const unsigned s = padded.s();
    const MultiPoly q = build_q(s, b);
    const Rational q_value = q.eval(std::span<const long>(padded.degrees));
    const Rational dq = Rational(cfg.d()) * q_value;
    const SurfaceData surf = cfg.r == 2 ? rank2_surface_data(padded) : rank3_surface_data(padded);
    const Rational diff = surf.difference();
    const std::string qname = "d*q_{" + std::to_string(s) + "," + std::to_string(b) + "}" +
                              point_str(padded.degrees);

    if (dq.sign() > 0 && diff == dq / Rational(denom)) {
        cert.verdict = Verdict::NonExistence;
        cert.reason = Reason::QPositivity;
        cert.witnesses.push_back({qname, dq, "> 0", true});
        cert.witnesses.push_back({cfg.r == 2 ? "chi_noether - chi_hilb" : "chi' - chi_hilb", diff,
                                  "= " + qname + "/" + std::to_string(denom) +
                                      " != 0, contradicting Noether's formula",
                                  false});
    } else {
        cert.verdict = Verdict::Inconclusive;
        cert.reason = Reason::OutOfHypotheses;
        cert.witnesses.push_back({qname, dq, "not positive or inconsistent with Noether", false});
    }
    const Rational e = c2_E_coeff(padded);
    cert.witnesses.push_back(
        {"e", e, e.is_integer() ? "integer" : "not an integer, although c_2(E) = eH^2", false});
    return cert;
}

Certificate certify(const CIConfig& cfg) {
    validate_for_certify(cfg);
    return certify_padded(cfg, std::max<unsigned>(4, cfg.s()));
}

std::vector<Certificate> certify_batch(const std::vector<CIConfig>& configs, unsigned workers) {
    if (workers < 1) throw InvalidConfig("at least one worker is required");
    for (const auto& c : configs) validate_for_certify(c);
    std::vector<Certificate> out(configs.size());
    const std::size_t w = std::min<std::size_t>(workers, std::max<std::size_t>(configs.size(), 1));
    const std::size_t chunk = (configs.size() + w - 1) / std::max<std::size_t>(w, 1);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = certify(configs[i]);
    };
    if (w <= 1) {
        work(0, configs.size());
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < w; ++k) {
            std::size_t begin = k * chunk, end = std::min(configs.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    return out;
}

Certificate certify_hypersurface(int n, long d) {
    if (n < 2) throw InvalidConfig("hypersurface needs n >= 2");
    if (d < 2) throw InvalidConfig("hypersurface needs d >= 2");
    if (n >= 5) {
        Certificate cert = certify(CIConfig{n, {d}, 2});
        cert.family = "hypersurface";
        return cert;
    }
    Certificate cert;
    cert.family = "hypersurface";
    cert.input = CIConfig{n, {d}, 2};
    const DimensionCheck c = hyper3_dimension_check(n, d);
    cert.hypotheses = {n == 2 ? "X is very general, so Pic X = ZH" : "X is general in U_{d,n}"};
    cert.witnesses.push_back({"dim U_{d,n} + 2d - 1", Rational(c.lhs),
                              c.contradiction ? "> nd(2d-1) - 1" : "<= nd(2d-1) - 1", true});
    cert.witnesses.push_back({"nd(2d-1) - 1", Rational(c.rhs), "upper bound for dim Y", false});
    if (n == 2 && d <= 3) {
        // Pic X = ZH fails for every smooth surface of degree <= 3 in P^3.
        cert.verdict = Verdict::Inconclusive;
        cert.reason = Reason::OutOfHypotheses;
        cert.hypotheses.push_back("for d <= 3 no smooth surface has Pic X = ZH, so the count does not apply");
    } else if (c.contradiction) {
        cert.verdict = Verdict::NonExistence;
        cert.reason = Reason::HypersurfaceDimensionCount;
    } else {
        cert.verdict = Verdict::Inconclusive;
        cert.reason = Reason::OutOfHypotheses;
    }
    return cert;
}

Json to_json(const Certificate& c) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = c.family;
    Json input;
    input["n"] = c.input.n;
    input["degrees"] = c.input.degrees;
    input["r"] = c.input.r;
    j["input"] = std::move(input);
    j["verdict"] = to_string(c.verdict);
    j["reason"] = to_string(c.reason);
    Json ws = Json::array();
    for (const auto& w : c.witnesses) {
        Json wj;
        wj["name"] = w.name;
        wj["value"] = w.value.str();
        wj["relation"] = w.relation;
        wj["primary"] = w.primary;
        ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    j["hypotheses"] = c.hypotheses;
    j["tool_version"] = kToolVersion;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.family = j.at("family").get<std::string>();
    c.input.n = j.at("input").at("n").get<int>();
    c.input.degrees = j.at("input").at("degrees").get<std::vector<long>>();
    c.input.r = j.at("input").at("r").get<long>();
    const std::string verdict = j.at("verdict").get<std::string>();
    for (Verdict v : {Verdict::NonExistence, Verdict::Excluded, Verdict::Inconclusive})
        if (to_string(v) == verdict) c.verdict = v;
    const std::string reason = j.at("reason").get<std::string>();
    for (Reason r : {Reason::LineBundle, Reason::ParityObstruction, Reason::QPositivity,
                     Reason::QuadricException, Reason::Type22Exception,
                     Reason::HypersurfaceDimensionCount, Reason::OutOfHypotheses})
        if (to_string(r) == reason) c.reason = r;
    for (const auto& wj : j.at("witnesses"))
        c.witnesses.push_back({wj.at("name").get<std::string>(),
                               Rational::parse(wj.at("value").get<std::string>()),
                               wj.at("relation").get<std::string>(), wj.at("primary").get<bool>()});
    c.hypotheses = j.at("hypotheses").get<std::vector<std::string>>();
    return c;
}

} // namespace ulrich
