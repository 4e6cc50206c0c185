#ifndef ULRICH_CERTIFICATE_HPP
#define ULRICH_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "ulrich/ci_invariants.hpp"
#include "ulrich/rational.hpp"
#include "ulrich/report.hpp"

namespace ulrich {

enum class Verdict { NonExistence, Excluded, Inconclusive };

enum class Reason {
    LineBundle,
    ParityObstruction,
    QPositivity,
    QuadricException,
    Type22Exception,
    HypersurfaceDimensionCount,
    OutOfHypotheses,
};

std::string to_string(Verdict v); // "NON_EXISTENCE", "EXCLUDED", "INCONCLUSIVE"
std::string to_string(Reason r);  // "parity_obstruction", "q_positivity", ...

struct Witness {
    std::string name;
    Rational value;
    std::string relation; // what the value violates or satisfies, e.g. "> 0"
    bool primary = false;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Certificate {
    std::string family = "complete_intersection"; // or "hypersurface"
    CIConfig input;
    Verdict verdict = Verdict::Inconclusive;
    Reason reason = Reason::OutOfHypotheses;
    std::vector<Witness> witnesses;
    std::vector<std::string> hypotheses;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Decides non-existence of rank r <= 3 Ulrich bundles on the smooth
/// complete intersection (n, degrees). Requires n >= 4, every degree >= 2
/// and r in {1, 2, 3}; otherwise throws InvalidConfig.
Certificate certify(const CIConfig& cfg);

/// Same decision with the internal padding length chosen by the caller
/// (s_pad >= max(4, number of degrees)). The verdict never depends on it.
Certificate certify_padded(const CIConfig& cfg, unsigned s_pad);

/// Certifies every configuration; workers split the list into blocks and
/// results keep the input order. All inputs are validated first.
std::vector<Certificate> certify_batch(const std::vector<CIConfig>& configs, unsigned workers);

/// Rank 2 on a smooth hypersurface of degree d in P^{n+1}: for n in 2..4 the
/// dimension count of the Ulrich subvarieties, for n >= 5 the complete
/// intersection certifier.
Certificate certify_hypersurface(int n, long d);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

} // namespace ulrich

#endif
