#ifndef ULRICH_APPENDIX_HPP
#define ULRICH_APPENDIX_HPP

#include <cstdint>
#include <vector>

#include "ulrich/rational.hpp"
#include "ulrich/report.hpp"

namespace ulrich {

/// f_{s,r,m} is symmetric and f_{s,r,m}(x1..xk,1..1) = f_{k,r,m} for all k < s.
Report verify_tf0(unsigned s, long r, long m);

/// x1...xs divides f_{s,r,m}.
Report verify_tf1(unsigned s, long r, long m);

/// Bracket coefficients of f_{s,2,0}, f_{s,3,0}, f_{s,3,1} against the stated
/// closed forms (s >= 4); at s = 4 also against the integer brackets.
Report verify_gl1(unsigned s);

/// g4, delta, h, k, c, chi' built from their definitions against the stated
/// expansions. For s >= 4 coefficient by coefficient; for s < 4 the basis
/// degenerates and whole polynomials are compared instead.
Report verify_gl2(unsigned s);

/// Restriction identities plus agreement of expand_direct and
/// expand_via_restriction with the coefficients of `samples` random
/// symmetric polynomials of degree <= 4 (fixed seed). Requires s >= 5.
Report verify_tf2bis(unsigned s, unsigned samples = 100, std::uint64_t seed = 1);

/// g_{4,s} - f_{s,2,0} = m_{1^s} q_{s,8}/4320 and chi'_s - f_{s,3,0} = m_{1^s} q_{s,9}/3840.
Report verify_gl4(unsigned s);

struct ScanOptions {
    unsigned s_min = 2;
    unsigned s_max = 6;
    unsigned d_max = 6;
    std::vector<long> bs{8, 9};
    unsigned workers = 1;
    bool keep_values = false; // record every evaluated tuple
};

struct ScanEntry {
    long b = 0;
    std::vector<long> tuple;
    Rational value;
};

struct ScanRow {
    long b = 0;
    unsigned s = 0;
    std::uint64_t tuples = 0; // tuples with product >= 2
    Rational min_value;
    std::vector<long> argmin;
    Rational all_ones_value; // q at (1,...,1), expected 0
};

struct ScanResult {
    ScanOptions options;
    std::vector<ScanRow> rows;        // ordered by b, then s
    std::vector<ScanEntry> violations; // q <= 0 with product >= 2
    std::vector<ScanEntry> values;     // filled when keep_values is set
    std::uint64_t total_tuples() const;
};

/// Weakly decreasing tuples d_1 >= ... >= d_s >= 1 with d_1 <= d_max, in
/// lexicographic order.
std::vector<std::vector<long>> decreasing_tuples(unsigned s, unsigned d_max);

/// Evaluates q_{s,b} on every weakly decreasing tuple. Tuples are split into
/// contiguous blocks, one per worker; results are merged in tuple order so
/// the output does not depend on the worker count.
ScanResult run_cg_scan(const ScanOptions& options);

Report scan_report(const ScanResult& result);
Report verify_cg_scan(unsigned s_max, unsigned d_max, unsigned workers = 1);

/// Recursion q_{s+1,b} = q_{s,b} + r_b(x_{s+1}) as a polynomial identity,
/// r_b(1) = 0 in the parameter M = m_2(s), and positivity of r_b' on samples.
Report verify_cg_induction(unsigned s, long b);

} // namespace ulrich

#endif
