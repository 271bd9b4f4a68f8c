// Congruence-family scanner: the standalone 32n+23 conjecture, the
// three-parameter family instances, and empirical progression discovery.

#pragma once

#include "qcert/progression.hpp"
#include "qcert/series.hpp"
#include "qcert/verify.hpp"

#include <cstddef>
#include <vector>

namespace qcert::scan {

// c(32n+23) == 0 mod 8 for all 32n+23 < prec.
std::vector<verify::CheckResult> conjecture_openq(std::size_t prec);

// For k = 0..k_max, the three family instances
//   c(2^(2k+3) n + (11*4^k+1)/3) == 0 mod 4
//   c(2^(2k+3) n + (17*4^k+1)/3) == 0 mod 8
//   c(2^(2k+4) n + (38*4^k+1)/3) == 0 mod 4
// checked against all coefficients below prec. A non-integer offset is a
// configuration error (the displayed offsets are integral for every k).
std::vector<verify::CheckResult> conjecture_family(unsigned long k_max, std::size_t prec);

// An empirical observation: on `progression`, every known coefficient is
// divisible by `modulus` (modulus 0 records exact vanishing). Never a
// certificate; congruence-shaped discoveries are re-verified through
// verify::check_congruence before being reported.
struct Discovery {
    Progression progression;
    Int modulus;              // 0 = exact vanishing
    std::size_t witnesses = 0;
    bool degenerate = false;  // the scanned series is identically 0 below prec
};

// All progressions (r mod m), m <= m_max, on which every known coefficient
// of f passes each test in `moduli` (0 = exact-zero test, else >= 2), with
// at least 20 witnesses. Ordered by (m, r, modulus).
std::vector<Discovery> discover(const Series& f, const std::vector<Int>& moduli,
                                std::size_t m_max);

}  // namespace qcert::scan
