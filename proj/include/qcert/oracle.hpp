// Brute-force combinatorial oracles, independent of the series builders.
//
// c(n) counts two-color (red/blue) partitions of n where the smallest part
// is odd and occurs at least once in blue, no even part is blue, and red
// even parts are pairwise distinct. The finite-k variant instead admits blue
// even parts that are at least 2k-1 greater than the smallest part (same
// distinctness rule per color).

#pragma once

#include "qcert/series.hpp"
#include "qcert/verify.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qcert::oracle {

enum class Color { red, blue };

struct TwoColorPartition {
    std::vector<std::pair<unsigned long, Color>> parts;  // (size, color)
};

// Admissibility under the limit predicate / the finite-k predicate.
bool admissible(const TwoColorPartition& p);
bool admissible(const TwoColorPartition& p, unsigned long k);

// Exhaustive counts. Exact for every n, practical for n <= 60 or so.
long enumerate_c(unsigned long n);
long enumerate_c_k(unsigned long k, unsigned long n);

// Reference count that materializes every colored partition and filters by
// the admissibility predicate; exponential, for tiny n cross-checks only.
long enumerate_c_explicit(unsigned long n, std::optional<unsigned long> k);

// Certifies C(q) = q A(q) S(q).
verify::CheckResult convolution_check(std::size_t prec);

}  // namespace qcert::oracle
