// Arithmetic-progression dissection and restriction operators.

#pragma once

#include "qcert/series.hpp"

#include <cstddef>
#include <vector>

namespace qcert {

// Exponents r, r+m, r+2m, ...
struct Progression {
    std::size_t residue = 0;
    std::size_t modulus = 1;

    Progression(std::size_t r, std::size_t m);
};

// F_0..F_{m-1} with F_j(q) = sum_n coeff(f, mn+j) q^n. Component j carries
// prec ceil((f.prec - j)/m), exactly the number of known coefficients on its
// progression; sum_j q^j F_j(q^m) reassembles f.
std::vector<Series> dissect(const Series& f, std::size_t m);

// R(H) = sum_n h(4n+1) q^n, i.e. dissect(f, 4)[1].
Series restrict_R(const Series& f);

// All known coefficients of f on p, in progression order.
std::vector<Rat> coeffs_on(const Series& f, const Progression& p);

}  // namespace qcert
