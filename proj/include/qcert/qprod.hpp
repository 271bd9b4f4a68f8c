// q-Pochhammer products and the classical theta series.
//
// Infinite products are truncated by exponent bound: every factor whose
// exponent is below prec is applied, so the result is the exact truncation
// of the infinite product (factors at exponent >= prec are 1 + O(q^prec)).

#pragma once

#include "qcert/series.hpp"

#include <cstddef>
#include <initializer_list>

namespace qcert::qprod {

// Factors (1 - sign * q^(offset + j*step)), j = 0, 1, ...
// offset >= 1: none of the products here has a q^0 factor.
struct PochSpec {
    int sign = 1;               // +1 or -1
    unsigned long offset = 1;   // first exponent, >= 1
    unsigned long step = 1;     // exponent increment, >= 1
};

Series poch_finite(const PochSpec& spec, unsigned long n, std::size_t prec);
Series poch_infinite(const PochSpec& spec, std::size_t prec);

// Multiply f in place by (product of spec's factors below f.prec())^power;
// negative power divides. The workhorse behind every eta quotient.
void apply_poch_pow(Series& f, const PochSpec& spec, long power);

// (q^offset; q^step)_inf^power
struct EtaFactor {
    unsigned long offset;
    unsigned long step;
    long power;
};

Series eta_quotient(std::initializer_list<EtaFactor> factors, std::size_t prec);

// Theta(q) = sum_{n in Z} q^(n^2), as the sum and as the eta quotient
// (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2). The two paths are independent and
// cross-checked in the verification suite.
Series theta(std::size_t prec);
Series theta_product(std::size_t prec);

// Theta(-q) = sum (-1)^n q^(n^2) = (q;q)^2 / (q^2;q^2).
Series theta_neg(std::size_t prec);
Series theta_neg_product(std::size_t prec);

// psi(q) = sum_{n>=0} q^(n(n+1)/2) = (q^2;q^2)^2 / (q;q).
Series psi(std::size_t prec);
Series psi_product(std::size_t prec);

}  // namespace qcert::qprod
