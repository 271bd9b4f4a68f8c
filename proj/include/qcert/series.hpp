// Exact truncated formal power series in one variable q.
//
// A Series holds exactly `prec` rational coefficients and represents a power
// series known modulo q^prec. Coefficients are exact (GMP rationals, with an
// integer fast path in the hot loops); there is no floating point anywhere.
// Every operation returns a result whose precision never exceeds what its
// inputs justify.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace qcert {

using Int = mpz_class;
using Rat = mpq_class;

class Series {
public:
    // prec 0: nothing is known about the series.
    Series() = default;

    // Checked construction: length(coeffs) must equal prec.
    Series(std::vector<Rat> coeffs, std::size_t prec);
    explicit Series(std::vector<Rat> coeffs);

    static Series zero(std::size_t prec);
    static Series one(std::size_t prec);
    // c * q^e + O(q^prec); requires e < prec.
    static Series monomial(Rat c, std::size_t e, std::size_t prec);

    std::size_t prec() const { return coeffs_.size(); }

    // Coefficient of q^n; throws std::out_of_range for n >= prec (a
    // coefficient beyond the truncation order is unknown, never silently 0).
    const Rat& coeff(std::size_t n) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    void set_coeff(std::size_t n, Rat v);

    bool is_zero() const;
    // True iff every coefficient has denominator 1.
    bool integral() const;

    // Lower the precision to min(prec, n).
    Series truncate(std::size_t n) const;

    Series invert() const;                              // needs unit constant term
    Series pow(unsigned long k) const;
    Series substitute_power(unsigned long k, int sign) const;  // f(sign * q^k)
    Series shift(long k) const;                         // multiply by q^k
    Series reduce_mod(const Int& m) const;              // residues in [0, m)

    // In-place multiplication/division by the binomial (1 - x q^e), e >= 1.
    // O(prec) each; all infinite products and q-factorial ratios reduce to
    // chains of these.
    void mul_one_minus(const Rat& x, std::size_t e);
    void div_one_minus(const Rat& x, std::size_t e);

    // In-place multiply by q^k at fixed prec: coefficients move up, the top k
    // fall off the truncation, the bottom k become 0.
    void shift_up(std::size_t k);

    friend Series operator+(const Series& f, const Series& g);
    friend Series operator-(const Series& f, const Series& g);
    friend Series operator-(const Series& f);
    friend Series operator*(const Series& f, const Series& g);
    friend Series operator*(const Rat& c, const Series& f);
    friend bool operator==(const Series& f, const Series& g);

private:
    std::vector<Rat> coeffs_;
};

}  // namespace qcert
