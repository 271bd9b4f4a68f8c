#include "qcert/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcert {

namespace {

mpz_ptr num(Rat& x) { return mpq_numref(x.get_mpq_t()); }
mpz_srcptr num(const Rat& x) { return mpq_numref(x.get_mpq_t()); }
bool den_is_one(const Rat& x) { return mpz_cmp_ui(mpq_denref(x.get_mpq_t()), 1) == 0; }

}  // namespace

Series::Series(std::vector<Rat> coeffs, std::size_t prec) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != prec)
        throw std::invalid_argument("Series: coefficient count " + std::to_string(coeffs_.size()) +
                                    " does not match prec " + std::to_string(prec));
}

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}

Series Series::zero(std::size_t prec) { return Series(std::vector<Rat>(prec)); }

Series Series::one(std::size_t prec) {
    Series r = zero(prec);
    if (prec > 0) r.coeffs_[0] = 1;
    return r;
}

Series Series::monomial(Rat c, std::size_t e, std::size_t prec) {
    Series r = zero(prec);
    if (e >= prec) throw std::out_of_range("Series::monomial: exponent beyond truncation");
    r.coeffs_[e] = std::move(c);
    return r;
}

const Rat& Series::coeff(std::size_t n) const {
    if (n >= coeffs_.size())
        throw std::out_of_range("Series::coeff: q^" + std::to_string(n) +
                                " is beyond truncation O(q^" + std::to_string(coeffs_.size()) + ")");
    return coeffs_[n];
}

void Series::set_coeff(std::size_t n, Rat v) {
    if (n >= coeffs_.size())
        throw std::out_of_range("Series::set_coeff: index beyond truncation");
    coeffs_[n] = std::move(v);
}

bool Series::is_zero() const {
    for (const Rat& c : coeffs_)
        if (mpq_sgn(c.get_mpq_t()) != 0) return false;
    return true;
}

bool Series::integral() const {
    for (const Rat& c : coeffs_)
        if (!den_is_one(c)) return false;
    return true;
}

Series Series::truncate(std::size_t n) const {
    if (n >= prec()) return *this;
    return Series(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + n));
}

Series operator+(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.prec(), g.prec());
    std::vector<Rat> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f.coeffs_[i] + g.coeffs_[i];
    return Series(std::move(out));
}

Series operator-(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.prec(), g.prec());
    std::vector<Rat> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f.coeffs_[i] - g.coeffs_[i];
    return Series(std::move(out));
}

Series operator-(const Series& f) {
    std::vector<Rat> out(f.prec());
    for (std::size_t i = 0; i < f.prec(); ++i) out[i] = -f.coeffs_[i];
    return Series(std::move(out));
}

Series operator*(const Rat& c, const Series& f) {
    std::vector<Rat> out(f.prec());
    for (std::size_t i = 0; i < f.prec(); ++i) out[i] = c * f.coeffs_[i];
    return Series(std::move(out));
}

Series operator*(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.prec(), g.prec());
    std::vector<Rat> out(n);
    if (f.integral() && g.integral()) {
        // Cauchy product on raw numerators; denominators stay 1.
        for (std::size_t i = 0; i < n; ++i) {
            mpz_srcptr fi = num(f.coeffs_[i]);
            if (mpz_sgn(fi) == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                mpz_srcptr gj = num(g.coeffs_[j]);
                if (mpz_sgn(gj) == 0) continue;
                mpz_addmul(num(out[i + j]), fi, gj);
            }
        }
    } else {
        Rat t;
        for (std::size_t i = 0; i < n; ++i) {
            if (mpq_sgn(f.coeffs_[i].get_mpq_t()) == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (mpq_sgn(g.coeffs_[j].get_mpq_t()) == 0) continue;
                mpq_mul(t.get_mpq_t(), f.coeffs_[i].get_mpq_t(), g.coeffs_[j].get_mpq_t());
                mpq_add(out[i + j].get_mpq_t(), out[i + j].get_mpq_t(), t.get_mpq_t());
            }
        }
    }
    return Series(std::move(out));
}

bool operator==(const Series& f, const Series& g) {
    return f.prec() == g.prec() && f.coeffs_ == g.coeffs_;
}

Series Series::invert() const {
    if (prec() == 0) return *this;
    if (mpq_sgn(coeffs_[0].get_mpq_t()) == 0)
        throw std::domain_error("Series::invert: zero constant term, not a unit");
    const std::size_t n = prec();
    std::vector<Rat> out(n);
    const Rat c0inv = Rat(1) / coeffs_[0];
    out[0] = c0inv;
    Rat acc, t;
    for (std::size_t m = 1; m < n; ++m) {
        acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (mpq_sgn(coeffs_[k].get_mpq_t()) == 0) continue;
            mpq_mul(t.get_mpq_t(), coeffs_[k].get_mpq_t(), out[m - k].get_mpq_t());
            mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
        }
        out[m] = -acc * c0inv;
    }
    return Series(std::move(out));
}

Series Series::pow(unsigned long k) const {
    Series result = one(prec());
    Series base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Series Series::substitute_power(unsigned long k, int sign) const {
    if (k == 0) throw std::invalid_argument("Series::substitute_power: k must be positive");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("Series::substitute_power: sign must be +1 or -1");
    const std::size_t n = (k == 1) ? prec() : prec() * k;
    std::vector<Rat> out(n);
    for (std::size_t e = 0; e < prec(); ++e) {
        if (sign == -1 && (e & 1))
            out[e * k] = -coeffs_[e];
        else
            out[e * k] = coeffs_[e];
    }
    return Series(std::move(out));
}

Series Series::shift(long k) const {
    if (k >= 0) {
        std::vector<Rat> out(prec() + static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < prec(); ++i) out[i + k] = coeffs_[i];
        return Series(std::move(out));
    }
    const std::size_t drop = static_cast<std::size_t>(-k);
    if (drop > prec())
        throw std::domain_error("Series::shift: cannot verify divisibility by q^" +
                                std::to_string(drop) + " at prec " + std::to_string(prec()));
    for (std::size_t i = 0; i < drop; ++i)
        if (mpq_sgn(coeffs_[i].get_mpq_t()) != 0)
            throw std::domain_error("Series::shift: not divisible by q^" + std::to_string(drop) +
                                    " (nonzero coefficient at q^" + std::to_string(i) + ")");
    return Series(std::vector<Rat>(coeffs_.begin() + drop, coeffs_.end()));
}

Series Series::reduce_mod(const Int& m) const {
    if (m < 2) throw std::invalid_argument("Series::reduce_mod: modulus must be >= 2");
    std::vector<Rat> out(prec());
    for (std::size_t i = 0; i < prec(); ++i) {
        if (!den_is_one(coeffs_[i]))
            throw std::domain_error("Series::reduce_mod: non-integer coefficient at q^" +
                                    std::to_string(i));
        mpz_fdiv_r(num(out[i]), num(coeffs_[i]), m.get_mpz_t());
    }
    return Series(std::move(out));
}

void Series::mul_one_minus(const Rat& x, std::size_t e) {
    if (e == 0) throw std::invalid_argument("Series::mul_one_minus: exponent must be >= 1");
    if (e >= prec()) return;  // factor is 1 + O(q^prec)
    if (den_is_one(x) && integral()) {
        mpz_srcptr xn = num(x);
        for (std::size_t n = prec(); n-- > e;) {
            mpz_srcptr src = num(coeffs_[n - e]);
            if (mpz_sgn(src) == 0) continue;
            mpz_submul(num(coeffs_[n]), xn, src);
        }
    } else {
        Rat t;
        for (std::size_t n = prec(); n-- > e;) {
            if (mpq_sgn(coeffs_[n - e].get_mpq_t()) == 0) continue;
            mpq_mul(t.get_mpq_t(), x.get_mpq_t(), coeffs_[n - e].get_mpq_t());
            mpq_sub(coeffs_[n].get_mpq_t(), coeffs_[n].get_mpq_t(), t.get_mpq_t());
        }
    }
}

void Series::shift_up(std::size_t k) {
    if (k == 0) return;
    const std::size_t n = coeffs_.size();
    if (k >= n) {
        for (Rat& c : coeffs_) c = 0;
        return;
    }
    for (std::size_t i = n; i-- > k;) coeffs_[i] = std::move(coeffs_[i - k]);
    for (std::size_t i = 0; i < k; ++i) coeffs_[i] = 0;
}

void Series::div_one_minus(const Rat& x, std::size_t e) {
    if (e == 0) throw std::invalid_argument("Series::div_one_minus: exponent must be >= 1");
    if (e >= prec()) return;
    if (den_is_one(x) && integral()) {
        mpz_srcptr xn = num(x);
        for (std::size_t n = e; n < prec(); ++n) {
            mpz_srcptr src = num(coeffs_[n - e]);
            if (mpz_sgn(src) == 0) continue;
            mpz_addmul(num(coeffs_[n]), xn, src);
        }
    } else {
        Rat t;
        for (std::size_t n = e; n < prec(); ++n) {
            if (mpq_sgn(coeffs_[n - e].get_mpq_t()) == 0) continue;
            mpq_mul(t.get_mpq_t(), x.get_mpq_t(), coeffs_[n - e].get_mpq_t());
            mpq_add(coeffs_[n].get_mpq_t(), coeffs_[n].get_mpq_t(), t.get_mpq_t());
        }
    }
}

}  // namespace qcert
