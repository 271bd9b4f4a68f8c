#include "qcert/qprod.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qcert::qprod {

namespace {

void validate(const PochSpec& spec) {
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("PochSpec: sign must be +1 or -1");
    if (spec.offset < 1) throw std::invalid_argument("PochSpec: offset must be >= 1");
    if (spec.step < 1) throw std::invalid_argument("PochSpec: step must be >= 1");
}

}  // namespace

Series poch_finite(const PochSpec& spec, unsigned long n, std::size_t prec) {
    validate(spec);
    Series r = Series::one(prec);
    const Rat s(spec.sign);
    for (unsigned long j = 0; j < n; ++j) {
        const std::size_t e = spec.offset + j * spec.step;
        if (e >= prec) break;  // all later factors are 1 + O(q^prec)
        r.mul_one_minus(s, e);
    }
    return r;
}

Series poch_infinite(const PochSpec& spec, std::size_t prec) {
    Series r = Series::one(prec);
    apply_poch_pow(r, spec, 1);
    return r;
}

void apply_poch_pow(Series& f, const PochSpec& spec, long power) {
    validate(spec);
    if (power == 0) return;
    const Rat s(spec.sign);
    const unsigned long reps = static_cast<unsigned long>(std::labs(power));
    for (std::size_t e = spec.offset; e < f.prec(); e += spec.step) {
        for (unsigned long i = 0; i < reps; ++i) {
            if (power > 0)
                f.mul_one_minus(s, e);
            else
                f.div_one_minus(s, e);
        }
    }
}

Series eta_quotient(std::initializer_list<EtaFactor> factors, std::size_t prec) {
    Series r = Series::one(prec);
    for (const EtaFactor& fac : factors)
        apply_poch_pow(r, PochSpec{1, fac.offset, fac.step}, fac.power);
    return r;
}

Series theta(std::size_t prec) {
    Series r = Series::zero(prec);
    if (prec > 0) r.set_coeff(0, 1);
    for (unsigned long n = 1; n * n < prec; ++n) r.set_coeff(n * n, 2);
    return r;
}

Series theta_product(std::size_t prec) {
    return eta_quotient({{2, 2, 5}, {1, 1, -2}, {4, 4, -2}}, prec);
}

Series theta_neg(std::size_t prec) {
    Series r = Series::zero(prec);
    if (prec > 0) r.set_coeff(0, 1);
    for (unsigned long n = 1; n * n < prec; ++n) r.set_coeff(n * n, (n & 1) ? -2 : 2);
    return r;
}

Series theta_neg_product(std::size_t prec) {
    return eta_quotient({{1, 1, 2}, {2, 2, -1}}, prec);
}

Series psi(std::size_t prec) {
    Series r = Series::zero(prec);
    for (unsigned long n = 0; n * (n + 1) / 2 < prec; ++n) r.set_coeff(n * (n + 1) / 2, 1);
    return r;
}

Series psi_product(std::size_t prec) {
    return eta_quotient({{2, 2, 2}, {1, 1, -1}}, prec);
}

}  // namespace qcert::qprod
