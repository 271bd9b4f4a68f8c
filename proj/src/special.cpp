#include "qcert/special.hpp"

#include "qcert/qprod.hpp"

#include <stdexcept>
#include <utility>

namespace qcert::special {

namespace {

using qprod::apply_poch_pow;
using qprod::eta_quotient;
using qprod::PochSpec;

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Series theta_at(std::size_t prec, unsigned long k) {
    if (prec == 0) return Series::zero(0);
    return qprod::theta(ceil_div(prec, k)).substitute_power(k, 1).truncate(prec);
}

Series psi_at(std::size_t prec, unsigned long k) {
    if (prec == 0) return Series::zero(0);
    return qprod::psi(ceil_div(prec, k)).substitute_power(k, 1).truncate(prec);
}

const std::vector<CatalogEntry> kCatalog = {
    {Name::A, "A", Path::product, "(-q^2;q^2)inf / (q;q^2)inf^2"},
    {Name::S, "S", Path::sum, "sum_{n>=0} (q;q^2)_n^2 q^(2n) / (-q^2;q^2)_n"},
    {Name::C, "C", Path::sum,
     "sum_{n>=0} (-q^(2n+2);q^2)inf q^(2n+1) / (q^(2n+1);q^2)inf^2"},
    {Name::C_k, "C_k", Path::sum,
     "sum_{n>=0} (-q^(2n+2k),-q^(2n+2);q^2)inf q^(2n+1) / (q^(2n+1);q^2)inf^2"},
    {Name::B, "B", Path::sum, "sum_{n>=0} (-q^2;q^2)_n q^(n(n+1)) / (q;q^2)_(n+1)^2"},
    {Name::B_lerch, "B_lerch", Path::lerch,
     "(-q^2;q^2)inf/(q^2;q^2)inf * sum_{n in Z} (-1)^n q^(2n(n+1)) / (1-q^(2n+1))"},
    {Name::omega, "omega", Path::sum, "sum_{n>=0} q^(2n(n+1)) / (q;q^2)_(n+1)^2"},
    {Name::f, "f", Path::sum, "sum_{n>=0} q^(n^2) / (-q;q)_n^2"},
    {Name::G, "G", Path::closed_form, "Theta(q) Theta(q^2)^2 / (q^4;q^4)inf^2"},
    {Name::G0, "G0", Path::closed_form, "Theta(q)^3 / (q;q)inf^2"},
    {Name::G1, "G1", Path::closed_form, "2 Theta(q)^2 psi(q^2) / (q;q)inf^2"},
    {Name::G2, "G2", Path::closed_form, "4 Theta(q) psi(q^2)^2 / (q;q)inf^2"},
    {Name::G3, "G3", Path::closed_form, "8 psi(q^2)^3 / (q;q)inf^2"},
    {Name::M_closed, "M_closed", Path::closed_form, "4 (q^2;q^2)inf^2 / (q;q^2)inf^6"},
    {Name::D, "D", Path::closed_form, "(q;q^2)inf^2 / (-q^2;q^2)inf * omega(-q)"},
    {Name::A0, "A0", Path::closed_form, "(q;q)inf Theta(q)"},
    {Name::A1, "A1", Path::closed_form, "2 (q;q)inf psi(q^2)"},
    {Name::B0_closed, "B0_closed", Path::closed_form,
     "(q^2;q^2)inf^14 / ((q;q)inf^9 (q^4;q^4)inf^4)"},
    {Name::B1_closed, "B1_closed", Path::closed_form, "-2 (q^2;q^2)inf^8 / (q;q)inf^7"},
    {Name::omega0, "omega0", Path::closed_form, "Theta(q)^2 psi(q^2) / (q;q)inf^2"},
    {Name::omega1, "omega1", Path::closed_form, "2 Theta(q) psi(q^2)^2 / (q;q)inf^2"},
    {Name::T, "T", Path::sum, "sum_{n>=1} q^(n^2)"},
};

}  // namespace

const std::vector<CatalogEntry>& catalog() { return kCatalog; }

std::optional<Name> lookup(std::string_view name) {
    for (const CatalogEntry& e : kCatalog)
        if (name == e.name) return e.id;
    return std::nullopt;
}

const CatalogEntry& entry(Name id) {
    for (const CatalogEntry& e : kCatalog)
        if (e.id == id) return e;
    throw std::invalid_argument("special::entry: unknown catalog id");
}

Series series_A(std::size_t prec) {
    Series r = Series::one(prec);
    apply_poch_pow(r, PochSpec{-1, 2, 2}, 1);
    apply_poch_pow(r, PochSpec{1, 1, 2}, -2);
    return r;
}

Series series_S(std::size_t prec) {
    // summand(n+1) = summand(n) * q^2 (1-q^(2n+1))^2 / (1+q^(2n+2))
    Series total = Series::zero(prec);
    Series t = Series::one(prec);
    for (unsigned long n = 0; 2 * n < prec; ++n) {
        total = total + t;
        t.shift_up(2);
        t.mul_one_minus(1, 2 * n + 1);
        t.mul_one_minus(1, 2 * n + 1);
        t.div_one_minus(-1, 2 * n + 2);
    }
    return total;
}

Series series_C_sum(std::size_t prec) {
    // summand(0) = q (-q^2;q^2)inf / (q;q^2)inf^2; same ratio as series_S
    Series total = Series::zero(prec);
    if (prec == 0) return total;
    Series t = series_A(prec - 1).shift(1);
    for (unsigned long n = 0; 2 * n + 1 < prec; ++n) {
        total = total + t;
        t.shift_up(2);
        t.mul_one_minus(1, 2 * n + 1);
        t.mul_one_minus(1, 2 * n + 1);
        t.div_one_minus(-1, 2 * n + 2);
    }
    return total;
}

Series series_C_k(unsigned long k, std::size_t prec) {
    if (k < 1) throw std::invalid_argument("series_C_k: k must be >= 1");
    Series total = Series::zero(prec);
    if (prec == 0) return total;
    Series t = Series::one(prec - 1);
    apply_poch_pow(t, PochSpec{-1, 2 * k, 2}, 1);
    apply_poch_pow(t, PochSpec{-1, 2, 2}, 1);
    apply_poch_pow(t, PochSpec{1, 1, 2}, -2);
    t = t.shift(1);
    for (unsigned long n = 0; 2 * n + 1 < prec; ++n) {
        total = total + t;
        t.shift_up(2);
        t.mul_one_minus(1, 2 * n + 1);
        t.mul_one_minus(1, 2 * n + 1);
        t.div_one_minus(-1, 2 * n + 2);
        t.div_one_minus(-1, 2 * n + 2 * k);
    }
    return total;
}

Series series_omega(std::size_t prec) {
    // summand(n+1) = summand(n) * q^(4(n+1)) / (1-q^(2n+3))^2
    Series total = Series::zero(prec);
    Series t = Series::one(prec);
    t.div_one_minus(1, 1);
    t.div_one_minus(1, 1);
    for (unsigned long n = 0;; ++n) {
        if (2 * n * (n + 1) >= prec) break;
        total = total + t;
        t.shift_up(4 * (n + 1));
        t.div_one_minus(1, 2 * n + 3);
        t.div_one_minus(1, 2 * n + 3);
    }
    return total;
}

Series series_B_sum(std::size_t prec) {
    // summand(n+1) = summand(n) * q^(2(n+1)) (1+q^(2n+2)) / (1-q^(2n+3))^2
    Series total = Series::zero(prec);
    Series t = Series::one(prec);
    t.div_one_minus(1, 1);
    t.div_one_minus(1, 1);
    for (unsigned long n = 0;; ++n) {
        if (n * (n + 1) >= prec) break;
        total = total + t;
        t.shift_up(2 * (n + 1));
        t.mul_one_minus(-1, 2 * n + 2);
        t.div_one_minus(1, 2 * n + 3);
        t.div_one_minus(1, 2 * n + 3);
    }
    return total;
}

Series series_B_lerch(std::size_t prec) {
    // Indices n <= -1 are rewritten via 1/(1-q^(2n+1)) = -q^(-(2n+1))/(1-q^(-(2n+1))):
    // the term at n = -m-1 becomes (-1)^m q^(2m^2+4m+1) / (1-q^(2m+1)).
    Series acc = Series::zero(prec);
    for (unsigned long n = 0; 2 * n * (n + 1) < prec; ++n) {
        Series t = Series::monomial((n & 1) ? -1 : 1, 2 * n * (n + 1), prec);
        t.div_one_minus(1, 2 * n + 1);
        acc = acc + t;
    }
    for (unsigned long m = 0; 2 * m * m + 4 * m + 1 < prec; ++m) {
        Series t = Series::monomial((m & 1) ? -1 : 1, 2 * m * m + 4 * m + 1, prec);
        t.div_one_minus(1, 2 * m + 1);
        acc = acc + t;
    }
    Series pre = Series::one(prec);
    apply_poch_pow(pre, PochSpec{-1, 2, 2}, 1);
    apply_poch_pow(pre, PochSpec{1, 2, 2}, -1);
    return pre * acc;
}

Series series_f(std::size_t prec) {
    // summand(n+1) = summand(n) * q^(2n+1) / (1+q^(n+1))^2
    Series total = Series::zero(prec);
    Series t = Series::one(prec);
    for (unsigned long n = 0;; ++n) {
        if (n * n >= prec) break;
        total = total + t;
        t.shift_up(2 * n + 1);
        t.div_one_minus(-1, n + 1);
        t.div_one_minus(-1, n + 1);
    }
    return total;
}

Series series_G(std::size_t prec) {
    Series g = qprod::theta(prec) * theta_at(prec, 2).pow(2);
    apply_poch_pow(g, PochSpec{1, 4, 4}, -2);
    return g;
}

Series series_G_j(unsigned j, std::size_t prec) {
    const Series th = qprod::theta(prec);
    const Series p2 = psi_at(prec, 2);
    Series r;
    switch (j) {
        case 0: r = th.pow(3); break;
        case 1: r = Rat(2) * (th.pow(2) * p2); break;
        case 2: r = Rat(4) * (th * p2.pow(2)); break;
        case 3: r = Rat(8) * p2.pow(3); break;
        default: throw std::invalid_argument("series_G_j: j must be in 0..3");
    }
    apply_poch_pow(r, PochSpec{1, 1, 1}, -2);
    return r;
}

Series build(Name id, std::size_t prec) {
    switch (id) {
        case Name::A: return series_A(prec);
        case Name::S: return series_S(prec);
        case Name::C: return series_C_sum(prec);
        case Name::C_k:
            throw std::invalid_argument("build: C_k takes a parameter, use series_C_k");
        case Name::B: return series_B_sum(prec);
        case Name::B_lerch: return series_B_lerch(prec);
        case Name::omega: return series_omega(prec);
        case Name::f: return series_f(prec);
        case Name::G: return series_G(prec);
        case Name::G0: return series_G_j(0, prec);
        case Name::G1: return series_G_j(1, prec);
        case Name::G2: return series_G_j(2, prec);
        case Name::G3: return series_G_j(3, prec);
        case Name::M_closed:
            return Rat(4) * eta_quotient({{2, 2, 2}, {1, 2, -6}}, prec);
        case Name::D: {
            Series pre = Series::one(prec);
            apply_poch_pow(pre, PochSpec{1, 1, 2}, 2);
            apply_poch_pow(pre, PochSpec{-1, 2, 2}, -1);
            return pre * series_omega(prec).substitute_power(1, -1);
        }
        case Name::A0: {
            Series r = qprod::theta(prec);
            apply_poch_pow(r, PochSpec{1, 1, 1}, 1);
            return r;
        }
        case Name::A1: {
            Series r = psi_at(prec, 2);
            apply_poch_pow(r, PochSpec{1, 1, 1}, 1);
            return Rat(2) * r;
        }
        case Name::B0_closed:
            return eta_quotient({{2, 2, 14}, {1, 1, -9}, {4, 4, -4}}, prec);
        case Name::B1_closed:
            return Rat(-2) * eta_quotient({{2, 2, 8}, {1, 1, -7}}, prec);
        case Name::omega0: {
            Series r = qprod::theta(prec).pow(2) * psi_at(prec, 2);
            apply_poch_pow(r, PochSpec{1, 1, 1}, -2);
            return r;
        }
        case Name::omega1: {
            Series r = qprod::theta(prec) * psi_at(prec, 2).pow(2);
            apply_poch_pow(r, PochSpec{1, 1, 1}, -2);
            return Rat(2) * r;
        }
        case Name::T: {
            Series r = Series::zero(prec);
            for (unsigned long n = 1; n * n < prec; ++n) r.set_coeff(n * n, 1);
            return r;
        }
    }
    throw std::invalid_argument("build: unknown catalog id");
}

}  // namespace qcert::special
