#include "qcert/verify.hpp"

#include "qcert/oracle.hpp"
#include "qcert/qprod.hpp"
#include "qcert/special.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

namespace qcert::verify {

namespace {

using qprod::apply_poch_pow;
using qprod::eta_quotient;
using qprod::PochSpec;

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

bool den_is_one(const Rat& x) { return mpz_cmp_ui(mpq_denref(x.get_mpq_t()), 1) == 0; }

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// c * q^s * g(sign q^k) + O(q^prec), with g built at exactly the precision
// the target requires.
template <typename Builder>
Series scaled_term(Builder&& builder, const Rat& c, std::size_t s, unsigned long k, int sign,
                   std::size_t prec) {
    if (s >= prec) return Series::zero(prec);
    Series g = builder(ceil_div(prec - s, k))
                   .substitute_power(k, sign)
                   .truncate(prec - s)
                   .shift(static_cast<long>(s));
    return (c == 1) ? g : c * g;
}

Series B_neg(std::size_t prec) {
    return special::series_B_sum(prec).substitute_power(1, -1);
}

Series omega_neg(std::size_t prec) {
    return special::series_omega(prec).substitute_power(1, -1);
}

// (q;q^2)^2 / (-q^2;q^2)
Series theorem_S_prefactor(std::size_t prec) {
    Series pre = Series::one(prec);
    apply_poch_pow(pre, PochSpec{1, 1, 2}, 2);
    apply_poch_pow(pre, PochSpec{-1, 2, 2}, -1);
    return pre;
}

// -4 (q^2;q^2) / (q;q^2)^7, the common eta form of both R-operator images.
Series R_image_eta(std::size_t prec) {
    return Rat(-4) * eta_quotient({{2, 2, 1}, {1, 2, -7}}, prec);
}

}  // namespace

CheckResult check_identity(std::string name, const Series& lhs, const Series& rhs) {
    CheckResult r;
    r.name = std::move(name);
    r.prec = std::min(lhs.prec(), rhs.prec());
    r.passed = true;
    for (std::size_t n = 0; n < r.prec; ++n) {
        if (lhs.coeff(n) != rhs.coeff(n)) {
            r.passed = false;
            r.first_failure = CheckResult::Failure{n, lhs.coeff(n), rhs.coeff(n)};
            break;
        }
    }
    return r;
}

CheckResult check_identity_mod(std::string name, const Series& lhs, const Series& rhs,
                               const Int& m) {
    if (m < 2) throw std::invalid_argument("check_identity_mod: modulus must be >= 2");
    CheckResult r;
    r.name = std::move(name);
    r.prec = std::min(lhs.prec(), rhs.prec());
    r.passed = true;
    Int a, b;
    for (std::size_t n = 0; n < r.prec; ++n) {
        const Rat& cl = lhs.coeff(n);
        const Rat& cr = rhs.coeff(n);
        if (!den_is_one(cl) || !den_is_one(cr))
            throw std::domain_error("check_identity_mod: non-integer coefficient at q^" +
                                    std::to_string(n));
        mpz_fdiv_r(a.get_mpz_t(), mpq_numref(cl.get_mpq_t()), m.get_mpz_t());
        mpz_fdiv_r(b.get_mpz_t(), mpq_numref(cr.get_mpq_t()), m.get_mpz_t());
        if (a != b) {
            r.passed = false;
            r.first_failure = CheckResult::Failure{n, cl, cr};
            break;
        }
    }
    return r;
}

CheckResult check_congruence(const CongruenceClaim& claim, const Series& f) {
    std::string name = claim.series_name + "[" + std::to_string(claim.progression.modulus) +
                       "n+" + std::to_string(claim.progression.residue) + "] mod " +
                       claim.modulus.get_str();
    return check_congruence(std::move(name), claim, f);
}

CheckResult check_congruence(std::string name, const CongruenceClaim& claim, const Series& f) {
    if (claim.modulus < 2)
        throw std::invalid_argument("check_congruence: modulus must be >= 2");
    CheckResult r;
    r.name = std::move(name);
    r.prec = f.prec();
    r.passed = true;
    Int rem;
    for (std::size_t e = claim.progression.residue; e < f.prec(); e += claim.progression.modulus) {
        const Rat& c = f.coeff(e);
        if (!den_is_one(c))
            throw std::domain_error("check_congruence: non-integer coefficient at q^" +
                                    std::to_string(e));
        mpz_fdiv_r(rem.get_mpz_t(), mpq_numref(c.get_mpq_t()), claim.modulus.get_mpz_t());
        if (mpz_sgn(rem.get_mpz_t()) != 0) {
            r.passed = false;
            r.first_failure = CheckResult::Failure{e, c, Rat(0)};
            break;
        }
    }
    return r;
}

CheckResult check_vanishing(std::string name, const Series& f, const Progression& p) {
    CheckResult r;
    r.name = std::move(name);
    r.prec = f.prec();
    r.passed = true;
    for (std::size_t e = p.residue; e < f.prec(); e += p.modulus) {
        if (mpq_sgn(f.coeff(e).get_mpq_t()) != 0) {
            r.passed = false;
            r.first_failure = CheckResult::Failure{e, f.coeff(e), Rat(0)};
            break;
        }
    }
    return r;
}

CheckResult check_theorem_S(std::size_t prec) {
    Stopwatch sw;
    Series lhs = special::series_S(prec);
    Series rhs = Rat(2) * B_neg(prec) - theorem_S_prefactor(prec) * omega_neg(prec);
    CheckResult r = check_identity("theorem-S", lhs, rhs);
    r.elapsed_ms = sw.ms();
    return r;
}

CheckResult check_c_via_b_omega(std::size_t prec) {
    Stopwatch sw;
    Series lhs = special::series_C_sum(prec);
    if (prec == 0) return check_identity("C-via-B-omega", lhs, lhs);
    Series ab = special::series_A(prec - 1) * B_neg(prec - 1);
    Series rhs = (Rat(2) * ab).shift(1) - omega_neg(prec - 1).shift(1);
    CheckResult r = check_identity("C-via-B-omega", lhs, rhs);
    r.elapsed_ms = sw.ms();
    return r;
}

CheckResult check_ramanujan_transform(const Rat& a, const Rat& b, const Rat& c,
                                      std::size_t prec) {
    if (a == 0 || b == 0) throw std::invalid_argument("ramanujan-transform: a*b must be nonzero");
    if (c == 0) throw std::invalid_argument("ramanujan-transform: c must be nonzero");
    const std::string name = "ramanujan-transform(" + a.get_str() + "," + b.get_str() + "," +
                             c.get_str() + ")";
    Stopwatch sw;

    // lhs: summand(0) = q, summand ratio q (1+aq^(n+1))(1+bq^(n+1)) / (1+cq^(n+1))
    Series lhs = Series::zero(prec);
    if (prec > 1) {
        Series t = Series::monomial(1, 1, prec);
        for (unsigned long n = 0; n + 1 < prec; ++n) {
            lhs = lhs + t;
            t.shift_up(1);
            t.mul_one_minus(-a, n + 1);
            t.mul_one_minus(-b, n + 1);
            t.div_one_minus(-c, n + 1);
        }
    }

    const Rat ab_c = a * b / c;
    const Rat ab_cc = a * b / (c * c);

    // first rhs sum, valuation n(n+1)/2
    Series sum1 = Series::zero(prec);
    if (prec > 1) {
        Series t = Series::monomial((1 + Rat(1) / c) * ab_c, 1, prec);
        t.div_one_minus(a / c, 1);
        t.div_one_minus(b / c, 1);
        for (unsigned long n = 1; n * (n + 1) / 2 < prec; ++n) {
            sum1 = sum1 + t;
            t.shift_up(n + 1);
            t = ab_c * t;
            t.mul_one_minus(Rat(-1) / c, n);
            t.div_one_minus(a / c, n + 1);
            t.div_one_minus(b / c, n + 1);
        }
    }
    sum1 = (c / (a * b)) * sum1;

    // prefactor of the second sum: c (-aq,-bq)inf / (ab (-cq)inf)
    Series pre = Series::one(prec);
    for (std::size_t e = 1; e < prec; ++e) {
        pre.mul_one_minus(-a, e);
        pre.mul_one_minus(-b, e);
        pre.div_one_minus(-c, e);
    }
    pre = (c / (a * b)) * pre;

    // second rhs sum, valuation n^2
    Series sum2 = Series::zero(prec);
    if (prec > 1) {
        Series u = Series::monomial(ab_cc, 1, prec);
        u.div_one_minus(a / c, 1);
        u.div_one_minus(b / c, 1);
        for (unsigned long n = 1; n * n < prec; ++n) {
            sum2 = sum2 + u;
            u.shift_up(2 * n + 1);
            u = ab_cc * u;
            u.div_one_minus(a / c, n + 1);
            u.div_one_minus(b / c, n + 1);
        }
    }

    CheckResult r = check_identity(name, lhs, sum1 - pre * sum2);
    r.elapsed_ms = sw.ms();
    return r;
}

const std::vector<std::array<Rat, 3>>& ramanujan_triples() {
    static const std::vector<std::array<Rat, 3>> triples = {
        {Rat(1), Rat(1), Rat(1)},
        {Rat(2), Rat(1, 3), Rat(-1, 2)},
        {Rat(1), Rat(2), Rat(3)},
        {Rat(-1), Rat(1), Rat(2)},
        {Rat(1, 2), Rat(1, 2), Rat(1)},
        {Rat(-2), Rat(-3), Rat(1, 2)},
        {Rat(3, 4), Rat(-5, 3), Rat(7, 2)},
        {Rat(1), Rat(-1), Rat(-2)},
    };
    return triples;
}

CheckResult check_s_vanishing(std::size_t prec) {
    Stopwatch sw;
    CheckResult r = check_vanishing("s-4n1-vanishing", special::series_S(prec), Progression(1, 4));
    r.elapsed_ms = sw.ms();
    return r;
}

std::vector<CheckResult> check_mod_claims(std::size_t prec) {
    Stopwatch sw;
    std::vector<CheckResult> out;

    const Series A = special::series_A(prec);
    out.push_back(check_congruence("A-4n2-mod4", {Progression(2, 4), 4, "A"}, A));
    out.push_back(check_congruence("A-4n3-mod4", {Progression(3, 4), 4, "A"}, A));

    // Theta(-q) == 1 + 2T(q) mod 4
    out.push_back(check_identity_mod(
        "theta-neg-T-mod4", qprod::theta_neg(prec),
        Series::one(prec) + Rat(2) * special::build(special::Name::T, prec), 4));

    // A == A0(q^4) + q A1(q^4) mod 4
    {
        Series rhs = scaled_term([](std::size_t p) { return special::build(special::Name::A0, p); },
                                 1, 0, 4, 1, prec) +
                     scaled_term([](std::size_t p) { return special::build(special::Name::A1, p); },
                                 1, 1, 4, 1, prec);
        out.push_back(check_identity_mod("A-mod4-dissection", A, rhs, 4));
    }

    const Series AB = A * B_neg(prec);
    out.push_back(check_congruence("AB-4n1-mod4", {Progression(1, 4), 4, "A*B(-q)"}, AB));
    out.push_back(check_congruence("AB-8n3-mod2", {Progression(3, 8), 2, "A*B(-q)"}, AB));

    // -A0 B1 + A1 B0 == 0 mod 4, with the closed catalog forms on both sides
    {
        Series f1 = -(special::build(special::Name::A0, prec) *
                      special::build(special::Name::B1_closed, prec)) +
                    special::build(special::Name::A1, prec) *
                        special::build(special::Name::B0_closed, prec);
        out.push_back(check_identity_mod("dissection-cross-terms-mod4", f1,
                                         Series::zero(prec), 4));
    }

    // A(q) B(-q) == (q^16;q^16)inf mod 2
    out.push_back(check_identity_mod("AB-mod2-eta16", AB,
                                     qprod::poch_infinite(PochSpec{1, 16, 16}, prec), 2));

    if (!out.empty()) out.front().elapsed_ms = sw.ms();
    return out;
}

CheckResult check_M_eta(std::size_t prec) {
    Stopwatch sw;
    Series lhs = restrict_R(qprod::theta(4 * prec) * special::series_omega(4 * prec));
    Series rhs = special::build(special::Name::M_closed, prec);
    CheckResult r = check_identity("M-eta-form", lhs.truncate(prec), rhs);
    r.elapsed_ms = sw.ms();
    return r;
}

std::vector<CheckResult> check_R_splits(std::size_t prec) {
    Stopwatch sw;
    std::vector<CheckResult> out;
    const std::size_t src = 4 * prec;

    const Series RS = restrict_R(special::series_S(src)).truncate(prec);
    const Series R2B = restrict_R(Rat(2) * B_neg(src)).truncate(prec);
    const Series RD = restrict_R(special::build(special::Name::D, src)).truncate(prec);
    const Series eta = R_image_eta(prec);

    out.push_back(check_identity("RS-split", RS, R2B - RD));
    out.push_back(check_identity("R2Bneg-eta", R2B, eta));
    out.push_back(check_identity("RD-eta", RD, eta));
    out.push_back(check_identity("R2Bneg-eq-RD", R2B, RD));

    Series lhs = restrict_R(qprod::theta_neg(src) * omega_neg(src)).truncate(prec);
    out.push_back(check_identity("R-theta-omega-neg", lhs,
                                 -special::build(special::Name::M_closed, prec)));
    if (!out.empty()) out.front().elapsed_ms = sw.ms();
    return out;
}

namespace {

CheckResult pick(std::vector<CheckResult> results, const std::string& name) {
    for (CheckResult& r : results)
        if (r.name == name) return std::move(r);
    throw std::logic_error("registry: missing sub-check " + name);
}

std::vector<RegistryEntry> make_registry() {
    std::vector<RegistryEntry> reg;
    auto add = [&reg](std::string name, std::string desc,
                      std::function<CheckResult(std::size_t)> fn) {
        reg.push_back(RegistryEntry{std::move(name), std::move(desc), std::move(fn)});
    };

    // -- dual-path builder checks ------------------------------------------
    add("theta-sum-vs-product", "Theta(q): square exponent sum vs eta quotient",
        [](std::size_t p) {
            return check_identity("theta-sum-vs-product", qprod::theta(p), qprod::theta_product(p));
        });
    add("theta-neg-sum-vs-product", "Theta(-q): signed sum vs eta quotient",
        [](std::size_t p) {
            return check_identity("theta-neg-sum-vs-product", qprod::theta_neg(p),
                                  qprod::theta_neg_product(p));
        });
    add("psi-sum-vs-product", "psi(q): triangular exponent sum vs eta quotient",
        [](std::size_t p) {
            return check_identity("psi-sum-vs-product", qprod::psi(p), qprod::psi_product(p));
        });
    add("B-sum-vs-lerch", "B(q): defining sum vs Lerch-type bilateral form",
        [](std::size_t p) {
            return check_identity("B-sum-vs-lerch", special::series_B_sum(p),
                                  special::series_B_lerch(p));
        });

    // -- headline identities ------------------------------------------------
    add("theorem-S", "S(q) = 2B(-q) - (q;q^2)^2/(-q^2;q^2) omega(-q)", check_theorem_S);
    add("C-convolution", "C(q) = q A(q) S(q)",
        [](std::size_t p) { return oracle::convolution_check(p); });
    add("C-via-B-omega", "C(q) = 2q (-q^2;q^2)/(q;q^2)^2 B(-q) - q omega(-q)",
        check_c_via_b_omega);
    add("ramanujan-transform",
        "classical q-transformation at 8 fixed rational triples, prec capped at 60",
        [](std::size_t p) {
            const std::size_t cap = std::min<std::size_t>(p, 60);
            for (const auto& t : ramanujan_triples()) {
                CheckResult r = check_ramanujan_transform(t[0], t[1], t[2], cap);
                if (!r.passed) return r;
            }
            CheckResult ok;
            ok.name = "ramanujan-transform";
            ok.prec = cap;
            ok.passed = true;
            return ok;
        });

    // -- theta dissection and the G identities ------------------------------
    add("theta-4-dissection", "Theta(q) = Theta(q^4) + 2q psi(q^8)", [](std::size_t p) {
        Series rhs = scaled_term(qprod::theta, 1, 0, 4, 1, p) +
                     scaled_term(qprod::psi, 2, 1, 8, 1, p);
        return check_identity("theta-4-dissection", qprod::theta(p), rhs);
    });
    add("G-watson-split", "f(q^8) + 2q omega(q) + 2q^3 omega(-q^4) = G(q)", [](std::size_t p) {
        Series lhs = scaled_term(special::series_f, 1, 0, 8, 1, p) +
                     scaled_term(special::series_omega, 2, 1, 1, 1, p) +
                     scaled_term(special::series_omega, 2, 3, 4, -1, p);
        return check_identity("G-watson-split", lhs, special::series_G(p));
    });
    add("G-4-dissection", "G(q) = sum_{j=0..3} q^j G_j(q^4)", [](std::size_t p) {
        Series rhs = Series::zero(p);
        for (unsigned j = 0; j < 4; ++j)
            rhs = rhs + scaled_term([j](std::size_t pp) { return special::series_G_j(j, pp); },
                                    1, j, 4, 1, p);
        return check_identity("G-4-dissection", special::series_G(p), rhs);
    });

    // -- B dissection against its eta quotients -----------------------------
    add("B-4n0-eta", "sum c_B(4n) q^n = (q^2;q^2)^14 / ((q;q)^9 (q^4;q^4)^4)",
        [](std::size_t p) {
            Series lhs = dissect(special::series_B_sum(4 * p), 4)[0].truncate(p);
            return check_identity("B-4n0-eta", lhs,
                                  special::build(special::Name::B0_closed, p));
        });
    add("B-4n1-eta", "sum c_B(4n+1) q^n = 2 (q^2;q^2)^8 / (q;q)^7", [](std::size_t p) {
        Series lhs = dissect(special::series_B_sum(4 * p), 4)[1].truncate(p);
        Series rhs = Rat(2) * eta_quotient({{2, 2, 8}, {1, 1, -7}}, p);
        return check_identity("B-4n1-eta", lhs, rhs);
    });

    // -- omega dissection ----------------------------------------------------
    add("omega0-closed", "4-dissection component 0 of omega = Theta^2 psi(q^2)/(q;q)^2",
        [](std::size_t p) {
            Series lhs = dissect(special::series_omega(4 * p), 4)[0].truncate(p);
            return check_identity("omega0-closed", lhs,
                                  special::build(special::Name::omega0, p));
        });
    add("omega1-closed", "4-dissection component 1 of omega = 2 Theta psi(q^2)^2/(q;q)^2",
        [](std::size_t p) {
            Series lhs = dissect(special::series_omega(4 * p), 4)[1].truncate(p);
            return check_identity("omega1-closed", lhs,
                                  special::build(special::Name::omega1, p));
        });

    // -- the R-operator family ----------------------------------------------
    add("M-eta-form", "R(Theta omega) = 4 (q^2;q^2)^2 / (q;q^2)^6", check_M_eta);
    add("M-theta-psi-split", "R(Theta omega) = Theta omega_1 + 2 psi(q^2) omega_0",
        [](std::size_t p) {
            const std::size_t src = 4 * p;
            Series om = special::series_omega(src);
            auto comps = dissect(om, 4);
            Series lhs = restrict_R(qprod::theta(src) * om).truncate(p);
            Series rhs = qprod::theta(p) * comps[1].truncate(p) +
                         Rat(2) * (scaled_term(qprod::psi, 1, 0, 2, 1, p) * comps[0].truncate(p));
            return check_identity("M-theta-psi-split", lhs, rhs);
        });
    add("RS-split", "R(S) = R(2B(-q)) - R(D)",
        [](std::size_t p) { return pick(check_R_splits(p), "RS-split"); });
    add("R2Bneg-eta", "R(2B(-q)) = -4 (q^2;q^2) / (q;q^2)^7",
        [](std::size_t p) { return pick(check_R_splits(p), "R2Bneg-eta"); });
    add("RD-eta", "R(D) = -4 (q^2;q^2) / (q;q^2)^7",
        [](std::size_t p) { return pick(check_R_splits(p), "RD-eta"); });
    add("R2Bneg-eq-RD", "R(2B(-q)) = R(D) directly",
        [](std::size_t p) { return pick(check_R_splits(p), "R2Bneg-eq-RD"); });
    add("R-theta-omega-neg", "R(Theta(-q) omega(-q)) = -M(q)",
        [](std::size_t p) { return pick(check_R_splits(p), "R-theta-omega-neg"); });

    // -- mod claims around A(q)B(-q) -----------------------------------------
    auto mod_claim = [](const char* name) {
        return [name](std::size_t p) { return pick(check_mod_claims(p), name); };
    };
    add("A-4n2-mod4", "[single-path] a(4n+2) == 0 mod 4", mod_claim("A-4n2-mod4"));
    add("A-4n3-mod4", "[single-path] a(4n+3) == 0 mod 4", mod_claim("A-4n3-mod4"));
    add("theta-neg-T-mod4", "[single-path] Theta(-q) == 1 + 2T(q) mod 4",
        mod_claim("theta-neg-T-mod4"));
    add("A-mod4-dissection", "A == A0(q^4) + q A1(q^4) mod 4", mod_claim("A-mod4-dissection"));
    add("AB-4n1-mod4", "[single-path] coeff of q^(4n+1) in A B(-q) == 0 mod 4",
        mod_claim("AB-4n1-mod4"));
    add("AB-8n3-mod2", "[single-path] coeff of q^(8n+3) in A B(-q) == 0 mod 2",
        mod_claim("AB-8n3-mod2"));
    add("dissection-cross-terms-mod4", "[single-path] -A0 B1 + A1 B0 == 0 mod 4",
        mod_claim("dissection-cross-terms-mod4"));
    add("AB-mod2-eta16", "A B(-q) == (q^16;q^16)inf mod 2", mod_claim("AB-mod2-eta16"));
    add("A0-eta", "(q;q)inf Theta(q) = (q^2;q^2)^5 / ((q;q) (q^4;q^4)^2)", [](std::size_t p) {
        Series rhs = eta_quotient({{2, 2, 5}, {1, 1, -1}, {4, 4, -2}}, p);
        return check_identity("A0-eta", special::build(special::Name::A0, p), rhs);
    });
    add("A1-eta", "2 (q;q)inf psi(q^2) = 2 (q;q) (q^4;q^4)^2 / (q^2;q^2)", [](std::size_t p) {
        Series rhs = Rat(2) * eta_quotient({{1, 1, 1}, {4, 4, 2}, {2, 2, -1}}, p);
        return check_identity("A1-eta", special::build(special::Name::A1, p), rhs);
    });

    // -- congruence theorems and vanishing ------------------------------------
    auto c_cong = [](const char* name, std::size_t r, std::size_t m, long mod) {
        return [name, r, m, mod](std::size_t p) {
            return check_congruence(name, {Progression(r, m), mod, "C"},
                                    special::series_C_sum(p));
        };
    };
    add("c-8n4-mod4", "[single-path] c(8n+4) == 0 mod 4", c_cong("c-8n4-mod4", 4, 8, 4));
    add("c-8n6-mod8", "[single-path] c(8n+6) == 0 mod 8", c_cong("c-8n6-mod8", 6, 8, 8));
    add("c-16n13-mod4", "[single-path] c(16n+13) == 0 mod 4", c_cong("c-16n13-mod4", 13, 16, 4));

    auto cw_cong = [](const char* name, std::size_t r, std::size_t m, long mod) {
        return [name, r, m, mod](std::size_t p) {
            return check_congruence(name, {Progression(r, m), mod, "omega"},
                                    special::series_omega(p));
        };
    };
    add("cw-8n3-mod4", "[single-path] c_omega(8n+3) == 0 mod 4", cw_cong("cw-8n3-mod4", 3, 8, 4));
    add("cw-8n5-mod8", "[single-path] c_omega(8n+5) == 0 mod 8", cw_cong("cw-8n5-mod8", 5, 8, 8));
    add("cw-16n12-mod4", "[single-path] c_omega(16n+12) == 0 mod 4",
        cw_cong("cw-16n12-mod4", 12, 16, 4));

    add("s-4n1-vanishing", "[single-path] s(4n+1) = 0 exactly",
        [](std::size_t p) { return check_s_vanishing(p); });

    std::sort(reg.begin(), reg.end(),
              [](const RegistryEntry& x, const RegistryEntry& y) { return x.name < y.name; });
    return reg;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> reg = make_registry();
    return reg;
}

bool has_check(const std::string& name) {
    for (const RegistryEntry& e : registry())
        if (e.name == name) return true;
    return false;
}

namespace {

CheckResult run_timed(const RegistryEntry& e, std::size_t prec) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r = e.run(prec);
    const auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

}  // namespace

CheckResult run_named(const std::string& name, std::size_t prec) {
    for (const RegistryEntry& e : registry())
        if (e.name == name) return run_timed(e, prec);
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run_all(std::size_t prec) {
    std::vector<CheckResult> out;
    out.reserve(registry().size());
    for (const RegistryEntry& e : registry()) out.push_back(run_timed(e, prec));
    return out;
}

}  // namespace qcert::verify
