// The certification registry: one named check per identity, congruence, and
// vanishing statement handled by this engine. Checks build both sides through
// disjoint builder paths wherever two shapes exist; checks that only have one
// construction route carry "[single-path]" in their description.

#pragma once

#include "qcert/progression.hpp"
#include "qcert/series.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qcert::verify {

struct CheckResult {
    struct Failure {
        std::size_t exponent = 0;
        Rat lhs;
        Rat rhs;
    };

    std::string name;
    std::size_t prec = 0;
    bool passed = false;
    std::optional<Failure> first_failure;  // absent iff passed
    double elapsed_ms = 0.0;
};

// "every coefficient of `series_name` on `progression` is 0 mod `modulus`"
struct CongruenceClaim {
    Progression progression;
    Int modulus;  // >= 2
    std::string series_name;
};

// Coefficientwise comparison up to min precision; reports the first mismatch.
CheckResult check_identity(std::string name, const Series& lhs, const Series& rhs);

// Coefficientwise comparison mod m (exact coefficients reduced, then compared).
CheckResult check_identity_mod(std::string name, const Series& lhs, const Series& rhs,
                               const Int& m);

// All coefficients on the progression reduce to 0 mod claim.modulus.
CheckResult check_congruence(const CongruenceClaim& claim, const Series& f);
CheckResult check_congruence(std::string name, const CongruenceClaim& claim, const Series& f);

// All coefficients on the progression are exactly 0.
CheckResult check_vanishing(std::string name, const Series& f, const Progression& p);

// S(q) = 2B(-q) - (q;q^2)^2/(-q^2;q^2) * omega(-q), both sides independent.
CheckResult check_theorem_S(std::size_t prec);

// C(q) = 2q (-q^2;q^2)/(q;q^2)^2 B(-q) - q omega(-q).
CheckResult check_c_via_b_omega(std::size_t prec);

// The two-variable-free specialization of the classical transformation
//   sum_{n>=0} (-aq,-bq)_n q^(n+1) / (-cq)_n
//     = c/(ab) sum_{n>=1} (-1/c)_n (ab/c)^n q^(n(n+1)/2) / ((aq/c)_n (bq/c)_n)
//       - c (-aq,-bq)inf / (ab (-cq)inf) sum_{n>=1} (ab/c^2)^n q^(n^2) / ((aq/c)_n (bq/c)_n)
// evaluated exactly at one rational triple (a, b, c).
CheckResult check_ramanujan_transform(const Rat& a, const Rat& b, const Rat& c,
                                      std::size_t prec);

// The 8 fixed rational triples used by the certification suite.
const std::vector<std::array<Rat, 3>>& ramanujan_triples();

// s(4n+1) = 0 exactly.
CheckResult check_s_vanishing(std::size_t prec);

// The mod-4 / mod-2 claims around A(q)B(-q): progression congruences of A,
// the mod-4 dissection of A, the cross-term cancellation, and the mod-2
// eta form of A(q)B(-q).
std::vector<CheckResult> check_mod_claims(std::size_t prec);

// M(q) = R(Theta(q) omega(q)) equals 4 (q^2;q^2)^2/(q;q^2)^6.
CheckResult check_M_eta(std::size_t prec);

// R-operator splits: R(S) = R(2B(-q)) - R(D), both images against their
// eta quotients, their direct equality, and R(Theta(-q) omega(-q)) = -M.
std::vector<CheckResult> check_R_splits(std::size_t prec);

struct RegistryEntry {
    std::string name;
    std::string description;
    std::function<CheckResult(std::size_t)> run;
};

// All named checks, ordered by name.
const std::vector<RegistryEntry>& registry();
bool has_check(const std::string& name);

// Run one registry check (with timing); throws std::invalid_argument for an
// unknown name.
CheckResult run_named(const std::string& name, std::size_t prec);

// Run the whole registry in name order.
std::vector<CheckResult> run_all(std::size_t prec);

}  // namespace qcert::verify
