// The named series catalog: every series is built from its defining sum or
// product, with closed-form alternates kept as separate catalog entries so
// identities can be certified through genuinely disjoint paths.

#pragma once

#include "qcert/series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcert::special {

enum class Name {
    A,          // (-q^2;q^2)inf / (q;q^2)inf^2
    S,          // sum (q;q^2)_n^2 q^(2n) / (-q^2;q^2)_n
    C,          // sum (-q^(2n+2);q^2)inf q^(2n+1) / (q^(2n+1);q^2)inf^2
    C_k,        // finite-k variant, extra factor (-q^(2n+2k);q^2)inf
    B,          // sum (-q^2;q^2)_n q^(n(n+1)) / (q;q^2)_(n+1)^2
    B_lerch,    // (-q^2;q^2)inf/(q^2;q^2)inf * bilateral Lerch sum
    omega,      // sum q^(2n(n+1)) / (q;q^2)_(n+1)^2
    f,          // sum q^(n^2) / (-q;q)_n^2
    G,          // Theta(q) Theta(q^2)^2 / (q^4;q^4)inf^2
    G0, G1, G2, G3,
    M_closed,   // 4 (q^2;q^2)inf^2 / (q;q^2)inf^6
    D,          // (q;q^2)inf^2 / (-q^2;q^2)inf * omega(-q)
    A0,         // (q;q)inf Theta(q)
    A1,         // 2 (q;q)inf psi(q^2)
    B0_closed,  // (q^2;q^2)inf^14 / ((q;q)inf^9 (q^4;q^4)inf^4)
    B1_closed,  // -2 (q^2;q^2)inf^8 / (q;q)inf^7
    omega0,     // Theta(q)^2 psi(q^2) / (q;q)inf^2
    omega1,     // 2 Theta(q) psi(q^2)^2 / (q;q)inf^2
    T,          // sum_{n>=1} q^(n^2)
};

enum class Path { sum, product, lerch, closed_form };

struct CatalogEntry {
    Name id;
    const char* name;        // frozen identifier, also the CLI spelling
    Path path;
    const char* definition;  // the defining formula, ASCII
};

const std::vector<CatalogEntry>& catalog();
std::optional<Name> lookup(std::string_view name);
const CatalogEntry& entry(Name id);

// Build a catalog series at the given truncation order. C_k is excluded
// here (it takes a parameter); use series_C_k.
Series build(Name id, std::size_t prec);

Series series_A(std::size_t prec);
Series series_S(std::size_t prec);
Series series_C_sum(std::size_t prec);
Series series_C_k(unsigned long k, std::size_t prec);
Series series_omega(std::size_t prec);
Series series_B_sum(std::size_t prec);
Series series_B_lerch(std::size_t prec);
Series series_f(std::size_t prec);
Series series_G(std::size_t prec);
Series series_G_j(unsigned j, std::size_t prec);  // j in 0..3

}  // namespace qcert::special
