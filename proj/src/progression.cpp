#include "qcert/progression.hpp"

#include <stdexcept>
#include <string>

namespace qcert {

Progression::Progression(std::size_t r, std::size_t m) : residue(r), modulus(m) {
    if (m < 1) throw std::invalid_argument("Progression: modulus must be >= 1");
    if (r >= m)
        throw std::invalid_argument("Progression: residue " + std::to_string(r) +
                                    " not in [0, " + std::to_string(m) + ")");
}

std::vector<Series> dissect(const Series& f, std::size_t m) {
    if (m < 1) throw std::invalid_argument("dissect: modulus must be >= 1");
    std::vector<Series> out;
    out.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        // number of exponents i < prec with i == j (mod m)
        const std::size_t n = (f.prec() > j) ? (f.prec() - 1 - j) / m + 1 : 0;
        std::vector<Rat> comp(n);
        for (std::size_t i = 0; i < n; ++i) comp[i] = f.coeff(j + i * m);
        out.emplace_back(std::move(comp));
    }
    return out;
}

Series restrict_R(const Series& f) { return dissect(f, 4)[1]; }

std::vector<Rat> coeffs_on(const Series& f, const Progression& p) {
    std::vector<Rat> out;
    for (std::size_t e = p.residue; e < f.prec(); e += p.modulus) out.push_back(f.coeff(e));
    return out;
}

}  // namespace qcert
