#include "qcert/oracle.hpp"

#include "qcert/special.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace qcert::oracle {

namespace {

// (value, multiplicity) blocks, values strictly decreasing.
using Blocks = std::vector<std::pair<unsigned long, unsigned long>>;

// Number of admissible color assignments of one partition. The smallest
// block needs at least one blue copy; odd parts repeat freely in both
// colors; even parts admit at most one copy per color, blue only when the
// finite-k threshold allows it.
long color_ways(const Blocks& blocks, std::optional<unsigned long> k) {
    const unsigned long smallest = blocks.back().first;
    if (smallest % 2 == 0) return 0;
    long total = 1;
    for (const auto& [v, mu] : blocks) {
        long w;
        if (v % 2 == 1) {
            w = (v == smallest) ? static_cast<long>(mu)
                                : static_cast<long>(mu) + 1;
        } else {
            const bool blue_ok = k.has_value() && v >= smallest + 2 * (*k) - 1;
            if (mu == 1)
                w = blue_ok ? 2 : 1;
            else if (mu == 2)
                w = blue_ok ? 1 : 0;
            else
                w = 0;
        }
        if (w == 0) return 0;
        total *= w;
    }
    return total;
}

long walk(unsigned long remaining, unsigned long maxpart, Blocks& stack,
               std::optional<unsigned long> k) {
    if (remaining == 0) return stack.empty() ? 0 : color_ways(stack, k);
    long total = 0;
    for (unsigned long v = std::min(remaining, maxpart); v >= 1; --v) {
        for (unsigned long mu = remaining / v; mu >= 1; --mu) {
            stack.emplace_back(v, mu);
            total += walk(remaining - mu * v, v - 1, stack, k);
            stack.pop_back();
        }
    }
    return total;
}

long enumerate(unsigned long n, std::optional<unsigned long> k) {
    Blocks stack;
    return walk(n, n, stack, k);
}

bool admissible_impl(const TwoColorPartition& p, std::optional<unsigned long> k) {
    if (p.parts.empty()) return false;
    unsigned long smallest = p.parts.front().first;
    for (const auto& [v, col] : p.parts) smallest = std::min(smallest, v);
    if (smallest % 2 == 0) return false;
    bool smallest_blue = false;
    std::set<unsigned long> red_even, blue_even;
    for (const auto& [v, col] : p.parts) {
        if (v == smallest && col == Color::blue) smallest_blue = true;
        if (v % 2 == 0) {
            if (col == Color::blue) {
                if (!k.has_value()) return false;
                if (v < smallest + 2 * (*k) - 1) return false;
                if (!blue_even.insert(v).second) return false;
            } else {
                if (!red_even.insert(v).second) return false;
            }
        }
    }
    return smallest_blue;
}

// Expand color splits of one partition into explicit TwoColorPartitions.
long explicit_count(const Blocks& blocks, std::size_t idx, TwoColorPartition& acc,
                         std::optional<unsigned long> k) {
    if (idx == blocks.size()) return admissible_impl(acc, k) ? 1 : 0;
    const auto [v, mu] = blocks[idx];
    long total = 0;
    for (unsigned long blue = 0; blue <= mu; ++blue) {
        const std::size_t base = acc.parts.size();
        for (unsigned long i = 0; i < blue; ++i) acc.parts.emplace_back(v, Color::blue);
        for (unsigned long i = blue; i < mu; ++i) acc.parts.emplace_back(v, Color::red);
        total += explicit_count(blocks, idx + 1, acc, k);
        acc.parts.resize(base);
    }
    return total;
}

long walk_explicit(unsigned long remaining, unsigned long maxpart, Blocks& stack,
                        std::optional<unsigned long> k) {
    if (remaining == 0) {
        if (stack.empty()) return 0;
        TwoColorPartition acc;
        return explicit_count(stack, 0, acc, k);
    }
    long total = 0;
    for (unsigned long v = std::min(remaining, maxpart); v >= 1; --v) {
        for (unsigned long mu = remaining / v; mu >= 1; --mu) {
            stack.emplace_back(v, mu);
            total += walk_explicit(remaining - mu * v, v - 1, stack, k);
            stack.pop_back();
        }
    }
    return total;
}

}  // namespace

bool admissible(const TwoColorPartition& p) { return admissible_impl(p, std::nullopt); }

bool admissible(const TwoColorPartition& p, unsigned long k) {
    if (k < 1) throw std::invalid_argument("oracle::admissible: k must be >= 1");
    return admissible_impl(p, k);
}

long enumerate_c(unsigned long n) { return enumerate(n, std::nullopt); }

long enumerate_c_k(unsigned long k, unsigned long n) {
    if (k < 1) throw std::invalid_argument("oracle::enumerate_c_k: k must be >= 1");
    return enumerate(n, k);
}

long enumerate_c_explicit(unsigned long n, std::optional<unsigned long> k) {
    Blocks stack;
    return walk_explicit(n, n, stack, k);
}

verify::CheckResult convolution_check(std::size_t prec) {
    const auto t0 = std::chrono::steady_clock::now();
    Series lhs = special::series_C_sum(prec);
    Series rhs = (prec == 0)
                     ? Series::zero(0)
                     : (special::series_A(prec - 1) * special::series_S(prec - 1)).shift(1);
    verify::CheckResult r = verify::check_identity("C-convolution", lhs, rhs);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

}  // namespace qcert::oracle
