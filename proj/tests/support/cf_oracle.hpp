#pragma once

// Independent brute-force references for continued fractions, using plain
// 64-bit fractions rather than the library's arithmetic.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace twobridge::oracle {

struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Frac make(std::int64_t n, std::int64_t d)
    {
        if (d < 0) n = -n, d = -d;
        const std::int64_t g = std::gcd(n, d);
        return {n / g, d / g};
    }
    friend auto operator<=>(const Frac&, const Frac&) = default;
};

/// a1 - 1/(a2 - 1/(... - 1/ak)); nullopt on division by zero.
inline std::optional<Frac> eval_minus(const std::vector<std::int64_t>& a)
{
    Frac x{a.back(), 1};
    for (auto i = a.size() - 1; i-- > 0;) {
        if (x.num == 0) return std::nullopt;
        // a - den/num
        x = Frac::make(a[i] * x.num - x.den, x.num);
    }
    return x;
}

/// c1 + 1/(c2 + 1/(... + 1/cn)) for positive ci.
inline Frac eval_plus(const std::vector<std::int64_t>& c)
{
    Frac x{c.back(), 1};
    for (auto i = c.size() - 1; i-- > 0;) x = Frac::make(c[i] * x.num + x.den, x.num);
    return x;
}

/// Every sequence over `alphabet(budget)` with total weight <= max_weight,
/// grouped by value.
using Groups = std::map<Frac, std::vector<std::vector<std::int64_t>>>;

inline Groups enumerate(int max_weight, const std::function<std::vector<std::int64_t>(int)>& alphabet)
{
    Groups out;
    std::vector<std::int64_t> seq;
    std::function<void(int)> rec = [&](int budget) {
        if (!seq.empty())
            if (auto v = eval_minus(seq)) out[*v].push_back(seq);
        for (std::int64_t a : alphabet(budget)) {
            seq.push_back(a);
            rec(budget - static_cast<int>(std::llabs(a)));
            seq.pop_back();
        }
    };
    rec(max_weight);
    return out;
}

/// All negative continued fractions (entries >= 2) of weight <= max_weight.
inline Groups all_negative_cfs(int max_weight)
{
    return enumerate(max_weight, [](int budget) {
        std::vector<std::int64_t> a;
        for (int x = 2; x <= budget; ++x) a.push_back(x);
        return a;
    });
}

/// All signed sequences of nonzero even entries of weight <= max_weight.
inline Groups all_signed_even_cfs(int max_weight)
{
    return enumerate(max_weight, [](int budget) {
        std::vector<std::int64_t> a;
        for (int x = 2; x <= budget; x += 2) {
            a.push_back(x);
            a.push_back(-x);
        }
        return a;
    });
}

}  // namespace twobridge::oracle
