#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "twobridge/contfrac.hpp"

namespace twobridge::testing {

inline std::vector<Integer> ints(std::initializer_list<long long> xs)
{
    return {xs.begin(), xs.end()};
}

inline std::vector<Integer> ints(const std::vector<std::int64_t>& xs)
{
    return {xs.begin(), xs.end()};
}

inline MurasugiBlocks blocks(std::initializer_list<std::initializer_list<long long>> bs)
{
    std::vector<std::vector<Integer>> out;
    for (const auto& b : bs) out.push_back(ints(b));
    return MurasugiBlocks(std::move(out));
}

/// Calls f(p, q) for every coprime p > q >= 1 with lo <= p <= hi.
template <class F>
void for_each_pair(std::int64_t lo, std::int64_t hi, F&& f)
{
    for (std::int64_t p = lo; p <= hi; ++p)
        for (std::int64_t q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) f(p, q);
}

}  // namespace twobridge::testing
