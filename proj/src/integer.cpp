#include "twobridge/integer.hpp"

#include <stdexcept>

namespace twobridge {

namespace {
// Largest run we are willing to materialize as an explicit sequence.
constexpr std::size_t kMaxCount = std::size_t{1} << 30;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool is_even(const Integer& x) { return !boost::multiprecision::bit_test(abs(x), 0); }
bool is_odd(const Integer& x) { return !is_even(x); }

std::size_t to_count(const Integer& x)
{
    if (x < 0) throw std::length_error("negative repeat count " + to_string(x));
    if (x > kMaxCount) throw std::length_error("repeat count " + to_string(x) + " too large");
    return x.convert_to<std::size_t>();
}

std::string to_string(const Integer& x) { return x.str(); }

}  // namespace twobridge
