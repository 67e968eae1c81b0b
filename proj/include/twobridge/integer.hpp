#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twobridge {

using Integer = boost::multiprecision::cpp_int;

// Floor division for signed operands; divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

bool is_even(const Integer& x);
bool is_odd(const Integer& x);

// Converts a repeat count (e.g. the length of a run of 2s) to size_t.
// Throws std::length_error when the count is negative or would not fit
// in memory as an explicit sequence.
std::size_t to_count(const Integer& x);

std::string to_string(const Integer& x);

}  // namespace twobridge
