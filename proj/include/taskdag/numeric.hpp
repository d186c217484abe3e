#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace taskdag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace taskdag
