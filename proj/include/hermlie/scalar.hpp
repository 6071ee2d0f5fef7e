#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace hermlie {

/// Exact rational backed by GMP. Expression templates are disabled so that
/// `auto` never captures a dangling expression.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;

/// Accepts "p", "p/q" and finite decimals such as "-0.25"; the result is exact.
Scalar parse_scalar(std::string_view text);

/// Canonical "p" or "p/q" text.
std::string to_string(const Scalar& x);

double to_double(const Scalar& x);

inline Scalar abs_value(const Scalar& x) { return x < 0 ? Scalar(-x) : x; }

}  // namespace hermlie
