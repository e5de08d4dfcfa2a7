// Copyright 2026 The plft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLFT_ARITH_HPP
#define PLFT_ARITH_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plft {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, numerator and denominator coprime).
using Rational = mpq_class;

/// Parses an optionally signed decimal integer. Surrounding whitespace is
/// ignored. Throws std::invalid_argument on anything else.
Integer parse_integer(std::string_view text);

/// Parses "p" or "p/q". The result is canonicalized; q = 0 is rejected.
Rational parse_rational(std::string_view text);

/// Builds num/den in canonical form; den = 0 is rejected.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& value);

/// Short form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Always "p/q", including integers ("3/1").
std::string to_fraction_string(const Rational& value);

/// Floor of num/den for num >= 0, den > 0.
Integer floor_quotient(const Integer& num, const Integer& den);

std::string_view trim(std::string_view text);

}  // namespace plft

#endif  // PLFT_ARITH_HPP
