// Copyright 2026 lplab contributors
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

#ifndef LPLAB_RATIONAL_HPP
#define LPLAB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace lplab {

// The sole scalar type of every mathematical path. GMP keeps values in
// lowest terms with a positive denominator, so equality is exact.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/**
 * Parses the text forms used by all file formats:
 *   "p/q"  — fraction, q > 0 after canonicalization,
 *   "p"    — integer,
 *   "d.dd" — decimal, converted exactly (e.g. "0.5" -> 1/2).
 * A leading '-' or '+' is accepted. Throws ParseError on anything else.
 */
Rational parse_rational(std::string_view text);

/** Formats as "p" (denominator 1) or "p/q"; parse_rational round-trips it. */
std::string format_rational(const Rational& value);

/** Largest integer <= value. */
BigInt floor_rational(const Rational& value);

bool is_integral(const Rational& value);

/** Sum of absolute values. */
Rational l1_norm(const std::vector<Rational>& values);

/** Converts with a range check; throws std::overflow_error if it cannot fit. */
std::int64_t to_int64_checked(const BigInt& value);

}  // namespace lplab

#endif  // LPLAB_RATIONAL_HPP
