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

#include "lplab/rational.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lplab/errors.hpp"

namespace lplab {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
}

BigInt digits_to_bigint(std::string_view s) { return BigInt(std::string(s)); }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw ParseError("empty rational literal: '" + std::string(text) + "'");

  Rational magnitude;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed fraction: '" + std::string(text) + "'");
    }
    BigInt d = digits_to_bigint(den);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    magnitude = Rational(digits_to_bigint(num), d);  // canonicalizes
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw ParseError("malformed decimal: '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    magnitude = Rational(digits_to_bigint(whole) * scale + digits_to_bigint(frac), scale);
  } else {
    if (!all_digits(body)) throw ParseError("malformed integer: '" + std::string(text) + "'");
    magnitude = Rational(digits_to_bigint(body));
  }
  return negative ? Rational(-magnitude) : magnitude;
}

std::string format_rational(const Rational& value) { return value.str(); }

BigInt floor_rational(const Rational& value) {
  BigInt num = numerator(value);
  BigInt den = denominator(value);  // > 0 in canonical form
  BigInt quotient = num / den;      // truncates toward zero
  if (num % den != 0 && num < 0) --quotient;
  return quotient;
}

bool is_integral(const Rational& value) { return denominator(value) == 1; }

Rational l1_norm(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const Rational& v : values) total += v < 0 ? Rational(-v) : v;
  return total;
}

std::int64_t to_int64_checked(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value < lo || value > hi) throw std::overflow_error("integer exceeds 64-bit range");
  return value.convert_to<std::int64_t>();
}

}  // namespace lplab
