/*
   Copyright 2026 The norlund authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "norlund/errors.hpp"

namespace norlund {

/// Arbitrary-precision signed integer. Every quantity in this library is an
/// exact rational, so this is the only integer type used for values.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form by the backend:
/// denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. The denominator may be negative; the
/// sign is moved to the numerator.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Renders `a/b` with b > 0 and gcd 1; integers render without the `/1`.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

/// Decimal digits to Integer. Leading zeros are stripped first so the
/// backend cannot mistake them for an octal prefix.
inline Integer parse_digits(std::string_view digits) {
    std::size_t first = 0;
    while (first + 1 < digits.size() && digits[first] == '0') {
        ++first;
    }
    return Integer(std::string(digits.substr(first)));
}

}  // namespace detail

/// Parses the output of to_string: `-?digits(/digits)?`. Anything else is
/// rejected, including signs on the denominator and embedded whitespace.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    const bool negative = !text.empty() && text[0] == '-';
    if (negative) {
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == num_begin) {
        bad();
    }
    Integer num = detail::parse_digits(text.substr(num_begin, pos - num_begin));
    if (negative) {
        num = -num;
    }
    if (pos == text.size()) {
        return Rational(num);
    }
    if (text[pos] != '/') {
        bad();
    }
    const std::size_t den_begin = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == den_begin || pos != text.size()) {
        bad();
    }
    Integer den = detail::parse_digits(text.substr(den_begin));
    return make_rational(std::move(num), std::move(den));
}

}  // namespace norlund
