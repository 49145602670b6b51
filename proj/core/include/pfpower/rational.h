// Copyright 2026 The pfpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFPOWER_RATIONAL_H_
#define PFPOWER_RATIONAL_H_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pfpower {

// Exact arbitrary-precision rational. All index arithmetic happens here;
// decimals only appear at presentation.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Decimal rendering with `places` digits, rounding half away from zero
// (half-up for the non-negative values indices produce). 0.45098... -> "0.4510".
std::string RoundDecimal(const Rational& value, int places = 4);

// "num/den", or just "num" for integers.
std::string ToFractionString(const Rational& value);

double ToDouble(const Rational& value);

}  // namespace pfpower

#endif  // PFPOWER_RATIONAL_H_
