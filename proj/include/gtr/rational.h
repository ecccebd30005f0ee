// Copyright 2026 The GTR Authors
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

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gtr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" (or "p" when q == 1), always in lowest terms.
std::string to_string(const Rational &r);

/// Parses "p/q", "p" or a finite decimal such as "0.25".
Rational parse_rational(const std::string &text);

/// C(n, k) as a big integer; zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// A probability held as a reduced fraction in [0, 1].
class ExactProbability {
   public:
    ExactProbability() = default;
    /// Throws DomainError outside [0, 1].
    explicit ExactProbability(Rational value);
    ExactProbability(long long numerator, long long denominator);

    const Rational &value() const { return value_; }
    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    double to_double() const { return value_.convert_to<double>(); }
    ExactProbability complement() const { return ExactProbability(Rational(1) - value_); }
    std::string to_string() const { return gtr::to_string(value_); }

    friend bool operator==(const ExactProbability &a, const ExactProbability &b) { return a.value_ == b.value_; }

   private:
    Rational value_{0};
};

}  // namespace gtr
