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

#include "gtr/rational.h"

#include <cctype>

#include "gtr/errors.h"

namespace gtr {

std::string to_string(const Rational &r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string &text) {
    auto bad = [&] { return DomainError("not a rational number: '" + text + "'"); };
    if (text.empty()) {
        throw bad();
    }
    auto slash = text.find('/');
    auto parse_int = [&](const std::string &s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size()) {
            throw bad();
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                throw bad();
            }
        }
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash != std::string::npos) {
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw bad();
        }
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        return Rational(parse_int(text));
    }
    std::string frac = text.substr(dot + 1);
    std::string whole = text.substr(0, dot);
    if (whole.empty() || whole == "-" || whole == "+") {
        whole += "0";
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
        scale *= 10;
    }
    BigInt digits = parse_int(whole + frac);
    if (frac.empty()) {
        return Rational(digits);
    }
    return Rational(digits, scale);
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt c = 1;
    for (unsigned j = 1; j <= k; ++j) {
        c = c * (n - k + j) / j;
    }
    return c;
}

ExactProbability::ExactProbability(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1) {
        throw DomainError("probability outside [0, 1]: " + gtr::to_string(value_));
    }
}

ExactProbability::ExactProbability(long long numerator, long long denominator)
    : ExactProbability(denominator == 0 ? throw DomainError("zero denominator") : Rational(numerator, denominator)) {}

}  // namespace gtr
