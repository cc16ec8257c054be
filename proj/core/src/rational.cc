// Copyright 2026 The lddqec Authors
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

#include "lddqec/rational.h"

#include <charconv>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace lddqec {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { return std::invalid_argument("'" + s + "' is not a number"); };
    if (s.empty()) {
        throw bad();
    }
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational q;
        mpz_class num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0 || den == 0) {
            throw bad();
        }
        q = Rational(num, den);
        q.canonicalize();
        return q;
    }
    size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        i++;
    }
    std::string digits;
    long exponent = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; i++) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits.push_back(s[i]);
            seen_digit = true;
            if (seen_point) {
                exponent--;
            }
        } else if (s[i] == '.' && !seen_point) {
            seen_point = true;
        } else {
            throw bad();
        }
    }
    if (!seen_digit) {
        throw bad();
    }
    if (i < s.size()) {
        std::string e = s.substr(i + 1);
        if (e.empty()) {
            throw bad();
        }
        size_t used = 0;
        long ev = 0;
        try {
            ev = std::stol(e, &used);
        } catch (const std::exception &) {
            throw bad();
        }
        if (used != e.size()) {
            throw bad();
        }
        exponent += ev;
    }
    mpz_class m(digits, 10);
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent >= 0 ? Rational(m * ten_pow) : Rational(m, ten_pow);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace lddqec
