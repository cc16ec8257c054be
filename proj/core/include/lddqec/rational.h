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

#ifndef LDDQEC_RATIONAL_H
#define LDDQEC_RATIONAL_H

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lddqec {

using Rational = mpq_class;

inline Rational rational_from_u64(uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return Rational(z);
}

/// Exact 2^e for any integer e.
inline Rational pow2(long e) {
    Rational r(1);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

/// Always "num/den", even for integers.
inline std::string format_rational(const Rational &q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

/// Accepts "a", "a/b" and finite decimals such as "0.001" or "1e-4", all converted exactly.
Rational parse_rational(std::string_view text);

/// Shortest decimal rendering that round-trips; "inf", "-inf" and "nan" for specials.
std::string format_double(double v);

/// Exact value of a finite double.
inline Rational rational_from_double(double v) { return Rational(v); }

/// Numeric adapters used by the templated formulas.
template <typename T>
struct Num;

template <>
struct Num<double> {
    static double from(const Rational &q) { return q.get_d(); }
    static double from_u64(uint64_t v) { return static_cast<double>(v); }
};

template <>
struct Num<Rational> {
    static Rational from(const Rational &q) { return q; }
    static Rational from_u64(uint64_t v) { return rational_from_u64(v); }
};

}  // namespace lddqec

#endif  // LDDQEC_RATIONAL_H
