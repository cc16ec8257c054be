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

#ifndef LDDQEC_POLY_H
#define LDDQEC_POLY_H

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lddqec/rational.h"

namespace lddqec {

/// a + b*eps with eps^2 = 0. Used to extract exact first-order parameter coefficients.
template <typename T>
struct Dual {
    T re{};
    T eps{};

    Dual() = default;
    Dual(T r) : re(std::move(r)), eps() {}
    Dual(T r, T e) : re(std::move(r)), eps(std::move(e)) {}

    friend Dual operator+(const Dual &a, const Dual &b) { return {a.re + b.re, a.eps + b.eps}; }
    friend Dual operator-(const Dual &a, const Dual &b) { return {a.re - b.re, a.eps - b.eps}; }
    friend Dual operator-(const Dual &a) { return {-a.re, -a.eps}; }
    friend Dual operator*(const Dual &a, const Dual &b) { return {a.re * b.re, a.re * b.eps + a.eps * b.re}; }
    friend Dual operator/(const Dual &a, const Dual &b) {
        T inv = T(1) / b.re;
        return {a.re * inv, (a.eps * b.re - a.re * b.eps) * inv * inv};
    }
    Dual &operator+=(const Dual &b) { return *this = *this + b; }
    Dual &operator-=(const Dual &b) { return *this = *this - b; }
    Dual &operator*=(const Dual &b) { return *this = *this * b; }
    friend bool operator==(const Dual &a, const Dual &b) { return a.re == b.re && a.eps == b.eps; }
};

template <typename T>
struct Num<Dual<T>> {
    static Dual<T> from(const Rational &q) { return Dual<T>(Num<T>::from(q)); }
    static Dual<T> from_u64(uint64_t v) { return Dual<T>(Num<T>::from_u64(v)); }
};

/// Dense univariate polynomial; coefficient i multiplies z^i.
template <typename T>
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) {}
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

    static Poly from_counts(std::span<const uint64_t> counts) {
        std::vector<T> c;
        c.reserve(counts.size());
        for (uint64_t v : counts) {
            c.push_back(Num<T>::from_u64(v));
        }
        return Poly(std::move(c));
    }

    size_t size() const { return c_.size(); }
    const std::vector<T> &coeffs() const { return c_; }
    T coeff(size_t i) const { return i < c_.size() ? c_[i] : T{}; }

    friend Poly operator+(const Poly &a, const Poly &b) {
        std::vector<T> c(std::max(a.size(), b.size()));
        for (size_t i = 0; i < c.size(); i++) {
            c[i] = a.coeff(i) + b.coeff(i);
        }
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly &a, const Poly &b) {
        std::vector<T> c(std::max(a.size(), b.size()));
        for (size_t i = 0; i < c.size(); i++) {
            c[i] = a.coeff(i) - b.coeff(i);
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const T &s, const Poly &a) {
        std::vector<T> c(a.size());
        for (size_t i = 0; i < c.size(); i++) {
            c[i] = s * a.c_[i];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly &a, const Poly &b) {
        if (a.c_.empty() || b.c_.empty()) {
            return Poly();
        }
        std::vector<T> c(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); i++) {
            for (size_t j = 0; j < b.size(); j++) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(c));
    }

    /// Horner evaluation.
    T operator()(const T &z) const {
        T acc{};
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc * z + c_[i];
        }
        return acc;
    }

   private:
    std::vector<T> c_;
};

/// Horner evaluation in double with an error-free transformation of every step,
/// giving a result about as accurate as if computed in twice the working precision.
inline double compensated_horner(std::span<const double> c, double z) {
    if (c.empty()) {
        return 0.0;
    }
    double s = c.back();
    double err = 0.0;
    for (size_t i = c.size() - 1; i-- > 0;) {
        double p = s * z;
        double pe = std::fma(s, z, -p);
        double t = p + c[i];
        double bb = t - p;
        double se = (p - (t - bb)) + (c[i] - bb);
        s = t;
        err = err * z + (pe + se);
    }
    return s + err;
}

template <typename T>
T eval_poly(const Poly<T> &p, const T &z) {
    return p(z);
}

inline double eval_poly(const Poly<double> &p, const double &z) { return compensated_horner(p.coeffs(), z); }

/// Coefficients 0..order of num/den as a power series. den's constant term must be invertible.
template <typename T>
std::vector<T> series_divide(const Poly<T> &num, const Poly<T> &den, size_t order) {
    if (den.size() == 0 || den.coeff(0) == T{}) {
        throw std::domain_error("series_divide: denominator has zero constant term");
    }
    T inv0 = T(1) / den.coeff(0);
    std::vector<T> q(order + 1);
    for (size_t i = 0; i <= order; i++) {
        T acc = num.coeff(i);
        for (size_t j = 1; j <= i && j < den.size(); j++) {
            acc -= den.coeff(j) * q[i - j];
        }
        q[i] = acc * inv0;
    }
    return q;
}

}  // namespace lddqec

#endif  // LDDQEC_POLY_H
