// Copyright 2026 The sloccdet Authors
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

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "slocc/errors.hpp"

namespace slocc {

using Complex = std::complex<double>;

/// Element of Q(i): a complex number with rational real and imaginary parts.
///
/// Both components are kept in canonical reduced form (positive denominator,
/// gcd(num, den) == 1), so equality is plain component comparison.  All four
/// field operations are exact; division by zero throws.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}

    GaussianRational(long re) : re_(re), im_(0) {}

    GaussianRational(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) {
      re_.canonicalize();
      im_.canonicalize();
    }

    static GaussianRational from_ints(long re, long im) {
      return GaussianRational(mpq_class(re), mpq_class(im));
    }

    /// Real rational num/den.
    static GaussianRational ratio(long num, long den) {
      if (den == 0) throw DomainError("rational with zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return GaussianRational(std::move(q), mpq_class(0));
    }

    const mpq_class &real() const { return re_; }
    const mpq_class &imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

    Complex to_complex() const { return Complex(re_.get_d(), im_.get_d()); }

    GaussianRational operator-() const {
      GaussianRational out;
      out.re_ = -re_;
      out.im_ = -im_;
      return out;
    }

    GaussianRational &operator+=(const GaussianRational &o) {
      re_ += o.re_;
      im_ += o.im_;
      return *this;
    }

    GaussianRational &operator-=(const GaussianRational &o) {
      re_ -= o.re_;
      im_ -= o.im_;
      return *this;
    }

    GaussianRational &operator*=(const GaussianRational &o) {
      mpq_class re(re_ * o.re_ - im_ * o.im_);
      mpq_class im(re_ * o.im_ + im_ * o.re_);
      re_ = std::move(re);
      im_ = std::move(im);
      return *this;
    }

    /// Division via the conjugate: x/y = x * conj(y) / |y|^2.
    GaussianRational &operator/=(const GaussianRational &o) {
      if (o.is_zero()) throw DomainError("division by zero");
      mpq_class norm(o.re_ * o.re_ + o.im_ * o.im_);
      mpq_class re((re_ * o.re_ + im_ * o.im_) / norm);
      mpq_class im((im_ * o.re_ - re_ * o.im_) / norm);
      re_ = std::move(re);
      im_ = std::move(im);
      return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) {
      a += b;
      return a;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) {
      a -= b;
      return a;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) {
      a *= b;
      return a;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) {
      a /= b;
      return a;
    }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
      return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational &a, const GaussianRational &b) {
      return !(a == b);
    }

    /// Compact display form, e.g. "0", "-3/4", "1/2+2i", "-i".
    std::string str() const {
      if (is_zero()) return "0";
      std::string out;
      if (sgn(re_) != 0) out += re_.get_str();
      if (sgn(im_) != 0) {
        if (sgn(im_) > 0 && !out.empty()) out += "+";
        if (im_ == -1) {
          out += "-";
        } else if (im_ != 1) {
          out += im_.get_str();
        }
        out += "i";
      }
      return out;
    }

  private:
    mpq_class re_;
    mpq_class im_;
};

inline std::ostream &operator<<(std::ostream &os, const GaussianRational &q) {
  return os << q.str();
}

/// Uniform access to the two scalar fields the engines run over.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static bool is_zero(const GaussianRational &s) { return s.is_zero(); }
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool is_exact = false;
    static Complex zero() { return Complex(0.0, 0.0); }
    static Complex one() { return Complex(1.0, 0.0); }
    static bool is_zero(const Complex &s) { return s == Complex(0.0, 0.0); }
};

/// base^e by binary exponentiation; e == 0 gives one.
template <class S>
S pow_int(S base, std::uint64_t e) {
  S acc = scalar_traits<S>::one();
  while (e != 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

} // namespace slocc
