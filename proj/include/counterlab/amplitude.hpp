// Copyright 2026 The Counterlab Authors
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

#ifndef COUNTERLAB_AMPLITUDE_HPP
#define COUNTERLAB_AMPLITUDE_HPP

#include <string>
#include <utility>

#include "counterlab/rational.hpp"

namespace counterlab {

/// An element a + b*sqrt(2) of the real field Q(sqrt 2).
class QSqrt2 {
   public:
    QSqrt2() = default;
    QSqrt2(int value) : a_(value) {
    }
    QSqrt2(Rational rational, Rational sqrt2 = 0) : a_(std::move(rational)), b_(std::move(sqrt2)) {
    }

    const Rational &rational_part() const {
        return a_;
    }
    const Rational &sqrt2_part() const {
        return b_;
    }
    bool is_zero() const {
        return sgn(a_) == 0 && sgn(b_) == 0;
    }
    bool is_rational() const {
        return sgn(b_) == 0;
    }

    QSqrt2 &operator+=(const QSqrt2 &other) {
        a_ += other.a_;
        b_ += other.b_;
        return *this;
    }
    QSqrt2 &operator-=(const QSqrt2 &other) {
        a_ -= other.a_;
        b_ -= other.b_;
        return *this;
    }
    QSqrt2 operator-() const {
        return QSqrt2(-a_, -b_);
    }
    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2 &y) {
        x += y;
        return x;
    }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2 &y) {
        x -= y;
        return x;
    }
    friend QSqrt2 operator*(const QSqrt2 &x, const QSqrt2 &y) {
        if (y.is_rational()) {
            return QSqrt2(x.a_ * y.a_, x.b_ * y.a_);
        }
        if (x.is_rational()) {
            return QSqrt2(x.a_ * y.a_, x.a_ * y.b_);
        }
        return QSqrt2(x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend bool operator==(const QSqrt2 &x, const QSqrt2 &y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

   private:
    Rational a_;
    Rational b_;
};

/// An element re + i*im of Q(sqrt 2) + i Q(sqrt 2).
class Amplitude {
   public:
    Amplitude() = default;
    Amplitude(int value) : re_(value) {
    }
    Amplitude(const Rational &value) : re_(value) {
    }
    Amplitude(QSqrt2 re, QSqrt2 im = QSqrt2()) : re_(std::move(re)), im_(std::move(im)) {
    }

    const QSqrt2 &real() const {
        return re_;
    }
    const QSqrt2 &imag() const {
        return im_;
    }
    bool is_zero() const {
        return re_.is_zero() && im_.is_zero();
    }
    bool is_real() const {
        return im_.is_zero();
    }
    /// True when the value is an ordinary rational number.
    bool is_real_rational() const {
        return im_.is_zero() && re_.is_rational();
    }
    Amplitude conj() const {
        return Amplitude(re_, -im_);
    }
    QSqrt2 norm_squared() const {
        if (im_.is_zero()) {
            return re_ * re_;
        }
        return re_ * re_ + im_ * im_;
    }

    Amplitude &operator+=(const Amplitude &other) {
        re_ += other.re_;
        im_ += other.im_;
        return *this;
    }
    Amplitude &operator-=(const Amplitude &other) {
        re_ -= other.re_;
        im_ -= other.im_;
        return *this;
    }
    Amplitude operator-() const {
        return Amplitude(-re_, -im_);
    }
    friend Amplitude operator+(Amplitude x, const Amplitude &y) {
        x += y;
        return x;
    }
    friend Amplitude operator-(Amplitude x, const Amplitude &y) {
        x -= y;
        return x;
    }
    friend Amplitude operator*(const Amplitude &x, const Amplitude &y) {
        if (y.is_real()) {
            return Amplitude(x.re_ * y.re_, x.im_.is_zero() ? QSqrt2() : x.im_ * y.re_);
        }
        if (x.is_real()) {
            return Amplitude(x.re_ * y.re_, x.re_ * y.im_);
        }
        return Amplitude(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
    }
    friend bool operator==(const Amplitude &x, const Amplitude &y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }

   private:
    QSqrt2 re_;
    QSqrt2 im_;
};

/// Human-readable rendering used in diagnostics, e.g. "(1/2 - 1/2 r2) + (1 r2) i".
std::string to_string(const QSqrt2 &x);
std::string to_string(const Amplitude &x);

}  // namespace counterlab

#endif
