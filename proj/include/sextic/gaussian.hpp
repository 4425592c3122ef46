#pragma once

#include "sextic/rational.hpp"

#include <string>
#include <string_view>

namespace sextic {

/// Element of Q(i) stored as a pair of rationals.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long n) : re_(n) {}             // NOLINT(google-explicit-constructor)
  Gaussian(int n) : re_(n) {}              // NOLINT(google-explicit-constructor)
  Gaussian(const Rational& r) : re_(r) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Parses forms like "3", "-2/5", "4i", "-i", "2-i", "1-3i", "-3+2i".
  static Gaussian parse(std::string_view text);
  static Gaussian i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  Gaussian conjugate() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const;

  Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const Gaussian& a) { return a.is_zero(); }
inline Gaussian conj(const Gaussian& a) { return a.conjugate(); }
inline Gaussian exact_div(const Gaussian& a, const Gaussian& b) { return a / b; }

}  // namespace sextic
