#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace sextic {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "n", "-n" or "n/d" in decimal.
  static Rational parse(std::string_view text);

  const mpq_class& get() const { return v_; }
  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline Rational conj(const Rational& a) { return a; }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

/// Integer helpers shared by the modular code.
Integer lcm_of_denominators(const Rational& a, const Integer& acc);
std::uint64_t mod_u64(const Integer& n, std::uint64_t p);

}  // namespace sextic
