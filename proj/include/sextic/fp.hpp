#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sextic {

/// Element of a prime field GF(p) with p < 2^63.
///
/// The modulus is not stored per element: it is the modulus of the innermost
/// live ModulusScope on the calling thread. Each modular task opens its own
/// scope, so tasks running on different threads may use different primes.
class Fp {
 public:
  Fp() = default;
  Fp(long long n);  // NOLINT(google-explicit-constructor)
  Fp(long n) : Fp(static_cast<long long>(n)) {}  // NOLINT(google-explicit-constructor)
  Fp(int n) : Fp(static_cast<long long>(n)) {}   // NOLINT(google-explicit-constructor)

  static Fp from_raw(std::uint64_t v) {
    Fp r;
    r.v_ = v;
    return r;
  }
  static std::uint64_t modulus() { return modulus_; }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (modulus_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % modulus_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus_ - v_); }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

  std::string str() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  friend class ModulusScope;
  std::uint64_t v_ = 0;
  static thread_local std::uint64_t modulus_;
};

/// RAII guard selecting the prime for Fp arithmetic on this thread.
class ModulusScope {
 public:
  explicit ModulusScope(std::uint64_t p);
  ~ModulusScope() { Fp::modulus_ = previous_; }
  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  std::uint64_t previous_;
};

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline Fp conj(const Fp& a) { return a; }
inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }

bool is_prime_u64(std::uint64_t n);

}  // namespace sextic
