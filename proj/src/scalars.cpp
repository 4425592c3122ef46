#include "sextic/errors.hpp"
#include "sextic/fp.hpp"
#include "sextic/gaussian.hpp"
#include "sextic/rational.hpp"

#include <cctype>

namespace sextic {

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(trim(text.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(trim(text.substr(0, slash))), den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  v_ /= o.v_;
  return *this;
}

Integer lcm_of_denominators(const Rational& a, const Integer& acc) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), acc.get_mpz_t(), a.get().get_den_mpz_t());
  return r;
}

std::uint64_t mod_u64(const Integer& n, std::uint64_t p) {
  Integer r;
  Integer pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}

// ---------------------------------------------------------------- Gaussian

Gaussian Gaussian::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw ArithmeticError("inverse of zero");
  return {re_ / n, -im_ / n};
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian Gaussian::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty Gaussian rational");
  if (text.back() != 'i') return Gaussian(Rational::parse(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string_view s) -> Rational {
    s = trim(s);
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return Rational::parse(s);
  };
  if (split == std::string_view::npos) return {Rational(0), imag_of(body)};
  return {Rational::parse(body.substr(0, split)), imag_of(body.substr(split))};
}

std::string Gaussian::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im;
  if (im_.is_one()) im = "";
  else if (im_ == Rational(-1)) im = "-";
  else im = im_.str();
  if (re_.is_zero()) return im + "i";
  std::string sep = im_.sign() > 0 ? "+" : "";
  return re_.str() + sep + im + "i";
}

// ---------------------------------------------------------------- Fp

thread_local std::uint64_t Fp::modulus_ = 0;

Fp::Fp(long long n) {
  if (modulus_ == 0) throw ArithmeticError("Fp used outside a ModulusScope");
  long long m = static_cast<long long>(modulus_);
  long long r = n % m;
  if (r < 0) r += m;
  v_ = static_cast<std::uint64_t>(r);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp result = from_raw(1 % modulus_);
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw ArithmeticError("inverse of zero in GF(p)");
  // Extended Euclid on signed 128-bit values.
  __int128 a = v_, b = modulus_, x0 = 1, x1 = 0;
  while (b != 0) {
    __int128 q = a / b;
    __int128 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  __int128 m = modulus_;
  x0 %= m;
  if (x0 < 0) x0 += m;
  return from_raw(static_cast<std::uint64_t>(x0));
}

ModulusScope::ModulusScope(std::uint64_t p) : previous_(Fp::modulus_) {
  if (p < 3 || p >= (std::uint64_t{1} << 63)) throw ArithmeticError("unsupported modulus");
  Fp::modulus_ = p;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace sextic
