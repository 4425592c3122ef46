#include "sextic/mpoly.hpp"

#include <cctype>

namespace sextic {

std::string Monomial::str(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    int e = (*this)[static_cast<int>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

void monomials_rec(int n, int var, int remaining, Monomial cur, std::vector<Monomial>& out) {
  if (var == n - 1) {
    out.push_back(cur.with(var, remaining));
    return;
  }
  for (int e = remaining; e >= 0; --e) monomials_rec(n, var + 1, remaining - e, cur.with(var, e), out);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n <= 0) return out;
  monomials_rec(n, 0, d, Monomial(), out);
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const RingPtr& ring) : s_(s), ring_(ring) {}

  QMPoly parse() {
    std::vector<Term<Rational>> terms;
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip_ws();
      terms.push_back(parse_term(sign));
    }
    return QMPoly::from_terms(ring_, std::move(terms));
  }

 private:
  Term<Rational> parse_term(int sign) {
    Rational coeff(sign);
    bool have_factor = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff *= parse_number();
      have_factor = true;
    }
    Monomial m;
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          coeff *= parse_number();
          have_factor = true;
          continue;
        }
      }
      int var = match_variable();
      if (var < 0) break;
      int e = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      }
      m = m * Monomial::var(var, e);
      have_factor = true;
    }
    if (!have_factor) fail("expected a term");
    return {m, coeff};
  }

  Rational parse_number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  int match_variable() {
    int best = -1;
    std::size_t best_len = 0;
    for (int i = 0; i < ring_->nvars(); ++i) {
      const std::string& n = ring_->names[static_cast<std::size_t>(i)];
      if (n.size() > best_len && s_.substr(pos_, n.size()) == n) {
        best = i;
        best_len = n.size();
      }
    }
    if (best >= 0) pos_ += best_len;
    return best;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

QMPoly parse_mpoly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace sextic
