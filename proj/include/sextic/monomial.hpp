#pragma once

#include "sextic/errors.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sextic {

constexpr int kMaxVars = 8;
constexpr int kMaxExponent = 32767;

/// Exponent vector of up to eight variables packed 16 bits per variable into a
/// 128-bit word. Variable 0 occupies the most significant lane, so integer
/// comparison of the packed word is lexicographic comparison with x0 > x1 > ... .
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> e) {
    if (e.size() > kMaxVars) throw ArithmeticError("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m = m.with(static_cast<int>(i), e[i]);
    return m;
  }
  static Monomial var(int i, int e = 1) { return Monomial().with(i, e); }

  int operator[](int i) const { return static_cast<int>((bits_ >> shift(i)) & 0xffff); }
  Monomial with(int i, int e) const {
    if (e < 0 || e > kMaxExponent) throw ArithmeticError("exponent out of range");
    Monomial m = *this;
    m.degree_ = static_cast<std::uint32_t>(m.degree_ - (*this)[i] + e);
    m.bits_ = (m.bits_ & ~(Word{0xffff} << shift(i))) | (static_cast<Word>(e) << shift(i));
    return m;
  }

  int degree() const { return degree_; }
  using Word = unsigned __int128;
  Word bits() const { return bits_; }
  bool is_one() const { return bits_ == 0; }

  friend Monomial operator*(Monomial a, Monomial b) {
    Monomial r;
    r.bits_ = a.bits_ + b.bits_;
    if ((r.bits_ & kGuard) != 0) throw ArithmeticError("exponent overflow");
    r.degree_ = static_cast<std::uint32_t>(a.degree_ + b.degree_);
    return r;
  }
  /// Requires divides(b, a).
  friend Monomial operator/(Monomial a, Monomial b) {
    Monomial r;
    r.bits_ = a.bits_ - b.bits_;
    r.degree_ = static_cast<std::uint32_t>(a.degree_ - b.degree_);
    return r;
  }
  /// True if this monomial divides b.
  bool divides(Monomial b) const { return ((b.bits_ - bits_) & kGuard) == 0 && b.degree_ >= degree_ && lanes_le(b); }
  bool coprime(Monomial b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if ((*this)[i] != 0 && b[i] != 0) return false;
    return true;
  }
  friend Monomial lcm(Monomial a, Monomial b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = a[i] > b[i] ? a[i] : b[i];
      if (e != 0) r = r.with(i, e);
    }
    return r;
  }

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

  std::string str(std::span<const std::string> names) const;

 private:
  static constexpr Word kGuard = (static_cast<Word>(0x8000800080008000ULL) << 64) | 0x8000800080008000ULL;
  static constexpr int shift(int i) { return 16 * (kMaxVars - 1 - i); }
  bool lanes_le(Monomial b) const {
    // Subtraction borrows can hide a lane underflow only when a higher lane
    // exactly absorbs it; the explicit check keeps divides() exact.
    for (int i = 0; i < kMaxVars; ++i)
      if ((*this)[i] > b[i]) return false;
    return true;
  }
  Word bits_ = 0;
  std::uint32_t degree_ = 0;
};

/// Term order on monomials: lex, degree reverse lex, or a two-block product of
/// degrevlex orders whose first block consists of variables 0..block-1.
struct MonomialOrder {
  enum class Kind { Lex, DegRevLex, Block };
  Kind kind = Kind::DegRevLex;
  int block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder block_order(int first_block) { return {Kind::Block, first_block}; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(Monomial a, Monomial b) const {
    if (a.bits() == b.bits()) return 0;
    switch (kind) {
      case Kind::Lex:
        return a.bits() > b.bits() ? 1 : -1;
      case Kind::DegRevLex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return revlex(a.bits(), b.bits());
      case Kind::Block: {
        const Word all = ~Word{0};
        const Word hi_mask = block <= 0 ? 0 : (block >= kMaxVars ? all : all << (16 * (kMaxVars - block)));
        Word ah = a.bits() & hi_mask, bh = b.bits() & hi_mask;
        if (ah != bh) {
          int da = lane_sum(ah), db = lane_sum(bh);
          if (da != db) return da > db ? 1 : -1;
          return revlex(ah, bh);
        }
        Word al = a.bits() & ~hi_mask, bl = b.bits() & ~hi_mask;
        int da = lane_sum(al), db = lane_sum(bl);
        if (da != db) return da > db ? 1 : -1;
        return revlex(al, bl);
      }
    }
    return 0;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  using Word = Monomial::Word;
  static int lane_sum(Word x) {
    int s = 0;
    for (; x != 0; x >>= 16) s += static_cast<int>(x & 0xffff);
    return s;
  }
  // a > b in reverse lex iff the last differing variable has the smaller exponent in a.
  static int revlex(Word a, Word b) {
    Word x = a ^ b;
    auto lo = static_cast<std::uint64_t>(x);
    int bit = lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
    int lane = bit / 16;
    auto ea = static_cast<unsigned>((a >> (16 * lane)) & 0xffff), eb = static_cast<unsigned>((b >> (16 * lane)) & 0xffff);
    return ea < eb ? 1 : -1;
  }
};

/// All exponent vectors of total degree d in n variables, in lex order
/// (x0^d first). For forms this is the graded-lex monomial list.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace sextic
