#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vdlab {

// Exponent vectors live in a fixed-width array; rings beyond kMaxVars are
// rejected at construction. Everything in this project needs at most
// k <= 5 ring variables plus one auxiliary localization variable.
inline constexpr int kMaxVars = 8;

enum class MonomialOrder { degrevlex, lex };

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);

  static Monomial one(int nvars) { return Monomial(nvars); }

  int nvars() const { return nvars_; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  unsigned exponent(int i) const { return e_[static_cast<size_t>(i)]; }
  void set_exponent(int i, unsigned v);

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Requires this->divides(o) == false ... caller divides o by *this.
  Monomial divide_into(const Monomial& num) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && deg_ == o.deg_ && e_ == o.e_;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t deg_ = 0;
};

// -1 / 0 / +1 with compare(a, b) > 0 iff a > b in the given order.
// degrevlex: higher total degree wins; ties broken by the smaller exponent
// at the last differing position. lex: first differing position wins.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace vdlab
