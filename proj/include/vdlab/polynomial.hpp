#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vdlab/monomial.hpp"
#include "vdlab/rational.hpp"

namespace vdlab {

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Term {
  Monomial mon;
  Rat coeff;
};

// Sparse multivariate polynomial over Q. Canonical form: terms sorted in
// descending degrevlex order, no zero coefficients, coefficients reduced.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial from_term(const Monomial& m, const Rat& c);
  // Builds canonical form from an arbitrary term list (merges duplicates).
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mon.is_one(); }
  bool is_one() const;
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  const Term& leading_term(MonomialOrder order = MonomialOrder::degrevlex) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const Rat& c) const;
  Polynomial times_term(const Monomial& m, const Rat& c) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_size_equal(o);
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Deterministic total order on polynomials of one ring (for canonical
  // generator serialization; not a term order).
  static int cmp(const Polynomial& a, const Polynomial& b);

  Rat evaluate(const std::vector<Rat>& point) const;

  // Strips rational content: result has integer coprime coefficients and a
  // positive leading coefficient. Zero maps to zero.
  Polynomial primitive_part() const;
  Polynomial monic(MonomialOrder order = MonomialOrder::degrevlex) const;

  std::string to_string() const;
  static Polynomial parse(const std::string& text, int nvars);

  friend Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

 private:
  bool terms_size_equal(const Polynomial& o) const;
  void check_ring(const Polynomial& o) const;

  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Exact division; throws InexactDivision when den does not divide num.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

}  // namespace vdlab
