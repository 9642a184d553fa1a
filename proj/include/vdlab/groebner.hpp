#pragma once

#include <optional>
#include <vector>

#include "vdlab/hilbert_series.hpp"
#include "vdlab/polynomial.hpp"

namespace vdlab {

enum class GbStatus { ok, capped_pairs, capped_degree };

// Resource caps. Exceeding one yields an explicit capped status, never a
// silently wrong basis.
struct GbLimits {
  long max_pairs = 500000;
  unsigned max_degree = 400;

  // Reads VDLAB_MAX_PAIRS / VDLAB_MAX_DEGREE when set.
  static GbLimits from_env();
};

struct GroebnerBasis {
  int nvars = 0;
  MonomialOrder order = MonomialOrder::degrevlex;
  GbStatus status = GbStatus::ok;
  std::vector<Polynomial> basis;  // reduced, monic, ascending leading terms

  bool ok() const { return status == GbStatus::ok; }
  bool is_unit() const;
  bool is_zero_ideal() const { return basis.empty(); }
};

// Reduced Groebner basis by Buchberger's algorithm. Pair selection: minimal
// lcm degree, ties broken by lexicographic pair index.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens,
                             MonomialOrder order = MonomialOrder::degrevlex,
                             const GbLimits& limits = GbLimits{});

// Remainder with no term divisible by a basis leading term. f is in the
// ideal iff the result is zero (for an ok basis).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Krull dimension of the quotient ring: the largest cardinality of a set S
// of variables such that no leading-term generator is supported inside S.
// Unit ideal: -1.
int krull_dimension(const GroebnerBasis& gb);

// Hilbert series of ring/LT(ideal) == Hilbert series of ring/ideal, in raw
// form over (1-t)^nvars; the zero series for the unit ideal.
HilbertSeries hilbert_series_quotient(const GroebnerBasis& gb);

// P(1) with the series written as P(t)/(1-t)^dim, P(1) != 0; 0 for the
// unit ideal.
Int degree_of_quotient(const GroebnerBasis& gb);

enum class Arrangement { coordinate, braid, bc };

// x_1...x_k, prod_{i<j}(x_i - x_j), or their product.
Polynomial arrangement_product(int nvars, Arrangement a);

struct SaturationResult {
  bool empty_off_arrangement = false;
  GroebnerBasis witness;  // basis in nvars+1 variables (last = auxiliary y)
  GbStatus status = GbStatus::ok;
};

// Adjoins one variable y and the generator 1 - y*P where P is the
// arrangement product, then tests 1 in the resulting ideal. Decides whether
// the variety lies inside the arrangement.
SaturationResult saturate_off_arrangement(const std::vector<Polynomial>& gens,
                                          Arrangement a,
                                          const GbLimits& limits = GbLimits{});

enum class Verdict { yes, no, inconclusive };

// True iff codim(fs) == |fs|. Requires homogeneous non-constant inputs.
Verdict is_regular_sequence(const std::vector<Polynomial>& fs,
                            const GbLimits& limits = GbLimits{});

}  // namespace vdlab
