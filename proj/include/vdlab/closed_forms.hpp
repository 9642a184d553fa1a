#pragma once

#include <vector>

#include "vdlab/hilbert_series.hpp"
#include "vdlab/index_tuple.hpp"
#include "vdlab/unipoly.hpp"

namespace vdlab {

// Two transcriptions of the Eagon-Northcott numerator are shipped because
// the source formulas are not mutually consistent; the Groebner oracle
// adjudicates and zero_anchored is the default (it reproduces the m = k+1
// closed form and matches the oracle on regular instances).
enum class ENConvention { zero_anchored, as_stated };

// One resolution term: subsequence J' (entry values), marker multiset
// (marker indices with multiplicity), attached sign, resulting t-exponent.
struct ENTerm {
  std::vector<int> subseq;
  std::vector<int> markers;
  int sign = 1;
  long exponent = 0;
};

// Requires i_0 = 0 and k <= m <= 2k-1.
std::vector<ENTerm> en_terms(const IndexTuple& t, ENConvention conv);
UniPoly hilbert_numerator_en(const IndexTuple& t, ENConvention conv);

struct InsufficientVanishing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// T^(c)(1) * (-1)^c / c! for T divisible by (1-t)^c; throws
// InsufficientVanishing when T does not vanish at 1 to order c.
Int degree_from_numerator(const UniPoly& T, int codim);

// m = k+1 closed forms. Require i_0 = 0, m = k+1.
HilbertSeries hilbert_series_kk1(const IndexTuple& t);
Int degree_kk1(const IndexTuple& t);

// Degree as the coefficient of t^{m-k+1} in
// prod_{j=1}^{m-1}(1 + i_j t) / prod_{j=1}^{k-1}(1 + j t). Requires i_0 = 0.
Int degree_gtp(const IndexTuple& t);

// u_j series of the formula above (exact, order terms inclusive).
std::vector<Rat> gtp_u_coefficients(int k, int order);

// Conjectural m = k+1 closed forms on the BC side. Callers must surface the
// conjectural flag; these are predictions under test, not oracle truth.
struct ConjecturalSeries {
  HilbertSeries series;
  bool conjectural = true;
};
struct ConjecturalDegree {
  Int value;
  bool conjectural = true;
};

ConjecturalSeries hilbert_series_bc_conj(const IndexTuple& t);
ConjecturalDegree degree_bc_conj(const IndexTuple& t);

}  // namespace vdlab
