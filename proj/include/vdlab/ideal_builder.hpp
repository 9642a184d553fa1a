#pragma once

#include <string>
#include <vector>

#include "vdlab/index_tuple.hpp"
#include "vdlab/polynomial.hpp"
#include "vdlab/symmetric.hpp"

namespace vdlab {

enum class IdealFlavor { a_schur, bc_reduced, coarse_minor, confluent };

std::string flavor_name(IdealFlavor f);

struct Generator {
  Polynomial poly;              // sign-canonicalized
  int sign = 1;                 // raw construction sign
  std::vector<int> subsequence; // the J it came from (tuple entry values)
};

struct GeneratorSet {
  int nvars = 0;
  IdealFlavor flavor = IdealFlavor::a_schur;
  std::vector<Generator> gens;
  bool rescalable = false;  // gap gcd > 1; builders run but tag the result

  std::vector<Polynomial> polys() const;
};

// Schur polynomials of the k-subsequences of I. Minimal mode keeps only the
// subsequences containing i_0 and requires i_0 == 0.
GeneratorSet build_ideal_A(const IndexTuple& t, bool minimal = false);

// Reduced Schur polynomials of the k-subsequences, duplicates collapsed.
GeneratorSet build_ideal_BC(const IndexTuple& t);

// m x k matrix with row r = (h_{i_r-(k-1)}, ..., h_{i_r}).
std::vector<std::vector<Polynomial>> build_H_matrix(const IndexTuple& t);

// All k x k minors of M_{k;I} in the x-power presentation (row r, column c
// entry x_c^{i_r}); generates the coarse ideal.
GeneratorSet build_coarse_minors(const IndexTuple& t);

// All k x k minors of the confluent matrix over variables x_1..x_s whose
// column block for part lambda_j is (x_j^i, i x_j^i, ..., i^{lambda_j - 1} x_j^i)
// evaluated at the rows i in I.
GeneratorSet build_confluent_ideal(const IndexTuple& t, const PartitionSpec& lambda);

}  // namespace vdlab
