#pragma once

#include <vector>

#include "vdlab/polynomial.hpp"

namespace vdlab {

// Strictly increasing exponent sequence (j_1 < ... < j_k), one entry per
// ring variable.
struct ExponentSet {
  int k = 0;
  std::vector<int> values;

  ExponentSet(int k_, std::vector<int> v);
  // Shifted set (0, j_2 - j_1, ..., j_k - j_1).
  ExponentSet reduced() const;
  // Partition |values| - staircase, weakly decreasing.
  std::vector<int> partition() const;
};

// Canonical coefficient-positive polynomial together with the sign that the
// raw determinantal construction produced: raw = sign * poly.
struct SignedPoly {
  Polynomial poly;
  int sign = 1;
};

// Sum of all degree-d monomials in k variables; 0 for d < 0, 1 for d == 0.
Polynomial complete_h(int d, int k);

// det of the matrix with rows x^0, x^1, ..., x^{k-1} (increasing powers top
// to bottom), columns x_1..x_k. Equals prod_{i<j} (x_j - x_i).
Polynomial vandermonde_det(int k);

// det(x_c^{j_r}) / vandermonde_det, rows in increasing j order.
SignedPoly schur_bialternant(const ExponentSet& J);

// det of the k x k matrix with row r = (h_{j_r-(k-1)}, ..., h_{j_r}).
SignedPoly schur_jacobi_trudi(const ExponentSet& J);

// Schur polynomial of the shifted set (0, j_2-j_1, ..., j_k-j_1).
SignedPoly reduced_schur(const ExponentSet& J);

// Schur polynomial of a partition (weakly decreasing, parts >= 0, at most k
// of them) in k variables.
SignedPoly schur_of_partition(const std::vector<int>& partition, int k);

// Determinant of a square matrix whose entries each have at most one term.
// Leibniz expansion; used for bialternants, coarse minors and confluent
// minors where every entry is a monomial.
Polynomial det_single_term(const std::vector<std::vector<Polynomial>>& m);

// Fraction-free Gaussian elimination (Bareiss) over the polynomial ring.
Polynomial det_bareiss(std::vector<std::vector<Polynomial>> m);

// Cofactor expansion with subset memoization; independent cross-check path.
Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m);

}  // namespace vdlab
