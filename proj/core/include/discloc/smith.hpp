#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "discloc/verdict.hpp"

namespace discloc {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix; rows are relations, columns generators.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> cells;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), cells(r * c) {}

  static IntMatrix identity(std::size_t n);

  Integer& operator()(std::size_t i, std::size_t j) { return cells[i * cols + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// D = U·A·V with D diagonal, d_1 | d_2 | ..., all d_i ≥ 0. The inverses of
/// U and V are tracked alongside so unimodularity can be checked by
/// multiplication.
struct SmithForm {
  IntMatrix u, u_inv;
  IntMatrix d;
  IntMatrix v, v_inv;

  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Re-multiplies the transforms: U·A·V = D, U·U⁻¹ = I, V·V⁻¹ = I, D diagonal
/// with the divisibility chain.
Verdict validate_smith(const IntMatrix& a, const SmithForm& s);

/// Invariant factors of Z^cols / rowspace(A): every d_i > 1 in order, then
/// one 0 per free summand. Empty means the trivial group.
std::vector<Integer> invariant_factors(const SmithForm& s);

/// Order of the presented group; 0 when it is infinite.
Integer group_order(const std::vector<Integer>& factors);

/// Incremental Hermite basis of a full-rank lattice L with e·Z^n ⊆ L.
/// Entries stay reduced below their column pivot, so machine integers
/// suffice while relations stream in.
class ExponentLattice {
 public:
  ExponentLattice(std::size_t n, std::int64_t exponent);

  void add(std::vector<std::int64_t> row);
  std::size_t dimension() const { return n_; }

  /// Upper-triangular basis, one row per column, positive pivots.
  IntMatrix basis() const;

 private:
  // Hermite reduction of rows 0..j after pivot j changed.
  void reduce_above(std::size_t j);

  std::size_t n_;
  std::int64_t exponent_;
  std::vector<std::vector<std::int64_t>> rows_;
};

}  // namespace discloc
