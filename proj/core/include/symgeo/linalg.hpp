#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace symgeo {

using Int = boost::multiprecision::cpp_int;

/* Dense integer matrix, row major.  Entries are arbitrary precision:
 * elimination can blow up intermediate entries even when the input is
 * a handful of small numbers. */
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /* row[dst] += f * row[src], and the column analogue */
  void add_row(std::size_t dst, std::size_t src, const Int& f);
  void add_col(std::size_t dst, std::size_t src, const Int& f);
  void negate_row(std::size_t r);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct SmithForm {
  /* positive, each divides the next; size == rank */
  std::vector<Int> invariant_factors;
  std::size_t rank = 0;
  std::size_t rows = 0, cols = 0;

  bool operator==(const SmithForm&) const = default;
};

/* Diagonalization over Z by row/column reduction.  Works for any shape,
 * including matrices with a zero dimension. */
SmithForm smith_normal_form(const IntMatrix& a);

/* gcd of all k x k minors, 0 if they all vanish, 1 for k == 0.
 * Deliberately brute force and independent of smith_normal_form: the two
 * are cross-checked against each other through the identity
 * d_1 * ... * d_k == determinant_divisor(a, k). */
Int determinant_divisor(const IntMatrix& a, std::size_t k);

/* Finitely generated abelian group in normal form: free rank plus torsion
 * coefficients t_1 | t_2 | ... with every t_i > 1. */
struct AbelianInvariants {
  long long rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  /* "0", "Z", "Z^3", "Z^2 + Z/2 + Z/4", ... */
  std::string to_string() const;

  bool operator==(const AbelianInvariants&) const = default;
};

/* Cokernel of the integer map whose relation matrix is a, i.e. the quotient
 * of Z^cols by the row space.  rank = cols - rank(a); torsion = invariant
 * factors greater than 1. */
AbelianInvariants cokernel_invariants(const IntMatrix& a);

}  // namespace symgeo
