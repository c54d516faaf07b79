#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gbsn/rational.hpp"

namespace gbsn {

using VecQ = std::vector<Rat>;

// Dense integer matrix, row-major, possibly rectangular.  Used for graph
// inclusion matrices and all Hermite-normal-form work.
class MatZ {
 public:
  MatZ() : rows_(0), cols_(0) {}
  MatZ(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Int(0)) {}

  static MatZ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  MatZ operator*(const MatZ& rhs) const;
  bool operator==(const MatZ& rhs) const = default;

  void swap_cols(int a, int b);
  void negate_col(int j);
  // col_j += c * col_i
  void addmul_col(int j, int i, const Int& c);

  // Exact determinant by fraction-free (Bareiss) elimination; square only.
  Int det() const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// Dense square rational matrix.
class MatQ {
 public:
  MatQ() : n_(0) {}
  explicit MatQ(int n) : n_(n), e_(size_t(n) * n, Rat(0)) {}

  static MatQ identity(int n);
  static MatQ from_int(const MatZ& m);  // square MatZ -> MatQ

  int dim() const { return n_; }

  Rat& at(int i, int j) { return e_[size_t(i) * n_ + j]; }
  const Rat& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }

  MatQ operator*(const MatQ& rhs) const;
  MatQ operator+(const MatQ& rhs) const;
  MatQ operator-(const MatQ& rhs) const;
  MatQ operator*(const Rat& c) const;
  bool operator==(const MatQ& rhs) const = default;

  VecQ apply(const VecQ& v) const;
  MatQ transpose() const;

  // Exact determinant: clears denominators and runs integer Bareiss.
  Rat det() const;

  // Exact inverse; throws SingularError when det == 0.
  MatQ inverse() const;

  MatQ pow(const Int& k) const;  // k may be negative

  bool is_identity() const;
  bool is_integral() const;
  bool is_symmetric() const;

  // Smallest d >= 1 with d*M integral, and the integer matrix d*M.
  Int common_denominator() const;
  MatZ scaled_integral(const Int& d) const;
  MatZ to_int() const;  // requires is_integral()

  // Canonical key, usable for hashing in closure enumeration.
  std::string to_key() const;
  std::string to_string() const;

 private:
  int n_;
  std::vector<Rat> e_;
};

// Symmetric rational matrix (Gram matrix of a quadratic form).  The
// constructor enforces symmetry.
class SymQ {
 public:
  SymQ() = default;
  explicit SymQ(MatQ m);

  static SymQ identity(int n) { return SymQ(MatQ::identity(n)); }

  int dim() const { return m_.dim(); }
  const MatQ& mat() const { return m_; }
  const Rat& at(int i, int j) const { return m_.at(i, j); }

  bool operator==(const SymQ& rhs) const = default;

 private:
  MatQ m_;
};

// Exact positive-definiteness test: rational LDL^T elimination on the
// diagonal; S is PD iff every pivot is positive.  A zero diagonal pivot
// (with or without a nonzero residual row) already refutes definiteness.
bool is_positive_definite(const SymQ& s);

MatQ matq_from_rows(int n, const std::vector<std::vector<long>>& rows);
MatQ matq_scalar(int n, const Rat& c);

VecQ vec_add(const VecQ& a, const VecQ& b);
VecQ vec_neg(const VecQ& a);
bool vec_is_zero(const VecQ& a);
std::string vec_to_string(const VecQ& v);

}  // namespace gbsn
