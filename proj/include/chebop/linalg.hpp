#pragma once

// Exact linear algebra over the rationals. No pivot tolerances anywhere.

#include "chebop/exact.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chebop {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector apply(const RationalVector& v) const;
  RationalMatrix transpose() const;
  bool is_identity() const;
  bool is_scalar(const Rational& s) const;

  /// Stack `below` under this matrix.
  RationalMatrix vstack(const RationalMatrix& below) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix matrix_power(const RationalMatrix& m, unsigned e);

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(RationalMatrix m);

/// Basis of {v : m v = 0}: one vector per free column of rref(m), in
/// increasing column order, with a 1 in that free column.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Rank of a list of vectors.
std::size_t rank_of(const std::vector<RationalVector>& vectors);

/// Sparse linear system A x = b built one equation at a time. Rows are kept
/// in echelon form keyed by pivot column; inconsistency is detected as soon
/// as an equation reduces to 0 = c with c != 0.
class IncrementalSolver {
 public:
  using SparseRow = std::map<std::size_t, Rational>;

  explicit IncrementalSolver(std::size_t unknowns) : unknowns_(unknowns) {}

  /// Returns false if the equation made the system inconsistent.
  bool add_equation(SparseRow coeffs, Rational rhs);

  bool consistent() const { return consistent_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return equations_; }
  std::vector<std::size_t> free_variables() const;
  /// |rhs| left over from the first inconsistent equation.
  const Rational& inconsistency() const { return inconsistency_; }

  /// A solution with every free variable set to zero; nullopt if inconsistent.
  std::optional<RationalVector> solve() const;

 private:
  struct Row {
    SparseRow coeffs;  // leading entry (the pivot) is 1
    Rational rhs;
  };

  std::size_t unknowns_;
  std::size_t equations_ = 0;
  std::map<std::size_t, Row> rows_;
  bool consistent_ = true;
  Rational inconsistency_;
};

}  // namespace chebop
