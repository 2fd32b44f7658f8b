#include "chebop/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace chebop {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_scalar(const Rational& s) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? s : Rational(0))) return false;
  return true;
}

bool RationalMatrix::is_identity() const { return is_scalar(1); }

RationalMatrix RationalMatrix::vstack(const RationalMatrix& below) const {
  if (below.cols_ != cols_ && rows_ != 0) throw std::invalid_argument("vstack column mismatch");
  RationalMatrix r(rows_ + below.rows_, below.cols_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), r.data_.begin() + data_.size());
  return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

RationalMatrix operator*(const Rational& s, RationalMatrix a) {
  for (auto& v : a.data_) v *= s;
  return a;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "(";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << to_string((*this)(i, j));
    os << ")";
  }
  os << ")";
  return os.str();
}

RationalMatrix matrix_power(const RationalMatrix& m, unsigned e) {
  RationalMatrix r = RationalMatrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

RrefResult rref(RationalMatrix m) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  RationalMatrix m(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors[i].size(); ++j) m(i, j) = vectors[i][j];
  return rref(std::move(m)).rank();
}

// --- IncrementalSolver ----------------------------------------------------

bool IncrementalSolver::add_equation(SparseRow coeffs, Rational rhs) {
  ++equations_;
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->first >= unknowns_) throw std::out_of_range("IncrementalSolver: unknown index");
    it = sgn(it->second) == 0 ? coeffs.erase(it) : std::next(it);
  }
  // Eliminate existing pivots left to right; stored rows only touch columns
  // at or after their own pivot, so the scan always moves forward.
  auto it = coeffs.begin();
  while (it != coeffs.end()) {
    auto pivot = rows_.find(it->first);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    const Rational f = it->second;
    const std::size_t col = it->first;
    for (const auto& [c, v] : pivot->second.coeffs) {
      auto [slot, inserted] = coeffs.emplace(c, 0);
      slot->second -= f * v;
    }
    rhs -= f * pivot->second.rhs;
    // Drop cancelled entries; the pivot column itself is now zero.
    for (auto k = coeffs.lower_bound(col); k != coeffs.end();) {
      k = sgn(k->second) == 0 ? coeffs.erase(k) : std::next(k);
    }
    it = coeffs.upper_bound(col);
  }
  if (coeffs.empty()) {
    if (sgn(rhs) != 0 && consistent_) {
      consistent_ = false;
      inconsistency_ = abs(rhs);
    }
    return consistent_;
  }
  const std::size_t lead = coeffs.begin()->first;
  const Rational inv = 1 / coeffs.begin()->second;
  for (auto& [c, v] : coeffs) v *= inv;
  rhs *= inv;
  rows_.emplace(lead, Row{std::move(coeffs), std::move(rhs)});
  return consistent_;
}

std::vector<std::size_t> IncrementalSolver::free_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < unknowns_; ++i)
    if (!rows_.count(i)) out.push_back(i);
  return out;
}

std::optional<RationalVector> IncrementalSolver::solve() const {
  if (!consistent_) return std::nullopt;
  RationalVector x(unknowns_);
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Rational v = it->second.rhs;
    for (const auto& [c, a] : it->second.coeffs)
      if (c != it->first) v -= a * x[c];
    x[it->first] = v;
  }
  return x;
}

}  // namespace chebop
