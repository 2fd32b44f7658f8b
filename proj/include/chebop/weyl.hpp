#pragma once

// Root-system data for the rank <= 2 algebras A1, A2, C2, G2 and exact Weyl
// group machinery. Everything lives in fundamental-weight coordinates.

#include "chebop/exact.hpp"

#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chebop {

enum class AlgebraId { A1, A2, C2, G2 };

inline constexpr std::array<AlgebraId, 4> kAllAlgebras = {AlgebraId::A1, AlgebraId::A2,
                                                          AlgebraId::C2, AlgebraId::G2};
inline constexpr std::array<AlgebraId, 3> kRankTwoAlgebras = {AlgebraId::A2, AlgebraId::C2,
                                                              AlgebraId::G2};

std::string_view name(AlgebraId id);
std::optional<AlgebraId> parse_algebra(std::string_view text);

/// Thrown when Weyl data turns out to be inconsistent (closure blow-up,
/// non-terminating reflection walks).
class WeylDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer vector in the fundamental-weight basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<long> coords);

  static Weight zero(int rank) { return Weight(std::vector<BigInt>(rank, 0)); }
  static Weight fundamental(int rank, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  const BigInt& operator[](int i) const { return coords_[i]; }
  BigInt& operator[](int i) { return coords_[i]; }
  const std::vector<BigInt>& coords() const { return coords_; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(const Weight& a);

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

  /// "(1,0)" style rendering.
  std::string str() const;

 private:
  std::vector<BigInt> coords_;
};

/// Small dense integer matrix (row-major).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const BigInt& operator()(int r, int c) const { return data_[r * cols_ + c]; }
  BigInt& operator()(int r, int c) { return data_[r * cols_ + c]; }

  BigInt determinant() const;
  Weight apply(const Weight& w) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b) { return a.data_ < b.data_; }

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// A Weyl group element: its action on weight coordinates plus a shortest
/// word in the generators. The word {1, 2} means w_1 w_2 (w_2 acts first).
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;

  Weight apply(const Weight& w) const { return matrix.apply(w); }
  bool is_identity() const { return matrix == IntMatrix::identity(matrix.rows()); }
  std::string word_str() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
};

struct AlgebraSpec {
  AlgebraId id;
  int rank;
  IntMatrix cartan;
  std::vector<int> invariant_degrees;
  /// |W| / |orbit(lambda_i)| per fundamental weight.
  std::vector<int> stabilizer_normalizers;
  /// Weighted degree used to order dominant weights; strictly positive on
  /// every simple root.
  std::vector<long> grading;
  /// Order of w_1 w_2 (2 for A1 where it degenerates to w_1).
  int coxeter_order;
  int group_order;
};

const AlgebraSpec& algebra_spec(AlgebraId id);

struct OrbitData {
  Weight representative;
  /// Distinct Weyl images, representative first, then in discovery order.
  std::vector<Weight> elements;
  long stabilizer_order;

  bool contains(const Weight& w) const;
};

struct DominantResult {
  Weight representative;
  WeylElement witness;
};

IntMatrix cartan_matrix(AlgebraId id);

/// The simple reflection w_i (1-based) as a matrix on weight coordinates.
WeylElement generator_action(AlgebraId id, int i);

/// Breadth-first closure of the generators; throws WeylDataError when more
/// than `cap` elements appear.
std::vector<WeylElement> close_group(const std::vector<WeylElement>& generators, std::size_t cap = 64);

/// Cached Weyl group of a built-in algebra, identity first.
const std::vector<WeylElement>& weyl_group(AlgebraId id);

OrbitData orbit(AlgebraId id, const Weight& n);

DominantResult dominant_representative(AlgebraId id, const Weight& n);

/// Weighted degree of a weight under the algebra's grading.
BigInt grade(AlgebraId id, const Weight& n);

/// Simple root alpha_i in weight coordinates (row i of the Cartan matrix).
Weight simple_root(AlgebraId id, int i);

}  // namespace chebop
