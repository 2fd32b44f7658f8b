#include "chebop/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace chebop {

std::string_view name(AlgebraId id) {
  switch (id) {
    case AlgebraId::A1: return "A1";
    case AlgebraId::A2: return "A2";
    case AlgebraId::C2: return "C2";
    case AlgebraId::G2: return "G2";
  }
  return "?";
}

std::optional<AlgebraId> parse_algebra(std::string_view text) {
  for (AlgebraId id : kAllAlgebras) {
    std::string_view n = name(id);
    if (text.size() == n.size() &&
        std::equal(text.begin(), text.end(), n.begin(),
                   [](char a, char b) { return std::toupper(a) == b; })) {
      return id;
    }
  }
  return std::nullopt;
}

// --- Weight ---------------------------------------------------------------

Weight::Weight(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

Weight Weight::fundamental(int rank, int i) {
  Weight w = zero(rank);
  w[i] = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::string Weight::str() const {
  std::string s = "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

// --- IntMatrix ------------------------------------------------------------

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  if (rows_ == 1) return (*this)(0, 0);
  if (rows_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  throw std::invalid_argument("determinant only implemented for rank <= 2");
}

Weight IntMatrix::apply(const Weight& w) const {
  if (w.rank() != cols_) throw std::invalid_argument("matrix/weight dimension mismatch");
  Weight r = Weight::zero(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * w[j];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k)
      for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
  return r;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix r = a;
  for (auto& v : r.data_) v = -v;
  return r;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "(";
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ")";
  }
  os << ")";
  return os.str();
}

// --- WeylElement ----------------------------------------------------------

std::string WeylElement::word_str() const {
  if (word.empty()) return "e";
  std::string s;
  for (int g : word) s += "w" + std::to_string(g);
  return s;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement r{a.matrix * b.matrix, a.word};
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  return r;
}

// --- Algebra data ---------------------------------------------------------

namespace {

AlgebraSpec make_spec(AlgebraId id) {
  switch (id) {
    case AlgebraId::A1:
      return {id, 1, IntMatrix{{2}}, {2}, {1}, {1}, 2, 2};
    case AlgebraId::A2:
      return {id, 2, IntMatrix{{2, -1}, {-1, 2}}, {2, 3}, {2, 2}, {1, 1}, 3, 6};
    case AlgebraId::C2:
      return {id, 2, IntMatrix{{2, -1}, {-2, 2}}, {2, 4}, {2, 2}, {2, 3}, 4, 8};
    case AlgebraId::G2:
      // Row 2 = (-3, 2) reproduces the orbit function with its factors of 3.
      return {id, 2, IntMatrix{{2, -1}, {-3, 2}}, {2, 6}, {2, 2}, {3, 5}, 6, 12};
  }
  throw std::invalid_argument("unknown algebra");
}

BigInt grade_with(const std::vector<long>& grading, const Weight& n) {
  BigInt g = 0;
  for (int i = 0; i < n.rank(); ++i) g += n[i] * grading[i];
  return g;
}

void check_spec(const AlgebraSpec& s) {
  for (int i = 0; i < s.rank; ++i) {
    Weight root = Weight::zero(s.rank);
    for (int k = 0; k < s.rank; ++k) root[k] = s.cartan(i, k);
    if (sgn(grade_with(s.grading, root)) <= 0)
      throw WeylDataError(std::string(name(s.id)) + ": grading is not positive on simple root " +
                          std::to_string(i + 1));
  }
}

const AlgebraSpec& spec_table(AlgebraId id) {
  static const std::array<AlgebraSpec, 4> table = [] {
    std::array<AlgebraSpec, 4> t = {make_spec(AlgebraId::A1), make_spec(AlgebraId::A2),
                                    make_spec(AlgebraId::C2), make_spec(AlgebraId::G2)};
    for (const auto& s : t) check_spec(s);
    return t;
  }();
  return table[static_cast<int>(id)];
}

}  // namespace

const AlgebraSpec& algebra_spec(AlgebraId id) { return spec_table(id); }

IntMatrix cartan_matrix(AlgebraId id) { return algebra_spec(id).cartan; }

WeylElement generator_action(AlgebraId id, int i) {
  const AlgebraSpec& s = algebra_spec(id);
  if (i < 1 || i > s.rank)
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range for " +
                            std::string(name(id)));
  const int g = i - 1;
  // w_i n = n - n_i * (row i of C): column g becomes e_g - C[g, :]^T.
  IntMatrix m = IntMatrix::identity(s.rank);
  for (int k = 0; k < s.rank; ++k) m(k, g) -= s.cartan(g, k);
  return {m, {i}};
}

std::vector<WeylElement> close_group(const std::vector<WeylElement>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const int n = generators.front().matrix.rows();
  std::vector<WeylElement> elements{{IntMatrix::identity(n), {}}};
  std::set<IntMatrix> seen{elements.front().matrix};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const WeylElement& g : generators) {
      WeylElement next = elements[cur] * g;
      if (!seen.insert(next.matrix).second) continue;
      if (elements.size() >= cap)
        throw WeylDataError("Weyl group closure exceeded " + std::to_string(cap) + " elements");
      elements.push_back(std::move(next));
      queue.push_back(elements.size() - 1);
    }
  }
  return elements;
}

const std::vector<WeylElement>& weyl_group(AlgebraId id) {
  static const std::array<std::vector<WeylElement>, 4> groups = [] {
    std::array<std::vector<WeylElement>, 4> g;
    for (AlgebraId a : kAllAlgebras) {
      std::vector<WeylElement> gens;
      for (int i = 1; i <= algebra_spec(a).rank; ++i) gens.push_back(generator_action(a, i));
      g[static_cast<int>(a)] = close_group(gens);
      if (static_cast<int>(g[static_cast<int>(a)].size()) != algebra_spec(a).group_order)
        throw WeylDataError(std::string(name(a)) + ": unexpected Weyl group order");
    }
    return g;
  }();
  return groups[static_cast<int>(id)];
}

bool OrbitData::contains(const Weight& w) const {
  return std::find(elements.begin(), elements.end(), w) != elements.end();
}

OrbitData orbit(AlgebraId id, const Weight& n) {
  const AlgebraSpec& s = algebra_spec(id);
  if (n.rank() != s.rank) throw std::invalid_argument("weight rank does not match algebra");
  OrbitData out;
  out.representative = dominant_representative(id, n).representative;
  std::set<Weight> seen{out.representative};
  out.elements.push_back(out.representative);
  std::vector<WeylElement> gens;
  for (int i = 1; i <= s.rank; ++i) gens.push_back(generator_action(id, i));
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    for (const auto& g : gens) {
      Weight img = g.apply(out.elements[k]);
      if (seen.insert(img).second) out.elements.push_back(std::move(img));
    }
  }
  out.stabilizer_order = s.group_order / static_cast<long>(out.elements.size());
  return out;
}

DominantResult dominant_representative(AlgebraId id, const Weight& n) {
  const AlgebraSpec& s = algebra_spec(id);
  if (n.rank() != s.rank) throw std::invalid_argument("weight rank does not match algebra");
  DominantResult r{n, {IntMatrix::identity(s.rank), {}}};
  // Reflecting in a negative coordinate raises the weight in dominance order,
  // so the walk terminates for sound Cartan data.
  constexpr int kGuard = 100000;
  for (int step = 0; step < kGuard; ++step) {
    int neg = -1;
    for (int i = 0; i < s.rank; ++i)
      if (sgn(r.representative[i]) < 0) {
        neg = i;
        break;
      }
    if (neg < 0) {
      for (const WeylElement& e : weyl_group(id))
        if (e.matrix == r.witness.matrix) r.witness.word = e.word;
      return r;
    }
    WeylElement g = generator_action(id, neg + 1);
    r.representative = g.apply(r.representative);
    r.witness = g * r.witness;
  }
  throw WeylDataError("dominant_representative did not terminate for " + n.str());
}

BigInt grade(AlgebraId id, const Weight& n) { return grade_with(algebra_spec(id).grading, n); }

Weight simple_root(AlgebraId id, int i) {
  const AlgebraSpec& s = algebra_spec(id);
  Weight r = Weight::zero(s.rank);
  for (int k = 0; k < s.rank; ++k) r[k] = s.cartan(i - 1, k);
  return r;
}

}  // namespace chebop
