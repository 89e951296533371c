#include "emcg/f2_forms.hpp"

#include <algorithm>
#include <string>

#include "emcg/error.hpp"

namespace emcg::f2 {

namespace {

Bits mask_for(int dim) { return static_cast<Bits>((1u << dim) - 1u); }

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim)
    throw Error(ErrorKind::UnsupportedSize,
                "dimension " + std::to_string(dim) + " outside [0, " +
                    std::to_string(kMaxDim) + "]");
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": dimension " + std::to_string(a) +
                    " vs " + std::to_string(b));
}

Matrix inverse(const Matrix& m) {
  const int n = m.dim();
  // Gauss-Jordan on rows; rows[i] holds row i of m and of the accumulating
  // inverse side by side.
  std::vector<Bits> left(n), right(n);
  for (int i = 0; i < n; ++i) {
    Bits row = 0;
    for (int j = 0; j < n; ++j) row |= static_cast<Bits>(m.at(i, j) << j);
    left[i] = row;
    right[i] = static_cast<Bits>(1u << i);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if ((left[r] >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Error(ErrorKind::InvalidMatrix, "matrix is singular over GF(2)");
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != col && ((left[r] >> col) & 1)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
  }
  Matrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((right[i] >> j) & 1) out.set_column(j, static_cast<Bits>(out.column(j) | (1u << i)));
  return out;
}

// Columns a_1, b_1, a_2, b_2, ... of a symplectic basis; maps the standard
// pairing onto the pairing of `space`.
Matrix basis_matrix(const SymplecticSpace& space) {
  auto pairs = symplectic_basis(space);
  Matrix b(space.dim());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    b.set_column(static_cast<int>(2 * i), pairs[i].a.bits());
    b.set_column(static_cast<int>(2 * i + 1), pairs[i].b.bits());
  }
  return b;
}

// Sp of the given pairing, obtained by conjugating the standard group.
std::vector<Matrix> symplectic_group_of(const SymplecticSpace& space) {
  auto group = enumerate_sp(space.genus());
  if (space == SymplecticSpace::standard(space.genus())) return group;
  const Matrix b = basis_matrix(space);
  const Matrix b_inv = inverse(b);
  for (auto& s : group) s = b * s * b_inv;
  std::sort(group.begin(), group.end());
  return group;
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(int dim, Bits bits) : dim_(static_cast<std::uint8_t>(dim)), bits_(bits) {
  check_dim(dim);
  if (dim < kMaxDim && (bits & ~mask_for(dim)) != 0)
    throw Error(ErrorKind::DimensionMismatch, "vector has bits beyond its dimension");
}

Vector Vector::from_coords(std::span<const int> coords) {
  check_dim(static_cast<int>(coords.size()));
  Bits bits = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0 && coords[i] != 1)
      throw Error(ErrorKind::Parse, "GF(2) coordinates must be 0 or 1");
    bits |= static_cast<Bits>(coords[i] << i);
  }
  return Vector(static_cast<int>(coords.size()), bits);
}

Vector Vector::basis(int dim, int i) { return Vector(dim, static_cast<Bits>(1u << i)); }

Vector operator+(Vector a, Vector b) {
  require_same_dim(a.dim(), b.dim(), "vector sum");
  return Vector(a.dim(), static_cast<Bits>(a.bits() ^ b.bits()));
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(int dim) : dim_(static_cast<std::uint8_t>(dim)) { check_dim(dim); }

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int j = 0; j < dim; ++j) m.cols_[j] = static_cast<Bits>(1u << j);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    for (int j = 0; j < n; ++j) {
      const int e = rows[i][j];
      if (e != 0 && e != 1) throw Error(ErrorKind::Parse, "GF(2) entries must be 0 or 1");
      if (e) m.cols_[j] = static_cast<Bits>(m.cols_[j] | (1u << i));
    }
  }
  return m;
}

std::vector<std::vector<int>> Matrix::rows() const {
  std::vector<std::vector<int>> out(dim_, std::vector<int>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out[i][j] = at(i, j);
  return out;
}

Bits Matrix::apply_bits(Bits v) const {
  Bits out = 0;
  for (int j = 0; v != 0; ++j, v >>= 1)
    if (v & 1) out ^= cols_[j];
  return out;
}

Vector Matrix::apply(Vector v) const {
  require_same_dim(dim_, v.dim(), "matrix-vector product");
  return Vector(dim_, apply_bits(v.bits()));
}

Matrix Matrix::transpose() const {
  Matrix t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (at(i, j)) t.cols_[i] = static_cast<Bits>(t.cols_[i] | (1u << j));
  return t;
}

int Matrix::rank() const {
  std::array<Bits, kMaxDim> rows{};
  std::copy(cols_.begin(), cols_.begin() + dim_, rows.begin());
  int rank = 0;
  for (int bit = 0; bit < dim_ && rank < dim_; ++bit) {
    int pivot = -1;
    for (int r = rank; r < dim_; ++r)
      if ((rows[r] >> bit) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < dim_; ++r)
      if (r != rank && ((rows[r] >> bit) & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  Matrix out(a.dim());
  for (int j = 0; j < a.dim(); ++j) out.cols_[j] = a.apply_bits(b.cols_[j]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.dim_ == b.dim_ && std::equal(a.cols_.begin(), a.cols_.begin() + a.dim_, b.cols_.begin());
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.cols_.begin(), a.cols_.begin() + a.dim_,
                                                b.cols_.begin(), b.cols_.begin() + b.dim_);
}

// ---------------------------------------------------------------- SymplecticSpace

SymplecticSpace::SymplecticSpace(Matrix gram) : gram_(gram) {
  if (gram_ != gram_.transpose())
    throw Error(ErrorKind::Degenerate, "Gram matrix is not symmetric");
  for (int i = 0; i < gram_.dim(); ++i)
    if (gram_.at(i, i) != 0)
      throw Error(ErrorKind::Degenerate, "Gram matrix has a nonzero diagonal entry");
  symplectic_basis(gram_);  // throws on degeneracy
}

SymplecticSpace SymplecticSpace::standard(int k) {
  if (k < 1 || 2 * k > kMaxDim)
    throw Error(ErrorKind::UnsupportedSize, "genus " + std::to_string(k) + " unsupported");
  Matrix gram(2 * k);
  for (int i = 0; i < k; ++i) {
    gram.set_column(2 * i, static_cast<Bits>(1u << (2 * i + 1)));
    gram.set_column(2 * i + 1, static_cast<Bits>(1u << (2 * i)));
  }
  return SymplecticSpace(gram);
}

int SymplecticSpace::pair_bits(Bits a, Bits b) const {
  // a^T G b: G b is the sum of columns selected by b.
  return parity(static_cast<unsigned>(a & gram_.apply_bits(b)));
}

int SymplecticSpace::pair(Vector a, Vector b) const {
  require_same_dim(a.dim(), dim(), "pairing");
  require_same_dim(b.dim(), dim(), "pairing");
  return pair_bits(a.bits(), b.bits());
}

std::vector<HyperbolicPair> symplectic_basis(const Matrix& gram) {
  const int n = gram.dim();
  if (n == 0 || n % 2 != 0)
    throw Error(ErrorKind::Degenerate, "alternating form on odd or zero dimension " +
                                           std::to_string(n) + " is degenerate");
  auto pair = [&](Bits a, Bits b) { return parity(static_cast<unsigned>(a & gram.apply_bits(b))); };

  // Remaining spanning set, reduced as pairs are split off.
  std::vector<Bits> pool;
  for (int i = 0; i < n; ++i) pool.push_back(static_cast<Bits>(1u << i));

  std::vector<HyperbolicPair> out;
  while (!pool.empty()) {
    const Bits a = pool.front();
    auto partner = std::find_if(pool.begin() + 1, pool.end(), [&](Bits b) { return pair(a, b) == 1; });
    if (partner == pool.end())
      throw Error(ErrorKind::Degenerate, "pairing is degenerate: a vector pairs trivially with the rest");
    const Bits b = *partner;
    pool.erase(partner);
    pool.erase(pool.begin());
    // Project the rest onto the orthogonal complement of span(a, b).
    for (auto& v : pool) v = static_cast<Bits>(v ^ (pair(v, b) ? a : 0) ^ (pair(v, a) ? b : 0));
    out.push_back({Vector(n, a), Vector(n, b)});
  }
  return out;
}

std::vector<HyperbolicPair> symplectic_basis(const SymplecticSpace& space) {
  return symplectic_basis(space.gram());
}

// ---------------------------------------------------------------- QuadraticRefinement

QuadraticRefinement::QuadraticRefinement(SymplecticSpace space, Bits basis_values)
    : space_(std::move(space)), values_(basis_values) {
  if (space_.dim() < kMaxDim && (values_ & ~mask_for(space_.dim())) != 0)
    throw Error(ErrorKind::DimensionMismatch, "basis values exceed the space dimension");
}

QuadraticRefinement::QuadraticRefinement(SymplecticSpace space, std::span<const int> basis_values)
    : QuadraticRefinement(space, [&] {
        require_same_dim(static_cast<int>(basis_values.size()), space.dim(), "refinement values");
        return Vector::from_coords(basis_values).bits();
      }()) {}

std::vector<int> QuadraticRefinement::basis_value_list() const {
  std::vector<int> out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = (values_ >> i) & 1;
  return out;
}

int QuadraticRefinement::eval_bits(Bits v) const {
  int acc = parity(static_cast<unsigned>(v & values_));
  const Matrix& g = space_.gram();
  for (int i = 0; i < dim(); ++i) {
    if (!((v >> i) & 1)) continue;
    const Bits above = static_cast<Bits>(~((2u << i) - 1u));
    acc ^= parity(static_cast<unsigned>(g.column(i) & v & above));
  }
  return acc;
}

int QuadraticRefinement::operator()(Vector v) const {
  require_same_dim(v.dim(), dim(), "quadratic form evaluation");
  return eval_bits(v.bits());
}

int eval_q(const QuadraticRefinement& q, Vector v) { return q(v); }

int arf(const QuadraticRefinement& q, std::span<const HyperbolicPair> basis) {
  int acc = 0;
  for (const auto& [a, b] : basis) acc ^= q(a) & q(b);
  return acc;
}

int arf(const QuadraticRefinement& q) {
  const auto basis = symplectic_basis(q.space());
  return arf(q, basis);
}

// ---------------------------------------------------------------- symplectic group

bool is_symplectic(const SymplecticSpace& space, const Matrix& s) {
  if (s.dim() != space.dim()) return false;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (space.pair_bits(s.column(i), s.column(j)) != space.gram().at(i, j)) return false;
  return true;
}

std::vector<Matrix> enumerate_sp(int k) {
  if (k < 1 || k > 3)
    throw Error(ErrorKind::UnsupportedSize,
                "symplectic group enumeration supports k in {1,2,3}, got " + std::to_string(k));
  const auto space = SymplecticSpace::standard(k);
  const int n = 2 * k;
  const Bits limit = static_cast<Bits>(1u << n);

  // Assign images of e_0, e_1, ... in order; each new image must pair with the
  // earlier ones exactly as the basis vectors do. Those constraints already
  // force invertibility.
  std::vector<Matrix> out;
  Matrix current(n);
  auto extend = [&](auto&& self, int col) -> void {
    if (col == n) {
      out.push_back(current);
      return;
    }
    for (Bits v = 1; v < limit; ++v) {
      bool ok = true;
      for (int j = 0; j < col && ok; ++j)
        ok = space.pair_bits(current.column(j), v) == space.gram().at(j, col);
      if (!ok) continue;
      current.set_column(col, v);
      self(self, col + 1);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

QuadraticRefinement transport(const QuadraticRefinement& q, const Matrix& s) {
  require_same_dim(q.dim(), s.dim(), "transport");
  if (!is_symplectic(q.space(), s))
    throw Error(ErrorKind::NotSymplectic, "matrix does not preserve the pairing");
  Bits values = 0;
  for (int i = 0; i < q.dim(); ++i)
    if (q.eval_bits(s.column(i))) values |= static_cast<Bits>(1u << i);
  return QuadraticRefinement(q.space(), values);
}

std::vector<Matrix> stabilizer(const QuadraticRefinement& q) {
  if (q.dim() > 6)
    throw Error(ErrorKind::UnsupportedSize, "stabilizer supports dimension <= 6");
  std::vector<Matrix> out;
  for (const auto& s : symplectic_group_of(q.space()))
    if (transport(q, s) == q) out.push_back(s);
  return out;
}

std::vector<QuadraticRefinement> orbit(const QuadraticRefinement& q) {
  if (q.dim() > 6) throw Error(ErrorKind::UnsupportedSize, "orbit supports dimension <= 6");
  std::vector<Bits> seen;
  for (const auto& s : symplectic_group_of(q.space())) seen.push_back(transport(q, s).basis_values());
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::vector<QuadraticRefinement> out;
  for (Bits v : seen) out.emplace_back(q.space(), v);
  return out;
}

std::vector<QuadraticRefinement> all_refinements(const SymplecticSpace& space) {
  std::vector<QuadraticRefinement> out;
  const unsigned count = 1u << space.dim();
  for (unsigned v = 0; v < count; ++v) out.emplace_back(space, static_cast<Bits>(v));
  return out;
}

}  // namespace emcg::f2
