#include "emcg/ambient_geom.hpp"

#include <algorithm>
#include <string>

#include "emcg/error.hpp"

namespace emcg::geom {

namespace {

// Determinant of the signed permutation restricted to rows [r0, r0+n) landing
// in columns [c0, c0+n).
int block_det(const SignedPermMatrix& m, std::size_t r0, std::size_t c0, std::size_t n) {
  std::vector<std::size_t> perm(n);
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = m.row(r0 + i).col - c0;
    sign *= m.row(r0 + i).sign;
  }
  // Parity of the permutation by cycle decomposition.
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

SignedPermMatrix::SignedPermMatrix(std::vector<SignedEntry> image) : image_(std::move(image)) {
  std::vector<bool> used(image_.size(), false);
  for (const auto& e : image_) {
    if (e.col >= image_.size() || used[e.col])
      throw Error(ErrorKind::InvalidMatrix, "not a signed permutation: column reused or out of range");
    if (e.sign != 1 && e.sign != -1) throw Error(ErrorKind::InvalidMatrix, "signed permutation entries must be +-1");
    used[e.col] = true;
  }
}

SignedPermMatrix SignedPermMatrix::identity(std::size_t size) {
  std::vector<SignedEntry> image(size);
  for (std::size_t i = 0; i < size; ++i) image[i] = {i, 1};
  return SignedPermMatrix(std::move(image));
}

int SignedPermMatrix::at(std::size_t row, std::size_t col) const {
  return image_[row].col == col ? image_[row].sign : 0;
}

std::vector<std::vector<int>> SignedPermMatrix::dense() const {
  std::vector<std::vector<int>> out(size(), std::vector<int>(size(), 0));
  for (std::size_t i = 0; i < size(); ++i) out[i][image_[i].col] = image_[i].sign;
  return out;
}

int SignedPermMatrix::determinant() const { return block_det(*this, 0, 0, size()); }

bool SignedPermMatrix::is_identity() const { return *this == identity(size()); }

SignedPermMatrix SignedPermMatrix::transpose() const {
  std::vector<SignedEntry> image(size());
  for (std::size_t i = 0; i < size(); ++i) image[image_[i].col] = {i, image_[i].sign};
  return SignedPermMatrix(std::move(image));
}

bool SignedPermMatrix::is_orthogonal() const { return (*this * transpose()).is_identity(); }

SignedPermMatrix SignedPermMatrix::pow(unsigned e) const {
  SignedPermMatrix acc = identity(size());
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

unsigned SignedPermMatrix::order() const {
  unsigned k = 1;
  for (SignedPermMatrix x = *this; !x.is_identity(); x = x * *this) ++k;
  return k;
}

std::vector<std::int64_t> SignedPermMatrix::act(const std::vector<std::int64_t>& v) const {
  if (v.size() != size()) throw Error(ErrorKind::DimensionMismatch, "row vector has the wrong length");
  std::vector<std::int64_t> out(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) out[image_[i].col] = image_[i].sign * v[i];
  return out;
}

SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "matrix sizes differ");
  std::vector<SignedEntry> image(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& first = a.image_[i];
    const auto& second = b.image_[first.col];
    image[i] = {second.col, first.sign * second.sign};
  }
  return SignedPermMatrix(std::move(image));
}

// ---------------------------------------------------------------- constructors

SignedPermMatrix build_omega(int p) {
  if (p < 1) throw Error(ErrorKind::OutOfDomain, "build_omega requires p >= 1");
  const std::size_t b = static_cast<std::size_t>(p) + 1;
  std::vector<SignedEntry> image(2 * b + 1);
  image[0] = {0, p % 2 == 0 ? 1 : -1};
  for (std::size_t i = 0; i < b; ++i) {
    image[1 + i] = {1 + b + i, 1};
    image[1 + b + i] = {1 + i, i == 0 ? -1 : 1};
  }
  return SignedPermMatrix(std::move(image));
}

SignedPermMatrix build_omega_hat(int p) {
  if (p < 2 || p % 2 != 0) throw Error(ErrorKind::OutOfDomain, "build_omega_hat requires an even p >= 2");
  const std::size_t b = static_cast<std::size_t>(p) + 1;
  std::vector<SignedEntry> image(2 * b + 1);
  image[0] = {0, -1};
  for (std::size_t i = 0; i < b; ++i) {
    image[1 + i] = {1 + b + i, 1};
    image[1 + b + i] = {1 + i, 1};
  }
  return SignedPermMatrix(std::move(image));
}

namespace {

SignedPermMatrix reflection_pair(int p, int q) {
  const auto size = static_cast<std::size_t>(p + q + 3);
  std::vector<SignedEntry> image(size);
  for (std::size_t i = 0; i < size; ++i) image[i] = {i, 1};
  image[1].sign = -1;
  image[static_cast<std::size_t>(p) + 2].sign = -1;
  return SignedPermMatrix(std::move(image));
}

}  // namespace

SignedPermMatrix build_omega_prime(int p, int q) {
  if (p < 2 || q <= p)
    throw Error(ErrorKind::OutOfDomain, "build_omega_prime requires 2 <= p < q, got p=" + std::to_string(p) +
                                            " q=" + std::to_string(q));
  return reflection_pair(p, q);
}

SignedPermMatrix build_double_reflection(int p) {
  if (p < 1) throw Error(ErrorKind::OutOfDomain, "build_double_reflection requires p >= 1");
  return reflection_pair(p, p);
}

// ---------------------------------------------------------------- restriction

ProductMapDescriptor restrict_to_product(const SignedPermMatrix& m, int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorKind::OutOfDomain, "sphere dimensions must be positive");
  const auto a = static_cast<std::size_t>(p) + 1;  // first block: rows 1..a
  const auto b = static_cast<std::size_t>(q) + 1;  // second block: rows a+1..a+b
  if (m.size() != a + b + 1)
    throw Error(ErrorKind::DimensionMismatch, "matrix size " + std::to_string(m.size()) + " does not match p=" +
                                                  std::to_string(p) + ", q=" + std::to_string(q));
  if (m.row(0).col != 0) throw Error(ErrorKind::NotBlockStructured, "coordinate x_0 is not preserved");

  auto lands_in = [&](std::size_t r0, std::size_t n, std::size_t c0, std::size_t cn) {
    for (std::size_t i = r0; i < r0 + n; ++i)
      if (m.row(i).col < c0 || m.row(i).col >= c0 + cn) return false;
    return true;
  };

  ProductMapDescriptor d;
  d.p = p;
  d.q = q;
  if (lands_in(1, a, 1, a) && lands_in(1 + a, b, 1 + a, b)) {
    d.swaps_factors = false;
    d.first_block_det = block_det(m, 1, 1, a);
    d.second_block_det = block_det(m, 1 + a, 1 + a, b);
    return d;
  }
  if (a == b && lands_in(1, a, 1 + a, b) && lands_in(1 + a, b, 1, a)) {
    d.swaps_factors = true;
    d.first_block_det = block_det(m, 1 + a, 1, a);   // second factor -> first
    d.second_block_det = block_det(m, 1, 1 + a, b);  // first factor -> second
    return d;
  }
  throw Error(ErrorKind::NotBlockStructured, "matrix mixes the two sphere factors");
}

HpAction operator*(const HpAction& a, const HpAction& b) {
  HpAction out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return out;
}

HpAction induced_homology_action(const ProductMapDescriptor& d) {
  if (d.p != d.q) throw Error(ErrorKind::OutOfDomain, "homology action as a 2x2 matrix needs p == q");
  HpAction h;
  if (!d.swaps_factors) {
    h.m = {{{d.first_block_det, 0}, {0, d.second_block_det}}};
  } else {
    // e1 -> second factor with its degree, e2 -> first factor with its degree.
    h.m = {{{0, d.first_block_det}, {d.second_block_det, 0}}};
  }
  return h;
}

MatrixGroup generate_matrix_group(const std::vector<HpAction>& generators, std::size_t max_order) {
  std::vector<HpAction> elems{HpAction::identity()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : generators) {
      const auto x = elems[i] * g;
      if (std::find(elems.begin(), elems.end(), x) == elems.end()) {
        if (elems.size() >= max_order)
          throw Error(ErrorKind::Capacity, "matrix group exceeds " + std::to_string(max_order) + " elements");
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  auto index = [&](const HpAction& x) {
    return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  };
  std::vector<std::vector<std::size_t>> t(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = index(elems[i] * elems[j]);
  const std::size_t id = index(HpAction::identity());
  return {elems, grp::MulTableGroup(std::move(t), id)};
}

}  // namespace emcg::geom
