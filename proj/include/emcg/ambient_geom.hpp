#pragma once

// Signed permutation matrices acting on R^{p+q+3} (coordinates x_0..x_{p+q+2})
// by right multiplication of row vectors, their restriction to the product of
// spheres S^p x S^q sitting in the coordinate blocks {1..p+1} and
// {p+2..p+q+2}, and the induced action on H_p(S^p x S^p).

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "emcg/smallgrp.hpp"

namespace emcg::geom {

struct SignedEntry {
  std::size_t col;
  int sign;  // +1 or -1
  friend bool operator==(const SignedEntry&, const SignedEntry&) = default;
};

/// Exactly one nonzero entry (+-1) per row and per column. Row i sends
/// coordinate x_i to coordinate `col` with the given sign.
class SignedPermMatrix {
 public:
  explicit SignedPermMatrix(std::vector<SignedEntry> image);
  static SignedPermMatrix identity(std::size_t size);

  std::size_t size() const { return image_.size(); }
  const SignedEntry& row(std::size_t i) const { return image_[i]; }
  const std::vector<SignedEntry>& image() const { return image_; }
  int at(std::size_t row, std::size_t col) const;
  std::vector<std::vector<int>> dense() const;

  int determinant() const;
  bool is_identity() const;
  bool is_orthogonal() const;
  SignedPermMatrix transpose() const;
  SignedPermMatrix pow(unsigned e) const;
  /// Smallest k >= 1 with M^k = 1.
  unsigned order() const;
  /// Row vector times matrix.
  std::vector<std::int64_t> act(const std::vector<std::int64_t>& row_vector) const;

  friend SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b);
  friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;

 private:
  std::vector<SignedEntry> image_;
};

/// x_0 scaled by (-1)^p, the first block moved onto the second, the second
/// block moved onto the first with its leading coordinate negated. p >= 1.
SignedPermMatrix build_omega(int p);
/// x_0 negated and the two (p+1)-blocks interchanged. p >= 2 and even.
SignedPermMatrix build_omega_hat(int p);
/// Diagonal, -1 exactly at x_1 and x_{p+2}. 2 <= p < q.
SignedPermMatrix build_omega_prime(int p, int q);
/// The same diagonal reflection pattern when both factors have dimension p.
SignedPermMatrix build_double_reflection(int p);

struct ProductMapDescriptor {
  bool swaps_factors = false;
  int first_block_det = 1;   // degree of the map onto the first output factor
  int second_block_det = 1;  // degree of the map onto the second output factor
  int p = 0;
  int q = 0;
  friend bool operator==(const ProductMapDescriptor&, const ProductMapDescriptor&) = default;
};

/// Throws NotBlockStructured unless M fixes x_0 up to sign and preserves or
/// swaps the two blocks.
ProductMapDescriptor restrict_to_product(const SignedPermMatrix& m, int p, int q);

/// 2x2 integer matrix with columns the images of [S^p x pt] and [pt x S^p].
struct HpAction {
  std::array<std::array<std::int64_t, 2>, 2> m{};

  static HpAction identity() { return {{{{1, 0}, {0, 1}}}}; }
  std::int64_t det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  friend HpAction operator*(const HpAction& a, const HpAction& b);
  friend bool operator==(const HpAction&, const HpAction&) = default;
  friend auto operator<=>(const HpAction&, const HpAction&) = default;
};

/// Degree of an orthogonal self-map of a sphere is its determinant. Throws
/// OutOfDomain when p != q.
HpAction induced_homology_action(const ProductMapDescriptor& d);

/// Closure of a set of 2x2 matrices under multiplication (at most max_order
/// elements, else Capacity), sorted, with its multiplication table.
struct MatrixGroup {
  std::vector<HpAction> elements;
  grp::MulTableGroup table;
};
MatrixGroup generate_matrix_group(const std::vector<HpAction>& generators, std::size_t max_order = 64);

}  // namespace emcg::geom
