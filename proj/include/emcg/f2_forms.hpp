#pragma once

// Linear algebra over the two-element field: symplectic spaces, quadratic
// refinements of the pairing, Arf invariants and the action of the
// symplectic group on refinements.
//
// Vectors are bit-packed: bit i of a word is the coordinate along e_i.
// Matrices are stored by columns, so S*v is the XOR of the columns selected
// by the set bits of v.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace emcg::f2 {

using Bits = std::uint16_t;
inline constexpr int kMaxDim = 16;

/// Parity of the number of set bits.
inline int parity(unsigned x) { return __builtin_parity(x); }

class Vector {
 public:
  Vector() = default;
  Vector(int dim, Bits bits);
  static Vector from_coords(std::span<const int> coords);
  static Vector basis(int dim, int i);

  int dim() const { return dim_; }
  Bits bits() const { return bits_; }
  int operator[](int i) const { return (bits_ >> i) & 1; }
  bool is_zero() const { return bits_ == 0; }

  friend Vector operator+(Vector a, Vector b);
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::uint8_t dim_ = 0;
  Bits bits_ = 0;
};

/// Square matrix over GF(2), column storage.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim);  // zero matrix
  static Matrix identity(int dim);
  /// Build from rows of 0/1 entries (row-major, in reading order).
  static Matrix from_rows(const std::vector<std::vector<int>>& rows);

  int dim() const { return dim_; }
  Bits column(int j) const { return cols_[j]; }
  void set_column(int j, Bits c) { cols_[j] = c; }
  int at(int row, int col) const { return (cols_[col] >> row) & 1; }
  std::vector<std::vector<int>> rows() const;

  Vector apply(Vector v) const;
  Bits apply_bits(Bits v) const;
  Matrix transpose() const;
  int rank() const;
  bool invertible() const { return rank() == dim_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  std::uint8_t dim_ = 0;
  std::array<Bits, kMaxDim> cols_{};
};

/// Even-dimensional space with a nondegenerate alternating pairing.
class SymplecticSpace {
 public:
  /// Validates that gram is symmetric with zero diagonal and invertible.
  explicit SymplecticSpace(Matrix gram);
  /// Block-diagonal pairing with hyperbolic pairs (e_{2i}, e_{2i+1}).
  static SymplecticSpace standard(int k);

  int dim() const { return gram_.dim(); }
  int genus() const { return gram_.dim() / 2; }
  const Matrix& gram() const { return gram_; }
  int pair(Vector a, Vector b) const;
  int pair_bits(Bits a, Bits b) const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

 private:
  Matrix gram_;
};

struct HyperbolicPair {
  Vector a;
  Vector b;
};

/// Symplectic Gram-Schmidt. Throws Degenerate on a singular or odd-dimensional
/// pairing.
std::vector<HyperbolicPair> symplectic_basis(const SymplecticSpace& space);
/// Same procedure on a raw Gram matrix; used to validate input.
std::vector<HyperbolicPair> symplectic_basis(const Matrix& gram);

/// A function q with q(x+y) = q(x) + q(y) + <x,y>, determined by its values
/// on the basis vectors.
class QuadraticRefinement {
 public:
  QuadraticRefinement(SymplecticSpace space, Bits basis_values);
  QuadraticRefinement(SymplecticSpace space, std::span<const int> basis_values);

  const SymplecticSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  Bits basis_values() const { return values_; }
  std::vector<int> basis_value_list() const;

  int operator()(Vector v) const;
  int eval_bits(Bits v) const;

  friend bool operator==(const QuadraticRefinement&, const QuadraticRefinement&) = default;

 private:
  SymplecticSpace space_;
  Bits values_;
};

int eval_q(const QuadraticRefinement& q, Vector v);

/// Sum of q(a_i) q(b_i) over a symplectic basis.
int arf(const QuadraticRefinement& q);
int arf(const QuadraticRefinement& q, std::span<const HyperbolicPair> basis);

bool is_symplectic(const SymplecticSpace& space, const Matrix& s);

/// All of Sp(2k, 2) for the standard pairing, sorted by columns. k in {1,2,3}.
std::vector<Matrix> enumerate_sp(int k);

/// Pullback q'(v) = q(S v).
QuadraticRefinement transport(const QuadraticRefinement& q, const Matrix& s);

/// Elements of the full symplectic group (standard pairing only) that fix q.
std::vector<Matrix> stabilizer(const QuadraticRefinement& q);
/// Orbit of q under the full symplectic group, sorted by basis values.
std::vector<QuadraticRefinement> orbit(const QuadraticRefinement& q);

/// Every refinement of the given pairing (2^dim of them).
std::vector<QuadraticRefinement> all_refinements(const SymplecticSpace& space);

}  // namespace emcg::f2
