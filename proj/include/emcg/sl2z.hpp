#pragma once

// Exact 2x2 unimodular integer matrices and the subgroup of SL(2,Z) whose
// rows have even entry products. That subgroup is generated by
//
//   V = ( 0 -1 )      T = ( 1 2 )
//       ( 1  0 )          ( 0 1 )
//
// with V^4 = 1 and V^2 = -1 central, and modulo {+1,-1} it is the free
// product of <V> (order 2) and <T> (infinite cyclic).
//
// Words are read left to right and multiplied left to right: "V T" is V*T.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace emcg::sl2z {

using BigInt = boost::multiprecision::cpp_int;

class UniModMat2 {
 public:
  /// Identity.
  UniModMat2();
  /// Throws InvalidMatrix unless d1*d4 - d2*d3 == 1.
  UniModMat2(BigInt d1, BigInt d2, BigInt d3, BigInt d4);

  static UniModMat2 identity() { return {}; }
  static UniModMat2 minus_identity();
  static UniModMat2 V();
  static UniModMat2 T();
  static UniModMat2 T_power(std::int64_t k);

  const BigInt& d1() const { return d1_; }
  const BigInt& d2() const { return d2_; }
  const BigInt& d3() const { return d3_; }
  const BigInt& d4() const { return d4_; }

  UniModMat2 inverse() const;
  UniModMat2 operator-() const;
  UniModMat2 pow(std::int64_t e) const;

  friend UniModMat2 operator*(const UniModMat2& a, const UniModMat2& b);
  friend bool operator==(const UniModMat2&, const UniModMat2&) = default;

  std::string to_string() const;

 private:
  struct Unchecked {};
  UniModMat2(Unchecked, BigInt d1, BigInt d2, BigInt d3, BigInt d4);

  BigInt d1_, d2_, d3_, d4_;
};

/// Determinant check for raw entries, without constructing a matrix.
bool is_unimodular(const BigInt& d1, const BigInt& d2, const BigInt& d3, const BigInt& d4);

/// Row-product parity test: d1*d2 and d3*d4 both even.
bool is_member(const UniModMat2& m);

enum class Mod2Class { IdClass, VClass, Other };
std::string_view to_string(Mod2Class c);

Mod2Class reduce_mod2(const UniModMat2& m);

enum class Gen { V, T };

struct Token {
  Gen gen;
  std::int64_t exponent;
  friend bool operator==(const Token&, const Token&) = default;
};

struct GenWord {
  std::vector<Token> tokens;
  int central_sign = 1;  // +1 or -1

  /// Total number of generator letters, sum of |exponent|.
  std::int64_t length() const;
  bool is_normal() const;
  friend bool operator==(const GenWord&, const GenWord&) = default;
};

/// Grammar: whitespace-separated `V`, `T`, `V^<int>`, `T^<int>`, with an
/// optional leading `-` (separate token or prefix) for the central sign.
GenWord parse_word(std::string_view text);
std::string format_word(const GenWord& w);

UniModMat2 eval_word(const GenWord& w);

/// Alternating V / T^k form: every V exponent is 1, T exponents nonzero,
/// V^2 folded into the central sign.
GenWord normal_form(const GenWord& w);

/// Euclidean reduction of the first column. Throws NotMember naming the odd
/// row product when m is outside the subgroup.
GenWord decompose(const UniModMat2& m);

struct PresentationReport {
  bool v4_is_identity = false;
  bool v2_commutes_with_t = false;
  int length_bound = 0;
  std::size_t forms_checked = 0;  // signed normal forms of length <= bound
  std::size_t collisions = 0;     // pairs of distinct forms with equal matrices
  std::vector<std::string> failures;

  bool ok() const { return v4_is_identity && v2_commutes_with_t && collisions == 0 && failures.empty(); }
};

/// Relators V^4 and V^2 T V^-2 T^-1 plus injectivity evidence on all signed
/// normal forms of length <= bound (bound in [1, 12]).
PresentationReport verify_presentation(int length_bound);

/// Every normal-form word (central sign +1) of length <= bound.
std::vector<GenWord> normal_forms_up_to(int length_bound);

}  // namespace emcg::sl2z
