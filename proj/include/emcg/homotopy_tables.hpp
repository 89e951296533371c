#pragma once

// Tabulated homotopy groups of rotation groups, as finitely generated abelian
// groups. Lookups are total on the tabulated domains and throw OutOfDomain
// everywhere else; nothing is extrapolated.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace emcg::htpy {

/// Z^rank + Z/t_1 + ... + Z/t_k with t_i | t_{i+1} and every t_i >= 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Accepts any cyclic orders (entries 0 and 1 are dropped, order does not
  /// matter); normalizes to invariant factors.
  FinAbGroup(int free_rank, std::vector<std::int64_t> cyclic_orders);

  static FinAbGroup trivial() { return {}; }
  static FinAbGroup integers() { return FinAbGroup(1, {}); }
  static FinAbGroup z2() { return FinAbGroup(0, {2}); }
  static FinAbGroup z2_squared() { return FinAbGroup(0, {2, 2}); }

  int free_rank() const { return rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  std::optional<std::int64_t> order() const;

  /// "0", "Z", "Z2", "Z2+Z2", "Z^2+Z4", ...
  std::string to_string() const;

  friend FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  int rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

/// Image of pi_p(SO(p)) in pi_p(SO(p+1)), p >= 3, by p mod 8 with p = 6
/// special-cased to 0.
FinAbGroup s_pi_p_so_p(int p);

/// pi_p(SO(p+shift)) for even p >= 4 and shift in {1, 2}.
FinAbGroup pi_p_so_p_plus(int p, int shift);

/// pi_{p-1}(SO(p-1)) for p = 6 (mod 8), p >= 9; the single entry needed for
/// the S^{p-2} x S^{p-1} family.
FinAbGroup pi_pm1_so_pm1(int p);

/// Hom(Z^source_rank, target) = target^source_rank.
FinAbGroup hom_to(int source_rank, const FinAbGroup& target);

}  // namespace emcg::htpy
