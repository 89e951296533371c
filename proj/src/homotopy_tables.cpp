#include "emcg/homotopy_tables.hpp"

#include <algorithm>
#include <map>

#include "emcg/error.hpp"

namespace emcg::htpy {

FinAbGroup::FinAbGroup(int free_rank, std::vector<std::int64_t> cyclic_orders) : rank_(free_rank) {
  if (free_rank < 0) throw Error(ErrorKind::OutOfDomain, "free rank must be nonnegative");
  // Split every cyclic factor into prime powers, then rebuild invariant
  // factors by stacking the largest powers of each prime.
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (auto n : cyclic_orders) {
    if (n < 0) throw Error(ErrorKind::OutOfDomain, "cyclic orders must be nonnegative");
    if (n == 0) {
      ++rank_;
      continue;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
      if (n % d) continue;
      std::int64_t pw = 1;
      while (n % d == 0) {
        n /= d;
        pw *= d;
      }
      by_prime[d].push_back(pw);
    }
    if (n > 1) by_prime[n].push_back(n);
  }
  std::size_t count = 0;
  for (auto& [prime, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    count = std::max(count, powers.size());
  }
  std::vector<std::int64_t> factors(count, 1);
  for (auto& [prime, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i) factors[count - 1 - i] *= powers[i];
  torsion_ = std::move(factors);
}

std::optional<std::int64_t> FinAbGroup::order() const {
  if (rank_ > 0) return std::nullopt;
  std::int64_t n = 1;
  for (auto t : torsion_) n *= t;
  return n;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (rank_ > 0) out = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  for (auto t : torsion_) out += (out.empty() ? "" : "+") + ("Z" + std::to_string(t));
  return out;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  auto orders = a.torsion_;
  orders.insert(orders.end(), b.torsion_.begin(), b.torsion_.end());
  return FinAbGroup(a.rank_ + b.rank_, std::move(orders));
}

FinAbGroup s_pi_p_so_p(int p) {
  if (p < 3) throw Error(ErrorKind::OutOfDomain, "S pi_p(SO(p)) is tabulated for p >= 3, got " + std::to_string(p));
  if (p == 6) return FinAbGroup::trivial();
  switch (p % 8) {
    case 0: return FinAbGroup::z2_squared();
    case 1: return FinAbGroup::z2();
    case 2: return FinAbGroup::z2();
    case 3: return FinAbGroup::integers();
    case 4: return FinAbGroup::z2();
    case 5: return FinAbGroup::trivial();
    case 6: return FinAbGroup::z2();
    default: return FinAbGroup::integers();
  }
}

FinAbGroup pi_p_so_p_plus(int p, int shift) {
  if (p < 4 || p % 2 != 0)
    throw Error(ErrorKind::OutOfDomain, "pi_p(SO(p+k)) is tabulated for even p >= 4, got " + std::to_string(p));
  const bool zero_mod_8 = p % 8 == 0;
  if (shift == 1) return zero_mod_8 ? FinAbGroup::z2_squared() : FinAbGroup::z2();
  if (shift == 2) return zero_mod_8 ? FinAbGroup::z2() : FinAbGroup::trivial();
  throw Error(ErrorKind::OutOfDomain, "shift must be 1 or 2, got " + std::to_string(shift));
}

FinAbGroup pi_pm1_so_pm1(int p) {
  if (p < 9 || p % 8 != 6)
    throw Error(ErrorKind::OutOfDomain, "pi_{p-1}(SO(p-1)) is recorded only for p = 6 (mod 8), p >= 9");
  return FinAbGroup::z2();
}

FinAbGroup hom_to(int source_rank, const FinAbGroup& target) {
  if (source_rank < 0) throw Error(ErrorKind::OutOfDomain, "source rank must be nonnegative");
  FinAbGroup out;
  for (int i = 0; i < source_rank; ++i) out = direct_sum(out, target);
  return out;
}

}  // namespace emcg::htpy
