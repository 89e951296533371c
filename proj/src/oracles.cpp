#include "emcg/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "emcg/error.hpp"

namespace emcg::oracle {

std::optional<int> majority_arf(const f2::QuadraticRefinement& q) {
  const unsigned count = 1u << q.dim();
  unsigned ones = 0;
  for (unsigned v = 0; v < count; ++v) ones += static_cast<unsigned>(q.eval_bits(static_cast<f2::Bits>(v)));
  if (2 * ones > count) return 1;
  if (2 * ones < count) return 0;
  return std::nullopt;
}

std::vector<DenseInt> brute_force_sp(int k) {
  if (k < 1 || k > 2) throw Error(ErrorKind::UnsupportedSize, "brute-force Sp supports k in {1,2}");
  const std::size_t n = static_cast<std::size_t>(2 * k);
  DenseInt j(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; i += 2) j[i][i + 1] = j[i + 1][i] = 1;

  std::vector<DenseInt> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    DenseInt s(n, std::vector<std::int64_t>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s[r][c] = static_cast<std::int64_t>((code >> (r * n + c)) & 1);
    DenseInt st(n, std::vector<std::int64_t>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) st[r][c] = s[c][r];
    const DenseInt prod = dense_multiply(dense_multiply(st, j), s);
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r)
      for (std::size_t c = 0; c < n && ok; ++c) ok = (prod[r][c] % 2) == j[r][c];
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

bool refinement_identity_holds(const f2::QuadraticRefinement& q) {
  const int n = q.dim();
  const auto gram = q.space().gram().rows();
  const unsigned count = 1u << n;
  std::vector<int> value(count);
  for (unsigned v = 0; v < count; ++v) value[v] = q.eval_bits(static_cast<f2::Bits>(v));
  for (unsigned x = 0; x < count; ++x)
    for (unsigned y = 0; y < count; ++y) {
      int pairing = 0;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) pairing += static_cast<int>((x >> i) & 1) * gram[i][k] * static_cast<int>((y >> k) & 1);
      if (value[x ^ y] != ((value[x] + value[y] + pairing) & 1)) return false;
    }
  return true;
}

DenseInt dense_identity(std::size_t n) {
  DenseInt m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

DenseInt dense_multiply(const DenseInt& a, const DenseInt& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  DenseInt out(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

std::int64_t bareiss_determinant(DenseInt m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool brute_force_complement(const grp::MulTableGroup& g, const std::vector<std::size_t>& normal) {
  // Cosets of N, each listed as its members.
  std::vector<std::vector<std::size_t>> cosets;
  std::vector<bool> placed(g.order(), false);
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (placed[a]) continue;
    std::vector<std::size_t> coset;
    for (auto x : normal) {
      coset.push_back(g.mul(a, x));
      placed[g.mul(a, x)] = true;
    }
    cosets.push_back(std::move(coset));
  }
  // Odometer over one representative per coset.
  std::vector<std::size_t> choice(cosets.size(), 0);
  for (;;) {
    std::vector<std::size_t> section;
    for (std::size_t i = 0; i < cosets.size(); ++i) section.push_back(cosets[i][choice[i]]);
    std::sort(section.begin(), section.end());
    bool closed = std::binary_search(section.begin(), section.end(), g.identity());
    for (std::size_t i = 0; i < section.size() && closed; ++i)
      for (std::size_t j = 0; j < section.size() && closed; ++j)
        closed = std::binary_search(section.begin(), section.end(), g.mul(section[i], section[j]));
    if (closed) return true;
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == cosets[pos].size()) choice[pos++] = 0;
    if (pos == choice.size()) return false;
  }
}

}  // namespace emcg::oracle
