#pragma once

// Brute-force cross-checks. Each one recomputes a quantity along a route that
// shares no code with the production path it is compared against.

#include <cstdint>
#include <optional>
#include <vector>

#include "emcg/f2_forms.hpp"
#include "emcg/smallgrp.hpp"

namespace emcg::oracle {

using DenseInt = std::vector<std::vector<std::int64_t>>;

/// The value q takes on a strict majority of all 2^dim vectors, or nullopt on
/// a tie (impossible for nondegenerate pairings).
std::optional<int> majority_arf(const f2::QuadraticRefinement& q);

/// Every 0/1 matrix S (as dense rows) with S^T J S = J over GF(2), for the
/// standard block pairing J of genus k <= 2, by exhausting all 2^(4k^2)
/// matrices.
std::vector<DenseInt> brute_force_sp(int k);

/// Checks q(x+y) = q(x) + q(y) + <x,y> for all pairs, using dense arithmetic.
bool refinement_identity_holds(const f2::QuadraticRefinement& q);

/// Determinant of an integer matrix by fraction-free elimination.
std::int64_t bareiss_determinant(DenseInt m);
DenseInt dense_multiply(const DenseInt& a, const DenseInt& b);
DenseInt dense_identity(std::size_t n);

/// Complement existence by trying every choice of coset representatives and
/// testing whether the chosen set is a subgroup.
bool brute_force_complement(const grp::MulTableGroup& g, const std::vector<std::size_t>& normal);

}  // namespace emcg::oracle
