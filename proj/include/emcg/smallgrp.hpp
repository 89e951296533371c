#pragma once

// Small finite groups: finitely presented groups via Todd-Coxeter coset
// enumeration, groups given by multiplication tables, isomorphism testing,
// direct and semidirect products, quotients and complements.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emcg::grp {

inline constexpr std::size_t kMaxOrder = 64;

struct Letter {
  std::size_t gen;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  /// Throws Parse if a relator uses an undeclared generator index.
  void validate() const;
  std::string to_string() const;
};

/// `gens: a,b,u; rels: a^2, b^2, [a,b], a u b^-1 u^-1`
/// Letters are separated by spaces, `x^n` repeats, `[x,y]` is x y x^-1 y^-1.
Presentation parse_presentation(std::string_view text);

/// Coset table of the trivial subgroup, compacted to live cosets. Coset 0 is
/// the subgroup itself; action[c][2*g] is c*g and action[c][2*g+1] is c*g^-1.
struct CosetTable {
  std::size_t live_cosets = 0;
  std::size_t defined_cosets = 0;  // rows allocated during the enumeration
  std::size_t generators = 0;
  std::vector<std::vector<std::size_t>> action;
};

/// HLT enumeration with lexicographic scan order. Throws Capacity once more
/// than max_cosets rows would be defined.
CosetTable enumerate_cosets(const Presentation& p, std::size_t max_cosets);

class MulTableGroup {
 public:
  /// Validates Latin square, identity, inverses and associativity.
  MulTableGroup(std::vector<std::vector<std::size_t>> table, std::size_t identity = 0);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;
  std::size_t power(std::size_t a, std::int64_t e) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  bool is_abelian() const;
  std::size_t involution_count() const;
  /// Number of elements of each order, indexed by order.
  std::vector<std::size_t> order_profile() const;
  std::vector<std::size_t> center() const;

  /// Smallest subgroup containing the given elements, sorted.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const;
  bool is_subgroup(const std::vector<std::size_t>& elems) const;
  bool is_normal(const std::vector<std::size_t>& elems) const;
  /// All subgroups, each sorted; sorted by size then lexicographically.
  std::vector<std::vector<std::size_t>> subgroups() const;

  friend bool operator==(const MulTableGroup&, const MulTableGroup&) = default;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
};

/// Regular representation from a completed enumeration; order <= kMaxOrder.
MulTableGroup todd_coxeter(const Presentation& p, std::size_t max_cosets);
MulTableGroup from_coset_table(const CosetTable& t);

MulTableGroup trivial_group();
MulTableGroup cyclic(std::size_t n);
/// Dihedral group of the given order (order 8 is the symmetry group of a square).
MulTableGroup dihedral(std::size_t order);
MulTableGroup klein();
MulTableGroup quaternion8();

/// Isomorphism witness: witness[g] is the image of g in H.
std::optional<std::vector<std::size_t>> find_isomorphism(const MulTableGroup& g, const MulTableGroup& h);
bool is_isomorphic(const MulTableGroup& g, const MulTableGroup& h);
bool is_homomorphism(const MulTableGroup& g, const MulTableGroup& h, const std::vector<std::size_t>& map);

/// (g, h) has index g * |H| + h.
MulTableGroup direct_product(const MulTableGroup& g, const MulTableGroup& h);

/// action[h] is an automorphism of N (as a permutation of its elements), and
/// h -> action[h] must be a homomorphism. (n1,h1)(n2,h2) = (n1 action[h1](n2), h1 h2).
/// Element (n, h) has index n * |H| + h.
MulTableGroup semidirect_product(const MulTableGroup& n, const MulTableGroup& h,
                                 const std::vector<std::vector<std::size_t>>& action);

/// Quotient by a normal subgroup; cosets are numbered by smallest member.
MulTableGroup quotient(const MulTableGroup& g, const std::vector<std::size_t>& normal);
std::vector<std::size_t> commutator_subgroup(const MulTableGroup& g);
MulTableGroup abelianization(const MulTableGroup& g);

/// Whether some subgroup H meets N trivially with N*H = G. Throws
/// InvalidSubgroup if N is not a normal subgroup.
bool has_complement(const MulTableGroup& g, const std::vector<std::size_t>& normal);
std::optional<std::vector<std::size_t>> find_complement(const MulTableGroup& g,
                                                        const std::vector<std::size_t>& normal);

/// The factor-interchange automorphism on klein() (swaps its two generators),
/// indexed by the elements of cyclic(2).
std::vector<std::vector<std::size_t>> klein_swap_action();

/// Extendable-class model for even p: ((Z2 x Z2) x|_swap Z2) x Z2 with
/// generators d1, d2 (kernel), u (factor interchange) and r (central).
struct EvenModel {
  MulTableGroup group;
  std::size_t d1, d2, u, r;
  std::vector<std::size_t> kernel;  // <d1, d2>
};
EvenModel build_e_even_model();
MulTableGroup build_E_even();

/// Presentation of the same model on d1, d2, u, r.
Presentation e_even_presentation();
/// Adds every commutator of generators.
Presentation abelianized(const Presentation& p);

/// The quotient presentation <a,b,u | a^2, b^2, u^2, [a,b], a u b^-1 u^-1>.
Presentation dihedral_quotient_presentation();

}  // namespace emcg::grp
