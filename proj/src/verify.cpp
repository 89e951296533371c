#include "emcg/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "emcg/ambient_geom.hpp"
#include "emcg/classifier.hpp"
#include "emcg/error.hpp"
#include "emcg/f2_forms.hpp"
#include "emcg/homotopy_tables.hpp"
#include "emcg/oracles.hpp"
#include "emcg/sl2z.hpp"
#include "emcg/smallgrp.hpp"

namespace emcg::verify {

namespace {

// Collects failure messages for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  CriterionResult finish(int id, std::string name, std::string citation, const std::string& summary) const {
    std::string detail;
    if (failures_.empty()) {
      detail = summary + " (" + std::to_string(checks_) + " checks)";
    } else {
      detail = std::to_string(failures_.size()) + " of " + std::to_string(checks_) + " checks failed: ";
      for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) detail += (i ? "; " : "") + failures_[i];
    }
    return {id, std::move(name), failures_.empty(), std::move(detail), std::move(citation)};
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

CriterionResult guarded(int id, const std::string& name, const std::string& citation,
                        const std::function<CriterionResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {id, name, false, std::string("exception: ") + e.what(), citation};
  }
}

f2::Matrix swap2() { return f2::Matrix::from_rows({{0, 1}, {1, 0}}); }

}  // namespace

// 1. Stabilizer of the Arf-0 form versus the parity characterization.
CriterionResult stabilizer_characterization() {
  return guarded(1, "stabilizer-characterization", "odd-image-full", [] {
    Checker c;
    const f2::QuadraticRefinement q0(f2::SymplecticSpace::standard(1), f2::Bits{0});
    c.expect(f2::arf(q0) == 0, "q=(0,0) should have Arf 0");
    const auto stab = f2::stabilizer(q0);
    const std::vector<f2::Matrix> expected{f2::Matrix::identity(2), swap2()};
    std::vector<f2::Matrix> sorted_expected = expected;
    std::sort(sorted_expected.begin(), sorted_expected.end());
    c.expect(stab == sorted_expected, "stabilizer of (0,0) is not exactly {identity, swap}");

    std::size_t unimodular = 0;
    for (int a = -5; a <= 5; ++a)
      for (int b = -5; b <= 5; ++b)
        for (int cc = -5; cc <= 5; ++cc)
          for (int d = -5; d <= 5; ++d) {
            if (a * d - b * cc != 1) continue;
            ++unimodular;
            const sl2z::UniModMat2 m(a, b, cc, d);
            const auto cls = sl2z::reduce_mod2(m);
            const bool by_class = cls == sl2z::Mod2Class::IdClass || cls == sl2z::Mod2Class::VClass;
            if (sl2z::is_member(m) != by_class) c.expect(false, "mismatch at " + m.to_string());
          }
    c.expect(unimodular > 0, "no unimodular matrices enumerated");
    return c.finish(1, "stabilizer-characterization", "odd-image-full",
                    "stabilizer {I, swap}; parity test == mod-2 class on " + std::to_string(unimodular) +
                        " unimodular matrices in [-5,5]");
  });
}

// 2. Sp(4,2) and the two orbits of refinements.
CriterionResult symplectic_counts() {
  return guarded(2, "symplectic-counts", "even-image", [] {
    Checker c;
    const auto sp = f2::enumerate_sp(2);
    c.expect(sp.size() == 720, "|Sp(4,2)| = " + std::to_string(sp.size()));
    c.expect(oracle::brute_force_sp(2).size() == 720, "brute-force oracle disagrees on |Sp(4,2)|");
    const auto space = f2::SymplecticSpace::standard(2);
    const f2::QuadraticRefinement arf0(space, std::vector<int>{0, 0, 0, 0});
    const f2::QuadraticRefinement arf1(space, std::vector<int>{1, 1, 0, 0});
    c.expect(f2::arf(arf0) == 0 && f2::arf(arf1) == 1, "representative Arf values");
    const auto o0 = f2::orbit(arf0).size(), s0 = f2::stabilizer(arf0).size();
    const auto o1 = f2::orbit(arf1).size(), s1 = f2::stabilizer(arf1).size();
    c.expect(o0 == 10, "Arf-0 orbit size " + std::to_string(o0));
    c.expect(s0 == 72, "Arf-0 stabilizer order " + std::to_string(s0));
    c.expect(o1 == 6, "Arf-1 orbit size " + std::to_string(o1));
    c.expect(s1 == 120, "Arf-1 stabilizer order " + std::to_string(s1));
    c.expect(o0 * s0 == 720 && o1 * s1 == 720, "orbit-stabilizer products");
    return c.finish(2, "symplectic-counts", "even-image", "|Sp(4,2)|=720, 10*72 = 6*120 = 720");
  });
}

// 3. The dihedral presentation and the order-16 model.
CriterionResult dihedral_exercise() {
  return guarded(3, "dihedral-exercise", "even-quotient-d8", [] {
    Checker c;
    const auto g = grp::todd_coxeter(grp::dihedral_quotient_presentation(), 1000);
    c.expect(g.order() == 8, "presented group has order " + std::to_string(g.order()));
    c.expect(!g.is_abelian(), "presented group is abelian");
    c.expect(grp::is_isomorphic(g, grp::dihedral(8)), "not isomorphic to D8");
    c.expect(!grp::is_isomorphic(g, grp::quaternion8()), "isomorphic to Q8");
    const auto e = grp::build_E_even();
    c.expect(e.order() == 16, "model order " + std::to_string(e.order()));
    c.expect(grp::is_isomorphic(e, grp::direct_product(grp::dihedral(8), grp::cyclic(2))), "model is not D8 x Z2");
    return c.finish(3, "dihedral-exercise", "even-quotient-d8", "order 8, nonabelian, D8 not Q8; model order 16 = D8 x Z2");
  });
}

// 4. Relators, roundtrip on random normal forms, injectivity up to length 6.
CriterionResult presentation_and_word_problem() {
  return guarded(4, "presentation-word-problem", "odd-total", [] {
    Checker c;
    using sl2z::GenWord;
    using sl2z::Gen;
    c.expect(sl2z::eval_word(sl2z::parse_word("V V V V")) == sl2z::UniModMat2::identity(), "V^4 != 1");
    c.expect(sl2z::eval_word(sl2z::parse_word("V^2 T")) == sl2z::eval_word(sl2z::parse_word("T V^2")),
             "V^2 T != T V^2");

    std::mt19937_64 rng(20261018);
    std::size_t exact = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int budget = static_cast<int>(rng() % 21);
      GenWord w;
      w.central_sign = (rng() & 1) ? 1 : -1;
      int used = 0;
      bool next_is_v = rng() & 1;
      while (used < budget) {
        if (next_is_v) {
          w.tokens.push_back({Gen::V, 1});
          used += 1;
        } else {
          const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(budget - used));
          w.tokens.push_back({Gen::T, (rng() & 1) ? k : -k});
          used += k;
        }
        next_is_v = !next_is_v;
      }
      const auto m = sl2z::eval_word(w);
      const auto d = sl2z::decompose(m);
      if (sl2z::eval_word(d) != m) c.expect(false, "roundtrip failed for " + sl2z::format_word(w));
      if (d == w) ++exact;
      if (!d.is_normal()) c.expect(false, "decomposition not normal for " + sl2z::format_word(w));
    }
    c.expect(exact == 1000, "decomposition reproduced the generating word " + std::to_string(exact) + "/1000 times");

    const auto report = sl2z::verify_presentation(6);
    c.expect(report.ok(), "presentation report has failures");
    c.expect(report.collisions == 0, std::to_string(report.collisions) + " collisions among normal forms");
    return c.finish(4, "presentation-word-problem", "odd-total",
                    "relators hold; 1000 roundtrips; " + std::to_string(report.forms_checked) +
                        " signed normal forms of length <= 6 pairwise distinct");
  });
}

// 5. The ambient orthogonal matrices and their homology actions.
CriterionResult ambient_matrices() {
  return guarded(5, "ambient-matrices", "odd-image-full", [] {
    Checker c;
    const geom::HpAction v{{{{0, -1}, {1, 0}}}};
    const geom::HpAction swap{{{{0, 1}, {1, 0}}}};
    const geom::HpAction minus{{{{-1, 0}, {0, -1}}}};
    for (int p : {3, 5, 7, 9}) {
      const auto om = geom::build_omega(p);
      const auto tag = "p=" + std::to_string(p);
      c.expect(om.determinant() == 1, "det Omega " + tag);
      c.expect(oracle::bareiss_determinant([&] {
                 oracle::DenseInt d;
                 for (const auto& row : om.dense()) d.emplace_back(row.begin(), row.end());
                 return d;
               }()) == 1,
               "dense det Omega " + tag);
      c.expect(om.order() == 4, "order Omega " + tag);
      c.expect(!om.pow(2).is_identity(), "Omega^2 is identity " + tag);
      c.expect(geom::induced_homology_action(geom::restrict_to_product(om, p, p)) == v, "Omega action " + tag);
    }
    for (int p : {4, 6, 8}) {
      const auto hat = geom::build_omega_hat(p);
      const auto tag = "p=" + std::to_string(p);
      c.expect(hat.determinant() == 1, "det Omega-hat " + tag);
      c.expect(hat.order() == 2, "order Omega-hat " + tag);
      c.expect(geom::induced_homology_action(geom::restrict_to_product(hat, p, p)) == swap, "Omega-hat action " + tag);
      const auto refl = geom::build_double_reflection(p);
      c.expect(geom::induced_homology_action(geom::restrict_to_product(refl, p, p)) == minus,
               "double reflection action " + tag);
      const auto group = geom::generate_matrix_group(
          {geom::induced_homology_action(geom::restrict_to_product(hat, p, p)),
           geom::induced_homology_action(geom::restrict_to_product(refl, p, p))});
      c.expect(group.elements.size() == 4, "generated image has order " + std::to_string(group.elements.size()));
      c.expect(grp::is_isomorphic(group.table, grp::klein()), "generated image is not Z2+Z2");
    }
    for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 5}, std::pair{4, 7}}) {
      const auto prime = geom::build_omega_prime(p, q);
      const auto d = geom::restrict_to_product(prime, p, q);
      c.expect(prime.determinant() == 1 && prime.order() == 2, "Omega-prime det/order");
      c.expect(!d.swaps_factors && d.first_block_det == -1 && d.second_block_det == -1,
               "Omega-prime restricts to (R(a), R(b))");
      // Equal-dimension instance of the same formula gives the homology action.
      auto equal = d;
      equal.q = equal.p;
      c.expect(geom::induced_homology_action(equal) == minus, "Omega-prime action");
    }
    return c.finish(5, "ambient-matrices", "odd-image-full",
                    "Omega: det 1, order 4, action V; Omega-hat: det 1, order 2, action swap; "
                    "Omega-prime: action -1; image Z2+Z2");
  });
}

// 6. Classification against a table transcribed by hand.
CriterionResult classification_table() {
  return guarded(6, "classification-table", "even-total", [] {
    using cls::GroupName;
    struct Expect {
      cls::KnotFamily family;
      std::optional<GroupName> image, kernel, total;
      std::optional<bool> splits;
      bool check_splits;
    };
    const auto G = GroupName::GammaV2;
    const auto T = GroupName::Trivial;
    const auto K = GroupName::Z2xZ2;
    const auto D = GroupName::D8xZ2;
    const auto Z = GroupName::Z2;
    std::vector<Expect> table{
        {cls::EqualProduct{1}, G, T, G, true, true},
        {cls::EqualProduct{2}, K, std::nullopt, std::nullopt, std::nullopt, true},
        {cls::EqualProduct{3}, G, T, G, true, true},
        {cls::EqualProduct{4}, K, K, D, std::nullopt, false},
        {cls::EqualProduct{5}, G, T, G, true, true},
        {cls::EqualProduct{6}, K, K, D, std::nullopt, false},
        {cls::EqualProduct{7}, G, T, G, true, true},
        {cls::EqualProduct{8}, K, K, D, std::nullopt, false},
        {cls::EqualProduct{9}, G, T, G, true, true},
        {cls::EqualProduct{10}, K, K, D, std::nullopt, false},
        {cls::EqualProduct{11}, G, T, G, true, true},
        {cls::EqualProduct{12}, K, K, D, std::nullopt, false},
        {cls::UnknotSphere{5}, T, T, T, true, false},
        {cls::UnknotSphere{6}, T, T, T, true, false},
        {cls::UnknotSphere{7}, T, T, T, true, false},
        {cls::UnknotSphere{8}, T, T, T, true, false},
        {cls::UnknotSphere{9}, T, T, T, true, false},
        {cls::AdjacentProduct{14}, Z, Z, K, true, true},
    };
    Checker c;
    auto same = [](const cls::GroupField& f, std::optional<GroupName> want) {
      return want ? (f.is_known() && f.group->name == *want) : !f.is_known();
    };
    for (const auto& e : table) {
      const auto r = cls::classify(e.family);
      const auto tag = cls::describe(e.family);
      c.expect(same(r.image, e.image), "image for " + tag);
      c.expect(same(r.kernel, e.kernel), "kernel for " + tag);
      c.expect(same(r.total, e.total), "total for " + tag);
      if (e.check_splits) c.expect(r.splits == e.splits, "splits for " + tag);
      c.expect(!r.citations.empty(), "no citations for " + tag);
      c.expect(r.orders_consistent(), "order bookkeeping for " + tag);
      if (r.total.is_known() && r.total.group->name == GroupName::D8xZ2)
        c.expect(*r.kernel.group->order() * *r.image.group->order() == 16 && *r.total.group->order() == 16,
                 "4*4 = 16 for " + tag);
    }
    for (const cls::KnotFamily bad : {cls::KnotFamily{cls::UnknotSphere{4}}, cls::KnotFamily{cls::EqualProduct{0}},
                                      cls::KnotFamily{cls::AdjacentProduct{6}}, cls::KnotFamily{cls::AdjacentProduct{15}},
                                      cls::KnotFamily{cls::UnequalProduct{3, 3}}}) {
      bool threw = false;
      try {
        cls::classify(bad);
      } catch (const Error& e) {
        threw = e.kind() == ErrorKind::UnsupportedFamily;
      }
      c.expect(threw, "out-of-domain family accepted: " + cls::describe(bad));
    }
    return c.finish(6, "classification-table", "even-total",
                    std::to_string(table.size()) + " families match the expectation table");
  });
}

// 7. Homotopy tables on every residue.
CriterionResult homotopy_table_lookups() {
  return guarded(7, "homotopy-tables", "homotopy-sphere-sequence", [] {
    Checker c;
    const std::map<int, std::string> first_row{{0, "Z2+Z2"}, {1, "Z2"}, {2, "Z2"}, {3, "Z"},
                                               {4, "Z2"},    {5, "0"},  {6, "Z2"}, {7, "Z"}};
    const std::map<int, std::pair<std::string, std::string>> second_rows{
        {0, {"Z2+Z2", "Z2"}}, {2, {"Z2", "0"}}, {4, {"Z2", "0"}}, {6, {"Z2", "0"}}};
    for (int p = 3; p <= 34; ++p) {
      const std::string want = p == 6 ? "0" : first_row.at(p % 8);
      const auto got = htpy::s_pi_p_so_p(p).to_string();
      c.expect(got == want, "S pi_p(SO(p)) at p=" + std::to_string(p) + ": " + got);
    }
    for (int p = 4; p <= 34; p += 2) {
      const auto& [shift1, shift2] = second_rows.at(p % 8);
      c.expect(htpy::pi_p_so_p_plus(p, 1).to_string() == shift1, "pi_p(SO(p+1)) at p=" + std::to_string(p));
      c.expect(htpy::pi_p_so_p_plus(p, 2).to_string() == shift2, "pi_p(SO(p+2)) at p=" + std::to_string(p));
    }
    c.expect(htpy::s_pi_p_so_p(6).is_trivial(), "p=6 special case");
    c.expect(htpy::pi_pm1_so_pm1(14) == htpy::FinAbGroup::z2(), "pi_13(SO(13))");
    auto raises = [](const std::function<void()>& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.kind() == ErrorKind::OutOfDomain;
      }
      return false;
    };
    c.expect(raises([] { htpy::s_pi_p_so_p(2); }), "s_pi_p_so_p(2) accepted");
    c.expect(raises([] { htpy::s_pi_p_so_p(-1); }), "s_pi_p_so_p(-1) accepted");
    c.expect(raises([] { htpy::pi_p_so_p_plus(5, 1); }), "odd p accepted");
    c.expect(raises([] { htpy::pi_p_so_p_plus(2, 1); }), "p=2 accepted");
    c.expect(raises([] { htpy::pi_p_so_p_plus(4, 3); }), "shift 3 accepted");
    c.expect(raises([] { htpy::pi_pm1_so_pm1(13); }), "p=13 accepted for pi_{p-1}");
    return c.finish(7, "homotopy-tables", "homotopy-sphere-sequence", "all residues and the p=6 special case; domain errors raise");
  });
}

// 8. Exhaustive property suites.
CriterionResult property_suites() {
  return guarded(8, "property-suites", "model-complement", [] {
    Checker c;
    for (int k = 1; k <= 4; ++k) {
      const auto space = f2::SymplecticSpace::standard(k);
      for (const auto& q : f2::all_refinements(space))
        if (!oracle::refinement_identity_holds(q)) c.expect(false, "identity fails at dim " + std::to_string(2 * k));
    }
    const auto sp4 = f2::enumerate_sp(2);
    for (const auto& q : f2::all_refinements(f2::SymplecticSpace::standard(2))) {
      const int a = f2::arf(q);
      for (const auto& s : sp4)
        if (f2::arf(f2::transport(q, s)) != a) {
          c.expect(false, "Arf not transport invariant");
          break;
        }
    }
    for (int k = 1; k <= 2; ++k)
      for (const auto& q : f2::all_refinements(f2::SymplecticSpace::standard(k))) {
        const auto maj = oracle::majority_arf(q);
        c.expect(maj.has_value() && *maj == f2::arf(q), "majority oracle disagrees");
      }

    // Every group table constructed anywhere in the suite, rebuilt through the
    // validating constructor.
    std::vector<grp::MulTableGroup> groups{
        grp::trivial_group(),
        grp::cyclic(2),
        grp::cyclic(7),
        grp::dihedral(8),
        grp::dihedral(12),
        grp::klein(),
        grp::quaternion8(),
        grp::build_E_even(),
        grp::direct_product(grp::dihedral(8), grp::cyclic(2)),
        grp::semidirect_product(grp::klein(), grp::cyclic(2), grp::klein_swap_action()),
        grp::todd_coxeter(grp::dihedral_quotient_presentation(), 1000),
        grp::todd_coxeter(grp::e_even_presentation(), 1000),
        grp::todd_coxeter(grp::abelianized(grp::e_even_presentation()), 1000),
        grp::abelianization(grp::build_E_even()),
    };
    for (const auto& g : groups) {
      bool valid = true;
      try {
        grp::MulTableGroup copy(g.table(), g.identity());
      } catch (const Error&) {
        valid = false;
      }
      c.expect(valid, "table of order " + std::to_string(g.order()) + " fails validation");
    }
    return c.finish(8, "property-suites", "model-complement",
                    "refinement identity to dim 8, Arf invariance over Sp(4,2), majority oracle k<=2, " +
                        std::to_string(groups.size()) + " group tables");
  });
}

std::vector<CriterionResult> run_acceptance() {
  return {stabilizer_characterization(), symplectic_counts(),     dihedral_exercise(),      presentation_and_word_problem(),
          ambient_matrices(),            classification_table(), homotopy_table_lookups(), property_suites()};
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << r.citation << "): " << r.detail;
  return out.str();
}

}  // namespace emcg::verify
