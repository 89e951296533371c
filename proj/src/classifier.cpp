#include "emcg/classifier.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "emcg/ambient_geom.hpp"
#include "emcg/error.hpp"
#include "emcg/f2_forms.hpp"
#include "emcg/homotopy_tables.hpp"
#include "emcg/sl2z.hpp"

namespace emcg::cls {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

struct CitationInfo {
  Citation id;
  std::string_view tag;
  std::string_view statement;
};

constexpr std::array kCitations{
    CitationInfo{Citation::UnknotTrivial, "unknot-trivial",
                 "For n >= 5 every diffeomorphism of the unknotted S^n that extends over S^{n+2} is "
                 "pseudo-isotopic to the identity, so E(S^{n+2}, S^n) is trivial."},
    CitationInfo{Citation::PseudoIsotopy, "pseudo-isotopy",
                 "A diffeomorphism supported in a disk (coming from a homotopy sphere) that extends over the "
                 "ambient sphere of a trivial knot is pseudo-isotopic to the identity."},
    CitationInfo{Citation::OddImageFull, "odd-image-full",
                 "For odd p >= 3 the homology image of extendable classes of S^p x S^p in S^{2p+2} is all of "
                 "Gamma_V(2); V is realized by an orthogonal matrix of order four."},
    CitationInfo{Citation::OddKernelTrivial, "odd-kernel-trivial",
                 "For odd p >= 3 an extendable class acting trivially on H_p(S^p x S^p) is trivial "
                 "(p = 3 uses the Pontrjagin class of the mapping torus)."},
    CitationInfo{Citation::OddTotal, "odd-total",
                 "For odd p >= 3, E(S^{2p+2}, S^p x S^p) is isomorphic to Gamma_V(2)."},
    CitationInfo{Citation::AllOddP, "all-odd-p",
                 "The isomorphism with Gamma_V(2) holds for every odd p >= 1; p = 1, 3, 7 play no special role."},
    CitationInfo{Citation::TorusCase, "torus-case",
                 "For the standardly embedded torus in S^4, E(S^4, T^2) is Gamma_V(2)."},
    CitationInfo{Citation::UnequalImage, "unequal-image",
                 "For 2 <= p < q the homology image of extendable classes of S^p x S^q is Z2, generated by "
                 "simultaneous reflection of both factors."},
    CitationInfo{Citation::EvenImage, "even-image",
                 "For even p >= 2 the homology image is the full Im(h) = Z2+Z2, generated by the factor "
                 "interchange and the simultaneous reflection."},
    CitationInfo{Citation::EvenKernel, "even-kernel",
                 "For even p >= 4 the extendable classes acting trivially on homology form Z2+Z2."},
    CitationInfo{Citation::EvenTotal, "even-total",
                 "For even p >= 4, E(S^{2p+2}, S^p x S^p) is isomorphic to D8+Z2."},
    CitationInfo{Citation::EvenQuotientD8, "even-quotient-d8",
                 "Modulo the central reflection, E is presented by <a,b,u | a^2=b^2=u^2=e, ab=ba, au=ub>, "
                 "the dihedral group of order 8."},
    CitationInfo{Citation::S2xS2Extendable, "s2xs2-extendable",
                 "pi_0 Diff(S^2 x S^2) is Z2+Z2 and each generator has a representative extending over S^6."},
    CitationInfo{Citation::SplitFamily, "split-family",
                 "For S^{p-2} x S^{p-1} in S^{2p-1} with p >= 9, p = 6 (mod 8), the sequence "
                 "0 -> Z2 -> E -> Z2 -> 0 splits."},
    CitationInfo{Citation::HomotopySphereSequence, "homotopy-sphere-sequence",
                 "Classes acting trivially on homology fit into 0 -> Theta_{2p+1} -> pi_0 SDiff(S^p x S^p) -> "
                 "Hom(H_p, S pi_p(SO(p))) -> 0."},
    CitationInfo{Citation::ModelComplement, "model-complement",
                 "Computed here, not quoted: in the multiplication-table model of E the kernel <d1, d2> has a "
                 "complement, so the model extension splits."},
};

const CitationInfo& info(Citation c) {
  for (const auto& i : kCitations)
    if (i.id == c) return i;
  throw Error(ErrorKind::OutOfDomain, "unregistered citation");
}

[[noreturn]] void unsupported(const std::string& why) { throw Error(ErrorKind::UnsupportedFamily, why); }

std::optional<bool> even_model_splits() {
  const auto model = grp::build_e_even_model();
  return grp::has_complement(model.group, model.kernel);
}

}  // namespace

// ---------------------------------------------------------------- names

std::string_view to_string(GroupName n) {
  switch (n) {
    case GroupName::Trivial: return "Trivial";
    case GroupName::Z2: return "Z2";
    case GroupName::Z2xZ2: return "Z2xZ2";
    case GroupName::D8: return "D8";
    case GroupName::D8xZ2: return "D8xZ2";
    case GroupName::GammaV2: return "GammaV2";
  }
  return "?";
}

GroupName group_name_from_string(std::string_view s) {
  for (auto n : {GroupName::Trivial, GroupName::Z2, GroupName::Z2xZ2, GroupName::D8, GroupName::D8xZ2,
                 GroupName::GammaV2})
    if (to_string(n) == s) return n;
  throw Error(ErrorKind::Parse, "unknown group name '" + std::string(s) + "'");
}

GroupDescriptor GroupDescriptor::of(GroupName name) {
  GroupDescriptor d{name, std::nullopt, std::nullopt};
  switch (name) {
    case GroupName::Trivial: d.realization = grp::trivial_group(); break;
    case GroupName::Z2: d.realization = grp::cyclic(2); break;
    case GroupName::Z2xZ2: d.realization = grp::klein(); break;
    case GroupName::D8: d.realization = grp::dihedral(8); break;
    case GroupName::D8xZ2: d.realization = grp::direct_product(grp::dihedral(8), grp::cyclic(2)); break;
    case GroupName::GammaV2: d.presentation = grp::parse_presentation("gens: V,T; rels: V^4, V^2 T V^-2 T^-1"); break;
  }
  return d;
}

std::optional<std::size_t> GroupDescriptor::order() const {
  if (realization) return realization->order();
  return std::nullopt;
}

// ---------------------------------------------------------------- citations

std::string_view citation_tag(Citation c) { return info(c).tag; }
std::string_view citation_statement(Citation c) { return info(c).statement; }

Citation citation_from_tag(std::string_view tag) {
  for (const auto& i : kCitations)
    if (i.tag == tag) return i.id;
  throw Error(ErrorKind::Parse, "unknown citation tag '" + std::string(tag) + "'");
}

const std::vector<Citation>& all_citations() {
  static const std::vector<Citation> all = [] {
    std::vector<Citation> out;
    for (const auto& i : kCitations) out.push_back(i.id);
    return out;
  }();
  return all;
}

// ---------------------------------------------------------------- families

void validate(const KnotFamily& f) {
  std::visit(overloaded{
                 [](const UnknotSphere& u) {
                   if (u.n < 5) unsupported("unknotted sphere requires n >= 5, got n=" + std::to_string(u.n));
                 },
                 [](const EqualProduct& e) {
                   if (e.p < 1) unsupported("S^p x S^p requires p >= 1, got p=" + std::to_string(e.p));
                 },
                 [](const UnequalProduct& u) {
                   if (u.p < 2 || u.q <= u.p)
                     unsupported("S^p x S^q requires 2 <= p < q, got p=" + std::to_string(u.p) +
                                 " q=" + std::to_string(u.q));
                 },
                 [](const AdjacentProduct& a) {
                   if (a.p < 9 || a.p % 8 != 6)
                     unsupported("S^{p-2} x S^{p-1} requires p >= 9 and p = 6 (mod 8), got p=" +
                                 std::to_string(a.p));
                 },
             },
             f);
}

std::string describe(const KnotFamily& f) {
  return std::visit(
      overloaded{
          [](const UnknotSphere& u) { return "(S^" + std::to_string(u.n + 2) + ", S^" + std::to_string(u.n) + ")"; },
          [](const EqualProduct& e) {
            return "(S^" + std::to_string(2 * e.p + 2) + ", S^" + std::to_string(e.p) + " x S^" +
                   std::to_string(e.p) + ")";
          },
          [](const UnequalProduct& u) {
            return "(S^" + std::to_string(u.p + u.q + 2) + ", S^" + std::to_string(u.p) + " x S^" +
                   std::to_string(u.q) + ")";
          },
          [](const AdjacentProduct& a) {
            return "(S^" + std::to_string(2 * a.p - 1) + ", S^" + std::to_string(a.p - 2) + " x S^" +
                   std::to_string(a.p - 1) + ")";
          },
      },
      f);
}

bool ClassificationResult::orders_consistent() const {
  if (!image.is_known() || !kernel.is_known() || !total.is_known()) return true;
  const auto i = image.group->order(), k = kernel.group->order(), t = total.group->order();
  if (!i || !k || !t) return true;
  return *i * *k == *t;
}

ClassificationResult classify(const KnotFamily& f) {
  validate(f);
  ClassificationResult r;
  std::visit(
      overloaded{
          [&](const UnknotSphere&) {
            r.image = GroupField::known(GroupName::Trivial);
            r.kernel = GroupField::known(GroupName::Trivial);
            r.total = GroupField::known(GroupName::Trivial);
            r.splits = true;
            r.citations = {Citation::UnknotTrivial, Citation::PseudoIsotopy};
          },
          [&](const EqualProduct& e) {
            if (e.p == 1) {
              r.image = GroupField::known(GroupName::GammaV2);
              r.kernel = GroupField::known(GroupName::Trivial);
              r.total = GroupField::known(GroupName::GammaV2);
              r.splits = true;
              r.citations = {Citation::TorusCase, Citation::AllOddP};
              r.notes.push_back("torus in S^4: the homology representation is faithful");
            } else if (e.p % 2 == 1) {
              r.image = GroupField::known(GroupName::GammaV2);
              r.kernel = GroupField::known(GroupName::Trivial);
              r.total = GroupField::known(GroupName::GammaV2);
              r.splits = true;
              r.citations = {Citation::OddTotal, Citation::OddImageFull, Citation::OddKernelTrivial,
                             Citation::PseudoIsotopy, Citation::AllOddP};
              if (e.p == 3) r.notes.push_back("p = 3: kernel triviality via the Pontrjagin class");
              if (e.p == 3 || e.p == 7) r.notes.push_back("Hopf invariant one dimension; classified like every odd p");
            } else if (e.p == 2) {
              r.image = GroupField::known(GroupName::Z2xZ2);
              r.kernel = GroupField::unknown("p = 2: only extendability of the generators is established");
              r.total = GroupField::unknown("p = 2: only extendability of the generators is established");
              r.splits_reason = "p = 2: kernel undetermined";
              r.citations = {Citation::S2xS2Extendable, Citation::EvenImage};
              r.notes.push_back("each generator of pi_0 Diff(S^2 x S^2) has a representative extendable to S^6");
            } else {
              r.image = GroupField::known(GroupName::Z2xZ2);
              r.kernel = GroupField::known(GroupName::Z2xZ2);
              r.total = GroupField::known(GroupName::D8xZ2);
              r.splits = even_model_splits();
              r.splits_reason = "computed by complement search in the multiplication-table model";
              r.citations = {Citation::EvenTotal, Citation::EvenKernel, Citation::EvenImage,
                             Citation::EvenQuotientD8, Citation::ModelComplement};
            }
          },
          [&](const UnequalProduct&) {
            r.image = GroupField::known(GroupName::Z2);
            r.kernel = GroupField::unknown("kernel of h_E is not determined for S^p x S^q with p < q");
            r.total = GroupField::unknown("only the homology image is determined for S^p x S^q with p < q");
            r.splits_reason = "kernel undetermined";
            r.citations = {Citation::UnequalImage};
          },
          [&](const AdjacentProduct&) {
            r.image = GroupField::known(GroupName::Z2);
            r.kernel = GroupField::known(GroupName::Z2);
            r.total = GroupField::known(GroupName::Z2xZ2);
            r.splits = true;
            r.citations = {Citation::SplitFamily, Citation::UnequalImage, Citation::PseudoIsotopy};
          },
      },
      f);
  if (!r.orders_consistent()) throw Error(ErrorKind::OutOfDomain, "internal order bookkeeping failure");
  return r;
}

// ---------------------------------------------------------------- exact sequences

std::vector<ExactSequence> exact_sequence_report(const KnotFamily& f) {
  validate(f);
  std::vector<ExactSequence> out;
  const std::string e_label = "E" + describe(f);
  std::visit(
      overloaded{
          [&](const EqualProduct& e) {
            if (e.p % 2 == 0 && e.p >= 4) {
              const auto model = grp::build_e_even_model();
              ExactSequence s;
              s.label = "homology extension";
              s.terms = {"0", "Z2+Z2", e_label, "Z2+Z2", "0"};
              s.orders = {1, 4, static_cast<std::int64_t>(model.group.order()), 4, 1};
              s.order_consistent = 4 * 4 == static_cast<std::int64_t>(model.group.order()) &&
                                   model.kernel.size() == 4 &&
                                   grp::is_isomorphic(grp::quotient(model.group, model.kernel), grp::klein());
              s.splits = grp::has_complement(model.group, model.kernel);
              s.citations = {Citation::EvenKernel, Citation::EvenImage, Citation::ModelComplement};
              out.push_back(std::move(s));
            } else if (e.p % 2 == 1 && e.p >= 3) {
              const auto hom = htpy::hom_to(2, htpy::s_pi_p_so_p(e.p));
              ExactSequence spheres;
              spheres.label = "homotopy-sphere sequence";
              spheres.terms = {"0", "Theta_" + std::to_string(2 * e.p + 1), "pi_0 SDiff(S^" + std::to_string(e.p) +
                                 " x S^" + std::to_string(e.p) + ")",
                             "Hom(H_p, S pi_p(SO(p))) = " + hom.to_string(), "0"};
              spheres.orders = {1, std::nullopt, std::nullopt, hom.order(), 1};
              spheres.citations = {Citation::HomotopySphereSequence};
              out.push_back(std::move(spheres));

              ExactSequence restricted;
              restricted.label = "homology extension";
              restricted.terms = {"0", "0", e_label, "GammaV2", "0"};
              restricted.orders = {1, 1, std::nullopt, std::nullopt, 1};
              restricted.splits = true;
              restricted.citations = {Citation::OddKernelTrivial, Citation::PseudoIsotopy, Citation::OddImageFull};
              out.push_back(std::move(restricted));
            } else {
              unsupported("no exact sequence is determined for S^p x S^p with p = " + std::to_string(e.p));
            }
          },
          [&](const AdjacentProduct&) {
            const auto k = grp::klein();
            const std::vector<std::size_t> first_factor = k.closure({2});
            ExactSequence s;
            s.label = "homology extension";
            s.terms = {"0", "Z2", e_label, "Z2", "0"};
            s.orders = {1, 2, 4, 2, 1};
            s.order_consistent = 2 * 2 == static_cast<std::int64_t>(k.order());
            s.splits = grp::has_complement(k, first_factor);
            s.citations = {Citation::SplitFamily};
            out.push_back(std::move(s));
          },
          [&](const auto&) { unsupported("exact sequences are reported for S^p x S^p and S^{p-2} x S^{p-1} only"); },
      },
      f);
  return out;
}

// ---------------------------------------------------------------- cross validation

bool CrossValidation::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

CrossValidation cross_validate(const KnotFamily& f) {
  validate(f);
  const auto* e = std::get_if<EqualProduct>(&f);
  if (!e) unsupported("cross validation is defined for S^p x S^p families");
  const int p = e->p;
  const auto result = classify(f);
  CrossValidation report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  if (p % 2 == 1) {
    // Mod-2 image of Gamma_V(2) against the stabilizer of the Arf-0 form.
    std::set<f2::Matrix> reductions;
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        for (int c = -3; c <= 3; ++c)
          for (int d = -3; d <= 3; ++d) {
            if (a * d - b * c != 1) continue;
            const sl2z::UniModMat2 m(a, b, c, d);
            if (!sl2z::is_member(m)) continue;
            reductions.insert(f2::Matrix::from_rows({{a & 1, b & 1}, {c & 1, d & 1}}));
          }
    const f2::QuadraticRefinement q(f2::SymplecticSpace::standard(1), f2::Bits{0});
    const auto stab = f2::stabilizer(q);
    const std::set<f2::Matrix> stab_set(stab.begin(), stab.end());
    add("mod2-image-equals-arf0-stabilizer", reductions == stab_set,
        std::to_string(reductions.size()) + " residues vs stabilizer of order " + std::to_string(stab.size()));

    const auto h = geom::induced_homology_action(geom::restrict_to_product(geom::build_omega(p), p, p));
    const auto v = sl2z::UniModMat2::V();
    const bool equals_v = h.m[0][0] == v.d1() && h.m[0][1] == v.d2() && h.m[1][0] == v.d3() && h.m[1][1] == v.d4();
    const bool member = sl2z::is_member(sl2z::UniModMat2(h.m[0][0], h.m[0][1], h.m[1][0], h.m[1][1]));
    add("omega-induces-V", equals_v, equals_v ? "induced action is V" : "induced action differs from V");
    add("omega-action-in-image", member && result.image.is_known() && result.image.group->name == GroupName::GammaV2,
        "parity test on the induced action");
  } else {
    if (p >= 4) {
      const auto model = grp::build_E_even();
      const auto& declared = *result.total.group->realization;
      add("model-isomorphic-to-D8xZ2", grp::is_isomorphic(model, declared), "table isomorphism search");
      const auto quotient_pres = grp::todd_coxeter(grp::dihedral_quotient_presentation(), 1000);
      add("quotient-presentation-is-D8", grp::is_isomorphic(quotient_pres, grp::dihedral(8)),
          "coset enumeration gives order " + std::to_string(quotient_pres.order()));
    }
    const auto hat = geom::induced_homology_action(geom::restrict_to_product(geom::build_omega_hat(p), p, p));
    const auto refl =
        geom::induced_homology_action(geom::restrict_to_product(geom::build_double_reflection(p), p, p));
    const auto generated = geom::generate_matrix_group({hat, refl});
    const auto& declared_image = *result.image.group->realization;
    add("induced-actions-generate-image", grp::is_isomorphic(generated.table, declared_image),
        "generated subgroup of GL(2,Z) has order " + std::to_string(generated.elements.size()));
  }
  return report;
}

}  // namespace emcg::cls
