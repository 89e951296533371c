#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>
#include <sstream>

#include "emcg/ambient_geom.hpp"
#include "emcg/classifier.hpp"
#include "emcg/error.hpp"
#include "emcg/f2_forms.hpp"
#include "emcg/io.hpp"
#include "emcg/sl2z.hpp"
#include "emcg/smallgrp.hpp"
#include "emcg/verify.hpp"

namespace emcg::cli {

namespace {

using io::Json;

std::string rows_text(const std::vector<std::vector<int>>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows[i][j]);
    s += "]";
  }
  return s + "]";
}

std::string values_text(const f2::QuadraticRefinement& q) {
  std::string s = "(";
  const auto v = q.basis_value_list();
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string action_text(const geom::HpAction& h) {
  std::ostringstream s;
  s << "[[" << h.m[0][0] << "," << h.m[0][1] << "],[" << h.m[1][0] << "," << h.m[1][1] << "]]";
  return s.str();
}

// Accepts a multiplication-table JSON object, a presentation "gens: ...; rels: ...",
// or one of the names C<n>, D<2n>, Q8, Klein, Trivial.
grp::MulTableGroup group_from_arg(const std::string& spec, std::size_t max_cosets) {
  const auto first = spec.find_first_not_of(" \t\n");
  if (first != std::string::npos && spec[first] == '{') return io::table_group_from_json(io::parse_json(spec));
  if (spec.find("gens") != std::string::npos) return grp::todd_coxeter(grp::parse_presentation(spec), max_cosets);
  auto number = [&](std::size_t from) -> std::size_t {
    try {
      std::size_t used = 0;
      const long v = std::stol(spec.substr(from), &used);
      if (used + from == spec.size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::Parse, "bad group name '" + spec + "'");
  };
  if (spec == "Q8") return grp::quaternion8();
  if (spec == "Klein" || spec == "Z2xZ2") return grp::klein();
  if (spec == "Trivial") return grp::trivial_group();
  if (spec == "D8xZ2") return grp::direct_product(grp::dihedral(8), grp::cyclic(2));
  if (!spec.empty() && spec[0] == 'C') return grp::cyclic(number(1));
  if (!spec.empty() && spec[0] == 'D') return grp::dihedral(number(1));
  throw Error(ErrorKind::Parse, "bad group '" + spec + "': expected JSON table, presentation or name");
}

cls::KnotFamily family_from(const std::string& name, std::optional<int> n, std::optional<int> p, std::optional<int> q) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw Error(ErrorKind::Parse, "family '" + name + "' needs " + flag);
    return *v;
  };
  if (name == "unknot") return cls::UnknotSphere{need(n, "--n")};
  if (name == "equal-product") return cls::EqualProduct{need(p, "--p")};
  if (name == "unequal-product") return cls::UnequalProduct{need(p, "--p"), need(q, "--q")};
  if (name == "adjacent-product") return cls::AdjacentProduct{need(p, "--p")};
  throw Error(ErrorKind::Parse, "unknown family '" + name + "'");
}

std::string field_text(const cls::GroupField& f) {
  return f.is_known() ? std::string(cls::to_string(f.group->name)) : "unknown (" + f.unknown_reason + ")";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra for mapping class groups of product knots", "emcg"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print JSON instead of text");

  std::function<void()> action;
  auto emit = [&](const Json& j, const std::string& text) { out << (json ? j.dump() : text) << '\n'; };

  // ----------------------------------------------------------- refinements
  std::string refinement;
  auto add_refinement = [&](CLI::App* sub) {
    sub->add_option("refinement", refinement, R"(Refinement JSON {"values":[...], "gram":[[...]]})")->required();
  };

  auto* arf = app.add_subcommand("arf", "Arf invariant of a quadratic refinement");
  add_refinement(arf);
  arf->callback([&] {
    action = [&] {
      const auto q = io::refinement_from_json(io::parse_json(refinement));
      const int a = f2::arf(q);
      emit({{"arf", a}}, std::to_string(a));
    };
  });

  auto* stab = app.add_subcommand("stabilizer", "Symplectic matrices fixing a refinement (dim <= 6)");
  add_refinement(stab);
  stab->callback([&] {
    action = [&] {
      const auto s = f2::stabilizer(io::refinement_from_json(io::parse_json(refinement)));
      Json list = Json::array();
      std::string text = "order " + std::to_string(s.size());
      for (const auto& m : s) {
        list.push_back(io::to_json(m));
        text += "\n" + rows_text(m.rows());
      }
      emit({{"order", s.size()}, {"matrices", list}}, text);
    };
  });

  auto* orb = app.add_subcommand("orbit", "Orbit of a refinement under Sp (dim <= 6)");
  add_refinement(orb);
  orb->callback([&] {
    action = [&] {
      const auto o = f2::orbit(io::refinement_from_json(io::parse_json(refinement)));
      Json list = Json::array();
      std::string text = "size " + std::to_string(o.size());
      for (const auto& q : o) {
        list.push_back(io::to_json(q));
        text += "\n" + values_text(q);
      }
      emit({{"size", o.size()}, {"refinements", list}}, text);
    };
  });

  int k = 0;
  bool list_sp = false;
  auto* esp = app.add_subcommand("enumerate-sp", "Enumerate Sp(2k, F2) for k <= 3");
  esp->add_option("--k", k, "Genus")->required();
  esp->add_flag("--list", list_sp, "Print every matrix");
  esp->callback([&] {
    action = [&] {
      const auto all = f2::enumerate_sp(k);
      Json j{{"k", k}, {"order", all.size()}};
      std::string text = std::to_string(all.size());
      if (list_sp) {
        Json list = Json::array();
        for (const auto& m : all) {
          list.push_back(io::to_json(m));
          text += "\n" + rows_text(m.rows());
        }
        j["matrices"] = list;
      }
      emit(j, text);
    };
  });

  // ----------------------------------------------------------- SL(2,Z)
  std::string matrix;
  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("matrix", matrix, R"(Matrix JSON {"rows":[[a,b],[c,d]]})")->required();
  };

  auto* member = app.add_subcommand("member", "Membership in Gamma_V(2)");
  add_matrix(member);
  member->callback([&] {
    action = [&] {
      const bool in = sl2z::is_member(io::unimod_from_json(io::parse_json(matrix)));
      emit({{"member", in}}, in ? "true" : "false");
    };
  });

  auto* mod2 = app.add_subcommand("mod2", "Reduction mod 2: Id, V or other");
  add_matrix(mod2);
  mod2->callback([&] {
    action = [&] {
      const auto c = std::string(sl2z::to_string(sl2z::reduce_mod2(io::unimod_from_json(io::parse_json(matrix)))));
      emit({{"class", c}}, c);
    };
  });

  auto* dec = app.add_subcommand("decompose", "Normal-form word in V and T for a member");
  add_matrix(dec);
  dec->callback([&] {
    action = [&] {
      const auto w = sl2z::decompose(io::unimod_from_json(io::parse_json(matrix)));
      Json j = io::to_json(w);
      j["word"] = sl2z::format_word(w);
      emit(j, sl2z::format_word(w));
    };
  });

  std::string word;
  auto* ev = app.add_subcommand("eval-word", "Evaluate a word such as \"V T^-2 V^3\" (left to right)");
  ev->add_option("word", word, "Word")->required();
  ev->callback([&] {
    action = [&] {
      const auto m = sl2z::eval_word(sl2z::parse_word(word));
      emit(io::to_json(m), m.to_string());
    };
  });

  // ----------------------------------------------------------- groups
  std::size_t max_cosets = 100000;
  std::string presentation;
  auto* ce = app.add_subcommand("coset-enum", "Todd-Coxeter enumeration of \"gens: a,b; rels: ...\"");
  ce->add_option("presentation", presentation, "Presentation")->required();
  ce->add_option("--max-cosets", max_cosets, "Cap on defined cosets")->capture_default_str();
  ce->callback([&] {
    action = [&] {
      const auto p = grp::parse_presentation(presentation);
      const auto t = grp::enumerate_cosets(p, max_cosets);
      Json j{{"index", t.live_cosets}, {"defined_cosets", t.defined_cosets}, {"generators", p.generator_names}};
      std::string text = "index " + std::to_string(t.live_cosets) + " (" + std::to_string(t.defined_cosets) +
                         " cosets defined)";
      if (t.live_cosets <= grp::kMaxOrder) {
        const auto g = grp::from_coset_table(t);
        j["abelian"] = g.is_abelian();
        j["group"] = io::to_json(g);
        text += g.is_abelian() ? ", abelian" : ", nonabelian";
      }
      emit(j, text);
    };
  });

  std::string group_a, group_b;
  auto* iso = app.add_subcommand("isomorphic", "Decide isomorphism of two finite groups");
  iso->add_option("first", group_a, "Table JSON, presentation, or name (C<n>, D<2n>, Q8, Klein, Trivial)")->required();
  iso->add_option("second", group_b, "Same forms as the first")->required();
  iso->add_option("--max-cosets", max_cosets, "Cap for presentations")->capture_default_str();
  iso->callback([&] {
    action = [&] {
      const auto g = group_from_arg(group_a, max_cosets);
      const auto h = group_from_arg(group_b, max_cosets);
      const auto witness = grp::find_isomorphism(g, h);
      Json j{{"isomorphic", witness.has_value()}, {"orders", {g.order(), h.order()}}};
      if (witness) j["map"] = *witness;
      emit(j, witness ? "true" : "false");
    };
  });

  // ----------------------------------------------------------- ambient matrices
  int p = 0;
  std::optional<int> q_opt;
  std::string variant = "omega";
  auto* bo = app.add_subcommand("build-omega", "Signed permutation matrix of an ambient rotation");
  bo->add_option("--p", p, "Sphere dimension")->required();
  bo->add_option("--q", q_opt, "Second dimension (variant prime)");
  bo->add_option("--variant", variant, "omega | hat | prime | double-reflection")
      ->check(CLI::IsMember({"omega", "hat", "prime", "double-reflection"}))
      ->capture_default_str();
  bo->callback([&] {
    action = [&] {
      geom::SignedPermMatrix m = geom::SignedPermMatrix::identity(1);
      if (variant == "omega") {
        m = geom::build_omega(p);
      } else if (variant == "hat") {
        m = geom::build_omega_hat(p);
      } else if (variant == "prime") {
        if (!q_opt) throw Error(ErrorKind::Parse, "variant prime needs --q");
        m = geom::build_omega_prime(p, *q_opt);
      } else {
        m = geom::build_double_reflection(p);
      }
      Json j = io::to_json(m);
      j["determinant"] = m.determinant();
      j["order"] = m.order();
      std::string text = "size " + std::to_string(m.size()) + ", det " + std::to_string(m.determinant()) +
                         ", order " + std::to_string(m.order());
      for (std::size_t i = 0; i < m.size(); ++i)
        text += "\nx" + std::to_string(i) + " -> " + (m.row(i).sign < 0 ? "-" : "") + "x" +
                std::to_string(m.row(i).col);
      emit(j, text);
    };
  });

  std::string perm;
  int ip = 0;
  std::optional<int> iq;
  auto* ia = app.add_subcommand("induced-action", "Action on H_p(S^p x S^q) of a block-structured matrix");
  ia->add_option("matrix", perm, R"(Signed permutation JSON {"size":n,"entries":[[row,col,sign],...]})")->required();
  ia->add_option("--p", ip, "First sphere dimension")->required();
  ia->add_option("--q", iq, "Second sphere dimension (default p)");
  ia->callback([&] {
    action = [&] {
      const auto m = io::signed_perm_from_json(io::parse_json(perm));
      const auto d = geom::restrict_to_product(m, ip, iq.value_or(ip));
      const auto h = geom::induced_homology_action(d);
      emit({{"descriptor", io::to_json(d)}, {"action", io::to_json(h)}}, action_text(h));
    };
  });

  // ----------------------------------------------------------- classification
  std::string family;
  std::optional<int> fn, fp, fq;
  bool sequences = false, cross = false;
  auto* cl = app.add_subcommand("classify", "Extendable mapping class group of a knot family");
  cl->add_option("--family", family, "unknot | equal-product | unequal-product | adjacent-product")->required();
  cl->add_option("--n", fn, "Sphere dimension (unknot)");
  cl->add_option("--p", fp, "First factor dimension");
  cl->add_option("--q", fq, "Second factor dimension (unequal-product)");
  cl->add_flag("--sequences", sequences, "Include the exact-sequence report");
  cl->add_flag("--cross-validate", cross, "Recompute the answer by independent routes");
  cl->callback([&] {
    action = [&] {
      const auto f = family_from(family, fn, fp, fq);
      const auto r = cls::classify(f);
      Json j = io::to_json(r);
      j["family"] = cls::describe(f);
      std::string text = cls::describe(f) + "\n  image:  " + field_text(r.image) + "\n  kernel: " +
                         field_text(r.kernel) + "\n  total:  " + field_text(r.total) + "\n  splits: " +
                         (r.splits ? (*r.splits ? "yes" : "no") : "unknown (" + r.splits_reason + ")");
      text += "\n  cites: ";
      for (std::size_t i = 0; i < r.citations.size(); ++i)
        text += (i ? ", " : "") + std::string(cls::citation_tag(r.citations[i]));
      for (const auto& n : r.notes) text += "\n  note: " + n;
      if (sequences) {
        Json seqs = Json::array();
        for (const auto& s : cls::exact_sequence_report(f)) {
          seqs.push_back(io::to_json(s));
          text += "\n  " + s.label + ": ";
          for (std::size_t i = 0; i < s.terms.size(); ++i) text += (i ? " -> " : "") + s.terms[i];
        }
        j["sequences"] = seqs;
      }
      int code = 0;
      if (cross) {
        const auto v = cls::cross_validate(f);
        j["cross_validation"] = io::to_json(v);
        for (const auto& c : v.checks) text += "\n  " + std::string(c.passed ? "ok   " : "FAIL ") + c.name;
        if (!v.ok()) code = 1;
      }
      emit(j, text);
      if (code) throw Error(ErrorKind::OutOfDomain, "cross-validation failed");
    };
  });

  auto* va = app.add_subcommand("verify-all", "Run the acceptance suite");
  va->callback([&] {
    action = [&] {
      const auto results = verify::run_acceptance();
      bool ok = true;
      Json list = Json::array();
      std::string text;
      for (const auto& r : results) {
        ok = ok && r.passed;
        list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                        {"citation", r.citation}});
        text += (text.empty() ? "" : "\n") + verify::format_line(r);
      }
      emit({{"ok", ok}, {"criteria", list}}, text);
      if (!ok) throw Error(ErrorKind::OutOfDomain, "acceptance suite failed");
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  }

  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  }
}

}  // namespace emcg::cli
