#pragma once

// Classification of extendable mapping classes for two families of trivial
// knots: the unknotted n-sphere in S^{n+2} and S^p x S^q standardly embedded
// in S^{p+q+2}. Results name the group of extendable classes E, the homology
// image Im(h_E), the homology kernel ker(h_E), and whether
// 0 -> ker -> E -> Im -> 0 splits. Anything not determined is Unknown with a
// reason, never a guess.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "emcg/smallgrp.hpp"

namespace emcg::cls {

enum class GroupName { Trivial, Z2, Z2xZ2, D8, D8xZ2, GammaV2 };
std::string_view to_string(GroupName n);
GroupName group_name_from_string(std::string_view s);

struct GroupDescriptor {
  GroupName name;
  std::optional<grp::MulTableGroup> realization;  // finite names
  std::optional<grp::Presentation> presentation;  // GammaV2

  static GroupDescriptor of(GroupName name);
  std::optional<std::size_t> order() const;
  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) { return a.name == b.name; }
};

/// A group-valued field that may be undetermined.
struct GroupField {
  std::optional<GroupDescriptor> group;
  std::string unknown_reason;

  static GroupField known(GroupName n) { return {GroupDescriptor::of(n), {}}; }
  static GroupField unknown(std::string reason) { return {std::nullopt, std::move(reason)}; }
  bool is_known() const { return group.has_value(); }
  friend bool operator==(const GroupField&, const GroupField&) = default;
};

struct UnknotSphere {
  int n;
};
struct EqualProduct {
  int p;
};
struct UnequalProduct {
  int p, q;
};
/// S^{p-2} x S^{p-1} in S^{2p-1}, p >= 9, p = 6 (mod 8).
struct AdjacentProduct {
  int p;
};
using KnotFamily = std::variant<UnknotSphere, EqualProduct, UnequalProduct, AdjacentProduct>;

/// Throws UnsupportedFamily when the parameters are outside the family's domain.
void validate(const KnotFamily& f);
std::string describe(const KnotFamily& f);

/// Tags for the statements a result relies on; see citation_statement().
enum class Citation {
  UnknotTrivial,
  PseudoIsotopy,
  OddImageFull,
  OddKernelTrivial,
  OddTotal,
  AllOddP,
  TorusCase,
  UnequalImage,
  EvenImage,
  EvenKernel,
  EvenTotal,
  EvenQuotientD8,
  S2xS2Extendable,
  SplitFamily,
  HomotopySphereSequence,
  ModelComplement,
};
std::string_view citation_tag(Citation c);
std::string_view citation_statement(Citation c);
Citation citation_from_tag(std::string_view tag);
const std::vector<Citation>& all_citations();

struct ClassificationResult {
  GroupField image;
  GroupField kernel;
  GroupField total;
  std::optional<bool> splits;
  std::string splits_reason;  // set when splits is unknown, or to explain how it was obtained
  std::vector<Citation> citations;
  std::vector<std::string> notes;

  /// |kernel| * |image| == |total| whenever all three are known and finite.
  bool orders_consistent() const;
  friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

ClassificationResult classify(const KnotFamily& f);

struct ExactSequence {
  std::string label;
  std::vector<std::string> terms;             // left to right, including the outer zeros
  std::vector<std::optional<std::int64_t>> orders;  // per term; nullopt when infinite or symbolic
  std::optional<bool> order_consistent;       // set when kernel, middle and quotient are finite
  std::optional<bool> splits;
  std::vector<Citation> citations;
};

std::vector<ExactSequence> exact_sequence_report(const KnotFamily& f);

struct CheckEntry {
  std::string name;
  bool passed;
  std::string detail;
};

struct CrossValidation {
  std::vector<CheckEntry> checks;
  bool ok() const;
};

/// Ties the classification to the independent modules (EqualProduct only).
CrossValidation cross_validate(const KnotFamily& f);

}  // namespace emcg::cls
