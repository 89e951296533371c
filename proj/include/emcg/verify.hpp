#pragma once

// The acceptance suite: one exact check per criterion, shared by the
// acceptance test binary and `emcg verify-all`.

#include <string>
#include <vector>

namespace emcg::verify {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;    // failures, or a short summary of what was checked
  std::string citation;  // statement tag the criterion backs
};

CriterionResult stabilizer_characterization();
CriterionResult symplectic_counts();
CriterionResult dihedral_exercise();
CriterionResult presentation_and_word_problem();
CriterionResult ambient_matrices();
CriterionResult classification_table();
CriterionResult homotopy_table_lookups();
CriterionResult property_suites();

std::vector<CriterionResult> run_acceptance();

/// "PASS  [n] name (citation): detail"
std::string format_line(const CriterionResult& r);

}  // namespace emcg::verify
