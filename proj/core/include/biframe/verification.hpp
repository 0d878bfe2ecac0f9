#ifndef BIFRAME_VERIFICATION_HPP
#define BIFRAME_VERIFICATION_HPP

#include <string>
#include <vector>

namespace biframe {

struct CriterionResult {
  int id = 0;
  std::string tag;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  /// Directory holding the reference diagrams figure1.json .. figure3.json.
  std::string data_dir;
  /// Empty runs everything; otherwise only criteria whose tag matches.
  std::string filter;
};

/// Runs the verification suite. Criteria never throw; problems are reported
/// as failed results.
std::vector<CriterionResult> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<CriterionResult>& rs);

/// One line per criterion plus a summary line.
std::string format_report(const std::vector<CriterionResult>& rs);

}  // namespace biframe

#endif
