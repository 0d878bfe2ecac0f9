#include <cstdio>
#include <string>
#include <vector>

#include "biframe/verification.hpp"

#ifndef BIFRAME_FIGURES_DIR
#define BIFRAME_FIGURES_DIR "data/figures"
#endif

int main(int argc, char** argv) {
  biframe::VerifyOptions opt;
  opt.data_dir = argc > 1 ? argv[1] : BIFRAME_FIGURES_DIR;
  std::vector<biframe::CriterionResult> rs = biframe::run_verification(opt);
  std::fputs(biframe::format_report(rs).c_str(), stdout);
  return biframe::all_passed(rs) ? 0 : 1;
}
