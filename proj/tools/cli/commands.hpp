#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/job.hpp"
#include "json.hpp"
#include "nll/groebner.hpp"
#include "nll/lefschetz.hpp"
#include "nll/predictor.hpp"
#include "nll/presentation.hpp"

namespace nll::cli {

using Json = nlohmann::ordered_json;

struct CommandResult {
  Json report;
  int exit_code = 0;  // 0 all claims hold, 2 some claim failed, 1 error
  std::string table;  // for --pretty
};

CommandResult run_hilbert(const JobSpec& spec);
CommandResult run_locus(const JobSpec& spec);
CommandResult run_line(const JobSpec& spec);
CommandResult run_survey(const JobSpec& spec);
// Dispatches on spec.command; errors become exit code 1 and {"error": ...}.
CommandResult run(const JobSpec& spec);

struct BuiltModule {
  GradedModule module;
  bool explicit_matrix = false;
  std::optional<std::uint64_t> effective_seed;
  std::vector<Rejection> rejections;
};
BuiltModule build_module(const DegreeData& degrees, const PrimeField& field, std::uint64_t seed,
                         const std::optional<std::vector<std::vector<std::string>>>& matrix);

struct LocusAnalysis {
  Locus locus;
  IdealMeasure middle;
  IdealMeasure intersection;
  // saturations agree and so do dimension and degree
  bool scheme_equal = false;
  Comparison comparison;
  Verdict verdict = Verdict::Match;
};
LocusAnalysis analyze_locus(const GradedModule& m);

// Claim rows shared by the reports.
Json claim(const std::string& id, const std::string& statement, bool passed,
           const std::string& detail = {});
Json structure_claims(const GradedModule& m);
Json locus_claims(const LocusAnalysis& analysis);

}  // namespace nll::cli
