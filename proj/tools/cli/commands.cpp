#include "cli/commands.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "nll/bundle.hpp"
#include "nll/errors.hpp"
#include "nll/jumping.hpp"
#include "nll/version.hpp"

namespace nll::cli {
namespace {

Json header(const JobSpec& spec) {
  Json j;
  j["tool"] = "lefschetz-locus";
  j["version"] = std::string(kVersion);
  j["command"] = spec.command;
  j["prime"] = spec.prime;
  j["seed"] = spec.seed;
  return j;
}

Json degrees_json(const DegreeData& dd) {
  return Json{{"a", dd.a}, {"b", dd.b}, {"n", dd.n()}, {"d", dd.d()}, {"e", dd.socle_degree()}};
}

Json phi_json(const BuiltModule& built) {
  Json j;
  j["source"] = built.explicit_matrix ? "explicit" : "seeded";
  if (built.effective_seed) j["effective_seed"] = *built.effective_seed;
  Json rejected = Json::array();
  for (const auto& r : built.rejections) rejected.push_back({{"seed", r.seed}, {"reason", r.reason}});
  j["rejected_seeds"] = rejected;
  return j;
}

Json stability_json(const StabilityReport& s) {
  Json j;
  j["class"] = std::string(to_string(s.cls));
  j["normalized_twist"] = s.normalized_twist;
  j["c1_normalized"] = s.c1_normalized;
  if (s.instability_index)
    j["instability_index"] = *s.instability_index;
  else
    j["instability_index"] = nullptr;
  const SplittingType g = s.generic_splitting();
  j["generic_splitting"] = {g.alpha, g.beta};
  return j;
}

Json measure_json(const IdealMeasure& m) {
  return Json{{"dimension", m.dimension},
              {"codim", m.codimension()},
              {"degree", m.degree},
              {"hilbert_constant", m.hilbert_constant},
              {"residual_points", m.residual_points}};
}

bool all_passed(const Json& claims) {
  return std::all_of(claims.begin(), claims.end(), [](const Json& c) { return c["passed"].get<bool>(); });
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
  return ss.str();
}

std::string join(const std::vector<int>& v) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
  return ss.str();
}

void table_row(std::string& table, const std::string& key, const std::string& value) {
  std::string k = key;
  k.resize(std::max<std::size_t>(k.size() + 2, 28), ' ');
  table += k + value + "\n";
}

std::string claims_table(const Json& claims) {
  std::string t;
  for (const auto& c : claims)
    table_row(t, c["id"].get<std::string>(), c["passed"].get<bool>() ? "pass" : "FAIL");
  return t;
}

}  // namespace

Json claim(const std::string& id, const std::string& statement, bool passed, const std::string& detail) {
  Json j{{"id", id}, {"statement", statement}, {"passed", passed}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

BuiltModule build_module(const DegreeData& degrees, const PrimeField& field, std::uint64_t seed,
                         const std::optional<std::vector<std::vector<std::string>>>& matrix) {
  if (!matrix) {
    GenericDraw draw = draw_generic_module(degrees, seed, field);
    return BuiltModule{std::move(draw.module), false, draw.seed, std::move(draw.rejections)};
  }
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& row : *matrix) {
    std::vector<Polynomial> out;
    for (const auto& cell : row) out.push_back(parse_polynomial(cell, field, Ring::Primal));
    entries.push_back(std::move(out));
  }
  return BuiltModule{GradedModule(PresentationMatrix(degrees, field, std::move(entries))), true,
                     std::nullopt, {}};
}

Json structure_claims(const GradedModule& m) {
  const DegreeData& dd = m.degrees();
  const std::vector<std::size_t> h = hilbert_vector(m);
  Json claims = Json::array();
  claims.push_back(claim("finite-length", "M_t = 0 for e < t <= e + 3", true));

  claims.push_back(claim("hilbert-from-resolution",
                         "h_t agrees with the Hilbert function forced by the resolution degrees",
                         hilbert_function(m) == resolution_hilbert_function(dd)));
  claims.push_back(claim("unimodal", "h is non-decreasing, then non-increasing", is_unimodal(h)));
  if (dd.b_all_zero()) {
    bool symmetric = true;
    for (std::size_t t = 0; t < h.size(); ++t) symmetric = symmetric && h[t] == h[h.size() - 1 - t];
    claims.push_back(claim("symmetric", "h_t = h_{d-3-t} when b = 0", symmetric));
  }
  std::vector<int> expected;
  for (int bj : dd.b) expected.push_back(dd.d() - bj - 3);
  std::sort(expected.begin(), expected.end());
  const std::vector<int> found = socle(m);
  claims.push_back(claim("socle-degrees", "socle of M sits in degrees d - b_j - 3", found == expected,
                         "found {" + join(found) + "}, formula {" + join(expected) + "}"));
  return claims;
}

LocusAnalysis analyze_locus(const GradedModule& m) {
  LocusAnalysis a;
  a.locus = locus_ideal(m);
  a.middle = measure(a.locus.middle_basis);
  a.intersection = measure(a.locus.intersection);
  const GroebnerBasis sat_mid = saturate(a.locus.middle_basis);
  const GroebnerBasis sat_all = saturate(a.locus.intersection);
  a.scheme_equal = same_ideal(sat_mid, sat_all) && a.middle.dimension == a.intersection.dimension &&
                   a.middle.degree == a.intersection.degree;
  const DegreeData& dd = m.degrees();
  a.comparison = compare(m, classify_stability(dd), chern(dd), a.middle);
  a.verdict = a.comparison.verdict;
  if (!a.scheme_equal && a.verdict == Verdict::Match) a.verdict = Verdict::Mismatch;
  return a;
}

Json locus_claims(const LocusAnalysis& a) {
  Json claims = Json::array();
  for (const auto& c : a.comparison.claims) {
    std::string statement;
    if (c.id == "wlp-floor") statement = "the non-Lefschetz locus is a proper subset of the dual plane";
    if (c.id == "expected-codimension") statement = "measured codimension equals h_{i*+1} - h_{i*} + 1";
    if (c.id == "predicted-codimension")
      statement = "codimension is 1 for d even or E unstable, 2 for d odd and E stable";
    if (c.id == "predicted-degree")
      statement = "degree is h_{i*} in codimension 1 and C(h_{i*+1}, h_{i*} - 1) in codimension 2";
    if (c.id == "degree-identity") statement = "C(h_{i*+1}, h_{i*} - 1) = C(c2(E_norm), 2)";
    claims.push_back(claim(c.id, statement, c.passed, c.detail));
  }
  claims.push_back(claim("middle-degree-localization",
                         "the middle-degree locus and the full intersection define the same scheme",
                         a.scheme_equal));
  return claims;
}

CommandResult run_hilbert(const JobSpec& spec) {
  const PrimeField F(spec.prime);
  const DegreeData dd = spec.degrees();
  const BuiltModule built = build_module(dd, F, spec.seed, spec.matrix);
  const GradedModule& m = built.module;

  CommandResult out;
  Json& r = out.report;
  r = header(spec);
  r["degrees"] = degrees_json(dd);
  r["phi"] = phi_json(built);
  r["hilbert"] = hilbert_vector(m);
  r["hilbert_from"] = m.min_degree();
  r["length"] = m.length();
  r["socle"] = socle(m);
  const RationalAudit audit = rational_rank_audit(m.presentation());
  Json claims = structure_claims(m);
  claims.push_back(claim("rational-rank-audit", "ranks of every graded piece of phi agree over Q and F_p",
                         audit.ok()));
  r["claims"] = claims;
  out.exit_code = all_passed(claims) ? 0 : 2;

  table_row(out.table, "degrees", "a=(" + join(dd.a) + ") b=(" + join(dd.b) + ") d=" + std::to_string(dd.d()));
  table_row(out.table, "hilbert", "(" + join(hilbert_vector(m)) + ")");
  table_row(out.table, "socle", "{" + join(socle(m)) + "}");
  out.table += claims_table(claims);
  return out;
}

CommandResult run_locus(const JobSpec& spec) {
  const PrimeField F(spec.prime);
  const DegreeData dd = spec.degrees();
  const BuiltModule built = build_module(dd, F, spec.seed, spec.matrix);
  const GradedModule& m = built.module;
  const LocusAnalysis a = analyze_locus(m);
  const Prediction& p = a.comparison.prediction;

  CommandResult out;
  Json& r = out.report;
  r = header(spec);
  r["degrees"] = degrees_json(dd);
  r["phi"] = phi_json(built);
  r["hilbert"] = hilbert_vector(m);
  r["hilbert_from"] = m.min_degree();
  r["middle_degree"] = p.middle_degree;
  r["matrix_shape"] = {m.h(p.middle_degree + 1), m.h(p.middle_degree)};
  r["minor_size"] = a.locus.middle.minor_size;
  r["minors"] = a.locus.middle.generators.size();
  r["stability"] = stability_json(p.stability);
  r["chern"] = {{"c1", p.chern.c1}, {"c2", p.chern.c2}};
  r["expected"] = p.expected_codimension;
  r["predicted_codim"] = p.predicted_codimension;
  r["predicted_degree"] = p.predicted_degree;
  r["codim"] = a.middle.codimension();
  r["degree"] = a.middle.degree;
  r["middle_measure"] = measure_json(a.middle);
  r["intersection_measure"] = measure_json(a.intersection);
  r["contributing_degrees"] = a.locus.contributing_degrees;
  const Json claims = locus_claims(a);
  r["claims"] = claims;
  r["verdict"] = std::string(to_string(a.verdict));
  out.exit_code = a.verdict == Verdict::Match ? 0 : 2;

  table_row(out.table, "degrees", "a=(" + join(dd.a) + ") b=(" + join(dd.b) + ") d=" + std::to_string(dd.d()));
  table_row(out.table, "hilbert", "(" + join(hilbert_vector(m)) + ")");
  table_row(out.table, "stability", std::string(to_string(p.stability.cls)));
  table_row(out.table, "codim", "expected " + std::to_string(p.expected_codimension) + ", predicted " +
                                    std::to_string(p.predicted_codimension) + ", measured " +
                                    std::to_string(a.middle.codimension()));
  table_row(out.table, "degree", "predicted " + std::to_string(p.predicted_degree) + ", measured " +
                                     std::to_string(a.middle.degree));
  out.table += claims_table(claims);
  table_row(out.table, "verdict", std::string(to_string(a.verdict)));
  return out;
}

CommandResult run_line(const JobSpec& spec) {
  const PrimeField F(spec.prime);
  const DegreeData dd = spec.degrees();
  const BuiltModule built = build_module(dd, F, spec.seed, spec.matrix);
  const GradedModule& m = built.module;
  const std::array<Fp, 3> ell{F.from_int((*spec.line)[0]), F.from_int((*spec.line)[1]),
                              F.from_int((*spec.line)[2])};
  const LinePoint line(F, ell);

  const LefschetzCheck check = is_lefschetz(m, ell);
  const SplittingType split = splitting_type(restrict(m.presentation(), line));
  const SplittingType generic = generic_splitting_type(m.presentation(), spec.seed);
  const StabilityReport s = classify_stability(dd);
  const SplittingType normalized = split.twisted(s.normalized_twist);
  const bool jumping = split != generic;
  const bool oracle = lefschetz_oracle(s, normalized);

  bool ranks_agree = true;
  for (int i = m.min_degree(); i < m.max_degree(); ++i) {
    const auto measured = static_cast<std::int64_t>(rank(m.multiplication_map(ell, i)));
    ranks_agree = ranks_agree && measured == predicted_multiplication_rank(dd, split, i + 1);
  }

  CommandResult out;
  Json& r = out.report;
  r = header(spec);
  r["degrees"] = degrees_json(dd);
  r["phi"] = phi_json(built);
  r["line"] = {F.to_signed(ell[0]), F.to_signed(ell[1]), F.to_signed(ell[2])};
  r["lefschetz"] = check.lefschetz;
  r["failing_degrees"] = check.failing_degrees;
  r["splitting"] = {split.alpha, split.beta};
  r["normalized_splitting"] = {normalized.alpha, normalized.beta};
  r["generic_splitting"] = {generic.alpha, generic.beta};
  r["jumping"] = jumping;
  r["stability"] = stability_json(s);
  r["oracle_lefschetz"] = oracle;
  Json claims = Json::array();
  claims.push_back(claim("jumping-iff-not-lefschetz", "ell is a jumping line exactly when it is not Lefschetz",
                         jumping == !check.lefschetz));
  claims.push_back(claim("case-table-oracle", "the splitting-type case table predicts the rank test",
                         oracle == check.lefschetz));
  claims.push_back(claim("rank-from-splitting", "every rank of x ell follows from the splitting type",
                         ranks_agree));
  r["claims"] = claims;
  out.exit_code = all_passed(claims) ? 0 : 2;

  table_row(out.table, "line", "(" + join(std::vector<int>{static_cast<int>(F.to_signed(ell[0])),
                                                            static_cast<int>(F.to_signed(ell[1])),
                                                            static_cast<int>(F.to_signed(ell[2]))}) + ")");
  table_row(out.table, "lefschetz", check.lefschetz ? "yes" : "no");
  table_row(out.table, "splitting", "(" + std::to_string(split.alpha) + ", " + std::to_string(split.beta) + ")");
  table_row(out.table, "jumping", jumping ? "yes" : "no");
  out.table += claims_table(claims);
  return out;
}

CommandResult run(const JobSpec& spec) {
  try {
    if (spec.command == "hilbert") return run_hilbert(spec);
    if (spec.command == "locus") return run_locus(spec);
    if (spec.command == "line") return run_line(spec);
    if (spec.command == "survey") return run_survey(spec);
    throw UsageError("unknown command '" + spec.command + "'");
  } catch (const std::exception& e) {
    CommandResult out;
    out.report = header(spec);
    out.report["error"] = e.what();
    out.exit_code = 1;
    out.table = std::string("error: ") + e.what() + "\n";
    return out;
  }
}

}  // namespace nll::cli
