#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nll/bundle.hpp"
#include "nll/groebner.hpp"
#include "nll/presentation.hpp"

namespace nll {

struct Prediction {
  int middle_degree = 0;
  int expected_codimension = 0;
  int predicted_codimension = 0;
  std::int64_t predicted_degree = 0;
  StabilityReport stability;
  ChernData chern;
};

// h_{i+1} - h_i + 1 at i = floor((d - 4) / 2).
int expected_codimension(const GradedModule& m);
// 1 if E is unstable or d is even, 2 if d is odd and E stable.
int predicted_codimension(const StabilityReport& s);
// Codimension 1: h_{i*}. Codimension 2: C(h_{i*+1}, h_{i*} - 1), which
// must agree with C(c2(E_norm), 2); throws InconsistentData otherwise.
std::int64_t predicted_degree(const GradedModule& m, const StabilityReport& s, const ChernData& c);
Prediction predict(const GradedModule& m);

std::int64_t binomial(std::int64_t n, std::int64_t k);

enum class Verdict { Match, GeneralityRequired, Mismatch };
std::string_view to_string(Verdict v);

struct ClaimResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct Comparison {
  Prediction prediction;
  IdealMeasure measured;
  std::vector<ClaimResult> claims;
  Verdict verdict = Verdict::Match;
};

// Verdicts: match when every claim holds; generality-required when the
// locus is a proper subset of the dual plane but thicker than expected;
// mismatch otherwise.
Comparison compare(const GradedModule& m, const StabilityReport& s, const ChernData& c,
                   const IdealMeasure& measured);

// Seeded draw of phi that passes the genericity audit: finite length,
// Hilbert function and socle as forced by the degrees, and h^0(E(t)) at the
// normalized twists equal to the kernel of phi in that degree. Failing
// seeds are replaced by seed + 1, seed + 2, ...
struct Rejection {
  std::uint64_t seed = 0;
  std::string reason;
};
struct GenericDraw {
  GradedModule module;
  std::uint64_t seed = 0;
  std::vector<Rejection> rejections;
};
GenericDraw draw_generic_module(const DegreeData& degrees, std::uint64_t seed,
                                PrimeField field = PrimeField(), int max_attempts = 16);

// Empty when the draw looks general, otherwise the first failed check.
std::string genericity_audit(const GradedModule& m);

}  // namespace nll
