#include "nll/predictor.hpp"

#include <algorithm>
#include <optional>

#include "nll/errors.hpp"
#include "nll/matrix.hpp"

namespace nll {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int expected_codimension(const GradedModule& m) {
  const int i = m.degrees().middle_degree();
  return static_cast<int>(m.h(i + 1)) - static_cast<int>(m.h(i)) + 1;
}

int predicted_codimension(const StabilityReport& s) {
  if (!s.semistable() || s.c1_normalized == 0) return 1;
  return s.cls == StabilityClass::Stable ? 2 : 1;
}

std::int64_t predicted_degree(const GradedModule& m, const StabilityReport& s, const ChernData& c) {
  const int i = m.degrees().middle_degree();
  if (predicted_codimension(s) == 1) return static_cast<std::int64_t>(m.h(i));
  const auto lo = static_cast<std::int64_t>(m.h(i));
  const auto hi = static_cast<std::int64_t>(m.h(i + 1));
  const std::int64_t points = binomial(hi, lo - 1);
  const std::int64_t from_chern = binomial(c.twisted(s.normalized_twist).c2, 2);
  if (points != from_chern)
    throw InconsistentData("C(h_{i+1}, h_i - 1) = " + std::to_string(points) +
                           " but C(c2(E_norm), 2) = " + std::to_string(from_chern));
  return points;
}

Prediction predict(const GradedModule& m) {
  Prediction p;
  p.middle_degree = m.degrees().middle_degree();
  p.expected_codimension = expected_codimension(m);
  p.stability = classify_stability(m.degrees());
  p.chern = chern(m.degrees());
  p.predicted_codimension = predicted_codimension(p.stability);
  p.predicted_degree = predicted_degree(m, p.stability, p.chern);
  return p;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::GeneralityRequired: return "generality-required";
    case Verdict::Mismatch: return "mismatch";
  }
  return "";
}

Comparison compare(const GradedModule& m, const StabilityReport& s, const ChernData& c,
                   const IdealMeasure& measured) {
  Comparison out;
  out.prediction.middle_degree = m.degrees().middle_degree();
  out.prediction.expected_codimension = expected_codimension(m);
  out.prediction.predicted_codimension = predicted_codimension(s);
  out.prediction.stability = s;
  out.prediction.chern = c;
  out.measured = measured;

  std::optional<std::string> degree_error;
  try {
    out.prediction.predicted_degree = predicted_degree(m, s, c);
  } catch (const InconsistentData& e) {
    degree_error = e.what();
  }

  const int codim = measured.codimension();
  const auto& pr = out.prediction;
  const auto num = [](std::int64_t x) { return std::to_string(x); };
  out.claims.push_back({"wlp-floor", codim >= 1, "measured codimension " + num(codim) + " >= 1"});
  out.claims.push_back({"expected-codimension", codim == pr.expected_codimension,
                        "expected " + num(pr.expected_codimension) + ", measured " + num(codim)});
  out.claims.push_back({"predicted-codimension", codim == pr.predicted_codimension,
                        "predicted " + num(pr.predicted_codimension) + ", measured " + num(codim)});
  if (degree_error) {
    out.claims.push_back({"degree-identity", false, *degree_error});
  } else {
    out.claims.push_back({"predicted-degree", measured.degree == pr.predicted_degree,
                          "predicted " + num(pr.predicted_degree) + ", measured " + num(measured.degree)});
  }

  const bool all = std::all_of(out.claims.begin(), out.claims.end(),
                               [](const ClaimResult& r) { return r.passed; });
  if (all)
    out.verdict = Verdict::Match;
  else if (out.claims[0].passed && codim < pr.expected_codimension)
    out.verdict = Verdict::GeneralityRequired;
  else
    out.verdict = Verdict::Mismatch;
  return out;
}

std::string genericity_audit(const GradedModule& m) {
  const DegreeData& dd = m.degrees();
  if (hilbert_function(m) != resolution_hilbert_function(dd))
    return "Hilbert function differs from the one forced by the degrees";
  std::vector<int> expected;
  for (int bj : dd.b) expected.push_back(dd.d() - bj - 3);
  std::sort(expected.begin(), expected.end());
  if (socle(m) != expected) return "socle degrees differ from d - b_j - 3";
  const StabilityReport s = classify_stability(dd);
  for (int t : {s.normalized_twist - 1, s.normalized_twist}) {
    const Matrix phi = graded_piece_matrix(m.presentation(), t);
    const auto kernel = static_cast<std::int64_t>(phi.cols() - rank(phi));
    if (kernel != h0(dd, t)) return "h0(E(" + std::to_string(t) + ")) differs from ker(phi)";
  }
  return {};
}

GenericDraw draw_generic_module(const DegreeData& degrees, std::uint64_t seed, PrimeField field,
                                int max_attempts) {
  std::vector<Rejection> rejections;
  for (int k = 0; k < max_attempts; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    try {
      GradedModule m(random_presentation(degrees, s, field));
      std::string reason = genericity_audit(m);
      if (reason.empty()) return GenericDraw{std::move(m), s, std::move(rejections)};
      rejections.push_back({s, std::move(reason)});
    } catch (const NotFiniteLength& e) {
      rejections.push_back({s, e.what()});
    }
  }
  throw InconsistentData("no generic presentation found in " + std::to_string(max_attempts) +
                         " seeds starting at " + std::to_string(seed));
}

}  // namespace nll
