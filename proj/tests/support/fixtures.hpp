#pragma once

#include <string>
#include <vector>

#include "nll/predictor.hpp"
#include "nll/presentation.hpp"

namespace fixtures {

struct Named {
  std::string name;
  nll::DegreeData degrees;
};

inline nll::DegreeData ci(int a1, int a2, int a3) { return nll::DegreeData::make({a1, a2, a3}, {0}); }

inline const std::vector<Named>& generic() {
  static const std::vector<Named> all{
      {"(2,2,3)/(0)", ci(2, 2, 3)},
      {"(2,2,2)/(0)", ci(2, 2, 2)},
      {"(2,3,3)/(0)", ci(2, 3, 3)},
      {"(3,3,3)/(0)", ci(3, 3, 3)},
      {"(1,1,1,2)/(0,0)", nll::DegreeData::make({1, 1, 1, 2}, {0, 0})},
      {"(2,2,2,3)/(0,1)", nll::DegreeData::make({2, 2, 2, 3}, {0, 1})},
      {"(1,1,1,8)/(0,0)", nll::DegreeData::make({1, 1, 1, 8}, {0, 0})},
      {"(1,1,1,9)/(0,0)", nll::DegreeData::make({1, 1, 1, 9}, {0, 0})},
      {"(1,2,2,2)/(0,0)", nll::DegreeData::make({1, 2, 2, 2}, {0, 0})},
  };
  return all;
}

inline nll::GradedModule draw(const nll::DegreeData& dd, std::uint64_t seed = 1,
                              nll::PrimeField field = nll::PrimeField()) {
  return nll::draw_generic_module(dd, seed, field).module;
}

// (x1^3, x2^4, x3^4)
inline nll::PresentationMatrix monomial_344(nll::PrimeField field = nll::PrimeField()) {
  using nll::Monomial;
  using nll::Polynomial;
  using nll::Ring;
  std::vector<std::vector<Polynomial>> row(1);
  row[0].push_back(Polynomial::term(field, Ring::Primal, Monomial{{3, 0, 0}}, nll::Fp{1}));
  row[0].push_back(Polynomial::term(field, Ring::Primal, Monomial{{0, 4, 0}}, nll::Fp{1}));
  row[0].push_back(Polynomial::term(field, Ring::Primal, Monomial{{0, 0, 4}}, nll::Fp{1}));
  return nll::PresentationMatrix(ci(3, 4, 4), field, std::move(row));
}

}  // namespace fixtures
