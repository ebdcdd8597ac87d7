#ifndef ORTHO_VERIFY_HPP
#define ORTHO_VERIFY_HPP

#include <string>
#include <vector>

namespace ortho {

// One verification criterion: pass/fail, a short failure detail (empty on
// pass) and wall-clock seconds.
struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The full verification battery over the built-in catalog and the
// exhaustive enumeration up to enum_max elements:
//   1 filter-spectrum counts and the figure shapes
//   2 representation theorem L = COR(X+_L)
//   3 characterization homeomorphism X = X+_{COR(X)}
//   4 dual equivalence: functoriality and both naturality squares
//   5 duality dictionary (formulas, atoms, sums, completions, congruences)
//   6 subset calculus: double star vs box-diamond, triple-star law
//   7 negative controls (4-chain, O6, O10)
std::vector<CriterionResult> verify_all(int enum_max = 8);

}  // namespace ortho

#endif  // ORTHO_VERIFY_HPP
