#include "rulings/regress.hpp"

#include "rulings/concavity.hpp"

namespace rulings {

const std::vector<RegressionVector>& regression_vectors() {
  static const std::vector<RegressionVector> vectors = {
      {"gl3-genus2-two-punctures",
       BpsSequence{0, 0, 0, 0, 2640, 51120, 225000, 461160, 552720, 429340, 227630, 84340,
                   21902, 3916, 460, 32, 1},
       "E-polynomial genus expansion, GL_3 character variety, genus 2, two punctures"},
      {"four-strand-staircase",
       BpsSequence{4, 20, 33, 24, 8, 1},
       "normalized ruling polynomial of the rainbow closure of "
       "s1^2 s2^2 s3^2 s4^2 s3^2 s2 s1"},
      {"a2", BpsSequence{2, 1}, "A_2 singularity (trefoil) BPS sequence"},
      {"a4", BpsSequence{3, 4, 1}, "A_4 singularity BPS sequence"},
      {"d4", BpsSequence{1, 3, 4, 1}, "D_4 singularity BPS sequence"},
      {"d5", BpsSequence{2, 6, 5, 1}, "D_5 singularity BPS sequence"},
      {"e6", BpsSequence{5, 10, 6, 1}, "E_6 singularity BPS sequence"},
      {"e7", BpsSequence{2, 11, 15, 7, 1}, "E_7 singularity BPS sequence"},
      {"e8", BpsSequence{7, 21, 21, 8, 1}, "E_8 singularity BPS sequence"},
  };
  return vectors;
}

std::vector<std::pair<const RegressionVector*, bool>> regress() {
  std::vector<std::pair<const RegressionVector*, bool>> out;
  for (const RegressionVector& v : regression_vectors())
    out.emplace_back(&v, conjecture_report(v.sequence).all_pass());
  return out;
}

}  // namespace rulings
