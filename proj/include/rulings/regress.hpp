#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rulings/bps.hpp"

namespace rulings {

// A stored sequence with its mathematical origin; regress() runs the three
// conjecture predicates over all of them.
struct RegressionVector {
  std::string name;
  BpsSequence sequence;
  std::string source;
};

const std::vector<RegressionVector>& regression_vectors();

// (vector, all-three-predicates-pass) for every stored vector.
std::vector<std::pair<const RegressionVector*, bool>> regress();

}  // namespace rulings
