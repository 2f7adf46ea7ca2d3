#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ivcol/errors.hpp"

namespace ivcol {

// Subtraction-form gcd trace. Step 1 is (max(k,l), min(k,l)) and each step
// replaces (F, f) by the larger/smaller of (F - f, f), ending when both agree
// at sigma = gcd(k, l). The intermediate pairs drive the block construction
// and the matrix reduction, which is why the whole trace is kept.
struct EuclidTrace {
  int k = 0;
  int l = 0;
  std::vector<std::pair<int, int>> steps;  // (F_i, f_i), i = 1..s
  int s = 0;
  int sigma = 0;
};

inline EuclidTrace euclid_trace(int k, int l) {
  if (k < 1 || l < 1)
    throw PreconditionError("nonpositive input", "euclid_trace needs k, l >= 1");
  EuclidTrace tr;
  tr.k = k;
  tr.l = l;
  int F = std::max(k, l), f = std::min(k, l);
  tr.steps.emplace_back(F, f);
  while (F != f) {
    int d = F - f;
    F = std::max(d, f);
    f = std::min(d, f);
    tr.steps.emplace_back(F, f);
  }
  tr.s = static_cast<int>(tr.steps.size());
  tr.sigma = F;
  return tr;
}

}  // namespace ivcol
