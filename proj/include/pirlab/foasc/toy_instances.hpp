#pragma once

#include <memory>

#include "pirlab/foasc/instance.hpp"

namespace pirlab::foasc {

// The two 9 x 2 arrays over S = F_3^2 with alpha_1(a, b) = a, alpha_2(a, b) = b and
// lambda = (2, 2); n = 2, k = 2, t = 1, R = F_3.
InstancePtr make_toy_f3();

// n = 1, k = 1, t = 0: S = {0, 1}, R = F_2, alpha_1 = 1, lambda = 1, omega = 1.
InstancePtr make_trivial();

enum class Defect {
  IgnoresRandomness,  // every row(i, l) is row 0 of Q^(i): breaks privacy and the OA property
  WrongLambda,        // lambda = (1, 1): breaks span and correctness
  Both,
};

// The toy family with a deliberate defect; negative control for the verifiers.
InstancePtr make_broken(Defect defect);

}  // namespace pirlab::foasc
