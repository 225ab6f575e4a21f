#pragma once

#include <vector>

#include "pirlab/algebra/modarith.hpp"

namespace pirlab::mv {

using algebra::u64;

// Nonzero delta in Z_m whose residue modulo every prime factor of m is 0 or 1,
// ascending. Requires m squarefree, m >= 2.
std::vector<u64> canonical_set(u64 m);

// {0} together with canonical_set(m), ascending.
std::vector<u64> canonical_set_with_zero(u64 m);

}  // namespace pirlab::mv
