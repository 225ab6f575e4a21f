#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pirlab::mv {

// Server count of the good-modulus construction as a function of r:
// 3^{r/2} (even r <= 103), 8 * 3^{(r-3)/2} (odd r <= 103), (3/4)^51 * 2^r (r >= 104).
// Throws ParamError for r < 2.
boost::multiprecision::cpp_int k_r_table(unsigned r);

}  // namespace pirlab::mv
