#include "pirlab/mv/kr_table.hpp"

#include "pirlab/errors.hpp"

namespace pirlab::mv {

using boost::multiprecision::cpp_int;

cpp_int k_r_table(unsigned r) {
  if (r < 2) throw PirError(ErrorCode::ParamError, "k_r is defined for r >= 2");
  auto pow3 = [](unsigned e) -> cpp_int { return boost::multiprecision::pow(cpp_int(3), e); };
  if (r <= 103) return r % 2 == 0 ? pow3(r / 2) : 8 * pow3((r - 3) / 2);
  // (3/4)^51 2^r = 3^51 2^{r - 102}, an integer for r >= 104.
  return pow3(51) << (r - 102);
}

}  // namespace pirlab::mv
