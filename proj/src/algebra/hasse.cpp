#include "pirlab/algebra/hasse.hpp"

#include <functional>
#include <string>

namespace pirlab::algebra {

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (u64 j = 1; j <= k; ++j) {
    r = r * (n - k + j) / j;
    if (r > static_cast<unsigned __int128>(~0ULL)) {
      throw PirError(ErrorCode::ParamError,
                     "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
  }
  return static_cast<u64>(r);
}

std::vector<MultiIndex> multi_indices_below(std::size_t h, u64 e) {
  std::vector<MultiIndex> out;
  for (u64 w = 0; w < e; ++w) {
    MultiIndex cur{std::vector<u64>(h, 0)};
    // Fill coordinates so the first coordinate varies slowest in descending order;
    // for weight 1 this yields e_1, e_2, ..., e_h.
    std::function<void(std::size_t, u64)> rec = [&](std::size_t pos, u64 left) {
      if (pos == h) {
        if (left == 0) out.push_back(cur);
        return;
      }
      for (u64 v = left + 1; v-- > 0;) {
        cur.i[pos] = v;
        rec(pos + 1, left - v);
      }
      cur.i[pos] = 0;
    };
    if (h == 0) {
      if (w == 0) out.push_back(cur);
      continue;
    }
    rec(0, w);
  }
  return out;
}

}  // namespace pirlab::algebra
