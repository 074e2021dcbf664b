#pragma once

#include <numeric>
#include <vector>

#include "mckay/group.hpp"

namespace mckay::testutil {

/// Every small pair (r, a), 2 <= r <= r_max, in lexicographic order.
inline std::vector<GroupParams> small_groups(Int r_max) {
  std::vector<GroupParams> out;
  for (Int r = 2; r <= r_max; ++r)
    for (Int a = 1; a < r; ++a)
      if (std::gcd(r, a) == 1) out.push_back(make_group(r, a));
  return out;
}

}  // namespace mckay::testutil
