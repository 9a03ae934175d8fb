#include "homoid/inversion.hpp"

#include "homoid/divisibility.hpp"
#include "homoid/enumerate.hpp"
#include "homoid/towers.hpp"

namespace homoid {

InversionReport verify_inversion(Presentation const& p,
                                 std::size_t         d_max,
                                 Limits const&       limits) {
  GradedTable       table(p, d_max, limits);
  DivisibilityIndex index(table);

  InversionReport r;
  r.name    = p.name();
  r.d_max   = d_max;
  r.growth  = growth_series(table);
  r.skew    = skew_growth(index, limits);
  r.product = mul_truncated(r.growth, r.skew);
  r.pass    = r.product == TruncatedSeries::one(d_max);
  if (!r.pass) {
    for (std::size_t k = 0; k <= d_max; ++k) {
      if (r.product[k] != (k == 0 ? 1 : 0)) {
        r.first_failing_degree = k;
        break;
      }
    }
  }
  return r;
}

}  // namespace homoid
