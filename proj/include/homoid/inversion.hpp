#pragma once

#include <optional>
#include <string>

#include "homoid/limits.hpp"
#include "homoid/presentation.hpp"
#include "homoid/series.hpp"

namespace homoid {

// Outcome of checking P(t) N(t) = 1 through a given order, with P taken
// from the element count and N from the tower enumeration.
struct InversionReport {
  std::string                name;
  std::size_t                d_max = 0;
  TruncatedSeries            growth;   // P
  TruncatedSeries            skew;     // N
  TruncatedSeries            product;  // P N
  bool                       pass = false;
  std::optional<std::size_t> first_failing_degree;
};

InversionReport verify_inversion(Presentation const& p,
                                 std::size_t         d_max,
                                 Limits const&       limits = {});

}  // namespace homoid
