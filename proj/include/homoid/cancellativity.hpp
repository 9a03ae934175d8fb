#pragma once

#include <optional>

#include "homoid/enumerate.hpp"

namespace homoid {

enum class Side { left, right, both };

// v x = v y with x != y (left), or x v = y v with x != y (right).
struct CancellationWitness {
  Side    side;
  Element generator;
  Element x;
  Element y;
  Element product;  // v x (or x v)
};

// Bounded falsification only: "no counterexample up to d_max" is all a
// clean report ever claims.
struct CancellationReport {
  enum class Verdict { no_counterexample, counterexample };

  Side                               side    = Side::left;
  std::size_t                        d_max   = 0;
  Verdict                            verdict = Verdict::no_counterexample;
  std::optional<CancellationWitness> witness;
};

// Checks that x -> v x is injective on every stratum of degree < d_max, for
// every generator v. Reports the first failure (lowest degree, then lowest
// generator, then lowest x).
CancellationReport left_cancellative_up_to(GradedTable const& table);
CancellationReport left_cancellative_up_to(Presentation const& p,
                                           std::size_t         d_max,
                                           Limits const&       limits = {});

// Left check on p, then on its opposite presentation. Right witnesses are
// reported in p's orientation.
CancellationReport cancellative_up_to(Presentation const& p,
                                      std::size_t         d_max,
                                      Limits const&       limits = {});

// Re-checks a witness with the word-level closure (independent of the
// tables): the two products are equivalent and x, y are not.
bool verify_witness(Presentation const& p, CancellationWitness const& w);

char const* to_string(Side s);

}  // namespace homoid
