#include "homoid/cancellativity.hpp"

#include <limits>

#include "homoid/error.hpp"
#include "homoid/rewrite.hpp"

namespace homoid {

char const* to_string(Side s) {
  switch (s) {
    case Side::left:
      return "left";
    case Side::right:
      return "right";
    case Side::both:
      return "both";
  }
  return "?";
}

CancellationReport left_cancellative_up_to(GradedTable const& table) {
  auto const d_max = table.max_degree();
  auto const gens  = table.generators();

  struct Found {
    ElementId x, y, product;
  };
  // one slot per (degree, generator), scanned in that order afterwards
  std::vector<std::optional<Found>> found(d_max * gens.size());

  auto const jobs = static_cast<std::int64_t>(found.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t job = 0; job < jobs; ++job) {
    auto const d = static_cast<std::size_t>(job) / gens.size();
    auto const v = gens[static_cast<std::size_t>(job) % gens.size()];
    auto const base = table.first_of_degree(d + 1);
    std::vector<ElementId> preimage(table.stratum_size(d + 1),
                                    std::numeric_limits<ElementId>::max());
    for (ElementId x = table.first_of_degree(d); x < table.end_of_degree(d);
         ++x) {
      auto  vx   = table.multiply(v, x);
      auto& slot = preimage[vx - base];
      if (slot != std::numeric_limits<ElementId>::max()) {
        found[job] = Found{slot, x, vx};
        break;
      }
      slot = x;
    }
  }

  CancellationReport report{Side::left, d_max, {}, {}};
  for (std::size_t job = 0; job < found.size(); ++job) {
    if (found[job]) {
      auto const v       = gens[job % gens.size()];
      report.verdict     = CancellationReport::Verdict::counterexample;
      report.witness     = CancellationWitness{Side::left,
                                           table.element(v),
                                           table.element(found[job]->x),
                                           table.element(found[job]->y),
                                           table.element(found[job]->product)};
      break;
    }
  }
  return report;
}

CancellationReport left_cancellative_up_to(Presentation const& p,
                                           std::size_t         d_max,
                                           Limits const&       limits) {
  if (d_max < 1) {
    throw ValidationError("cancellativity checks need a bound of at least 1");
  }
  return left_cancellative_up_to(GradedTable(p, d_max, limits));
}

CancellationReport cancellative_up_to(Presentation const& p,
                                      std::size_t         d_max,
                                      Limits const&       limits) {
  auto left = left_cancellative_up_to(p, d_max, limits);
  if (left.witness) {
    left.side = Side::both;
    return left;
  }
  auto right = left_cancellative_up_to(reverse_presentation(p), d_max, limits);
  CancellationReport report{Side::both, d_max, right.verdict, {}};
  if (right.witness) {
    // v x' = v y' in the opposite monoid is rev(x') v = rev(y') v here.
    auto const& w  = *right.witness;
    report.witness = CancellationWitness{
        Side::right,
        w.generator,
        canonical(p, reversed(w.x.canonical), limits),
        canonical(p, reversed(w.y.canonical), limits),
        canonical(p, reversed(w.product.canonical), limits)};
  }
  return report;
}

bool verify_witness(Presentation const& p, CancellationWitness const& w) {
  Word const& v = w.generator.canonical;
  Word        px, py;
  if (w.side == Side::right) {
    px = concat(w.x.canonical, v);
    py = concat(w.y.canonical, v);
  } else {
    px = concat(v, w.x.canonical);
    py = concat(v, w.y.canonical);
  }
  return are_equivalent(p, px, py) && are_equivalent(p, px, w.product.canonical)
         && !are_equivalent(p, w.x.canonical, w.y.canonical);
}

}  // namespace homoid
