#pragma once

#include <span>
#include <utility>
#include <vector>

#include "homoid/enumerate.hpp"

namespace homoid {

// Left divisibility on a GradedTable, plus the operators cm_r, min_r and
// mcm restricted to degree <= table.max_degree().
//
// Truncation is exact for minimality: every divisor of an element of degree
// d has degree <= d, so whether a listed common multiple is minimal never
// depends on elements beyond the table. What truncation can hide is the
// existence of further (higher-degree) minimal common multiples; callers
// must not read an empty or singleton answer as a statement about the
// whole monoid.
class DivisibilityIndex {
 public:
  // table must outlive the index.
  explicit DivisibilityIndex(GradedTable const& table);

  GradedTable const& table() const noexcept { return *table_; }

  // u |_l v: some member of v's class starts with a member of u's class.
  bool left_divides(ElementId u, ElementId v) const;

  // All left divisors of v (including the identity and v), ascending.
  std::span<ElementId const> divisors(ElementId v) const {
    return divisors_[v];
  }
  // All right multiples of u within the table (including u), ascending.
  std::span<ElementId const> multiples(ElementId u) const {
    return multiples_[u];
  }

  // Elements of degree <= max_degree left-divisible by every member of j.
  // j must be nonempty.
  std::vector<ElementId> common_multiples(std::span<ElementId const> j) const;

  // min_r: members of s not properly left-divisible by another member of s.
  // s must be sorted.
  std::vector<ElementId> minimal(std::span<ElementId const> s) const;

  // min_r(cm_r(j)). mcm of a single element u is {u}.
  std::vector<ElementId> mcm(std::span<ElementId const> j) const;

  // All (x, y) with u x = v y and deg(u x) <= max_degree, sorted.
  std::vector<std::pair<ElementId, ElementId>> right_complements(
      ElementId u,
      ElementId v) const;

 private:
  GradedTable const*                  table_;
  std::vector<std::vector<ElementId>> divisors_;
  std::vector<std::vector<ElementId>> multiples_;
};

// Presentation-level entry points; each builds the tables it needs.

bool left_divides(Presentation const& p,
                  Element const&      u,
                  Element const&      v,
                  Limits const&       limits = {});

std::vector<std::pair<Element, Element>> right_complements(
    Presentation const& p,
    Element const&      u,
    Element const&      v,
    std::size_t         d_max,
    Limits const&       limits = {});

std::vector<Element> common_multiples(Presentation const&         p,
                                      std::vector<Element> const& j,
                                      std::size_t                 d_max,
                                      Limits const&               limits = {});

std::vector<Element> mcm(Presentation const&         p,
                         std::vector<Element> const& j,
                         std::size_t                 d_max,
                         Limits const&               limits = {});

// Condition L asks that every subset J of the generators with #J >= 2 has
// either a least common multiple or no common multiple at all.
struct ConditionLReport {
  enum class Verdict { no_violation_found, violated };

  struct Witness {
    std::vector<Element> subset;
    std::vector<Element> minimal;  // >= 2 distinct minimal common multiples
  };
  struct Least {
    std::vector<Element> subset;
    Element              lcm;  // the only minimal common multiple in bound
  };

  std::size_t                       d_max = 0;
  Verdict                           verdict = Verdict::no_violation_found;
  std::vector<Witness>              witnesses;
  std::vector<Least>                least;
  // Subsets with no common multiple of degree <= d_max.
  std::vector<std::vector<Element>> undetermined;
};

ConditionLReport condition_l_report(DivisibilityIndex const& index);
ConditionLReport condition_l_report(Presentation const& p,
                                    std::size_t         d_max,
                                    Limits const&       limits = {});

}  // namespace homoid
