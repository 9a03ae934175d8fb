#pragma once

#include <cstdint>
#include <vector>

#include "homoid/divisibility.hpp"
#include "homoid/series.hpp"

namespace homoid {

// A tower (I_0, J_1, ..., J_n): J_1 is a subset of the generators I_0,
// J_{k+1} is a subset of I_k = mcm(J_k), and every stage has at least two
// members. Stage mcm sets are listed through degree `bound` only.
struct Tower {
  std::vector<Element>              ground;
  std::vector<std::vector<Element>> stages;      // J_1 .. J_n
  std::vector<std::vector<Element>> stage_mcms;  // I_1 .. I_n, truncated
  std::size_t                       bound = 0;

  std::size_t height() const noexcept { return stages.size(); }

  // |T|: I_n, or the ground for the height-0 tower.
  std::vector<Element> const& top() const {
    return stages.empty() ? ground : stage_mcms.back();
  }

  // (-1)^(#J_1 + ... + #J_n - n + 1)
  int sign() const noexcept;

  bool operator==(Tower const&) const = default;
};

// Every tower whose top contains an element of degree <= the table's
// max_degree, sorted by height and then by stage contents.
//
// Stages only ever use elements of degree < max_degree: each minimal common
// multiple of a set J with #J >= 2 has strictly larger degree than every
// member of J (if w = j x with x = 1 then w = j would be divisible by a
// second member of J of the same degree, forcing equality). So a tower
// contributing at degree e has every stage element below e and truncated
// enumeration misses nothing below the bound. Throws LimitError when more
// than limits.subset_budget stage subsets are expanded.
std::vector<Tower> enumerate_towers(DivisibilityIndex const& index,
                                    Limits const&            limits = {});
std::vector<Tower> enumerate_towers(Presentation const& p,
                                    std::size_t         d_max,
                                    Limits const&       limits = {});

// The skew growth series
//
//   N(t) = 1 + sum over towers T of sign(T) * sum_{D in |T|} t^deg(D)
//
// through order max_degree. Exact for the same reason as above. Computed
// with subtrees memoized on the stage mcm set, since distinct stages with
// equal mcm sets share everything above them.
TruncatedSeries skew_growth(DivisibilityIndex const& index,
                            Limits const&            limits = {});
TruncatedSeries skew_growth(Presentation const& p,
                            std::size_t         d_max,
                            Limits const&       limits = {});

// The same series summed tower by tower over an explicit enumeration.
TruncatedSeries skew_growth_from_towers(std::vector<Tower> const& towers,
                                        std::size_t               d_max);

// Signed contribution of all towers whose first stage is `first_stage`
// (no leading 1, no height-0 term).
TruncatedSeries rooted_skew(DivisibilityIndex const&      index,
                            std::vector<ElementId> const& first_stage,
                            Limits const&                 limits = {});

// Largest height among towers whose top is nonempty within the bound. A
// lower bound for the height of the monoid, never more.
std::size_t observed_height(DivisibilityIndex const& index,
                            Limits const&            limits = {});
std::size_t observed_height(Presentation const& p,
                            std::size_t         d_max,
                            Limits const&       limits = {});

}  // namespace homoid
