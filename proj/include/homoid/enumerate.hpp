#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "homoid/limits.hpp"
#include "homoid/presentation.hpp"
#include "homoid/rewrite.hpp"
#include "homoid/series.hpp"
#include "homoid/word.hpp"

namespace homoid {

// Index of an element inside a GradedTable. Ids are assigned in shortlex
// order of canonical words: the identity is 0, then the degree-1 elements,
// and so on.
using ElementId = std::uint32_t;

// Every element of degree 0..d_max of a presented monoid, together with a
// word -> element lookup for every word of those degrees.
//
// Each degree is built from scratch over all n^d words (no normal form is
// assumed). The result is immutable and safe to share between threads.
class GradedTable {
 public:
  GradedTable(Presentation p, std::size_t d_max, Limits const& limits = {});

  Presentation const& presentation() const noexcept { return p_; }
  std::size_t         max_degree() const noexcept { return d_max_; }
  WordCodec const&    codec() const noexcept { return codec_; }

  // Number of elements of degree <= max_degree().
  std::size_t size() const noexcept { return canon_.size(); }

  std::size_t stratum_size(std::size_t d) const {
    return offset_.at(d + 1) - offset_.at(d);
  }
  // Ids of the degree-d elements, a contiguous range.
  ElementId first_of_degree(std::size_t d) const { return offset_.at(d); }
  ElementId end_of_degree(std::size_t d) const { return offset_.at(d + 1); }

  std::size_t degree(ElementId x) const;

  static constexpr ElementId identity() noexcept { return 0; }
  // The degree-1 elements (the image of the alphabet).
  std::vector<ElementId> generators() const;

  // The element represented by w. Throws if deg(w) > max_degree().
  ElementId id_of(Word const& w) const;
  ElementId id_of_code(std::size_t degree, std::uint64_t code) const {
    return class_of_[degree][code];
  }

  // Product in the monoid. Throws LimitError if the degree exceeds the
  // table.
  ElementId multiply(ElementId x, ElementId y) const;

  Word    word(ElementId x) const;
  Element element(ElementId x) const { return Element{word(x)}; }
  std::uint64_t code(ElementId x) const { return canon_[x]; }

  // Codes of all words in the class of x, ascending.
  std::span<std::uint32_t const> member_codes(ElementId x) const {
    return {members_.data() + member_begin_[x],
            members_.data() + member_begin_[x + 1]};
  }

  std::vector<Element> stratum(std::size_t d) const;

  // Per-degree word -> element map (indexed by word code).
  std::vector<std::vector<std::uint32_t>> const& class_maps() const noexcept {
    return class_of_;
  }

 private:
  Presentation                            p_;
  std::size_t                             d_max_;
  WordCodec                               codec_;
  std::vector<std::vector<std::uint32_t>> class_of_;
  std::vector<std::uint64_t>              canon_;
  std::vector<ElementId>                  offset_;
  std::vector<std::uint32_t>              members_;
  std::vector<std::size_t>                member_begin_;
};

// Strata 0..d_max of the monoid, sorted by canonical word.
struct GradedElements {
  Presentation                      presentation;
  std::size_t                       d_max;
  std::vector<std::vector<Element>> strata;
};

GradedElements graded_elements(Presentation const& p,
                               std::size_t         d_max,
                               Limits const&       limits = {});

// Growth series truncated at d_max: coefficient d is the number of elements
// of degree d.
TruncatedSeries growth_series(GradedTable const& table);
TruncatedSeries growth_series(Presentation const& p,
                              std::size_t         d_max,
                              Limits const&       limits = {});

}  // namespace homoid
