#include "homoid/enumerate.hpp"

#include <algorithm>

#include "homoid/error.hpp"
#include "homoid/kernels.hpp"

namespace homoid {

namespace {

  WordCodec make_codec(Presentation const& p,
                       std::size_t         d_max,
                       Limits const&       limits) {
    if (d_max > limits.max_degree) {
      throw LimitError("degree " + std::to_string(d_max)
                       + " exceeds the degree cap "
                       + std::to_string(limits.max_degree));
    }
    WordCodec     codec(p.alphabet_size(), d_max);
    std::uint64_t total = 0;
    for (std::size_t d = 0; d <= d_max; ++d) {
      total += codec.pow(d);
    }
    if (total > limits.word_budget) {
      throw LimitError("a table to degree " + std::to_string(d_max) + " needs "
                       + std::to_string(total)
                       + " words, over the word budget of "
                       + std::to_string(limits.word_budget));
    }
    return codec;
  }

}  // namespace

GradedTable::GradedTable(Presentation p, std::size_t d_max, Limits const& limits)
    : p_(std::move(p)), d_max_(d_max), codec_(make_codec(p_, d_max, limits)) {
  class_of_.resize(d_max_ + 1);
  offset_.push_back(0);
  member_begin_.push_back(0);
  for (std::size_t d = 0; d <= d_max_; ++d) {
    auto roots = kernels::class_roots(p_, codec_, d);
    auto first = static_cast<ElementId>(canon_.size());

    // Roots are the least codes of their classes, so visiting codes in
    // ascending order numbers elements lexicographically.
    std::vector<std::uint32_t> local(roots.size());
    std::size_t                count = 0;
    for (std::size_t w = 0; w < roots.size(); ++w) {
      if (roots[w] == w) {
        local[w] = static_cast<std::uint32_t>(count++);
        canon_.push_back(w);
      }
    }
    auto& map = class_of_[d];
    map.resize(roots.size());
    std::vector<std::size_t> fill(count + 1, 0);
    for (std::size_t w = 0; w < roots.size(); ++w) {
      map[w] = first + local[roots[w]];
      ++fill[local[roots[w]] + 1];
    }
    for (std::size_t i = 0; i < count; ++i) {
      fill[i + 1] += fill[i];
    }
    std::size_t base = members_.size();
    members_.resize(base + roots.size());
    for (std::size_t i = 0; i < count; ++i) {
      member_begin_.push_back(base + fill[i + 1]);
    }
    for (std::size_t w = 0; w < roots.size(); ++w) {
      members_[base + fill[local[roots[w]]]++] = static_cast<std::uint32_t>(w);
    }
    offset_.push_back(static_cast<ElementId>(canon_.size()));
  }
}

std::size_t GradedTable::degree(ElementId x) const {
  if (x >= canon_.size()) {
    throw ValidationError("element id " + std::to_string(x)
                          + " out of range");
  }
  auto it = std::upper_bound(offset_.begin(), offset_.end(), x);
  return static_cast<std::size_t>(it - offset_.begin()) - 1;
}

std::vector<ElementId> GradedTable::generators() const {
  std::vector<ElementId> out;
  if (d_max_ >= 1) {
    for (ElementId x = first_of_degree(1); x < end_of_degree(1); ++x) {
      out.push_back(x);
    }
  }
  return out;
}

ElementId GradedTable::id_of(Word const& w) const {
  p_.check_word(w);
  if (w.size() > d_max_) {
    throw LimitError("word of degree " + std::to_string(w.size())
                     + " is beyond a table of degree " + std::to_string(d_max_));
  }
  return class_of_[w.size()][codec_.encode(w)];
}

ElementId GradedTable::multiply(ElementId x, ElementId y) const {
  auto dx = degree(x), dy = degree(y);
  if (dx + dy > d_max_) {
    throw LimitError("product of degree " + std::to_string(dx + dy)
                     + " is beyond a table of degree "
                     + std::to_string(d_max_));
  }
  return class_of_[dx + dy][codec_.concat(canon_[x], canon_[y], dy)];
}

Word GradedTable::word(ElementId x) const {
  return codec_.decode(canon_[x], degree(x));
}

std::vector<Element> GradedTable::stratum(std::size_t d) const {
  std::vector<Element> out;
  out.reserve(stratum_size(d));
  for (ElementId x = first_of_degree(d); x < end_of_degree(d); ++x) {
    out.push_back(element(x));
  }
  return out;
}

GradedElements graded_elements(Presentation const& p,
                               std::size_t         d_max,
                               Limits const&       limits) {
  GradedTable    table(p, d_max, limits);
  GradedElements out{p, d_max, {}};
  for (std::size_t d = 0; d <= d_max; ++d) {
    out.strata.push_back(table.stratum(d));
  }
  return out;
}

TruncatedSeries growth_series(GradedTable const& table) {
  std::vector<std::int64_t> c;
  for (std::size_t d = 0; d <= table.max_degree(); ++d) {
    c.push_back(static_cast<std::int64_t>(table.stratum_size(d)));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries growth_series(Presentation const& p,
                              std::size_t         d_max,
                              Limits const&       limits) {
  return growth_series(GradedTable(p, d_max, limits));
}

}  // namespace homoid
