#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "homoid/limits.hpp"
#include "homoid/presentation.hpp"
#include "homoid/word.hpp"

namespace homoid {

// A monoid element, held by its canonical representative: the
// lexicographically least word of its equivalence class.
//
// Elements compare shortlex (degree first, then lexicographically), which is
// also the order of element ids inside a GradedTable.
struct Element {
  Word canonical;

  std::size_t degree() const noexcept { return canonical.size(); }

  bool operator==(Element const&) const = default;
  std::strong_ordering operator<=>(Element const& that) const {
    if (auto c = canonical.size() <=> that.canonical.size(); c != 0) {
      return c;
    }
    return canonical <=> that.canonical;
  }
};

// Calls f(neighbour) for every word obtained from w by one substitution of a
// relation side, in either direction, at any position.
template <typename F>
void for_each_neighbour(Presentation const& p, Word const& w, F&& f) {
  for (auto const& r : p.relations()) {
    for (int dir = 0; dir < 2; ++dir) {
      Word const& from = dir == 0 ? r.lhs : r.rhs;
      Word const& to   = dir == 0 ? r.rhs : r.lhs;
      if (from.size() > w.size()) {
        continue;
      }
      for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
        if (std::equal(from.begin(), from.end(), w.begin() + i)) {
          Word next = w;
          std::copy(to.begin(), to.end(), next.begin() + i);
          f(next);
        }
      }
    }
  }
}

// All words equivalent to w, sorted lexicographically. Homogeneity keeps the
// closure inside the finite set of words of length deg(w).
std::vector<Word> equivalence_class(Presentation const& p,
                                    Word const&         w,
                                    Limits const&       limits = {});

Element canonical(Presentation const& p,
                  Word const&         w,
                  Limits const&       limits = {});

bool are_equivalent(Presentation const& p,
                    Word const&         u,
                    Word const&         v,
                    Limits const&       limits = {});

}  // namespace homoid
