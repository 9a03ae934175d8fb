#pragma once

// Brute-force solution sets of u X = v Y inside a graded table, and the
// parametric families X = x_k Z, Y = y_k Z they are expected to match.

#include <set>
#include <utility>
#include <vector>

#include "homoid/enumerate.hpp"

namespace families {

using homoid::ElementId;
using homoid::GradedTable;
using homoid::Word;
using Pairs = std::set<std::pair<ElementId, ElementId>>;

// Every (x, y) with u x = v y and deg(u x) <= max degree, found by
// multiplying table elements directly.
inline Pairs solutions(GradedTable const& t, ElementId u, ElementId v) {
  Pairs       out;
  std::size_t du = t.degree(u), dv = t.degree(v);
  for (std::size_t e = std::max(du, dv); e <= t.max_degree(); ++e) {
    for (auto x = t.first_of_degree(e - du); x < t.end_of_degree(e - du); ++x) {
      auto ux = t.multiply(u, x);
      for (auto y = t.first_of_degree(e - dv); y < t.end_of_degree(e - dv); ++y) {
        if (t.multiply(v, y) == ux) {
          out.emplace(x, y);
        }
      }
    }
  }
  return out;
}

struct Family {
  Word x;  // X = x Z
  Word y;  // Y = y Z
};

// All (x Z, y Z) with deg(u x Z) <= max degree.
inline Pairs instances(GradedTable const&         t,
                       ElementId                  u,
                       std::vector<Family> const& fams) {
  Pairs out;
  for (auto const& f : fams) {
    std::size_t base = t.degree(u) + f.x.size();
    if (base > t.max_degree()) {
      continue;
    }
    for (std::size_t dz = 0; base + dz <= t.max_degree(); ++dz) {
      for (auto z = t.first_of_degree(dz); z < t.end_of_degree(dz); ++z) {
        out.emplace(t.multiply(t.id_of(f.x), z), t.multiply(t.id_of(f.y), z));
      }
    }
  }
  return out;
}

inline Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (auto const& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

inline Word pw(homoid::letter_type x, std::size_t k) { return Word(k, x); }

}  // namespace families
