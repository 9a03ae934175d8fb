#include "homoid/divisibility.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>

#include "homoid/error.hpp"
#include "homoid/kernels.hpp"

namespace homoid {

DivisibilityIndex::DivisibilityIndex(GradedTable const& table)
    : table_(&table), divisors_(table.size()), multiples_(table.size()) {
  auto const& maps = table.class_maps();
  auto const  n    = static_cast<std::int64_t>(table.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t v = 0; v < n; ++v) {
    auto id      = static_cast<ElementId>(v);
    divisors_[v] = kernels::class_prefixes(
        table.member_codes(id), table.degree(id), table.codec(), maps);
  }
  for (ElementId v = 0; v < table.size(); ++v) {
    for (auto u : divisors_[v]) {
      multiples_[u].push_back(v);
    }
  }
}

bool DivisibilityIndex::left_divides(ElementId u, ElementId v) const {
  auto const& d = divisors_.at(v);
  return std::binary_search(d.begin(), d.end(), u);
}

std::vector<ElementId> DivisibilityIndex::common_multiples(
    std::span<ElementId const> j) const {
  if (j.empty()) {
    throw ValidationError("common multiples of the empty set are undefined");
  }
  std::vector<ElementId> out(multiples_.at(j[0]).begin(),
                             multiples_.at(j[0]).end());
  std::vector<ElementId> tmp;
  for (std::size_t i = 1; i < j.size() && !out.empty(); ++i) {
    auto const& m = multiples_.at(j[i]);
    tmp.clear();
    std::set_intersection(
        out.begin(), out.end(), m.begin(), m.end(), std::back_inserter(tmp));
    out.swap(tmp);
  }
  return out;
}

std::vector<ElementId> DivisibilityIndex::minimal(
    std::span<ElementId const> s) const {
  std::vector<ElementId> out;
  for (auto w : s) {
    bool is_min = true;
    for (auto d : divisors_.at(w)) {
      if (d != w && std::binary_search(s.begin(), s.end(), d)) {
        is_min = false;
        break;
      }
    }
    if (is_min) {
      out.push_back(w);
    }
  }
  return out;
}

std::vector<ElementId> DivisibilityIndex::mcm(
    std::span<ElementId const> j) const {
  return minimal(common_multiples(j));
}

std::vector<std::pair<ElementId, ElementId>>
DivisibilityIndex::right_complements(ElementId u, ElementId v) const {
  auto const& t     = *table_;
  auto const  d_max = t.max_degree();
  auto const  du = t.degree(u), dv = t.degree(v);

  // product -> all right factors
  auto factors = [&](ElementId a, std::size_t da) {
    std::map<ElementId, std::vector<ElementId>> out;
    for (ElementId x = 0; x < t.end_of_degree(d_max - da); ++x) {
      out[t.multiply(a, x)].push_back(x);
    }
    return out;
  };
  if (du > d_max || dv > d_max) {
    throw LimitError("right_complements: operand degree exceeds the table");
  }
  auto fu = factors(u, du);
  auto fv = factors(v, dv);

  std::vector<std::pair<ElementId, ElementId>> out;
  for (auto const& [w, xs] : fu) {
    auto it = fv.find(w);
    if (it == fv.end()) {
      continue;
    }
    for (auto x : xs) {
      for (auto y : it->second) {
        out.emplace_back(x, y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

  std::size_t max_degree_of(std::vector<Element> const& j) {
    std::size_t d = 0;
    for (auto const& x : j) {
      d = std::max(d, x.degree());
    }
    return d;
  }

  std::vector<ElementId> ids_of(GradedTable const&          t,
                                std::vector<Element> const& j) {
    std::vector<ElementId> out;
    for (auto const& x : j) {
      out.push_back(t.id_of(x.canonical));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Element> elements_of(GradedTable const&            t,
                                   std::vector<ElementId> const& ids) {
    std::vector<Element> out;
    out.reserve(ids.size());
    for (auto x : ids) {
      out.push_back(t.element(x));
    }
    return out;
  }

  void check_bound(std::size_t need, std::size_t d_max) {
    if (need > d_max) {
      throw ValidationError("element degree " + std::to_string(need)
                            + " exceeds the requested bound "
                            + std::to_string(d_max));
    }
  }

}  // namespace

bool left_divides(Presentation const& p,
                  Element const&      u,
                  Element const&      v,
                  Limits const&       limits) {
  p.check_word(u.canonical);
  p.check_word(v.canonical);
  if (u.degree() > v.degree()) {
    return false;
  }
  GradedTable       table(p, v.degree(), limits);
  DivisibilityIndex index(table);
  return index.left_divides(table.id_of(u.canonical), table.id_of(v.canonical));
}

std::vector<std::pair<Element, Element>> right_complements(
    Presentation const& p,
    Element const&      u,
    Element const&      v,
    std::size_t         d_max,
    Limits const&       limits) {
  check_bound(std::max(u.degree(), v.degree()), d_max);
  GradedTable       table(p, d_max, limits);
  DivisibilityIndex index(table);
  std::vector<std::pair<Element, Element>> out;
  for (auto [x, y] : index.right_complements(table.id_of(u.canonical),
                                             table.id_of(v.canonical))) {
    out.emplace_back(table.element(x), table.element(y));
  }
  return out;
}

std::vector<Element> common_multiples(Presentation const&         p,
                                      std::vector<Element> const& j,
                                      std::size_t                 d_max,
                                      Limits const&               limits) {
  check_bound(max_degree_of(j), d_max);
  GradedTable       table(p, d_max, limits);
  DivisibilityIndex index(table);
  return elements_of(table, index.common_multiples(ids_of(table, j)));
}

std::vector<Element> mcm(Presentation const&         p,
                         std::vector<Element> const& j,
                         std::size_t                 d_max,
                         Limits const&               limits) {
  check_bound(max_degree_of(j), d_max);
  GradedTable       table(p, d_max, limits);
  DivisibilityIndex index(table);
  return elements_of(table, index.mcm(ids_of(table, j)));
}

ConditionLReport condition_l_report(DivisibilityIndex const& index) {
  auto const&      t = index.table();
  ConditionLReport report;
  report.d_max = t.max_degree();
  auto gens    = t.generators();
  if (gens.size() >= 64) {
    throw LimitError("condition L: too many generators to enumerate subsets");
  }
  // subsets in size-then-lex order
  std::vector<std::vector<ElementId>> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << gens.size());
       ++mask) {
    if (std::popcount(mask) < 2) {
      continue;
    }
    std::vector<ElementId> j;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (mask >> i & 1) {
        j.push_back(gens[i]);
      }
    }
    subsets.push_back(std::move(j));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](auto const& a, auto const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (auto const& j : subsets) {
    auto m = index.mcm(j);
    auto js = elements_of(t, j);
    if (m.empty()) {
      report.undetermined.push_back(std::move(js));
    } else if (m.size() == 1) {
      report.least.push_back({std::move(js), t.element(m[0])});
    } else {
      report.witnesses.push_back({std::move(js), elements_of(t, m)});
    }
  }
  report.verdict = report.witnesses.empty()
                       ? ConditionLReport::Verdict::no_violation_found
                       : ConditionLReport::Verdict::violated;
  return report;
}

ConditionLReport condition_l_report(Presentation const& p,
                                    std::size_t         d_max,
                                    Limits const&       limits) {
  GradedTable       table(p, d_max, limits);
  DivisibilityIndex index(table);
  return condition_l_report(index);
}

}  // namespace homoid
