#include "homoid/towers.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

#include "homoid/error.hpp"

namespace homoid {

int Tower::sign() const noexcept {
  std::size_t e = 1;
  for (auto const& j : stages) {
    e += j.size() - 1;
  }
  return e % 2 == 0 ? 1 : -1;
}

namespace {

  using IdSet = std::vector<ElementId>;

  // Walks the admissible next stages above a stage mcm set I: every J in I
  // with #J >= 2, all members of degree < d_max, and a common multiple
  // within the table. Subsets are grown one member at a time, so a prefix
  // without common multiples prunes all of its supersets.
  class StageWalker {
   public:
    StageWalker(DivisibilityIndex const& index, Limits const& limits)
        : index_(index),
          table_(index.table()),
          d_max_(index.table().max_degree()),
          budget_(limits.subset_budget) {}

    template <typename F>
    void for_each_stage(IdSet const& i, F&& f) {
      IdSet candidates;
      for (auto x : i) {
        if (table_.degree(x) < d_max_) {
          candidates.push_back(x);
        }
      }
      IdSet chosen;
      grow(candidates, 0, chosen, {}, f);
    }

    std::uint64_t expanded() const noexcept { return expanded_; }

   private:
    template <typename F>
    void grow(IdSet const& candidates,
              std::size_t  start,
              IdSet&       chosen,
              IdSet const& cm,
              F&           f) {
      for (std::size_t k = start; k < candidates.size(); ++k) {
        auto const x = candidates[k];
        auto       m = index_.multiples(x);
        IdSet      next;
        if (chosen.empty()) {
          next.assign(m.begin(), m.end());
        } else {
          std::set_intersection(
              cm.begin(), cm.end(), m.begin(), m.end(), std::back_inserter(next));
        }
        if (next.empty()) {
          continue;
        }
        chosen.push_back(x);
        if (chosen.size() >= 2) {
          if (++expanded_ > budget_) {
            throw LimitError("tower enumeration expanded more than "
                             + std::to_string(budget_)
                             + " stage subsets (at a stage of size "
                             + std::to_string(chosen.size()) + ")");
          }
          auto top = index_.minimal(next);
          check_growth(chosen, top);
          f(static_cast<IdSet const&>(chosen), static_cast<IdSet const&>(top));
        }
        grow(candidates, k + 1, chosen, next, f);
        chosen.pop_back();
      }
    }

    void check_growth(IdSet const& j, IdSet const& top) const {
      std::size_t dj = 0;
      for (auto x : j) {
        dj = std::max(dj, table_.degree(x));
      }
      for (auto w : top) {
        if (table_.degree(w) <= dj) {
          throw std::logic_error(
              "minimal common multiple does not exceed its stage in degree");
        }
      }
    }

    DivisibilityIndex const& index_;
    GradedTable const&       table_;
    std::size_t              d_max_;
    std::uint64_t            budget_;
    std::uint64_t            expanded_ = 0;
  };

  int stage_sign(std::size_t size) {
    return (size - 1) % 2 == 0 ? 1 : -1;
  }

  std::vector<std::int64_t> degree_counts(GradedTable const& t, IdSet const& s) {
    std::vector<std::int64_t> c(t.max_degree() + 1, 0);
    for (auto x : s) {
      ++c[t.degree(x)];
    }
    return c;
  }

  // Memoized sums over everything above a stage mcm set I:
  //   above(I) = sum_J sign(J) * (counts(mcm J) + above(mcm J)).
  class SkewMemo {
   public:
    SkewMemo(DivisibilityIndex const& index, Limits const& limits)
        : table_(index.table()), walker_(index, limits) {}

    std::vector<std::int64_t> const& above(IdSet const& i) {
      if (auto it = memo_.find(i); it != memo_.end()) {
        return it->second;
      }
      std::vector<std::int64_t> acc(table_.max_degree() + 1, 0);
      walker_.for_each_stage(i, [&](IdSet const& j, IdSet const& top) {
        auto const  s     = stage_sign(j.size());
        auto        here  = degree_counts(table_, top);
        auto const& upper = above(top);
        for (std::size_t e = 0; e < acc.size(); ++e) {
          auto c = checked::add(here[e], upper[e]);
          acc[e] = checked::add(acc[e], checked::mul(s, c));
        }
      });
      return memo_.emplace(i, std::move(acc)).first->second;
    }

    std::size_t height_above(IdSet const& i) {
      if (auto it = heights_.find(i); it != heights_.end()) {
        return it->second;
      }
      std::size_t h = 0;
      walker_.for_each_stage(i, [&](IdSet const&, IdSet const& top) {
        h = std::max(h, 1 + height_above(top));
      });
      heights_.emplace(i, h);
      return h;
    }

   private:
    GradedTable const&                           table_;
    StageWalker                                  walker_;
    std::map<IdSet, std::vector<std::int64_t>>   memo_;
    std::map<IdSet, std::size_t>                 heights_;
  };

  std::vector<Element> elements(GradedTable const& t, IdSet const& s) {
    std::vector<Element> out;
    out.reserve(s.size());
    for (auto x : s) {
      out.push_back(t.element(x));
    }
    return out;
  }

}  // namespace

std::vector<Tower> enumerate_towers(DivisibilityIndex const& index,
                                    Limits const&            limits) {
  auto const& t = index.table();
  if (t.max_degree() < 1) {
    throw ValidationError("tower enumeration needs a bound of at least 1");
  }
  struct Raw {
    std::vector<IdSet> stages;
    std::vector<IdSet> mcms;
  };
  std::vector<Raw> raw{{}};
  StageWalker      walker(index, limits);
  Raw              path;

  auto descend = [&](auto& self, IdSet const& i) -> void {
    walker.for_each_stage(i, [&](IdSet const& j, IdSet const& top) {
      path.stages.push_back(j);
      path.mcms.push_back(top);
      raw.push_back(path);
      self(self, top);
      path.stages.pop_back();
      path.mcms.pop_back();
    });
  };
  descend(descend, t.generators());

  std::sort(raw.begin(), raw.end(), [](Raw const& a, Raw const& b) {
    if (a.stages.size() != b.stages.size()) {
      return a.stages.size() < b.stages.size();
    }
    return a.stages < b.stages;
  });

  auto const         ground = elements(t, t.generators());
  std::vector<Tower> out;
  out.reserve(raw.size());
  for (auto const& r : raw) {
    Tower tower{ground, {}, {}, t.max_degree()};
    for (std::size_t k = 0; k < r.stages.size(); ++k) {
      tower.stages.push_back(elements(t, r.stages[k]));
      tower.stage_mcms.push_back(elements(t, r.mcms[k]));
    }
    out.push_back(std::move(tower));
  }
  return out;
}

std::vector<Tower> enumerate_towers(Presentation const& p,
                                    std::size_t         d_max,
                                    Limits const&       limits) {
  GradedTable       table(p, d_max, limits);
  DivisibilityIndex index(table);
  return enumerate_towers(index, limits);
}

TruncatedSeries skew_growth(DivisibilityIndex const& index,
                            Limits const&            limits) {
  auto const& t = index.table();
  if (t.max_degree() < 1) {
    throw ValidationError("skew growth needs a bound of at least 1");
  }
  SkewMemo    memo(index, limits);
  auto const  ground = t.generators();
  auto const& above  = memo.above(ground);
  auto        here   = degree_counts(t, ground);
  auto        out    = TruncatedSeries::one(t.max_degree());
  // The height-0 tower and everything built on it carry an extra factor -1.
  for (std::size_t e = 0; e <= t.max_degree(); ++e) {
    out[e] = checked::add(out[e], -checked::add(here[e], above[e]));
  }
  return out;
}

TruncatedSeries skew_growth(Presentation const& p,
                            std::size_t         d_max,
                            Limits const&       limits) {
  GradedTable       table(p, d_max, limits);
  DivisibilityIndex index(table);
  return skew_growth(index, limits);
}

TruncatedSeries skew_growth_from_towers(std::vector<Tower> const& towers,
                                        std::size_t               d_max) {
  auto out = TruncatedSeries::one(d_max);
  for (auto const& tower : towers) {
    for (auto const& delta : tower.top()) {
      if (delta.degree() <= d_max) {
        out[delta.degree()] = checked::add(out[delta.degree()], tower.sign());
      }
    }
  }
  return out;
}

TruncatedSeries rooted_skew(DivisibilityIndex const&      index,
                            std::vector<ElementId> const& first_stage,
                            Limits const&                 limits) {
  auto const& t = index.table();
  IdSet       j = first_stage;
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (auto x : j) {
    if (t.degree(x) != 1) {
      throw ValidationError("a first stage must consist of generators");
    }
  }
  if (j.size() < 2) {
    throw ValidationError("a stage needs at least two members");
  }
  auto out = TruncatedSeries::zero(t.max_degree());
  auto top = index.mcm(j);
  if (top.empty()) {
    return out;
  }
  SkewMemo    memo(index, limits);
  auto const& above = memo.above(top);
  auto        here  = degree_counts(t, top);
  // overall -1 times the stage sign (-1)^(#J - 1)
  int const s = j.size() % 2 == 0 ? 1 : -1;
  for (std::size_t e = 0; e <= t.max_degree(); ++e) {
    out[e] = checked::mul(s, checked::add(here[e], above[e]));
  }
  return out;
}

std::size_t observed_height(DivisibilityIndex const& index,
                            Limits const&            limits) {
  SkewMemo memo(index, limits);
  return memo.height_above(index.table().generators());
}

std::size_t observed_height(Presentation const& p,
                            std::size_t         d_max,
                            Limits const&       limits) {
  GradedTable       table(p, d_max, limits);
  DivisibilityIndex index(table);
  return observed_height(index, limits);
}

}  // namespace homoid
