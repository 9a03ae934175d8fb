#include "homoid/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "homoid/error.hpp"

namespace homoid {

namespace {

  void check(Presentation const& p, Word const& w, Limits const& limits) {
    p.check_word(w);
    if (w.size() > limits.max_degree) {
      throw LimitError("word of degree " + std::to_string(w.size())
                       + " exceeds the degree cap "
                       + std::to_string(limits.max_degree));
    }
  }

}  // namespace

std::vector<Word> equivalence_class(Presentation const& p,
                                    Word const&         w,
                                    Limits const&       limits) {
  check(p, w, limits);
  std::set<Word>   seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    Word cur = std::move(todo.front());
    todo.pop_front();
    for_each_neighbour(p, cur, [&](Word const& next) {
      if (seen.insert(next).second) {
        todo.push_back(next);
      }
    });
  }
  return {seen.begin(), seen.end()};
}

Element canonical(Presentation const& p, Word const& w, Limits const& limits) {
  return Element{equivalence_class(p, w, limits).front()};
}

bool are_equivalent(Presentation const& p,
                    Word const&         u,
                    Word const&         v,
                    Limits const&       limits) {
  check(p, v, limits);
  if (u.size() != v.size()) {
    check(p, u, limits);
    return false;
  }
  auto cls = equivalence_class(p, u, limits);
  return std::binary_search(cls.begin(), cls.end(), v);
}

}  // namespace homoid
