#include <doctest.h>

#include "homoid/enumerate.hpp"
#include "homoid/error.hpp"
#include "homoid/rewrite.hpp"
#include "oracle.hpp"

using namespace homoid;

namespace {

std::vector<std::size_t> sizes(GradedTable const& t) {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d <= t.max_degree(); ++d) {
    out.push_back(t.stratum_size(d));
  }
  return out;
}

}  // namespace

TEST_CASE("stratum sizes") {
  CHECK(sizes(GradedTable(preset("bii"), 2)) == std::vector<std::size_t>{1, 3, 7});
  CHECK(sizes(GradedTable(preset("free:2"), 5)) ==
        std::vector<std::size_t>{1, 2, 4, 8, 16, 32});
  CHECK(sizes(GradedTable(preset("abel:2"), 3)) ==
        std::vector<std::size_t>{1, 2, 2, 2});
}

TEST_CASE("growth series against closed forms") {
  // (1 - t + t^2) / (1 - t)^4
  auto bii = oracle::taylor({1, -1, 1}, oracle::one_minus_t(4), 8);
  CHECK(bii == std::vector<std::int64_t>{1, 3, 7, 14, 25, 41, 63, 92, 129});
  CHECK(growth_series(preset("bii"), 8).coefficients() == bii);

  auto a2 = oracle::taylor({1}, oracle::one_minus_t(3), 4);
  CHECK(a2 == std::vector<std::int64_t>{1, 3, 6, 10, 15});
  CHECK(growth_series(preset("appendix2"), 4).coefficients() == a2);

  auto a3 = oracle::taylor({1}, oracle::one_minus_t(4), 4);
  CHECK(a3 == std::vector<std::int64_t>{1, 4, 10, 20, 35});
  CHECK(growth_series(preset("appendix3"), 4).coefficients() == a3);

  // (1 + t) / (1 - t)
  CHECK(growth_series(preset("abel:2"), 6).coefficients() ==
        oracle::taylor({1, 1}, {1, -1}, 6));
}

TEST_CASE("stratum sizes agree with the brute-force class count") {
  for (auto id : {"bii", "gn:3", "hn:1", "abel:3", "appendix3"}) {
    CAPTURE(id);
    auto        p = preset(id);
    GradedTable t(p, 5);
    for (std::size_t d = 0; d <= 5; ++d) {
      CHECK(t.stratum_size(d) == oracle::count_classes(p, d));
    }
  }
}

TEST_CASE("free monoid counts are rank^d") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto s = growth_series(preset("free", {static_cast<long>(n)}), 6);
    std::int64_t expect = 1;
    for (std::size_t d = 0; d <= 6; ++d) {
      CHECK(s[d] == expect);
      expect *= static_cast<std::int64_t>(n);
    }
  }
}

TEST_CASE("table structure") {
  auto        p = preset("bii");
  GradedTable t(p, 5);
  CHECK(t.identity() == 0);
  CHECK(t.word(0).empty());
  CHECK(t.generators() == std::vector<ElementId>{1, 2, 3});
  CHECK(t.id_of(p.parse_word("cbb")) == t.id_of(p.parse_word("bba")));
  CHECK(t.word(t.id_of(p.parse_word("bc"))) == p.parse_word("ab"));
  CHECK_THROWS_AS(t.id_of(Word(6, 0)), LimitError);
  CHECK_THROWS_AS(t.multiply(t.id_of(Word(3, 0)), t.id_of(Word(3, 0))),
                  LimitError);
  for (ElementId x = 0; x < t.size(); ++x) {
    // ids are shortlex, canonical is the least member, members are the class
    if (x > 0) {
      CHECK(t.element(x - 1) < t.element(x));
    }
    auto members = t.member_codes(x);
    CHECK(members.front() == t.code(x));
    auto cls = equivalence_class(p, t.word(x));
    REQUIRE(cls.size() == members.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
      CHECK(t.codec().decode(members[i], t.degree(x)) == cls[i]);
    }
  }
}

TEST_CASE("generator closure up to degree 5") {
  for (auto id : {"bii", "gn:3", "hn:1", "abel:2", "appendix3"}) {
    CAPTURE(id);
    GradedTable t(preset(id), 6);
    for (std::size_t d = 0; d <= 5; ++d) {
      std::vector<bool> hit(t.size(), false);
      for (auto g : t.generators()) {
        for (auto x = t.first_of_degree(d); x < t.end_of_degree(d); ++x) {
          hit[t.multiply(g, x)] = true;
        }
      }
      for (auto y = t.first_of_degree(d + 1); y < t.end_of_degree(d + 1); ++y) {
        CHECK(hit[y]);
      }
    }
  }
}

TEST_CASE("monotone consistency") {
  for (auto id : {"bii", "hn:1", "abel:3"}) {
    CAPTURE(id);
    auto small = graded_elements(preset(id), 4);
    auto big   = graded_elements(preset(id), 7);
    for (std::size_t d = 0; d <= 4; ++d) {
      CHECK(small.strata[d] == big.strata[d]);
    }
    CHECK(growth_series(preset(id), 7).truncated(4) ==
          growth_series(preset(id), 4));
  }
}

TEST_CASE("strata are sorted and start with the identity") {
  auto g = graded_elements(preset("gn:3"), 5);
  REQUIRE(g.strata.size() == 6);
  CHECK(g.strata[0] == std::vector<Element>{Element{}});
  for (auto const& s : g.strata) {
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  }
  CHECK(g.strata[1].size() == 3);
}

TEST_CASE("limits") {
  Limits l;
  l.max_degree = 5;
  CHECK_THROWS_AS(GradedTable(preset("bii"), 6, l), LimitError);
  Limits w;
  w.word_budget = 100;
  CHECK_THROWS_AS(GradedTable(preset("bii"), 6, w), LimitError);
}
