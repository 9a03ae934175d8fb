#include <doctest.h>

#include <algorithm>
#include <set>

#include "homoid/cancellativity.hpp"
#include "homoid/rewrite.hpp"
#include "oracle.hpp"

using namespace homoid;

namespace {

std::vector<std::string> const presets = {
    "bii",    "gn:3",   "gn:4",   "hn:1",      "hn:2",     "abel:2",
    "abel:3", "free:1", "free:3", "appendix2", "appendix3"};

std::vector<std::pair<Word, Word>> unoriented(std::vector<Relation> const& rs) {
  std::vector<std::pair<Word, Word>> out;
  for (auto const& r : rs) {
    out.push_back(std::minmax(r.lhs, r.rhs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Injectivity of x -> v x (or x v) on words of degree d, decided on the
// string-replacement classes alone.
bool injective_by_oracle(Presentation const& p, std::size_t d, bool left) {
  auto lower  = oracle::classes(p, d);
  auto upper  = oracle::classes(p, d + 1);
  std::set<std::string> reps;
  for (auto const& [w, rep] : lower) {
    reps.insert(rep);
  }
  for (std::size_t v = 0; v < p.alphabet_size(); ++v) {
    std::string           g(1, static_cast<char>('a' + v));
    std::set<std::string> images;
    for (auto const& r : reps) {
      images.insert(upper.at(left ? g + r : r + g));
    }
    if (images.size() != reps.size()) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("presets show no counterexample up to degree 7") {
  for (auto const& id : presets) {
    CAPTURE(id);
    auto r = cancellative_up_to(preset(id), 7);
    CHECK(r.verdict == CancellationReport::Verdict::no_counterexample);
    CHECK(r.side == Side::both);
    CHECK(r.d_max == 7);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("right-only failure") {
  auto p = parse_presentation("alphabet a b\nrel ab = bb\n");
  CHECK(left_cancellative_up_to(p, 2).verdict ==
        CancellationReport::Verdict::no_counterexample);
  auto r = cancellative_up_to(p, 2);
  REQUIRE(r.verdict == CancellationReport::Verdict::counterexample);
  REQUIRE(r.witness);
  auto const& w = *r.witness;
  CHECK(w.side == Side::right);
  CHECK(w.generator == Element{{1}});
  CHECK(std::set<Word>{w.x.canonical, w.y.canonical} == std::set<Word>{{0}, {1}});
  CHECK(w.product.canonical == Word{0, 1});
  CHECK(verify_witness(p, w));
  CHECK_FALSE(cancellative_up_to(p, 1).witness.has_value());
}

TEST_CASE("left failure") {
  auto p = parse_presentation("alphabet a b\nrel ba = bb\n");
  auto r = left_cancellative_up_to(p, 3);
  REQUIRE(r.witness);
  CHECK(r.witness->side == Side::left);
  CHECK(r.witness->generator == Element{{1}});
  CHECK(verify_witness(p, *r.witness));
  CHECK(cancellative_up_to(p, 3).witness->side == Side::left);
}

TEST_CASE("verify_witness rejects bogus witnesses") {
  auto                p = preset("bii");
  CancellationWitness fake{Side::left, Element{{0}}, Element{{0}}, Element{{1}},
                           Element{{0, 0}}};
  CHECK_FALSE(verify_witness(p, fake));
  // x and y equal
  CancellationWitness same{Side::left, Element{{0}}, Element{{1}}, Element{{1}},
                           Element{{0, 1}}};
  CHECK_FALSE(verify_witness(p, same));
}

TEST_CASE("injectivity agrees with the class oracle") {
  std::vector<Presentation> ps;
  for (auto id : {"bii", "gn:3", "hn:1", "abel:2"}) {
    ps.push_back(preset(id));
  }
  ps.push_back(parse_presentation("alphabet a b\nrel ab = bb\n"));
  ps.push_back(parse_presentation("alphabet a b c\nrel ab = cb\nrel ba = bc\n"));
  for (auto const& p : ps) {
    CAPTURE(serialize(p));
    bool left_ok = true, right_ok = true;
    for (std::size_t d = 0; d < 4; ++d) {
      left_ok  = left_ok && injective_by_oracle(p, d, true);
      right_ok = right_ok && injective_by_oracle(p, d, false);
    }
    CHECK((left_cancellative_up_to(p, 4).verdict ==
           CancellationReport::Verdict::no_counterexample) == left_ok);
    CHECK((cancellative_up_to(p, 4).verdict ==
           CancellationReport::Verdict::no_counterexample) == (left_ok && right_ok));
  }
}

TEST_CASE("reversal composed with the a<->c swap respects the relations") {
  // a well-defined anti-automorphism, so right cancellation reduces to left
  // cancellation on the same monoid
  for (auto id : {"bii", "gn:3", "gn:4", "hn:1", "hn:2"}) {
    CAPTURE(id);
    auto p    = preset(id);
    auto flip = [](Word w) {
      std::reverse(w.begin(), w.end());
      for (auto& x : w) {
        x = static_cast<letter_type>(x == 0 ? 2 : x == 2 ? 0 : x);
      }
      return w;
    };
    for (auto const& r : p.relations()) {
      CHECK(are_equivalent(p, flip(r.lhs), flip(r.rhs)));
    }
  }
  // literally relation-preserving for all but hn
  auto p = preset("gn:3");
  auto                  rev = reverse_presentation(p);
  std::vector<Relation> swapped;
  for (auto const& r : rev.relations()) {
    Relation q = r;
    for (auto* w : {&q.lhs, &q.rhs}) {
      for (auto& x : *w) {
        x = static_cast<letter_type>(x == 0 ? 2 : x == 2 ? 0 : x);
      }
    }
    swapped.push_back(q);
  }
  CHECK(unoriented(swapped) == unoriented(p.relations()));
}

TEST_CASE("side names") {
  CHECK(std::string(to_string(Side::left)) == "left");
  CHECK(std::string(to_string(Side::right)) == "right");
  CHECK(std::string(to_string(Side::both)) == "both");
}
