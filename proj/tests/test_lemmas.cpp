#include <doctest.h>

#include <algorithm>
#include <bit>

#include "families.hpp"
#include "homoid/divisibility.hpp"

// Equations u X = v Y solved by brute force inside a table and compared, as
// sets, with the stated parametric solution families.

using namespace homoid;
using families::cat;
using families::Family;
using families::pw;

namespace {

constexpr letter_type a = 0, b = 1, c = 2;

void check_family(GradedTable const& t, Word const& u, Word const& v,
                  std::vector<Family> const& fams) {
  auto iu = t.id_of(u), iv = t.id_of(v);
  auto sol = families::solutions(t, iu, iv);
  if (!fams.empty()) {
    CHECK_FALSE(sol.empty());
  }
  CHECK(sol == families::instances(t, iu, fams));
  DivisibilityIndex idx(t);
  auto              rc = idx.right_complements(iu, iv);
  CHECK(families::Pairs(rc.begin(), rc.end()) == sol);
}

// c^k x, a^k y style families for k = 0..kmax
template <typename F>
std::vector<Family> over_k(std::size_t kmax, F f) {
  std::vector<Family> out;
  for (std::size_t k = 0; k <= kmax; ++k) {
    out.push_back(f(k));
  }
  return out;
}

std::vector<ElementId> stage(GradedTable const& t, std::vector<Word> const& ws) {
  std::vector<ElementId> out;
  for (auto const& w : ws) {
    out.push_back(t.id_of(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename F>
void for_each_kappa_set(std::size_t kmax, F f) {
  for (std::uint32_t mask = 0; mask < (1u << (kmax + 1)); ++mask) {
    if (std::popcount(mask) < 2) {
      continue;
    }
    std::vector<std::size_t> kappa;
    for (std::size_t i = 0; i <= kmax; ++i) {
      if (mask >> i & 1) {
        kappa.push_back(i);
      }
    }
    f(kappa);
  }
}

}  // namespace

TEST_CASE("bii: equations with distinct first letters") {
  GradedTable t(preset("bii"), 6);
  check_family(t, {a}, {b}, {{{b}, {c}}});
  check_family(t, {a}, {c}, {{{c}, {a}}});
  // b X = c Y: X = c^k ba Z, Y = a^k bb Z
  check_family(t, {b}, {c}, over_k(5, [](std::size_t k) {
                 return Family{cat({pw(c, k), {b, a}}), cat({pw(a, k), {b, b}})};
               }));
}

TEST_CASE("bii: bb X = c Y forces X = a Z") {
  GradedTable t(preset("bii"), 7);
  check_family(t, {b, b}, {c}, {{{a}, {b, b}}});
}

TEST_CASE("bii: bb X = c^l Y forces X = a^l Z") {
  GradedTable t(preset("bii"), 7);
  for (std::size_t l = 1; l <= 4; ++l) {
    CAPTURE(l);
    check_family(t, {b, b}, pw(c, l), {{pw(a, l), {b, b}}});
  }
}

TEST_CASE("bii: c^i b X = c^j b Y") {
  GradedTable t(preset("bii"), 7);
  for (std::size_t i = 0; i <= 2; ++i) {
    for (std::size_t j = i + 1; j <= 3; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      check_family(t, cat({pw(c, i), {b}}), cat({pw(c, j), {b}}),
                   over_k(6, [&](std::size_t k) {
                     return Family{cat({pw(c, k), {b}, pw(a, j - i)}),
                                   cat({pw(c, k), {b}})};
                   }));
    }
  }
}

TEST_CASE("bii: mcm of c^k b families") {
  GradedTable       t(preset("bii"), 9);
  DivisibilityIndex idx(t);
  for_each_kappa_set(4, [&](std::vector<std::size_t> const& kappa) {
    std::vector<Word> j;
    for (auto k : kappa) {
      j.push_back(cat({pw(c, k), {b}}));
    }
    std::vector<Word> expect;
    auto              top = kappa.back();
    for (std::size_t k = 0; top + k + 2 <= 9; ++k) {
      expect.push_back(cat({pw(c, top), {b}, pw(c, k), {b}}));
    }
    CHECK(idx.mcm(stage(t, j)) == stage(t, expect));
  });
}

TEST_CASE("gn: first-letter equations") {
  for (long n : {3L, 4L}) {
    CAPTURE(n);
    auto        nn = static_cast<std::size_t>(n);
    GradedTable t(preset("gn", {n}), 7);
    check_family(t, {a}, {b}, {{{b}, {c}}});
    check_family(t, {a}, {c}, {{{c}, {a}}});
    // b X = c Y: X = c^k b^(n-1) a Z, Y = a^k b^n Z
    check_family(t, {b}, {c}, over_k(6, [&](std::size_t k) {
                   return Family{cat({pw(c, k), pw(b, nn - 1), {a}}),
                                 cat({pw(a, k), pw(b, nn)})};
                 }));
    // ba X = c Y has no solution
    check_family(t, {b, a}, {c}, {});
    // b^n X = c Y: X = a Z, Y = b^n Z
    check_family(t, pw(b, nn), {c}, {{{a}, pw(b, nn)}});
  }
}

TEST_CASE("gn: mcm of c^k b^(n-1) families is a singleton") {
  for (long n : {3L, 4L}) {
    CAPTURE(n);
    auto              nn = static_cast<std::size_t>(n);
    GradedTable       t(preset("gn", {n}), 9);
    DivisibilityIndex idx(t);
    for_each_kappa_set(9 - nn - 1, [&](std::vector<std::size_t> const& kappa) {
      std::vector<Word> j;
      for (auto k : kappa) {
        j.push_back(cat({pw(c, k), pw(b, nn - 1)}));
      }
      CHECK(idx.mcm(stage(t, j)) ==
            stage(t, {cat({pw(c, kappa.back()), pw(b, nn)})}));
    });
  }
}

TEST_CASE("hn: b X = c Y") {
  GradedTable t(preset("hn:1"), 8);
  // X = c^k (ab) ba Z, Y = a^k b (ab) b Z
  check_family(t, {b}, {c}, over_k(7, [](std::size_t k) {
                 return Family{cat({pw(c, k), {a, b, b, a}}),
                               cat({pw(a, k), {b, a, b, b}})};
               }));
  check_family(t, {a}, {b}, {{{b}, {c}}});
  check_family(t, {a}, {c}, {{{c}, {a}}});
}

TEST_CASE("hn: mcm of c^k b (ab)^(n-1) ba families is a singleton") {
  for (long n : {1L, 2L}) {
    CAPTURE(n);
    auto              nn  = static_cast<std::size_t>(n);
    std::size_t       d   = n == 1 ? 9 : 11;
    GradedTable       t(preset("hn", {n}), d);
    DivisibilityIndex idx(t);
    Word              mid = cat({{b}, power({a, b}, nn - 1), {b, a}});
    for_each_kappa_set(d - mid.size() - 2, [&](std::vector<std::size_t> const& kappa) {
      std::vector<Word> j;
      for (auto k : kappa) {
        j.push_back(cat({pw(c, k), mid}));
      }
      CHECK(idx.mcm(stage(t, j)) == stage(t, {cat({pw(c, kappa.back()), mid, {c, b}})}));
    });
  }
}

TEST_CASE("abel: a X = b Y has two solution families") {
  for (long m : {2L, 3L}) {
    CAPTURE(m);
    auto        mm = static_cast<std::size_t>(m);
    GradedTable t(preset("abel", {m}), 2 * mm + 2);
    check_family(t, {a}, {b}, {{pw(a, mm - 1), pw(b, mm - 1)}, {{b}, {a}}});
    check_family(t, {a}, {a}, {{{}, {}}});
  }
}
