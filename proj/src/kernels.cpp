#include "homoid/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <span>

#include "homoid/error.hpp"
#include "homoid/rewrite.hpp"

namespace homoid::kernels {

namespace {

  struct EncodedRelation {
    std::uint64_t lhs;
    std::uint64_t rhs;
    std::size_t   length;
  };

  // Lock-free union-find. Parents only ever point to smaller indices, so
  // the root of a component is its least member, i.e. the lexicographically
  // least word of the class.
  class ConcurrentForest {
   public:
    explicit ConcurrentForest(std::size_t n) : parent_(n) {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        parent_[i].store(static_cast<std::uint32_t>(i),
                         std::memory_order_relaxed);
      }
    }

    std::uint32_t find(std::uint32_t x) {
      while (true) {
        std::uint32_t p = parent_[x].load(std::memory_order_relaxed);
        if (p == x) {
          return x;
        }
        std::uint32_t gp = parent_[p].load(std::memory_order_relaxed);
        if (gp != p) {
          // path halving; losing the race is harmless
          parent_[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
        }
        x = gp;
      }
    }

    void unite(std::uint32_t a, std::uint32_t b) {
      while (true) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        if (a < b) {
          std::swap(a, b);
        }
        std::uint32_t expected = a;
        if (parent_[a].compare_exchange_strong(
                expected, b, std::memory_order_acq_rel)) {
          return;
        }
      }
    }

   private:
    std::vector<std::atomic<std::uint32_t>> parent_;
  };

  std::uint64_t checked_count(WordCodec const& codec, std::size_t degree) {
    std::uint64_t n = codec.pow(degree);
    if (n > std::numeric_limits<std::uint32_t>::max()) {
      throw LimitError("too many words of degree " + std::to_string(degree));
    }
    return n;
  }

}  // namespace

std::vector<std::uint32_t> class_roots(Presentation const& p,
                                       WordCodec const&    codec,
                                       std::size_t         degree) {
  std::uint64_t const n = checked_count(codec, degree);

  std::vector<EncodedRelation> rels;
  for (auto const& r : p.relations()) {
    if (r.lhs.size() <= degree) {
      rels.push_back({codec.encode(r.lhs), codec.encode(r.rhs), r.lhs.size()});
    }
  }

  ConcurrentForest forest(n);
  if (!rels.empty()) {
    // Scanning for left-hand sides alone finds every edge: an occurrence of
    // rhs in w is an occurrence of lhs in the neighbour it links to.
#pragma omp parallel for schedule(dynamic, 4096)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      auto const w = static_cast<std::uint64_t>(i);
      for (auto const& r : rels) {
        std::uint64_t const window = codec.pow(r.length);
        for (std::size_t pos = 0; pos + r.length <= degree; ++pos) {
          std::uint64_t const shift = codec.pow(degree - pos - r.length);
          if ((w / shift) % window == r.lhs) {
            std::uint64_t const v = w - r.lhs * shift + r.rhs * shift;
            forest.unite(static_cast<std::uint32_t>(w),
                         static_cast<std::uint32_t>(v));
          }
        }
      }
    }
  }

  std::vector<std::uint32_t> roots(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    roots[i] = forest.find(static_cast<std::uint32_t>(i));
  }
  return roots;
}

std::vector<std::uint32_t> class_roots_serial(Presentation const& p,
                                              WordCodec const&    codec,
                                              std::size_t         degree) {
  std::uint64_t const        n = checked_count(codec, degree);
  constexpr std::uint32_t    unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> roots(n, unset);
  Limits                     limits;
  limits.max_degree = degree;
  for (std::uint64_t w = 0; w < n; ++w) {
    if (roots[w] != unset) {
      continue;
    }
    auto cls   = equivalence_class(p, codec.decode(w, degree), limits);
    auto least = static_cast<std::uint32_t>(codec.encode(cls.front()));
    for (auto const& u : cls) {
      roots[codec.encode(u)] = least;
    }
  }
  return roots;
}

std::vector<std::uint32_t> class_prefixes(
    std::span<std::uint32_t const>                member_codes,
    std::size_t                                    degree,
    WordCodec const&                               codec,
    std::vector<std::vector<std::uint32_t>> const& prefix_class) {
  std::vector<std::uint32_t> out;
  out.reserve(member_codes.size() * (degree + 1));
  for (auto w : member_codes) {
    for (std::size_t k = 0; k <= degree; ++k) {
      out.push_back(prefix_class[k][codec.prefix(w, degree, k)]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace homoid::kernels
