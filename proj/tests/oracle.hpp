#pragma once

// Test-only brute-force oracles. Nothing here calls into the engine beyond
// reading a presentation's alphabet and relations.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "homoid/presentation.hpp"

namespace oracle {

// Words over letters 'a' + i, as strings.
inline std::vector<std::string> all_words(std::size_t n, std::size_t d) {
  std::vector<std::string> out{""};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::string> next;
    for (auto const& w : out) {
      for (std::size_t i = 0; i < n; ++i) {
        next.push_back(w + static_cast<char>('a' + i));
      }
    }
    out.swap(next);
  }
  return out;
}

inline std::string str(homoid::Word const& w) {
  std::string s;
  for (auto x : w) {
    s += static_cast<char>('a' + x);
  }
  return s;
}

// Connected components of the substitution graph on words of length d,
// keyed by word, valued by the least word of the component.
inline std::map<std::string, std::string> classes(homoid::Presentation const& p,
                                                  std::size_t                 d) {
  std::vector<std::pair<std::string, std::string>> rules;
  for (auto const& r : p.relations()) {
    rules.emplace_back(str(r.lhs), str(r.rhs));
    rules.emplace_back(str(r.rhs), str(r.lhs));
  }
  std::map<std::string, std::string> label;
  for (auto const& w : all_words(p.alphabet_size(), d)) {
    if (label.count(w)) {
      continue;
    }
    std::set<std::string>    comp{w};
    std::vector<std::string> stack{w};
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto const& [from, to] : rules) {
        for (auto pos = u.find(from); pos != std::string::npos;
             pos      = u.find(from, pos + 1)) {
          auto v = u;
          v.replace(pos, from.size(), to);
          if (comp.insert(v).second) {
            stack.push_back(v);
          }
        }
      }
    }
    for (auto const& u : comp) {
      label[u] = *comp.begin();
    }
  }
  return label;
}

inline std::size_t count_classes(homoid::Presentation const& p, std::size_t d) {
  std::set<std::string> reps;
  for (auto const& [w, rep] : classes(p, d)) {
    reps.insert(rep);
  }
  return reps.size();
}

// Taylor coefficients of num / den by schoolbook long division; den[0] must
// be 1.
inline std::vector<std::int64_t> taylor(std::vector<std::int64_t> num,
                                        std::vector<std::int64_t> den,
                                        std::size_t               order) {
  num.resize(order + 1, 0);
  den.resize(order + 1, 0);
  std::vector<std::int64_t> q(order + 1, 0);
  for (std::size_t k = 0; k <= order; ++k) {
    q[k] = num[k];
    for (std::size_t i = k; i <= order; ++i) {
      num[i] -= q[k] * den[i - k];
    }
  }
  return q;
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

// Polynomial product, for assembling closed forms in tests.
inline std::vector<std::int64_t> pmul(std::vector<std::int64_t> const& a,
                                      std::vector<std::int64_t> const& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

inline std::vector<std::int64_t> one_minus_t(std::size_t k) {
  std::vector<std::int64_t> out{1};
  for (std::size_t i = 0; i < k; ++i) {
    out = pmul(out, {1, -1});
  }
  return out;
}

}  // namespace oracle
