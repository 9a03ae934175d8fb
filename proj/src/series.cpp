#include "homoid/series.hpp"

#include <algorithm>
#include <sstream>

#include "homoid/error.hpp"

namespace homoid {

namespace checked {

  std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in series coefficient");
    }
    return r;
  }

  std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in series coefficient");
    }
    return r;
  }

}  // namespace checked

TruncatedSeries::TruncatedSeries(std::vector<std::int64_t> coefficients)
    : c_(std::move(coefficients)) {
  if (c_.empty()) {
    throw ValidationError("a truncated series needs at least one coefficient");
  }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<std::int64_t>(order + 1, 0));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  auto s = zero(order);
  s[0]   = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > truncation()) {
    throw ValidationError("cannot extend a series from order "
                          + std::to_string(truncation()) + " to "
                          + std::to_string(order));
  }
  return TruncatedSeries({c_.begin(), c_.begin() + order + 1});
}

TruncatedSeries mul_truncated(TruncatedSeries const& a,
                              TruncatedSeries const& b) {
  auto const order = std::min(a.truncation(), b.truncation());
  auto       out   = TruncatedSeries::zero(order);
  for (std::size_t k = 0; k <= order; ++k) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      sum = checked::add(sum, checked::mul(a[i], b[k - i]));
    }
    out[k] = sum;
  }
  return out;
}

TruncatedSeries add_truncated(TruncatedSeries const& a,
                              TruncatedSeries const& b) {
  auto const order = std::min(a.truncation(), b.truncation());
  auto       out   = TruncatedSeries::zero(order);
  for (std::size_t k = 0; k <= order; ++k) {
    out[k] = checked::add(a[k], b[k]);
  }
  return out;
}

TruncatedSeries invert_truncated(TruncatedSeries const& a) {
  auto const c0 = a[0];
  if (c0 != 1 && c0 != -1) {
    throw ValidationError("constant term " + std::to_string(c0)
                          + " is not a unit");
  }
  auto out = TruncatedSeries::zero(a.truncation());
  // c0 is its own inverse.
  out[0] = c0;
  for (std::size_t k = 1; k <= a.truncation(); ++k) {
    std::int64_t sum = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      sum = checked::add(sum, checked::mul(a[i], out[k - i]));
    }
    out[k] = checked::mul(-c0, sum);
  }
  return out;
}

namespace {

  TruncatedSeries as_series(Polynomial const& p, std::size_t order) {
    auto out = TruncatedSeries::zero(order);
    for (std::size_t k = 0; k < p.size() && k <= order; ++k) {
      out[k] = p[k];
    }
    return out;
  }

}  // namespace

TruncatedSeries expand_rational(RationalForm const& r, std::size_t order) {
  if (r.denominator.empty()) {
    throw ValidationError("empty denominator");
  }
  auto den = invert_truncated(as_series(r.denominator, order));
  return mul_truncated(as_series(r.numerator, order), den);
}

Polynomial poly_mul(Polynomial const& a, Polynomial const& b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = checked::add(out[i + j], checked::mul(a[i], b[j]));
    }
  }
  return out;
}

Polynomial one_minus_t_pow(std::size_t k) {
  Polynomial out{1};
  for (std::size_t i = 0; i < k; ++i) {
    out = poly_mul(out, {1, -1});
  }
  return out;
}

std::string to_string(TruncatedSeries const& s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k <= s.truncation(); ++k) {
    out << (k == 0 ? "" : ", ") << s[k];
  }
  out << ']';
  return out.str();
}

}  // namespace homoid
