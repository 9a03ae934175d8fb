#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homoid {

// Exact integer power series c_0 + c_1 t + ... + c_d t^d, known through
// order d. All arithmetic is checked; overflow raises OverflowError.
class TruncatedSeries {
 public:
  // The zero series of order 0.
  TruncatedSeries() : c_(1, 0) {}
  // Throws ValidationError if coefficients is empty.
  explicit TruncatedSeries(std::vector<std::int64_t> coefficients);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries one(std::size_t order);

  std::size_t truncation() const noexcept { return c_.size() - 1; }
  std::vector<std::int64_t> const& coefficients() const noexcept { return c_; }
  std::int64_t operator[](std::size_t k) const { return c_.at(k); }
  std::int64_t& operator[](std::size_t k) { return c_.at(k); }

  // Same series known to a lower order.
  TruncatedSeries truncated(std::size_t order) const;

  bool operator==(TruncatedSeries const&) const = default;

 private:
  std::vector<std::int64_t> c_;
};

using Polynomial = std::vector<std::int64_t>;

// numerator / denominator with an invertible (+1 or -1) constant term in
// the denominator.
struct RationalForm {
  Polynomial numerator;
  Polynomial denominator;
};

namespace checked {
  std::int64_t add(std::int64_t a, std::int64_t b);
  std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

// Cauchy product. Mixed orders give a result of the smaller order.
TruncatedSeries mul_truncated(TruncatedSeries const& a, TruncatedSeries const& b);

TruncatedSeries add_truncated(TruncatedSeries const& a, TruncatedSeries const& b);

// Multiplicative inverse; the constant term must be +1 or -1.
TruncatedSeries invert_truncated(TruncatedSeries const& a);

TruncatedSeries expand_rational(RationalForm const& r, std::size_t order);

// (1 - t)^k as a polynomial, a frequent building block.
Polynomial one_minus_t_pow(std::size_t k);
Polynomial poly_mul(Polynomial const& a, Polynomial const& b);

std::string to_string(TruncatedSeries const& s);

}  // namespace homoid
