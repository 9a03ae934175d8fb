#include "homoid/word.hpp"

#include <limits>

#include "homoid/error.hpp"

namespace homoid {

WordCodec::WordCodec(std::size_t alphabet_size, std::size_t max_degree)
    : n_(alphabet_size) {
  pow_.reserve(max_degree + 1);
  for (std::size_t k = 1; k <= max_degree; ++k) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(pow_.back(), std::uint64_t(n_), &next)) {
      throw LimitError("words of degree " + std::to_string(k)
                       + " over an alphabet of size " + std::to_string(n_)
                       + " cannot be indexed in 64 bits");
    }
    pow_.push_back(next);
  }
}

std::uint64_t WordCodec::encode(Word const& w) const {
  std::uint64_t code = 0;
  for (auto x : w) {
    code = code * n_ + x;
  }
  return code;
}

Word WordCodec::decode(std::uint64_t code, std::size_t degree) const {
  Word w(degree);
  for (std::size_t i = degree; i-- > 0;) {
    w[i] = static_cast<letter_type>(code % n_);
    code /= n_;
  }
  return w;
}

}  // namespace homoid
