#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace homoid {

using letter_type = std::uint16_t;

// A positive word: a sequence of letter ids. Its degree is its length.
using Word = std::vector<letter_type>;

inline std::size_t degree(Word const& w) noexcept { return w.size(); }

inline Word concat(Word const& u, Word const& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

inline Word reversed(Word const& w) { return Word(w.rbegin(), w.rend()); }

inline Word power(Word const& w, std::size_t k) {
  Word out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

// Bijection between words of a fixed degree over an alphabet of size n and
// the integers [0, n^d). The first letter is the most significant digit, so
// numeric order on codes of one degree is lexicographic order on words.
class WordCodec {
 public:
  WordCodec() = default;
  WordCodec(std::size_t alphabet_size, std::size_t max_degree);

  std::size_t alphabet_size() const noexcept { return n_; }
  std::size_t max_degree() const noexcept { return pow_.size() - 1; }

  // n^k for k <= max_degree.
  std::uint64_t pow(std::size_t k) const { return pow_[k]; }

  std::uint64_t encode(Word const& w) const;
  Word decode(std::uint64_t code, std::size_t degree) const;

  // Code of the length-k prefix of a degree-d word.
  std::uint64_t prefix(std::uint64_t code, std::size_t d, std::size_t k) const {
    return code / pow_[d - k];
  }

  // Code of concat(u, v) where v has degree dv.
  std::uint64_t concat(std::uint64_t u, std::uint64_t v, std::size_t dv) const {
    return u * pow_[dv] + v;
  }

 private:
  std::size_t                n_ = 0;
  std::vector<std::uint64_t> pow_{1};
};

}  // namespace homoid
