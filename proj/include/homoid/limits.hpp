#pragma once

#include <cstddef>
#include <cstdint>

namespace homoid {

// Resource guards. Exceeding any of them raises LimitError; nothing is ever
// silently truncated.
struct Limits {
  // Longest word any operation will accept.
  std::size_t max_degree = 16;
  // Total number of words (summed over all degrees) a graded table may
  // intern. Each interned word costs about 8 bytes while a table is built.
  std::uint64_t word_budget = std::uint64_t(1) << 25;
  // Number of stage subsets tower enumeration may expand.
  std::uint64_t subset_budget = 1'000'000;
};

}  // namespace homoid
