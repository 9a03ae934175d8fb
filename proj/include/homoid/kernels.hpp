#pragma once

// Data-parallel kernels behind the graded table and the bulk checks, each
// paired with a serial reference implementation that takes an independent
// route. The references exist for tests and benchmarks.
//
// Thread count follows OpenMP (OMP_NUM_THREADS).

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "homoid/presentation.hpp"
#include "homoid/word.hpp"

namespace homoid::kernels {

// For every word code of the given degree, the least code in its
// equivalence class. Concurrent union-find over all n^d words; every
// relation occurrence becomes a union edge.
std::vector<std::uint32_t> class_roots(Presentation const& p,
                                       WordCodec const&    codec,
                                       std::size_t         degree);

// Same result, computed word by word with the breadth-first closure from
// rewrite.hpp. Slow; for cross-checking only.
std::vector<std::uint32_t> class_roots_serial(Presentation const& p,
                                              WordCodec const&    codec,
                                              std::size_t         degree);

// Sorted, deduplicated left divisors of a class given by its member codes:
// the classes of every prefix of every member. prefix_class[k] maps a
// degree-k code to an id.
std::vector<std::uint32_t> class_prefixes(
    std::span<std::uint32_t const>                member_codes,
    std::size_t                                    degree,
    WordCodec const&                               codec,
    std::vector<std::vector<std::uint32_t>> const& prefix_class);

}  // namespace homoid::kernels
