#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homoid/word.hpp"

namespace homoid {

// An unoriented homogeneous relation lhs = rhs; both substitution directions
// are legal.
struct Relation {
  Word lhs;
  Word rhs;

  bool operator==(Relation const&) const = default;
};

// A positive homogeneous monoid presentation <L | R>. Immutable once
// constructed; the constructor rejects anything that is not homogeneous.
//
// Alphabet declaration order defines the lexicographic order used for
// canonical forms everywhere in the engine.
class Presentation {
 public:
  Presentation(std::vector<std::string> alphabet,
               std::vector<Relation>    relations,
               std::string              name = {});

  std::vector<std::string> const& alphabet() const noexcept {
    return alphabet_;
  }
  std::vector<Relation> const& relations() const noexcept {
    return relations_;
  }
  std::string const& name() const noexcept { return name_; }
  std::size_t        alphabet_size() const noexcept { return alphabet_.size(); }

  std::optional<letter_type> letter(std::string_view symbol) const;
  std::string const&         symbol(letter_type x) const {
    return alphabet_.at(x);
  }

  // True when every symbol is a single character, in which case words are
  // rendered without separators ("cbb" rather than "c b b").
  bool compact_symbols() const noexcept { return compact_; }

  // Renders w in this presentation's symbols; the empty word is "1".
  std::string format(Word const& w) const;

  // Inverse of format. Accepts whitespace separated symbols, and, when every
  // symbol is a single character, unseparated runs such as "cbb".
  Word parse_word(std::string_view text) const;

  // Throws ValidationError if w has a letter outside the alphabet.
  void check_word(Word const& w) const;

  // Equality of alphabets and relation lists (names are labels only).
  bool operator==(Presentation const& that) const {
    return alphabet_ == that.alphabet_ && relations_ == that.relations_;
  }

 private:
  std::vector<std::string> alphabet_;
  std::vector<Relation>    relations_;
  std::string              name_;
  bool                     compact_ = true;
};

// Line-oriented text format:
//
//   alphabet <sym> <sym> ...
//   rel <sym> ... = <sym> ...      (zero or more)
//
// '#' starts a comment. Errors carry line and column.
Presentation parse_presentation(std::string_view source,
                                std::string      name = {});

std::string serialize(Presentation const& p);

// Named presentations. ids: bii, gn (n >= 3), hn (n >= 1), abel (m >= 2),
// free (rank >= 1), appendix2, appendix3.
Presentation preset(std::string_view id, std::vector<long> const& params);

// "gn:3" style spec, as accepted on the command line.
Presentation preset(std::string_view spec);

// The opposite presentation: same alphabet, every relation word reversed.
// Left cancellativity of the result is right cancellativity of p.
Presentation reverse_presentation(Presentation const& p);

}  // namespace homoid
