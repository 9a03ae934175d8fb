#include "homoid/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "homoid/error.hpp"

namespace homoid {

namespace {

  bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  }

  bool valid_symbol(std::string const& s) {
    if (s.empty()) {
      return false;
    }
    return std::none_of(s.begin(), s.end(), [](char c) {
      return is_space(c) || c == '#' || c == '=' || c == ',';
    });
  }

  struct Token {
    std::string text;
    std::size_t column;  // 1-based
  };

  std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t        i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) {
        ++i;
      }
      if (i == line.size()) {
        break;
      }
      std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) {
        ++i;
      }
      out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
  }

}  // namespace

Presentation::Presentation(std::vector<std::string> alphabet,
                           std::vector<Relation>    relations,
                           std::string              name)
    : alphabet_(std::move(alphabet)),
      relations_(std::move(relations)),
      name_(std::move(name)) {
  if (alphabet_.empty()) {
    throw ValidationError("the alphabet must contain at least one symbol");
  }
  if (alphabet_.size() > 0xFFFF) {
    throw ValidationError("alphabet too large");
  }
  std::set<std::string> seen;
  for (auto const& s : alphabet_) {
    if (!valid_symbol(s)) {
      throw ValidationError("invalid symbol \"" + s + "\"");
    }
    if (!seen.insert(s).second) {
      throw ValidationError("duplicate symbol \"" + s + "\"");
    }
    compact_ = compact_ && s.size() == 1;
  }
  for (auto const& r : relations_) {
    check_word(r.lhs);
    check_word(r.rhs);
    if (r.lhs.size() != r.rhs.size()) {
      throw ValidationError("inhomogeneous relation " + format(r.lhs) + " = "
                            + format(r.rhs) + " (lengths "
                            + std::to_string(r.lhs.size()) + " and "
                            + std::to_string(r.rhs.size()) + ")");
    }
    if (r.lhs.empty()) {
      throw ValidationError("relations must have degree at least 1");
    }
    if (r.lhs == r.rhs) {
      throw ValidationError("trivial relation " + format(r.lhs) + " = "
                            + format(r.rhs));
    }
  }
}

std::optional<letter_type> Presentation::letter(std::string_view symbol) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), symbol);
  if (it == alphabet_.end()) {
    return std::nullopt;
  }
  return static_cast<letter_type>(it - alphabet_.begin());
}

void Presentation::check_word(Word const& w) const {
  for (auto x : w) {
    if (x >= alphabet_.size()) {
      throw ValidationError("letter id " + std::to_string(x)
                            + " out of range for an alphabet of size "
                            + std::to_string(alphabet_.size()));
    }
  }
}

std::string Presentation::format(Word const& w) const {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0 && !compact_) {
      out += ' ';
    }
    out += alphabet_.at(w[i]);
  }
  return out;
}

Word Presentation::parse_word(std::string_view text) const {
  Word out;
  auto tokens = tokenize(text);
  if (tokens.size() == 1 && tokens[0].text == "1" && !letter("1")) {
    return out;
  }
  for (auto const& tok : tokens) {
    if (auto x = letter(tok.text)) {
      out.push_back(*x);
      continue;
    }
    if (!compact_) {
      throw ValidationError("unknown symbol \"" + tok.text + "\"");
    }
    for (char c : tok.text) {
      auto x = letter(std::string_view(&c, 1));
      if (!x) {
        throw ValidationError("unknown symbol \"" + std::string(1, c)
                              + "\" in word \"" + tok.text + "\"");
      }
      out.push_back(*x);
    }
  }
  return out;
}

Presentation parse_presentation(std::string_view source, std::string name) {
  std::vector<std::string> alphabet;
  std::vector<Relation>    relations;
  bool                     have_alphabet = false;
  std::size_t              line_no       = 0;

  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto eol  = source.find('\n', pos);
    auto line = source.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? source.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    auto const& head = tokens.front();
    if (head.text == "alphabet") {
      if (have_alphabet) {
        throw ParseError("duplicate alphabet line", line_no, head.column);
      }
      have_alphabet = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto const& t = tokens[i];
        if (t.text == "=" || t.text.find(',') != std::string::npos) {
          throw ParseError("invalid symbol \"" + t.text + "\"",
                           line_no,
                           t.column);
        }
        if (std::find(alphabet.begin(), alphabet.end(), t.text)
            != alphabet.end()) {
          throw ParseError(
              "duplicate symbol \"" + t.text + "\"", line_no, t.column);
        }
        alphabet.push_back(t.text);
      }
      if (alphabet.empty()) {
        throw ParseError("empty alphabet", line_no, head.column);
      }
    } else if (head.text == "rel") {
      if (!have_alphabet) {
        throw ParseError(
            "the alphabet line must come first", line_no, head.column);
      }
      Word  lhs, rhs;
      Word* side     = &lhs;
      bool  have_eq  = false;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto const& t = tokens[i];
        if (t.text == "=") {
          if (have_eq) {
            throw ParseError("more than one '='", line_no, t.column);
          }
          have_eq = true;
          side    = &rhs;
          continue;
        }
        auto it = std::find(alphabet.begin(), alphabet.end(), t.text);
        if (it != alphabet.end()) {
          side->push_back(static_cast<letter_type>(it - alphabet.begin()));
          continue;
        }
        // "cbb" for c b b, allowed when every symbol is one character
        bool compact = std::all_of(alphabet.begin(),
                                   alphabet.end(),
                                   [](auto const& s) { return s.size() == 1; });
        if (!compact) {
          throw ParseError(
              "unknown symbol \"" + t.text + "\"", line_no, t.column);
        }
        for (std::size_t k = 0; k < t.text.size(); ++k) {
          auto jt = std::find(
              alphabet.begin(), alphabet.end(), std::string(1, t.text[k]));
          if (jt == alphabet.end()) {
            throw ParseError("unknown symbol \"" + std::string(1, t.text[k])
                                 + "\"",
                             line_no,
                             t.column + k);
          }
          side->push_back(static_cast<letter_type>(jt - alphabet.begin()));
        }
      }
      if (!have_eq) {
        throw ParseError("expected '=' in relation", line_no, head.column);
      }
      if (lhs.empty() || rhs.empty()) {
        throw ParseError("empty side in relation", line_no, head.column);
      }
      if (lhs.size() != rhs.size()) {
        throw ParseError("inhomogeneous relation (lengths "
                             + std::to_string(lhs.size()) + " and "
                             + std::to_string(rhs.size()) + ")",
                         line_no,
                         head.column);
      }
      if (lhs == rhs) {
        throw ParseError("trivial relation", line_no, head.column);
      }
      relations.push_back({std::move(lhs), std::move(rhs)});
    } else {
      throw ParseError("expected 'alphabet' or 'rel', found \"" + head.text
                           + "\"",
                       line_no,
                       head.column);
    }
  }
  if (!have_alphabet) {
    throw ParseError("missing alphabet line", line_no, 1);
  }
  return Presentation(std::move(alphabet), std::move(relations), std::move(name));
}

std::string serialize(Presentation const& p) {
  std::ostringstream out;
  if (!p.name().empty()) {
    out << "# " << p.name() << '\n';
  }
  out << "alphabet";
  for (auto const& s : p.alphabet()) {
    out << ' ' << s;
  }
  out << '\n';
  auto spaced = [&p](Word const& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s += (i == 0 ? "" : " ") + p.symbol(w[i]);
    }
    return s;
  };
  for (auto const& r : p.relations()) {
    out << "rel " << spaced(r.lhs) << " = " << spaced(r.rhs) << '\n';
  }
  return out.str();
}

namespace {

  constexpr letter_type A = 0, B = 1, C = 2, D = 3;

  Presentation abc(std::vector<Relation> rels, std::string name) {
    return Presentation({"a", "b", "c"}, std::move(rels), std::move(name));
  }

  // ab = bc, ac = ca: shared by B_ii, G_n and H_n.
  void add_common(std::vector<Relation>& rels) {
    rels.push_back({{A, B}, {B, C}});
    rels.push_back({{A, C}, {C, A}});
  }

  long require_param(std::string_view       id,
                     std::vector<long> const& params,
                     long                     min) {
    if (params.size() != 1) {
      throw ValidationError("preset " + std::string(id)
                            + " takes exactly one parameter");
    }
    if (params[0] < min) {
      throw ValidationError("preset " + std::string(id) + " requires parameter >= "
                            + std::to_string(min) + ", got "
                            + std::to_string(params[0]));
    }
    return params[0];
  }

  void require_none(std::string_view id, std::vector<long> const& params) {
    if (!params.empty()) {
      throw ValidationError("preset " + std::string(id)
                            + " takes no parameters");
    }
  }

}  // namespace

Presentation preset(std::string_view id, std::vector<long> const& params) {
  std::vector<Relation> rels;
  if (id == "bii") {
    require_none(id, params);
    rels.push_back({{C, B, B}, {B, B, A}});
    add_common(rels);
    return abc(std::move(rels), "bii");
  }
  if (id == "gn") {
    auto n = static_cast<std::size_t>(require_param(id, params, 3));
    // c b^n = b^n a
    rels.push_back({concat({C}, power({B}, n)), concat(power({B}, n), {A})});
    add_common(rels);
    return abc(std::move(rels), "gn:" + std::to_string(n));
  }
  if (id == "hn") {
    auto n = static_cast<std::size_t>(require_param(id, params, 1));
    // b (ab)^n b a = c b (ab)^n b
    Word ab_n = power({A, B}, n);
    rels.push_back({concat(concat({B}, ab_n), {B, A}),
                    concat(concat({C, B}, ab_n), {B})});
    add_common(rels);
    return abc(std::move(rels), "hn:" + std::to_string(n));
  }
  if (id == "abel") {
    auto m = static_cast<std::size_t>(require_param(id, params, 2));
    rels.push_back({power({A}, m), power({B}, m)});
    rels.push_back({{A, B}, {B, A}});
    return Presentation(
        {"a", "b"}, std::move(rels), "abel:" + std::to_string(m));
  }
  if (id == "free") {
    auto n = static_cast<std::size_t>(require_param(id, params, 1));
    if (n > 0xFFFF) {
      throw ValidationError("preset free: rank too large");
    }
    std::vector<std::string> alphabet;
    for (std::size_t i = 0; i < n; ++i) {
      alphabet.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                                : "x" + std::to_string(i));
    }
    return Presentation(std::move(alphabet), {}, "free:" + std::to_string(n));
  }
  if (id == "appendix2") {
    require_none(id, params);
    rels.push_back({{C, B}, {B, A}});
    add_common(rels);
    return abc(std::move(rels), "appendix2");
  }
  if (id == "appendix3") {
    require_none(id, params);
    rels = {{{A, B}, {B, C}},
            {{A, C}, {C, A}},
            {{C, B}, {B, A}},
            {{B, D}, {D, B}},
            {{A, D}, {D, C}},
            {{C, D}, {D, A}}};
    return Presentation(
        {"a", "b", "c", "d"}, std::move(rels), "appendix3");
  }
  throw ValidationError("unknown preset \"" + std::string(id) + "\"");
}

Presentation preset(std::string_view spec) {
  auto              colon = spec.find(':');
  std::vector<long> params;
  auto              id = spec.substr(0, colon);
  if (colon != std::string_view::npos) {
    auto rest = spec.substr(colon + 1);
    while (true) {
      auto comma = rest.find(',');
      auto piece = rest.substr(0, comma);
      long value = 0;
      auto [ptr, ec]
          = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (ec != std::errc() || ptr != piece.data() + piece.size()
          || piece.empty()) {
        throw ValidationError("bad preset parameter \"" + std::string(piece)
                              + "\" in \"" + std::string(spec) + "\"");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      rest = rest.substr(comma + 1);
    }
  }
  return preset(id, params);
}

Presentation reverse_presentation(Presentation const& p) {
  std::vector<Relation> rels;
  rels.reserve(p.relations().size());
  for (auto const& r : p.relations()) {
    rels.push_back({reversed(r.lhs), reversed(r.rhs)});
  }
  return Presentation(p.alphabet(),
                      std::move(rels),
                      p.name().empty() ? "" : "rev(" + p.name() + ")");
}

}  // namespace homoid
