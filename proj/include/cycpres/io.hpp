#pragma once

// Word grammar shared by the CLI and file formats.
//
// Terms are separated by whitespace or '*'; a term is a generator name
// optionally followed by '^' and a signed integer exponent.  Names are either
// "x<k>" (decimal k >= 0) or single letters 'a'..'z' mapped in alphabetical
// order to indices 0,1,...; 't' is reserved as the stable letter in
// two-generator / HNN contexts and then maps to the last index.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycpres/words.hpp"

namespace cycpres {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using WordText = std::vector<std::pair<std::string, std::int64_t>>;

inline WordText tokenize_word(const std::string& s) {
  WordText terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) ||
                            s[i] == '*'))
      ++i;
  };
  skip();
  while (i < s.size()) {
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
           s[i] != '*' && s[i] != '^')
      ++i;
    std::string name = s.substr(start, i - start);
    if (name.empty()) throw ParseError("empty generator name in word: " + s);
    std::int64_t exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t estart = i;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      if (i == estart) throw ParseError("missing exponent after '^' in: " + s);
      exp = std::stoll(s.substr(estart, i - estart));
    }
    terms.emplace_back(std::move(name), exp);
    skip();
  }
  return terms;
}

// Maps generator indices to printable names and back.
class NameTable {
 public:
  NameTable() = default;
  explicit NameTable(std::vector<std::string> names)
      : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      index_[names_[i]] = static_cast<int>(i);
  }

  static NameTable default_names(int rank) {
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i));
    return NameTable(std::move(names));
  }

  static NameTable two_generator() { return NameTable({"x", "t"}); }

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const {
    return names_.at(static_cast<std::size_t>(i));
  }
  int index(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw ParseError("unknown generator: " + n);
    return it->second;
  }
  bool has(const std::string& n) const { return index_.count(n) != 0; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

namespace detail {

inline bool is_xk_name(const std::string& n) {
  if (n.size() < 2 || n[0] != 'x') return false;
  return std::all_of(n.begin() + 1, n.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

inline bool is_letter_name(const std::string& n) {
  return n.size() == 1 && n[0] >= 'a' && n[0] <= 'z';
}

}  // namespace detail

// Builds a name table from the names occurring in the given texts.  With
// stable_t set, 't' is excluded from the alphabetical mapping and appended as
// the final generator (whether or not it occurs).
inline NameTable infer_names(const std::vector<WordText>& texts,
                             bool stable_t = false) {
  bool any_xk = false, any_letter = false;
  int max_k = -1;
  std::set<std::string> letters;
  for (const auto& text : texts) {
    for (const auto& [name, exp] : text) {
      (void)exp;
      if (stable_t && name == "t") continue;
      if (detail::is_xk_name(name)) {
        any_xk = true;
        max_k = std::max(max_k, std::stoi(name.substr(1)));
      } else if (detail::is_letter_name(name)) {
        any_letter = true;
        letters.insert(name);
      } else {
        throw ParseError("bad generator name: " + name);
      }
    }
  }
  if (any_xk && any_letter)
    throw ParseError("cannot mix x<k> names with letter names");
  std::vector<std::string> names;
  if (any_xk) {
    for (int k = 0; k <= max_k; ++k) names.push_back("x" + std::to_string(k));
  } else {
    names.assign(letters.begin(), letters.end());
  }
  if (stable_t) names.push_back("t");
  return NameTable(std::move(names));
}

inline Word resolve_word(const WordText& text, const NameTable& table) {
  Word w(table.rank());
  for (const auto& [name, exp] : text) w.push(table.index(name), exp);
  return w;
}

// One-shot parse with inferred names; rank is the inferred generator count.
inline Word parse_word(const std::string& s) {
  WordText text = tokenize_word(s);
  return resolve_word(text, infer_names({text}));
}

inline Word parse_word(const std::string& s, const NameTable& table) {
  return resolve_word(tokenize_word(s), table);
}

inline std::string print_word(const Word& w, const NameTable& table) {
  std::string out;
  for (const auto& s : w.runs()) {
    if (!out.empty()) out += ' ';
    out += table.name(s.gen);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

inline std::string print_word(const Word& w) {
  return print_word(w, NameTable::default_names(w.rank()));
}

// Parses "a->b; b->a^2" style endomorphism descriptions.  Left-hand names
// define the generating set (letters mapped alphabetically).
struct NamedEndomorphism {
  Endomorphism endo;
  NameTable names;
};

inline NamedEndomorphism parse_endomorphism(const std::string& s) {
  std::vector<std::pair<std::string, std::string>> rules;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t semi = s.find(';', pos);
    std::string chunk =
        s.substr(pos, semi == std::string::npos ? std::string::npos
                                                : semi - pos);
    pos = semi == std::string::npos ? s.size() : semi + 1;
    std::size_t arrow = chunk.find("->");
    if (arrow == std::string::npos) {
      if (chunk.find_first_not_of(" \t") != std::string::npos)
        throw ParseError("endomorphism rule missing '->': " + chunk);
      continue;
    }
    std::string lhs = chunk.substr(0, arrow);
    std::string rhs = chunk.substr(arrow + 2);
    lhs.erase(std::remove_if(lhs.begin(), lhs.end(),
                             [](char c) {
                               return std::isspace(
                                   static_cast<unsigned char>(c));
                             }),
              lhs.end());
    if (lhs.empty()) throw ParseError("empty left-hand side in endomorphism");
    if (lhs == "t") throw ParseError("'t' cannot be an endomorphism generator");
    rules.emplace_back(lhs, rhs);
  }
  if (rules.empty()) throw ParseError("empty endomorphism description");

  std::vector<WordText> lhs_texts;
  for (const auto& [lhs, rhs] : rules) {
    (void)rhs;
    lhs_texts.push_back({{lhs, 1}});
  }
  NameTable table = infer_names(lhs_texts, /*stable_t=*/false);

  Endomorphism e;
  e.rank = table.rank();
  e.images.assign(static_cast<std::size_t>(e.rank), Word(e.rank));
  std::vector<bool> seen(static_cast<std::size_t>(e.rank), false);
  for (const auto& [lhs, rhs] : rules) {
    int idx = table.index(lhs);
    if (seen[static_cast<std::size_t>(idx)])
      throw ParseError("duplicate rule for generator " + lhs);
    seen[static_cast<std::size_t>(idx)] = true;
    e.images[static_cast<std::size_t>(idx)] = parse_word(rhs, table);
  }
  for (int i = 0; i < e.rank; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw ParseError("no rule for generator " + table.name(i));
  e.validate();
  return {std::move(e), std::move(table)};
}

}  // namespace cycpres
