#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "primal/errors.hpp"
#include "primal/words.hpp"

namespace primal {

// A monomial presentation: k{alphabet} modulo the ideal generated by the
// forbidden words. A word is nonzero in the algebra exactly when none of
// the forbidden words occurs in it as a factor.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> forbidden;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.alphabet == b.alphabet && a.forbidden == b.forbidden;
  }
};

namespace detail {

// Column (1-based byte offset) where `tok` starts in `line`, searching from
// `from`; used to point error messages at the offending token.
inline int token_col(const std::string& line, const std::string& tok, size_t from = 0) {
  size_t pos = line.find(tok, from);
  return pos == std::string::npos ? 0 : static_cast<int>(pos) + 1;
}

}  // namespace detail

// Presentation file format:
//   letters x y        exactly one such line, before any forbid line
//   forbid x x         one forbidden word per line
// '#' starts a comment; blank lines are ignored.
inline Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_letters = false;
  Alphabet alpha;
  std::vector<Word> forbidden;

  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::vector<std::string> toks = detail::split_ws(body);
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    if (head == "letters") {
      if (have_letters) throw parse_error("duplicate letters line", lineno);
      if (toks.size() < 2) throw parse_error("letters line names no symbols", lineno);
      for (size_t i = 1; i + 1 < toks.size(); ++i)
        for (size_t j = i + 1; j < toks.size(); ++j)
          if (toks[i] == toks[j])
            throw parse_error("duplicate symbol '" + toks[j] + "'", lineno,
                              detail::token_col(body, toks[j], 1));
      alpha = Alphabet(std::vector<Symbol>(toks.begin() + 1, toks.end()));
      have_letters = true;
    } else if (head == "forbid") {
      if (!have_letters) throw parse_error("forbid before letters line", lineno);
      if (toks.size() < 2) throw parse_error("empty forbidden word", lineno);
      Word w;
      for (size_t i = 1; i < toks.size(); ++i) {
        const std::string& tok = toks[i];
        if (alpha.contains(tok)) {
          w.push_back(alpha.index(tok));
        } else if (tok.size() > 1 && alpha.all_single_char()) {
          for (char ch : tok) {
            std::string sym(1, ch);
            if (!alpha.contains(sym))
              throw parse_error("unknown symbol '" + sym + "'", lineno,
                                detail::token_col(body, tok, 1));
            w.push_back(alpha.index(sym));
          }
        } else {
          throw parse_error("unknown symbol '" + tok + "'", lineno,
                            detail::token_col(body, tok, 1));
        }
      }
      forbidden.push_back(std::move(w));
    } else {
      throw parse_error("unknown directive '" + head + "'", lineno,
                        detail::token_col(body, head));
    }
  }
  if (!have_letters) throw parse_error("missing letters line");
  return Presentation{std::move(alpha), std::move(forbidden)};
}

// Non-fatal diagnostics. A forbidden word of length one is legal (it kills a
// generator outright) but is usually a mistake, so it gets a warning.
inline std::vector<std::string> validate(const Presentation& p) {
  std::vector<std::string> warnings;
  for (const Word& w : p.forbidden)
    if (w.size() == 1)
      warnings.push_back("forbidden word of length 1: generator '" +
                         p.alphabet.symbol(w[0]) + "' is zero in the algebra");
  return warnings;
}

// Removes duplicates and every forbidden word that properly contains another
// forbidden word as a factor, then sorts by (length, alphabet order). The
// result presents the same algebra.
inline Presentation normalize(const Presentation& p) {
  std::vector<Word> uniq;
  for (const Word& w : p.forbidden)
    if (std::find(uniq.begin(), uniq.end(), w) == uniq.end()) uniq.push_back(w);

  std::vector<Word> kept;
  for (const Word& w : uniq) {
    bool redundant = false;
    for (const Word& u : uniq)
      if (u != w && is_factor(u, w)) { redundant = true; break; }
    if (!redundant) kept.push_back(w);
  }
  std::sort(kept.begin(), kept.end(), word_less);
  return Presentation{p.alphabet, std::move(kept)};
}

// The opposite algebra: every forbidden word reversed.
inline Presentation reverse_presentation(const Presentation& p) {
  Presentation out{p.alphabet, {}};
  out.forbidden.reserve(p.forbidden.size());
  for (const Word& w : p.forbidden) out.forbidden.push_back(reversed(w));
  return out;
}

inline std::string presentation_to_text(const Presentation& p) {
  std::string out = "letters";
  for (const Symbol& s : p.alphabet.symbols()) out += " " + s;
  out += "\n";
  for (const Word& w : p.forbidden) {
    out += "forbid";
    for (uint32_t sym : w) out += " " + p.alphabet.symbol(sym);
    out += "\n";
  }
  return out;
}

}  // namespace primal
