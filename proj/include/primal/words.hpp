#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "primal/errors.hpp"

namespace primal {

using Symbol = std::string;

// A word is a sequence of symbol indices into some Alphabet. The empty
// vector is the empty word (the identity of the algebra).
using Word = std::vector<uint32_t>;

// Ordered list of distinct symbols. The listing order is significant: it
// fixes word comparisons, automaton edge exploration and term orders.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw parse_error("alphabet is empty");
    for (uint32_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i].empty()) throw parse_error("empty symbol");
      if (!index_.emplace(symbols_[i], i).second)
        throw parse_error("duplicate symbol '" + symbols_[i] + "'");
    }
  }

  [[nodiscard]] uint32_t size() const { return static_cast<uint32_t>(symbols_.size()); }
  [[nodiscard]] const Symbol& symbol(uint32_t i) const { return symbols_[i]; }
  [[nodiscard]] const std::vector<Symbol>& symbols() const { return symbols_; }

  [[nodiscard]] bool contains(const Symbol& s) const { return index_.count(s) != 0; }
  [[nodiscard]] uint32_t index(const Symbol& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw parse_error("unknown symbol '" + s + "'");
    return it->second;
  }

  // True when every symbol is a single character, enabling the contiguous
  // word form ("xxy" instead of "x x y").
  [[nodiscard]] bool all_single_char() const {
    return std::all_of(symbols_.begin(), symbols_.end(),
                       [](const Symbol& s) { return s.size() == 1; });
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::map<Symbol, uint32_t> index_;
};

// Length-first word order; ties broken by symbol indices (alphabet order).
// This is the term order used everywhere a deterministic choice is needed.
inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

// Empty words render as the literal "ε" so they survive a round trip
// through text output and back.
inline std::string format_word(const Alphabet& alpha, const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alpha.symbol(w[i]);
  }
  return out;
}

namespace detail {
inline std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}
}  // namespace detail

// Parses a word from whitespace-separated symbol tokens. When all alphabet
// symbols are single characters a token may also spell several symbols
// contiguously. "ε" and the empty string denote the empty word.
inline Word parse_word(const Alphabet& alpha, const std::string& text) {
  std::vector<std::string> toks = detail::split_ws(text);
  if (toks.empty() || (toks.size() == 1 && toks[0] == "ε")) return {};
  Word w;
  for (const std::string& tok : toks) {
    if (alpha.contains(tok)) {
      w.push_back(alpha.index(tok));
    } else if (tok.size() > 1 && alpha.all_single_char()) {
      for (char ch : tok) w.push_back(alpha.index(std::string(1, ch)));
    } else {
      throw parse_error("unknown symbol '" + tok + "'");
    }
  }
  return w;
}

// True iff `factor` occurs as a contiguous subword of `w`.
inline bool is_factor(const Word& factor, const Word& w) {
  if (factor.empty()) return true;
  if (factor.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), factor.begin(), factor.end()) != w.end();
}

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace primal
