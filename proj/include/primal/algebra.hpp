#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "primal/structure.hpp"

namespace primal {

using Rational = boost::multiprecision::cpp_rational;

// A finitely supported linear combination of nonzero words of a monomial
// algebra. Words rejected by the automaton are zero and never stored; the
// map is kept free of zero coefficients.
struct AlgebraElement {
  const MinimalDfa* algebra = nullptr;
  std::map<Word, Rational, WordLess> terms;
};

inline AlgebraElement make_element(const MinimalDfa& m) { return {&m, {}}; }

namespace detail {
inline void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra == nullptr || b.algebra == nullptr)
    throw validation_error("element has no algebra attached");
  if (a.algebra != b.algebra && !(*a.algebra == *b.algebra))
    throw validation_error("elements live in different algebras");
}
}  // namespace detail

inline void element_add_term(AlgebraElement& e, const Word& w, const Rational& c) {
  if (c == 0 || !accepts(e.algebra->get(), w)) return;
  Rational& slot = e.terms[w];
  slot += c;
  if (slot == 0) e.terms.erase(w);
}

inline bool element_is_zero(const AlgebraElement& e) { return e.terms.empty(); }

inline AlgebraElement element_add(const AlgebraElement& a, const AlgebraElement& b) {
  detail::require_same_algebra(a, b);
  AlgebraElement out = a;
  for (const auto& [w, c] : b.terms) element_add_term(out, w, c);
  return out;
}

inline AlgebraElement element_scale(const AlgebraElement& a, const Rational& c) {
  AlgebraElement out{a.algebra, {}};
  if (c == 0) return out;
  for (const auto& [w, x] : a.terms) out.terms.emplace(w, x * c);
  return out;
}

inline AlgebraElement element_mul(const AlgebraElement& a, const AlgebraElement& b) {
  detail::require_same_algebra(a, b);
  AlgebraElement out{a.algebra, {}};
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) element_add_term(out, concat(wa, wb), ca * cb);
  return out;
}

inline bool element_equal(const AlgebraElement& a, const AlgebraElement& b) {
  detail::require_same_algebra(a, b);
  return a.terms == b.terms;
}

// Element grammar: terms separated by ';' or '+'. Each term is an optional
// rational coefficient ("2", "-1", "3/4") followed by word tokens; a bare
// "ε" or nothing is the empty word. Words that the automaton rejects are
// zero and silently dropped.
inline AlgebraElement parse_element(const MinimalDfa& m, const std::string& text) {
  AlgebraElement out = make_element(m);
  const Alphabet& alpha = m.get().alphabet;
  std::string term;
  std::vector<std::string> chunks;
  for (char ch : text) {
    if (ch == ';' || ch == '+') {
      chunks.push_back(term);
      term.clear();
    } else {
      term += ch;
    }
  }
  chunks.push_back(term);

  auto is_coeff = [](const std::string& tok) {
    size_t i = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
    if (i == tok.size()) return false;
    bool digits = false, slash = false;
    for (; i < tok.size(); ++i) {
      if (tok[i] == '/') {
        if (slash || !digits) return false;
        slash = true;
        digits = false;
      } else if (tok[i] >= '0' && tok[i] <= '9') {
        digits = true;
      } else {
        return false;
      }
    }
    return digits;
  };

  for (const std::string& chunk : chunks) {
    std::vector<std::string> toks = detail::split_ws(chunk);
    if (toks.empty()) throw parse_error("empty term in element");
    Rational coeff = 1;
    size_t start = 0;
    if (is_coeff(toks[0])) {
      try {
        coeff = Rational(toks[0]);
      } catch (const std::exception&) {
        throw parse_error("bad coefficient '" + toks[0] + "'");
      }
      start = 1;
    }
    std::string word_text;
    for (size_t i = start; i < toks.size(); ++i) {
      if (i > start) word_text += ' ';
      word_text += toks[i];
    }
    element_add_term(out, parse_word(alpha, word_text), coeff);
  }
  return out;
}

inline std::string format_element(const AlgebraElement& e) {
  if (e.terms.empty()) return "0";
  const Alphabet& alpha = e.algebra->get().alphabet;
  std::string out;
  for (const auto& [w, c] : e.terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.str() + " ";
    out += format_word(alpha, w);
  }
  return out;
}

// Splits a word read from state q into w = b x where b is the longest
// prefix that returns to q. The tail x never revisits q, so the split is
// the unique one with that property.
struct Decomposition {
  Word b;
  Word x;
};

inline Decomposition decompose_word(const MinimalDfa& m, uint32_t q, const Word& w) {
  const Dfa& a = m.get();
  if (q >= a.state_count || !a.accepting[q])
    throw validation_error("anchor state is not live");
  uint32_t s = q;
  size_t split = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    s = a.next(s, w[i]);
    if (s == q) split = i + 1;
  }
  if (!a.accepting[s]) throw validation_error("word is zero from the anchor state");
  return {Word(w.begin(), w.begin() + split), Word(w.begin() + split, w.end())};
}

// Cuts a word returning to q at every intermediate return, yielding its
// factorization over the first-return generators; nullopt when the word
// does not return to q or dies on the way.
inline std::optional<std::vector<Word>> factor_over_generators(const MinimalDfa& m,
                                                               uint32_t q, const Word& w) {
  const Dfa& a = m.get();
  if (q >= a.state_count || !a.accepting[q])
    throw validation_error("anchor state is not live");
  std::vector<Word> out;
  uint32_t s = q;
  size_t last = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    s = a.next(s, w[i]);
    if (!a.accepting[s]) return std::nullopt;
    if (s == q) {
      out.emplace_back(w.begin() + last, w.begin() + i + 1);
      last = i + 1;
    }
  }
  if (last != w.size()) return std::nullopt;
  return out;
}

// Automaton of the words that return to q for the first time: a copy of the
// live part rooted at q where re-entering q jumps to a fresh accepting
// terminal instead. Only the terminal accepts; the empty word is excluded.
struct FirstReturnLanguage {
  uint32_t state = 0;
  Dfa dfa;
};

inline FirstReturnLanguage first_return_language(const MinimalDfa& m, uint32_t q) {
  const Dfa& a = m.get();
  if (q >= a.state_count || !a.accepting[q])
    throw validation_error("anchor state is not live");
  const uint32_t n = a.state_count, k = a.alphabet.size();
  std::optional<uint32_t> sink = sink_state(a);
  uint32_t terminal = n;
  uint32_t dead = sink ? *sink : n + 1;
  uint32_t total = n + 1 + (sink ? 0 : 1);

  Dfa out;
  out.alphabet = a.alphabet;
  out.state_count = total;
  out.initial = q;
  out.accepting.assign(total, false);
  out.accepting[terminal] = true;
  out.transition.assign(size_t{total} * k, dead);
  for (uint32_t s = 0; s < n; ++s)
    for (uint32_t sym = 0; sym < k; ++sym) {
      uint32_t t = a.next(s, sym);
      out.next_ref(s, sym) = t == q ? terminal : t;
    }
  for (uint32_t sym = 0; sym < k; ++sym) {
    out.next_ref(terminal, sym) = dead;
    out.next_ref(dead, sym) = dead;
  }
  return {q, std::move(out)};
}

enum class GeneratorCount { zero, one, at_least_two, infinite };

inline GeneratorCount generator_count(const MinimalDfa& m, uint32_t q) {
  Cardinality card = language_cardinality(first_return_language(m, q).dfa);
  switch (card.kind) {
    case CardinalityKind::empty: return GeneratorCount::zero;
    case CardinalityKind::infinite: return GeneratorCount::infinite;
    case CardinalityKind::finite: break;
  }
  return card.count == 1 ? GeneratorCount::one : GeneratorCount::at_least_two;
}

// Shortest first-return words; complete when there are at most max_words of
// them, otherwise the first max_words in word order.
inline std::vector<Word> generator_sample(const MinimalDfa& m, uint32_t q,
                                          size_t max_words) {
  Dfa frl = first_return_language(m, q).dfa;
  return enumerate_accepted(frl, frl.state_count + 1, max_words);
}

// A pair (v, r) such that v z r is nonzero and every word in its support
// reads from q back to q. Exists whenever the algebra is prime. The search
// scans candidate v by length then alphabet order; for each v it walks the
// deterministic evolution of the term states under right multiplication,
// so the first hit gives the least v, then the least r for that v.
struct IntersectionWitness {
  Word v;
  Word r;
  AlgebraElement result;
};

inline IntersectionWitness ideal_intersection_witness(const MinimalDfa& m, uint32_t q,
                                                      const AlgebraElement& z,
                                                      size_t cap = size_t{1} << 20) {
  const Dfa& a = m.get();
  if (q >= a.state_count || !a.accepting[q])
    throw validation_error("anchor state is not live");
  if (z.algebra == nullptr || (z.algebra != &m && !(*z.algebra == m)))
    throw validation_error("element lives in a different algebra");
  if (element_is_zero(z)) throw validation_error("element is zero");
  if (!is_factor_closed(a)) throw validation_error("language is not factor closed");

  const uint32_t n = a.state_count, k = a.alphabet.size();
  std::vector<Word> support;
  for (const auto& [w, c] : z.terms) support.push_back(w);

  // Pair of run states per term: from the start state (is the word still
  // nonzero) and from q (can it still land on q). Terms whose first
  // component dies are dropped; a signature is the deduplicated pair set.
  using Sig = std::vector<std::pair<uint32_t, uint32_t>>;
  auto advance = [&](const Sig& sig, uint32_t sym) {
    Sig out;
    for (const auto& [sa, sq] : sig) {
      uint32_t ta = a.next(sa, sym);
      if (!a.accepting[ta]) continue;
      out.emplace_back(ta, a.next(sq, sym));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  auto is_goal = [&](const Sig& sig) {
    if (sig.empty()) return false;
    for (const auto& [sa, sq] : sig)
      if (sq != q) return false;
    return true;
  };
  auto has_live_q = [&](const Sig& sig) {
    for (const auto& [sa, sq] : sig)
      if (a.accepting[sq]) return true;
    return false;
  };

  size_t visited_total = 0;

  // Right factor search: deterministic BFS over signatures, shortest then
  // lexicographically least word reaching a state where every surviving
  // term sits on q.
  auto find_r = [&](const Sig& start) -> std::optional<Word> {
    std::map<Sig, uint32_t> id;
    std::vector<Sig> sigs;
    std::vector<int64_t> parent;
    std::vector<uint32_t> via;
    auto intern = [&](const Sig& s, int64_t par, uint32_t sym) {
      auto [it, fresh] = id.emplace(s, static_cast<uint32_t>(sigs.size()));
      if (fresh) {
        sigs.push_back(s);
        parent.push_back(par);
        via.push_back(sym);
        if (++visited_total > cap)
          throw resource_error("corner witness search exceeded the configured cap");
      }
      return std::make_pair(it->second, fresh);
    };
    intern(start, -1, 0);
    for (size_t head = 0; head < sigs.size(); ++head) {
      if (is_goal(sigs[head])) {
        Word r;
        int64_t cur = static_cast<int64_t>(head);
        while (parent[cur] >= 0) {
          r.push_back(via[cur]);
          cur = parent[cur];
        }
        std::reverse(r.begin(), r.end());
        return r;
      }
      for (uint32_t sym = 0; sym < k; ++sym) {
        Sig next = advance(sigs[head], sym);
        if (next.empty() || !has_live_q(next)) continue;
        intern(next, static_cast<int64_t>(head), sym);
      }
    }
    return std::nullopt;
  };

  // Left factor search over pairs (state of v, state of v read from q).
  struct Node {
    uint32_t e, c;
  };
  std::vector<int64_t> seen(size_t{n} * n, -2);
  std::vector<uint32_t> via(size_t{n} * n, 0);
  std::vector<Node> order;
  auto key = [&](uint32_t e, uint32_t c) { return size_t{e} * n + c; };
  seen[key(a.initial, q)] = -1;
  order.push_back({a.initial, q});
  for (size_t head = 0; head < order.size(); ++head) {
    auto [e, c] = order[head];
    Sig sig0;
    for (const Word& w : support) {
      uint32_t sa = run(a, e, w);
      if (!a.accepting[sa]) continue;
      sig0.emplace_back(sa, run(a, c, w));
    }
    std::sort(sig0.begin(), sig0.end());
    sig0.erase(std::unique(sig0.begin(), sig0.end()), sig0.end());
    if (!sig0.empty() && has_live_q(sig0)) {
      if (std::optional<Word> r = find_r(sig0)) {
        Word v;
        size_t cur = key(e, c);
        while (seen[cur] >= 0) {
          v.push_back(via[cur]);
          cur = static_cast<size_t>(seen[cur]);
        }
        std::reverse(v.begin(), v.end());
        IntersectionWitness out{v, *r, make_element(m)};
        for (const auto& [w, coeff] : z.terms)
          element_add_term(out.result, concat(concat(v, w), *r), coeff);
        return out;
      }
    }
    for (uint32_t sym = 0; sym < k; ++sym) {
      uint32_t e2 = a.next(e, sym), c2 = a.next(c, sym);
      if (seen[key(e2, c2)] == -2) {
        seen[key(e2, c2)] = static_cast<int64_t>(key(e, c));
        via[key(e2, c2)] = sym;
        order.push_back({e2, c2});
      }
    }
  }
  throw validation_error("no corner witness exists: the algebra is not prime");
}

}  // namespace primal
