#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "primal/errors.hpp"
#include "primal/presentation.hpp"
#include "primal/words.hpp"

namespace primal {

using Int = boost::multiprecision::cpp_int;

// Deterministic finite automaton with a total transition function.
// transition is row-major: transition[s * alphabet.size() + sym].
struct Dfa {
  Alphabet alphabet;
  uint32_t state_count = 0;
  uint32_t initial = 0;
  std::vector<bool> accepting;
  std::vector<uint32_t> transition;

  [[nodiscard]] uint32_t next(uint32_t s, uint32_t sym) const {
    return transition[s * alphabet.size() + sym];
  }
  uint32_t& next_ref(uint32_t s, uint32_t sym) {
    return transition[s * alphabet.size() + sym];
  }

  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.alphabet == b.alphabet && a.state_count == b.state_count &&
           a.initial == b.initial && a.accepting == b.accepting &&
           a.transition == b.transition;
  }
};

inline uint32_t run(const Dfa& a, uint32_t state, const Word& w) {
  for (uint32_t sym : w) state = a.next(state, sym);
  return state;
}

inline bool accepts(const Dfa& a, const Word& w) {
  return a.accepting[run(a, a.initial, w)];
}

// States reachable from the initial state, in BFS discovery order with
// edges explored in alphabet order.
inline std::vector<uint32_t> reachable_states(const Dfa& a) {
  std::vector<bool> seen(a.state_count, false);
  std::vector<uint32_t> order;
  if (a.state_count == 0) return order;
  seen[a.initial] = true;
  order.push_back(a.initial);
  for (size_t i = 0; i < order.size(); ++i)
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      uint32_t t = a.next(order[i], sym);
      if (!seen[t]) { seen[t] = true; order.push_back(t); }
    }
  return order;
}

// Drops states unreachable from the initial state. Transitions out of
// reachable states only ever target reachable states, so totality survives.
inline Dfa trim(const Dfa& a) {
  std::vector<uint32_t> order = reachable_states(a);
  std::vector<uint32_t> remap(a.state_count, UINT32_MAX);
  for (uint32_t i = 0; i < order.size(); ++i) remap[order[i]] = i;

  Dfa out;
  out.alphabet = a.alphabet;
  out.state_count = static_cast<uint32_t>(order.size());
  out.initial = remap[a.initial];
  out.accepting.resize(out.state_count);
  out.transition.resize(size_t{out.state_count} * a.alphabet.size());
  for (uint32_t i = 0; i < order.size(); ++i) {
    out.accepting[i] = a.accepting[order[i]];
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
      out.next_ref(i, sym) = remap[a.next(order[i], sym)];
  }
  return out;
}

// Aho-Corasick automaton of the words avoiding every forbidden factor.
// States are the proper prefixes of the forbidden words (the trie), plus an
// absorbing sink when some word is actually forbidden. All non-sink states
// accept: a word is nonzero in the algebra iff its run avoids the sink.
inline Dfa build_factor_automaton(const Presentation& p) {
  const uint32_t nsym = p.alphabet.size();
  if (nsym == 0) throw validation_error("empty alphabet");

  // Trie over the forbidden words; node 0 is the root.
  std::vector<std::vector<int64_t>> child(1, std::vector<int64_t>(nsym, -1));
  std::vector<bool> terminal(1, false);
  for (const Word& w : p.forbidden) {
    if (w.empty()) throw validation_error("empty forbidden word");
    size_t node = 0;
    for (uint32_t sym : w) {
      if (child[node][sym] < 0) {
        child[node][sym] = static_cast<int64_t>(child.size());
        child.emplace_back(nsym, -1);
        terminal.push_back(false);
      }
      node = static_cast<size_t>(child[node][sym]);
    }
    terminal[node] = true;
  }

  // Failure links by BFS; goto function completed on the fly. A node is dead
  // when it or some state on its failure chain is terminal.
  const size_t nn = child.size();
  std::vector<size_t> fail(nn, 0);
  std::vector<bool> dead(nn, false);
  dead[0] = terminal[0];
  std::deque<size_t> bfs;
  for (uint32_t sym = 0; sym < nsym; ++sym) {
    int64_t c = child[0][sym];
    if (c < 0) {
      child[0][sym] = 0;
    } else {
      fail[c] = 0;
      dead[c] = terminal[c];
      bfs.push_back(static_cast<size_t>(c));
    }
  }
  while (!bfs.empty()) {
    size_t u = bfs.front();
    bfs.pop_front();
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      int64_t c = child[u][sym];
      if (c < 0) {
        child[u][sym] = child[fail[u]][sym];
      } else {
        fail[c] = static_cast<size_t>(child[fail[u]][sym]);
        dead[c] = terminal[c] || dead[fail[c]];
        bfs.push_back(static_cast<size_t>(c));
      }
    }
  }

  // Live trie nodes become automaton states in insertion order; the sink, if
  // any node is dead, goes last. Canonical numbering is minimize()'s job.
  std::vector<uint32_t> state_of(nn, UINT32_MAX);
  uint32_t live_count = 0;
  for (size_t u = 0; u < nn; ++u)
    if (!dead[u]) state_of[u] = live_count++;
  bool need_sink = live_count < nn;
  uint32_t sink = live_count;

  Dfa out;
  out.alphabet = p.alphabet;
  out.state_count = live_count + (need_sink ? 1 : 0);
  out.initial = 0;
  out.accepting.assign(out.state_count, true);
  if (need_sink) out.accepting[sink] = false;
  out.transition.resize(size_t{out.state_count} * nsym);
  for (size_t u = 0; u < nn; ++u) {
    if (dead[u]) continue;
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      size_t t = static_cast<size_t>(child[u][sym]);
      out.next_ref(state_of[u], sym) = dead[t] ? sink : state_of[t];
    }
  }
  if (need_sink)
    for (uint32_t sym = 0; sym < nsym; ++sym) out.next_ref(sink, sym) = sink;
  return out;
}

// Exact number of accepted words of each length 0..n.
inline std::vector<Int> count_words_up_to(const Dfa& a, unsigned n) {
  std::vector<Int> counts;
  counts.reserve(n + 1);
  std::vector<Int> vec(a.state_count, 0);
  vec[a.initial] = 1;
  for (unsigned len = 0;; ++len) {
    Int total = 0;
    for (uint32_t s = 0; s < a.state_count; ++s)
      if (a.accepting[s]) total += vec[s];
    counts.push_back(total);
    if (len == n) break;
    std::vector<Int> next(a.state_count, 0);
    for (uint32_t s = 0; s < a.state_count; ++s) {
      if (vec[s] == 0) continue;
      for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
        next[a.next(s, sym)] += vec[s];
    }
    vec.swap(next);
  }
  return counts;
}

inline Int count_words(const Dfa& a, unsigned n) {
  return count_words_up_to(a, n).back();
}

enum class CardinalityKind { empty, finite, infinite };

struct Cardinality {
  CardinalityKind kind = CardinalityKind::empty;
  Int count = 0;  // meaningful only when finite

  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

namespace detail {

// States that can reach an accepting state.
inline std::vector<bool> coaccessible(const Dfa& a) {
  std::vector<std::vector<uint32_t>> rev(a.state_count);
  for (uint32_t s = 0; s < a.state_count; ++s)
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
      rev[a.next(s, sym)].push_back(s);
  std::vector<bool> co(a.state_count, false);
  std::deque<uint32_t> q;
  for (uint32_t s = 0; s < a.state_count; ++s)
    if (a.accepting[s]) { co[s] = true; q.push_back(s); }
  while (!q.empty()) {
    uint32_t t = q.front();
    q.pop_front();
    for (uint32_t s : rev[t])
      if (!co[s]) { co[s] = true; q.push_back(s); }
  }
  return co;
}

}  // namespace detail

// Empty, exact finite count, or infinite. Every accepted word stays within
// the useful states (reachable and co-accessible), so the language is
// infinite exactly when the useful subgraph has a cycle.
inline Cardinality language_cardinality(const Dfa& a) {
  std::vector<bool> useful(a.state_count, false);
  {
    std::vector<bool> co = detail::coaccessible(a);
    for (uint32_t s : reachable_states(a)) useful[s] = co[s];
  }
  if (!useful[a.initial]) return {CardinalityKind::empty, 0};

  // Kahn topological sort of the useful subgraph; leftovers mean a cycle.
  std::vector<uint32_t> indeg(a.state_count, 0);
  for (uint32_t s = 0; s < a.state_count; ++s) {
    if (!useful[s]) continue;
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      uint32_t t = a.next(s, sym);
      if (useful[t]) ++indeg[t];
    }
  }
  std::deque<uint32_t> q;
  std::vector<uint32_t> topo;
  for (uint32_t s = 0; s < a.state_count; ++s)
    if (useful[s] && indeg[s] == 0) q.push_back(s);
  while (!q.empty()) {
    uint32_t s = q.front();
    q.pop_front();
    topo.push_back(s);
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      uint32_t t = a.next(s, sym);
      if (useful[t] && --indeg[t] == 0) q.push_back(t);
    }
  }
  size_t useful_count = 0;
  for (uint32_t s = 0; s < a.state_count; ++s) useful_count += useful[s];
  if (topo.size() < useful_count) return {CardinalityKind::infinite, 0};

  std::vector<Int> paths(a.state_count, 0);
  paths[a.initial] = 1;
  Int total = 0;
  for (uint32_t s : topo) {
    if (a.accepting[s]) total += paths[s];
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      uint32_t t = a.next(s, sym);
      if (useful[t]) paths[t] += paths[s];
    }
  }
  return {CardinalityKind::finite, total};
}

struct IncludesResult {
  bool included = false;
  Word counterexample;  // shortest word accepted by b but not by a
};

// Language inclusion L(b) <= L(a) via the product automaton. The BFS explores
// letters in alphabet order, so a failure yields the shortest counterexample
// with lexicographic tie-break.
inline IncludesResult includes(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet == b.alphabet)) throw validation_error("alphabet mismatch");
  const uint32_t nsym = a.alphabet.size();
  auto key = [&](uint32_t sb, uint32_t sa) { return size_t{sb} * a.state_count + sa; };
  std::vector<int64_t> parent(size_t{b.state_count} * a.state_count, -2);
  std::vector<uint32_t> via(parent.size(), 0);
  std::deque<std::pair<uint32_t, uint32_t>> q;
  parent[key(b.initial, a.initial)] = -1;
  q.emplace_back(b.initial, a.initial);
  while (!q.empty()) {
    auto [sb, sa] = q.front();
    q.pop_front();
    if (b.accepting[sb] && !a.accepting[sa]) {
      Word w;
      size_t k = key(sb, sa);
      while (parent[k] >= 0) {
        w.push_back(via[k]);
        k = static_cast<size_t>(parent[k]);
      }
      std::reverse(w.begin(), w.end());
      return {false, std::move(w)};
    }
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      uint32_t tb = b.next(sb, sym), ta = a.next(sa, sym);
      size_t k = key(tb, ta);
      if (parent[k] == -2) {
        parent[k] = static_cast<int64_t>(key(sb, sa));
        via[k] = sym;
        q.emplace_back(tb, ta);
      }
    }
  }
  return {true, {}};
}

// Automaton of the reversed language: reverse every edge, determinize by
// subset construction from the accepting set, accept subsets containing the
// old initial state. The result is trimmed and total.
inline Dfa reverse_dfa(const Dfa& a) {
  const uint32_t nsym = a.alphabet.size();
  std::vector<std::vector<std::vector<uint32_t>>> pre(
      a.state_count, std::vector<std::vector<uint32_t>>(nsym));
  for (uint32_t s = 0; s < a.state_count; ++s)
    for (uint32_t sym = 0; sym < nsym; ++sym) pre[a.next(s, sym)][sym].push_back(s);

  std::vector<bool> start(a.state_count);
  for (uint32_t s = 0; s < a.state_count; ++s) start[s] = a.accepting[s];

  std::map<std::vector<bool>, uint32_t> id;
  std::vector<std::vector<bool>> subsets;
  auto intern = [&](const std::vector<bool>& sub) {
    auto [it, fresh] = id.emplace(sub, static_cast<uint32_t>(subsets.size()));
    if (fresh) subsets.push_back(sub);
    return it->second;
  };

  Dfa out;
  out.alphabet = a.alphabet;
  out.initial = intern(start);
  std::vector<uint32_t> trans;
  for (size_t i = 0; i < subsets.size(); ++i) {
    std::vector<bool> cur = subsets[i];
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      std::vector<bool> next(a.state_count, false);
      for (uint32_t s = 0; s < a.state_count; ++s)
        if (cur[s])
          for (uint32_t p : pre[s][sym]) next[p] = true;
      trans.push_back(intern(next));
    }
  }
  out.state_count = static_cast<uint32_t>(subsets.size());
  out.transition = std::move(trans);
  out.accepting.resize(out.state_count);
  for (uint32_t i = 0; i < out.state_count; ++i)
    out.accepting[i] = a.state_count > 0 && subsets[i][a.initial];
  return trim(out);
}

// GraphViz rendering. Accepting states are doublecircles; the initial state
// is marked by an edge from a point-shaped pseudo-node. Output order is
// fixed: states ascending, edges state-major in alphabet order.
inline std::string to_dot(const Dfa& a) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (uint32_t s = 0; s < a.state_count; ++s)
    out << "  " << s << " [shape=" << (a.accepting[s] ? "doublecircle" : "circle")
        << "];\n";
  out << "  __start -> " << a.initial << ";\n";
  for (uint32_t s = 0; s < a.state_count; ++s)
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
      out << "  " << s << " -> " << a.next(s, sym) << " [label=\""
          << a.alphabet.symbol(sym) << "\"];\n";
  out << "}\n";
  return out.str();
}

// Automaton file format:
//   letters x y
//   states 4
//   initial 0
//   accept 0 1 2
//   trans 0 x 1        one line per (state, symbol); all pairs required
// Comments and blank lines as in presentation files.
inline Dfa parse_automaton(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  struct Raw {
    int lineno;
    std::vector<std::string> toks;
    std::string body;
  };
  std::vector<Raw> rows;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::vector<std::string> toks = detail::split_ws(body);
    if (!toks.empty()) rows.push_back({lineno, std::move(toks), std::move(body)});
  }

  auto parse_u32 = [](const Raw& r, const std::string& tok) -> uint32_t {
    try {
      size_t pos = 0;
      unsigned long v = std::stoul(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("trailing");
      return static_cast<uint32_t>(v);
    } catch (const std::exception&) {
      throw parse_error("expected a number, got '" + tok + "'", r.lineno,
                        detail::token_col(r.body, tok));
    }
  };

  Alphabet alpha;
  bool have_letters = false, have_states = false, have_initial = false, have_accept = false;
  uint32_t nstates = 0, initial = 0;
  std::vector<uint32_t> accept_list;
  for (const Raw& r : rows) {
    const std::string& head = r.toks[0];
    if (head == "letters") {
      if (have_letters) throw parse_error("duplicate letters line", r.lineno);
      if (r.toks.size() < 2) throw parse_error("letters line names no symbols", r.lineno);
      alpha = Alphabet(std::vector<Symbol>(r.toks.begin() + 1, r.toks.end()));
      have_letters = true;
    } else if (head == "states") {
      if (have_states) throw parse_error("duplicate states line", r.lineno);
      if (r.toks.size() != 2) throw parse_error("states takes one number", r.lineno);
      nstates = parse_u32(r, r.toks[1]);
      if (nstates == 0) throw parse_error("automaton needs at least one state", r.lineno);
      have_states = true;
    } else if (head == "initial") {
      if (have_initial) throw parse_error("duplicate initial line", r.lineno);
      if (r.toks.size() != 2) throw parse_error("initial takes one state", r.lineno);
      initial = parse_u32(r, r.toks[1]);
      have_initial = true;
    } else if (head == "accept") {
      if (have_accept) throw parse_error("duplicate accept line", r.lineno);
      for (size_t i = 1; i < r.toks.size(); ++i)
        accept_list.push_back(parse_u32(r, r.toks[i]));
      have_accept = true;
    } else if (head != "trans") {
      throw parse_error("unknown directive '" + head + "'", r.lineno,
                        detail::token_col(r.body, head));
    }
  }
  if (!have_letters) throw parse_error("missing letters line");
  if (!have_states) throw parse_error("missing states line");
  if (!have_initial) throw parse_error("missing initial line");
  if (!have_accept) throw parse_error("missing accept line");
  if (initial >= nstates) throw parse_error("initial state out of range");
  for (uint32_t s : accept_list)
    if (s >= nstates) throw parse_error("accepting state out of range");

  Dfa out;
  out.alphabet = alpha;
  out.state_count = nstates;
  out.initial = initial;
  out.accepting.assign(nstates, false);
  for (uint32_t s : accept_list) out.accepting[s] = true;
  out.transition.assign(size_t{nstates} * alpha.size(), UINT32_MAX);

  for (const Raw& r : rows) {
    if (r.toks[0] != "trans") continue;
    if (r.toks.size() != 4)
      throw parse_error("trans takes: state symbol state", r.lineno);
    uint32_t s = parse_u32(r, r.toks[1]);
    if (!alpha.contains(r.toks[2]))
      throw parse_error("unknown symbol '" + r.toks[2] + "'", r.lineno,
                        detail::token_col(r.body, r.toks[2]));
    uint32_t sym = alpha.index(r.toks[2]);
    uint32_t t = parse_u32(r, r.toks[3]);
    if (s >= nstates || t >= nstates)
      throw parse_error("transition state out of range", r.lineno);
    if (out.next(s, sym) != UINT32_MAX)
      throw parse_error("duplicate transition for state " + std::to_string(s) +
                            " on '" + r.toks[2] + "'", r.lineno);
    out.next_ref(s, sym) = t;
  }
  for (uint32_t s = 0; s < nstates; ++s)
    for (uint32_t sym = 0; sym < alpha.size(); ++sym)
      if (out.next(s, sym) == UINT32_MAX)
        throw parse_error("missing transition for state " + std::to_string(s) +
                          " on '" + alpha.symbol(sym) + "'");
  return out;
}

inline std::string automaton_to_text(const Dfa& a) {
  std::ostringstream out;
  out << "letters";
  for (const Symbol& s : a.alphabet.symbols()) out << " " << s;
  out << "\nstates " << a.state_count << "\ninitial " << a.initial << "\naccept";
  for (uint32_t s = 0; s < a.state_count; ++s)
    if (a.accepting[s]) out << " " << s;
  out << "\n";
  for (uint32_t s = 0; s < a.state_count; ++s)
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
      out << "trans " << s << " " << a.alphabet.symbol(sym) << " " << a.next(s, sym)
          << "\n";
  return out.str();
}

enum class InputKind { presentation, automaton };

// Both formats open with a letters line; only automata carry a states line.
inline InputKind detect_input_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> toks = detail::split_ws(line.substr(0, line.find('#')));
    if (!toks.empty() && toks[0] == "states") return InputKind::automaton;
  }
  return InputKind::presentation;
}

// Accepted words of length <= max_len in (length, alphabet) order, at most
// max_words of them. The frontier is capped to keep pathological inputs from
// exhausting memory.
inline std::vector<Word> enumerate_accepted(const Dfa& a, unsigned max_len,
                                            size_t max_words = SIZE_MAX,
                                            size_t frontier_cap = 1u << 22) {
  std::vector<bool> co = detail::coaccessible(a);
  std::vector<Word> out;
  std::vector<std::pair<Word, uint32_t>> frontier;
  if (!co[a.initial]) return out;
  frontier.emplace_back(Word{}, a.initial);
  for (unsigned len = 0; len <= max_len && !frontier.empty(); ++len) {
    for (const auto& [w, s] : frontier) {
      if (a.accepting[s]) {
        out.push_back(w);
        if (out.size() >= max_words) return out;
      }
    }
    if (len == max_len) break;
    std::vector<std::pair<Word, uint32_t>> next;
    for (const auto& [w, s] : frontier)
      for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
        uint32_t t = a.next(s, sym);
        if (!co[t]) continue;
        Word w2 = w;
        w2.push_back(sym);
        next.emplace_back(std::move(w2), t);
        if (next.size() > frontier_cap)
          throw resource_error("word enumeration frontier exceeded cap");
      }
    std::sort(next.begin(), next.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    frontier.swap(next);
  }
  return out;
}

}  // namespace primal
