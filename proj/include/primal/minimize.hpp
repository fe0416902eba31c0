#pragma once

#include <map>
#include <set>

#include "primal/dfa.hpp"

namespace primal {

// Nerode partition of the full state set via Hopcroft refinement. Class ids
// are assigned so that classes sorted by their smallest member get 0, 1, ...
inline std::vector<uint32_t> nerode_partition(const Dfa& a) {
  const uint32_t n = a.state_count, k = a.alphabet.size();
  if (n == 0) return {};

  std::vector<std::vector<uint32_t>> inv(size_t{n} * k);
  for (uint32_t s = 0; s < n; ++s)
    for (uint32_t sym = 0; sym < k; ++sym)
      inv[size_t{a.next(s, sym)} * k + sym].push_back(s);

  std::vector<uint32_t> block_of(n);
  std::vector<std::vector<uint32_t>> blocks;
  {
    std::vector<uint32_t> acc, rej;
    for (uint32_t s = 0; s < n; ++s) (a.accepting[s] ? acc : rej).push_back(s);
    if (!acc.empty()) blocks.push_back(std::move(acc));
    if (!rej.empty()) blocks.push_back(std::move(rej));
    for (uint32_t b = 0; b < blocks.size(); ++b)
      for (uint32_t s : blocks[b]) block_of[s] = b;
  }

  std::set<std::pair<uint32_t, uint32_t>> work;
  for (uint32_t b = 0; b < blocks.size(); ++b)
    for (uint32_t sym = 0; sym < k; ++sym) work.insert({b, sym});

  while (!work.empty()) {
    auto [bi, sym] = *work.begin();
    work.erase(work.begin());
    // states with a sym-edge into blocks[bi], grouped by their current block
    std::map<uint32_t, std::vector<uint32_t>> hits;
    for (uint32_t t : blocks[bi])
      for (uint32_t s : inv[size_t{t} * k + sym]) hits[block_of[s]].push_back(s);
    for (auto& [b, xs] : hits) {
      if (xs.size() == blocks[b].size()) continue;
      uint32_t nb = static_cast<uint32_t>(blocks.size());
      for (uint32_t s : xs) block_of[s] = nb;
      std::vector<uint32_t> rest;
      for (uint32_t s : blocks[b])
        if (block_of[s] == b) rest.push_back(s);
      blocks[b] = std::move(rest);
      blocks.push_back(std::move(xs));
      for (uint32_t sym2 = 0; sym2 < k; ++sym2) {
        if (work.count({b, sym2}))
          work.insert({nb, sym2});
        else
          work.insert({blocks[b].size() <= blocks[nb].size() ? b : nb, sym2});
      }
    }
  }

  std::vector<uint32_t> min_member(blocks.size(), UINT32_MAX);
  for (uint32_t s = 0; s < n; ++s)
    min_member[block_of[s]] = std::min(min_member[block_of[s]], s);
  std::vector<uint32_t> by_min(blocks.size());
  for (uint32_t b = 0; b < blocks.size(); ++b) by_min[b] = b;
  std::sort(by_min.begin(), by_min.end(),
            [&](uint32_t x, uint32_t y) { return min_member[x] < min_member[y]; });
  std::vector<uint32_t> rank(blocks.size());
  for (uint32_t i = 0; i < by_min.size(); ++i) rank[by_min[i]] = i;

  std::vector<uint32_t> out(n);
  for (uint32_t s = 0; s < n; ++s) out[s] = rank[block_of[s]];
  return out;
}

namespace detail {

// Quotient by the Nerode partition, then renumber into the canonical form:
// BFS from the initial state with edges in alphabet order over the states
// that can still reach acceptance; the dead state, if any, goes last. Two
// automata get identical canonical forms exactly when their languages agree.
inline Dfa canonical_minimal(const Dfa& a_in) {
  Dfa a = trim(a_in);
  const uint32_t k = a.alphabet.size();
  std::vector<uint32_t> part = nerode_partition(a);
  uint32_t nb = 0;
  for (uint32_t c : part) nb = std::max(nb, c + 1);

  Dfa q;
  q.alphabet = a.alphabet;
  q.state_count = nb;
  q.initial = part[a.initial];
  q.accepting.assign(nb, false);
  q.transition.assign(size_t{nb} * k, 0);
  for (uint32_t s = 0; s < a.state_count; ++s) {
    q.accepting[part[s]] = a.accepting[s];
    for (uint32_t sym = 0; sym < k; ++sym)
      q.next_ref(part[s], sym) = part[a.next(s, sym)];
  }

  // All dead states collapsed into one class, so at most one now remains.
  // No live state is reachable through it, so the BFS below misses nothing.
  std::vector<bool> co = coaccessible(q);
  std::vector<uint32_t> order;
  std::vector<bool> seen(nb, false);
  if (co[q.initial]) {
    seen[q.initial] = true;
    order.push_back(q.initial);
    for (size_t i = 0; i < order.size(); ++i)
      for (uint32_t sym = 0; sym < k; ++sym) {
        uint32_t t = q.next(order[i], sym);
        if (co[t] && !seen[t]) { seen[t] = true; order.push_back(t); }
      }
  }
  for (uint32_t s = 0; s < nb; ++s)
    if (!co[s]) order.push_back(s);

  std::vector<uint32_t> remap(nb);
  for (uint32_t i = 0; i < nb; ++i) remap[order[i]] = i;
  Dfa out;
  out.alphabet = q.alphabet;
  out.state_count = nb;
  out.initial = remap[q.initial];
  out.accepting.resize(nb);
  out.transition.resize(size_t{nb} * k);
  for (uint32_t i = 0; i < nb; ++i) {
    out.accepting[remap[i]] = q.accepting[i];
    for (uint32_t sym = 0; sym < k; ++sym)
      out.next_ref(remap[i], sym) = remap[q.next(i, sym)];
  }
  return out;
}

}  // namespace detail

// A minimized automaton in canonical numbering. Instances produced by
// minimize() compare equal iff their languages are equal.
class MinimalDfa {
 public:
  MinimalDfa() = default;
  explicit MinimalDfa(Dfa canonical) : dfa_(std::move(canonical)) {}
  [[nodiscard]] const Dfa& get() const { return dfa_; }
  friend bool operator==(const MinimalDfa&, const MinimalDfa&) = default;

 private:
  Dfa dfa_;
};

inline MinimalDfa minimize(const Dfa& a) {
  return MinimalDfa(detail::canonical_minimal(a));
}

inline MinimalDfa minimal_automaton(const Presentation& p) {
  return minimize(build_factor_automaton(p));
}

// Whether the accepted language is closed under taking factors (contiguous
// subwords). Equivalent to prefix-closed plus suffix-closed: no word may die
// and come back (checked on reachable states), and dropping the first letter
// must stay in the language (checked per letter by inclusion).
inline bool is_factor_closed(const Dfa& a_in) {
  Dfa a = trim(a_in);
  for (uint32_t s = 0; s < a.state_count; ++s) {
    if (a.accepting[s]) continue;
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
      if (a.accepting[a.next(s, sym)]) return false;
  }
  for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
    Dfa b = a;
    b.initial = a.next(a.initial, sym);
    if (!includes(a, b).included) return false;
  }
  return true;
}

inline bool is_factor_closed(const MinimalDfa& m) { return is_factor_closed(m.get()); }

// The sink of a canonical factor-closed automaton: its unique non-accepting
// state, if present.
inline std::optional<uint32_t> sink_state(const Dfa& a) {
  std::optional<uint32_t> sink;
  for (uint32_t s = 0; s < a.state_count; ++s)
    if (!a.accepting[s]) {
      if (sink) return std::nullopt;  // not of the expected shape
      sink = s;
    }
  return sink;
}

}  // namespace primal
