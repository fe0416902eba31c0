#pragma once

#include "primal/minimize.hpp"

namespace primal {

namespace detail {

// Strongly connected components of the subgraph induced on accepting states,
// iterative Tarjan. Components are returned with sorted members, ordered by
// smallest member.
inline std::vector<std::vector<uint32_t>> live_sccs(const Dfa& a) {
  const uint32_t n = a.state_count, k = a.alphabet.size();
  std::vector<int64_t> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<uint32_t> stack;
  std::vector<std::vector<uint32_t>> sccs;
  int64_t counter = 0;

  struct Frame {
    uint32_t v;
    uint32_t sym;
  };
  for (uint32_t root = 0; root < n; ++root) {
    if (!a.accepting[root] || index[root] >= 0) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.sym < k) {
        uint32_t w = a.next(f.v, f.sym);
        ++f.sym;
        if (!a.accepting[w]) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        uint32_t v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<uint32_t> comp;
          while (true) {
            uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          sccs.push_back(std::move(comp));
        }
      }
    }
  }
  std::sort(sccs.begin(), sccs.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return sccs;
}

}  // namespace detail

// Reflexive-transitive reachability: reach[s][t] iff t is reachable from s.
inline std::vector<std::vector<bool>> reach_sets(const Dfa& a) {
  const uint32_t n = a.state_count;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (uint32_t s = 0; s < n; ++s) {
    std::deque<uint32_t> q{s};
    reach[s][s] = true;
    while (!q.empty()) {
      uint32_t u = q.front();
      q.pop_front();
      for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
        uint32_t t = a.next(u, sym);
        if (!reach[s][t]) { reach[s][t] = true; q.push_back(t); }
      }
    }
  }
  return reach;
}

// Shortest word leading from one state to another, lexicographically least
// among the shortest; empty word when the states are equal.
inline std::optional<Word> connecting_word(const Dfa& a, uint32_t from, uint32_t to) {
  std::vector<int64_t> parent(a.state_count, -2);
  std::vector<uint32_t> via(a.state_count, 0);
  std::deque<uint32_t> q{from};
  parent[from] = -1;
  while (!q.empty()) {
    uint32_t u = q.front();
    q.pop_front();
    if (u == to) {
      Word w;
      while (parent[u] >= 0) {
        w.push_back(via[u]);
        u = static_cast<uint32_t>(parent[u]);
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      uint32_t t = a.next(u, sym);
      if (parent[t] == -2) {
        parent[t] = u;
        via[t] = sym;
        q.push_back(t);
      }
    }
  }
  return std::nullopt;
}

// Decomposition of the live states into classes: strongly connected
// components of the live subgraph, partially ordered by reachability. The
// pivot is the anchor state for the generator and corner computations.
struct ClassStructure {
  std::vector<std::vector<uint32_t>> classes;        // sorted, by smallest member
  std::vector<int64_t> class_of;                     // -1 for the sink
  std::vector<std::pair<uint32_t, uint32_t>> order;  // (i, j): j reachable from i
  std::vector<uint32_t> maximal;                     // classes with no successor
  uint32_t pivot = 0;  // smallest state of the smallest maximal class
};

inline ClassStructure class_structure(const MinimalDfa& m) {
  const Dfa& a = m.get();
  if (!is_factor_closed(a))
    throw validation_error("language is not factor closed");
  if (a.state_count == 0 || !a.accepting[a.initial])
    throw validation_error("empty language has no class structure");

  ClassStructure out;
  out.classes = detail::live_sccs(a);
  out.class_of.assign(a.state_count, -1);
  for (uint32_t c = 0; c < out.classes.size(); ++c)
    for (uint32_t s : out.classes[c]) out.class_of[s] = c;

  const size_t nc = out.classes.size();
  std::vector<std::vector<bool>> creach(nc, std::vector<bool>(nc, false));
  {
    std::vector<std::vector<uint32_t>> succ(nc);
    for (uint32_t s = 0; s < a.state_count; ++s) {
      if (!a.accepting[s]) continue;
      for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
        uint32_t t = a.next(s, sym);
        if (!a.accepting[t]) continue;
        if (out.class_of[s] != out.class_of[t])
          succ[out.class_of[s]].push_back(static_cast<uint32_t>(out.class_of[t]));
      }
    }
    for (size_t c = 0; c < nc; ++c) {
      std::deque<size_t> q{c};
      creach[c][c] = true;
      while (!q.empty()) {
        size_t u = q.front();
        q.pop_front();
        for (uint32_t v : succ[u])
          if (!creach[c][v]) { creach[c][v] = true; q.push_back(v); }
      }
    }
  }
  for (uint32_t i = 0; i < nc; ++i)
    for (uint32_t j = 0; j < nc; ++j)
      if (i != j && creach[i][j]) out.order.emplace_back(i, j);
  for (uint32_t c = 0; c < nc; ++c) {
    bool has_succ = false;
    for (uint32_t j = 0; j < nc && !has_succ; ++j)
      if (j != c && creach[c][j]) has_succ = true;
    if (!has_succ) out.maximal.push_back(c);
  }
  out.pivot = out.classes[out.maximal.front()].front();
  return out;
}

}  // namespace primal
