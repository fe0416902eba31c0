#pragma once

#include <set>

#include <json.hpp>

#include "primal/algebra.hpp"
#include "primal/polynomial.hpp"

namespace primal {

// Primeness test. The language viability set of a word v holds the live
// states from which v can still be read to a live state; the family of all
// such sets is closed under the one-letter prepend map, so a breadth-first
// sweep from the all-live set enumerates it with each set labeled by its
// shortest, lexicographically least witness word. The algebra is prime
// exactly when every live state can reach every set of the family; a
// failing pair (p, S) yields nonzero u (reaching p) and v (labeling S)
// with u m v = 0 for every middle word m.
struct PrimeResult {
  bool prime = false;
  Word u;  // set on failure: left factor
  Word v;  // set on failure: right factor

  friend bool operator==(const PrimeResult&, const PrimeResult&) = default;
};

inline PrimeResult is_prime(const MinimalDfa& m, size_t cap = size_t{1} << 20) {
  const Dfa& a = m.get();
  if (!is_factor_closed(a)) throw validation_error("language is not factor closed");
  if (!a.accepting[a.initial]) throw validation_error("language is empty");
  const uint32_t n = a.state_count, k = a.alphabet.size();

  std::vector<bool> all_live(n, false);
  for (uint32_t s = 0; s < n; ++s) all_live[s] = a.accepting[s];

  std::set<std::vector<bool>> seen{all_live};
  std::vector<std::vector<bool>> fam_sets{all_live};
  std::vector<Word> fam_words{Word{}};
  size_t lo = 0, hi = 1;
  while (lo < hi) {
    for (uint32_t sym = 0; sym < k; ++sym) {
      for (size_t idx = lo; idx < hi; ++idx) {
        std::vector<bool> pre(n, false);
        for (uint32_t p = 0; p < n; ++p)
          if (a.accepting[p] && fam_sets[idx][a.next(p, sym)]) pre[p] = true;
        if (!pre[a.initial]) continue;  // labels a zero word, as do all its successors
        if (!seen.insert(pre).second) continue;
        Word w{sym};
        w.insert(w.end(), fam_words[idx].begin(), fam_words[idx].end());
        fam_sets.push_back(std::move(pre));
        fam_words.push_back(std::move(w));
        if (fam_sets.size() > cap)
          throw resource_error("viability family exceeded the configured cap");
      }
    }
    lo = hi;
    hi = fam_sets.size();
  }

  std::vector<std::vector<bool>> reach = reach_sets(a);
  for (uint32_t p = 0; p < n; ++p) {
    if (!a.accepting[p]) continue;
    for (size_t idx = 0; idx < fam_sets.size(); ++idx) {
      bool hit = false;
      for (uint32_t t = 0; t < n && !hit; ++t)
        if (reach[p][t] && fam_sets[idx][t]) hit = true;
      if (!hit)
        return {false, *connecting_word(a, a.initial, p), fam_words[idx]};
    }
  }
  return {true, {}, {}};
}

enum class GrowthKind { polynomial, exponential };

struct Growth {
  GrowthKind kind = GrowthKind::polynomial;
  int64_t degree = 0;  // meaningful only when polynomial

  friend bool operator==(const Growth&, const Growth&) = default;
};

// Growth of the word count. A live component with more edges than vertices
// carries two distinct cycles through a common state, so the count is
// exponential. Otherwise every component is at most a single cycle and the
// dimension is polynomial of degree the largest number of cycle components
// on a path through the condensation.
inline Growth growth(const MinimalDfa& m) {
  const Dfa& a = m.get();
  if (!is_factor_closed(a)) throw validation_error("language is not factor closed");
  std::vector<std::vector<uint32_t>> sccs = detail::live_sccs(a);
  if (sccs.empty()) return {GrowthKind::polynomial, 0};
  const size_t nc = sccs.size();

  std::vector<int64_t> comp(a.state_count, -1);
  for (size_t c = 0; c < nc; ++c)
    for (uint32_t s : sccs[c]) comp[s] = static_cast<int64_t>(c);

  std::vector<int64_t> weight(nc, 0);
  std::vector<std::vector<uint32_t>> succ(nc);
  for (size_t c = 0; c < nc; ++c) {
    size_t inner = 0;
    for (uint32_t s : sccs[c]) {
      for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
        uint32_t t = a.next(s, sym);
        if (!a.accepting[t]) continue;
        if (comp[t] == static_cast<int64_t>(c))
          ++inner;
        else
          succ[c].push_back(static_cast<uint32_t>(comp[t]));
      }
    }
    if (inner > sccs[c].size()) return {GrowthKind::exponential, 0};
    weight[c] = inner == sccs[c].size() ? 1 : 0;
    std::sort(succ[c].begin(), succ[c].end());
    succ[c].erase(std::unique(succ[c].begin(), succ[c].end()), succ[c].end());
  }

  std::vector<uint32_t> indeg(nc, 0);
  for (size_t c = 0; c < nc; ++c)
    for (uint32_t d : succ[c]) ++indeg[d];
  std::vector<uint32_t> topo;
  for (uint32_t c = 0; c < nc; ++c)
    if (indeg[c] == 0) topo.push_back(c);
  for (size_t head = 0; head < topo.size(); ++head)
    for (uint32_t d : succ[topo[head]])
      if (--indeg[d] == 0) topo.push_back(d);

  std::vector<int64_t> best(nc, 0);
  int64_t degree = 0;
  for (size_t i = topo.size(); i-- > 0;) {
    uint32_t c = topo[i];
    best[c] = weight[c];
    int64_t tail = 0;
    for (uint32_t d : succ[c]) tail = std::max(tail, best[d]);
    best[c] += tail;
    degree = std::max(degree, best[c]);
  }
  return {GrowthKind::polynomial, degree};
}

// Word-count generating function as a reduced fraction of integer
// polynomials with denominator constant term 1. Counting words from each
// live state gives the linear system (I - tM) g = 1 with M the live
// transition count matrix; the series is the initial coordinate, extracted
// by Cramer's rule with fraction-free determinants.
struct HilbertSeries {
  Poly numerator;
  Poly denominator;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

inline HilbertSeries hilbert_series(const MinimalDfa& m) {
  const Dfa& a = m.get();
  if (!is_factor_closed(a)) throw validation_error("language is not factor closed");
  std::vector<uint32_t> live;
  std::vector<int64_t> idx(a.state_count, -1);
  for (uint32_t s = 0; s < a.state_count; ++s)
    if (a.accepting[s]) {
      idx[s] = static_cast<int64_t>(live.size());
      live.push_back(s);
    }
  if (live.empty()) return {{}, {Int(1)}};
  const size_t nl = live.size();

  std::vector<std::vector<Poly>> sys(nl, std::vector<Poly>(nl));
  for (size_t i = 0; i < nl; ++i) {
    std::vector<Int> row(nl, 0);
    for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
      uint32_t t = a.next(live[i], sym);
      if (a.accepting[t]) ++row[static_cast<size_t>(idx[t])];
    }
    for (size_t j = 0; j < nl; ++j) {
      Poly p;
      if (i == j) p.push_back(1);
      if (row[j] != 0) {
        if (p.empty()) p.push_back(0);
        p.push_back(-row[j]);
      }
      sys[i][j] = std::move(p);
    }
  }

  std::vector<std::vector<Poly>> sys_num = sys;
  const size_t col = static_cast<size_t>(idx[a.initial]);
  for (size_t i = 0; i < nl; ++i) sys_num[i][col] = {Int(1)};

  Poly den = poly_det_bareiss(std::move(sys));
  Poly num = poly_det_bareiss(std::move(sys_num));
  if (poly_is_zero(num)) return {{}, {Int(1)}};

  Poly g = poly_gcd(num, den);
  if (poly_degree(g) > 0) {
    num = poly_divide_exact(num, g);
    den = poly_divide_exact(den, g);
  }
  if (den[0] < 0) {
    num = poly_neg(std::move(num));
    den = poly_neg(std::move(den));
  }
  return {std::move(num), std::move(den)};
}

inline std::string poly_to_string(const Poly& p) {
  if (poly_is_zero(p)) return "0";
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    bool neg = p[i] < 0;
    Int mag = neg ? Int(-p[i]) : p[i];
    std::string term;
    if (i == 0) {
      term = mag.str();
    } else {
      if (mag != 1) term = mag.str() + " ";
      term += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

inline std::string hilbert_to_string(const HilbertSeries& h) {
  if (poly_is_zero(h.numerator)) return "0";
  auto term_count = [](const Poly& p) {
    size_t c = 0;
    for (const Int& x : p)
      if (x != 0) ++c;
    return c;
  };
  auto wrap = [&](const Poly& p) {
    std::string s = poly_to_string(p);
    return term_count(p) > 1 ? "(" + s + ")" : s;
  };
  if (h.denominator == Poly{Int(1)}) return poly_to_string(h.numerator);
  return wrap(h.numerator) + " / " + wrap(h.denominator);
}

enum class Verdict { PI, Primitive, NotPrime, NotMonomialLanguage };

inline std::string verdict_to_string(Verdict v) {
  switch (v) {
    case Verdict::PI: return "PI";
    case Verdict::Primitive: return "Primitive";
    case Verdict::NotPrime: return "NotPrime";
    case Verdict::NotMonomialLanguage: return "NotMonomialLanguage";
  }
  return "";
}

inline std::string generator_count_to_string(GeneratorCount c) {
  switch (c) {
    case GeneratorCount::zero: return "zero";
    case GeneratorCount::one: return "one";
    case GeneratorCount::at_least_two: return "at_least_two";
    case GeneratorCount::infinite: return "infinite";
  }
  return "";
}

// Everything the classifier can say about one input. Fields that do not
// apply (for instance when the language is not factor closed) stay empty.
struct ClassificationReport {
  std::string input;
  Dfa minimal;
  bool factor_closed = false;
  std::optional<PrimeResult> prime;
  std::optional<ClassStructure> structure;
  std::optional<GeneratorCount> generators;
  std::vector<Word> generators_sample;
  std::optional<Growth> growth;
  std::optional<HilbertSeries> hilbert;
  Verdict verdict = Verdict::NotMonomialLanguage;
};

inline ClassificationReport classify_minimal(const MinimalDfa& m, std::string input,
                                             size_t cap = size_t{1} << 20) {
  ClassificationReport r;
  r.input = std::move(input);
  r.minimal = m.get();
  r.factor_closed = is_factor_closed(m);
  if (!r.factor_closed) return r;  // verdict stays NotMonomialLanguage
  const Dfa& a = m.get();
  if (!a.accepting[a.initial]) return r;  // empty language: nothing to classify
  r.structure = class_structure(m);
  r.growth = growth(m);
  r.hilbert = hilbert_series(m);
  r.prime = is_prime(m, cap);
  r.generators = generator_count(m, r.structure->pivot);
  r.generators_sample = generator_sample(m, r.structure->pivot, 6);
  if (!r.prime->prime)
    r.verdict = Verdict::NotPrime;
  else if (*r.generators == GeneratorCount::zero || *r.generators == GeneratorCount::one)
    r.verdict = Verdict::PI;
  else
    r.verdict = Verdict::Primitive;
  return r;
}

inline ClassificationReport classify(const Presentation& p, size_t cap = size_t{1} << 20) {
  std::string input = "presentation: letters";
  for (const Symbol& s : p.alphabet.symbols()) input += " " + s;
  for (const Word& w : p.forbidden) input += "; forbid " + format_word(p.alphabet, w);
  return classify_minimal(minimal_automaton(p), std::move(input), cap);
}

inline ClassificationReport classify(const Dfa& a, size_t cap = size_t{1} << 20) {
  std::string input = "automaton: " + std::to_string(a.state_count) +
                      (a.state_count == 1 ? " state over" : " states over");
  for (const Symbol& s : a.alphabet.symbols()) input += " " + s;
  return classify_minimal(minimize(a), std::move(input), cap);
}

inline std::string report_to_text(const ClassificationReport& r) {
  const Dfa& a = r.minimal;
  const Alphabet& alpha = a.alphabet;
  std::string out = "input: " + r.input + "\n";
  out += "minimal automaton: " + std::to_string(a.state_count) +
         (a.state_count == 1 ? " state" : " states") +
         ", initial " + std::to_string(a.initial);
  if (std::optional<uint32_t> sink = sink_state(a))
    out += ", sink " + std::to_string(*sink);
  else
    out += ", no sink";
  out += "\n";
  out += std::string("factor closed: ") + (r.factor_closed ? "yes" : "no") + "\n";
  if (r.prime) {
    if (r.prime->prime)
      out += "prime: yes\n";
    else
      out += "prime: no (u = " + format_word(alpha, r.prime->u) +
             ", v = " + format_word(alpha, r.prime->v) + ")\n";
  }
  if (r.structure) {
    const ClassStructure& cs = *r.structure;
    out += "classes:";
    for (const auto& cls : cs.classes) {
      out += " {";
      for (size_t i = 0; i < cls.size(); ++i)
        out += (i ? " " : "") + std::to_string(cls[i]);
      out += "}";
    }
    out += "\n";
    out += "class order: ";
    if (cs.order.empty()) {
      out += "none";
    } else {
      for (size_t i = 0; i < cs.order.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(cs.order[i].first) + " < " +
               std::to_string(cs.order[i].second);
      }
    }
    out += "\n";
    out += "maximal classes:";
    for (uint32_t c : cs.maximal) out += " " + std::to_string(c);
    out += "\n";
    out += "pivot: " + std::to_string(cs.pivot) + "\n";
  }
  if (r.generators) {
    out += "generators at pivot: " + generator_count_to_string(*r.generators);
    if (!r.generators_sample.empty()) {
      out += "; sample: ";
      for (size_t i = 0; i < r.generators_sample.size(); ++i) {
        if (i) out += ", ";
        out += format_word(alpha, r.generators_sample[i]);
      }
    }
    out += "\n";
  }
  if (r.growth) {
    if (r.growth->kind == GrowthKind::exponential)
      out += "growth: exponential\n";
    else
      out += "growth: polynomial, degree " + std::to_string(r.growth->degree) + "\n";
  }
  if (r.hilbert) out += "hilbert: " + hilbert_to_string(*r.hilbert) + "\n";
  out += "verdict: " + verdict_to_string(r.verdict) + "\n";
  return out;
}

inline nlohmann::ordered_json report_to_json_value(const ClassificationReport& r) {
  using json = nlohmann::ordered_json;
  const Dfa& a = r.minimal;
  const Alphabet& alpha = a.alphabet;
  json j;
  j["input"] = r.input;
  {
    json ma;
    ma["states"] = a.state_count;
    ma["initial"] = a.initial;
    json acc = json::array();
    for (uint32_t s = 0; s < a.state_count; ++s)
      if (a.accepting[s]) acc.push_back(s);
    ma["accepting"] = acc;
    if (std::optional<uint32_t> sink = sink_state(a))
      ma["sink"] = *sink;
    else
      ma["sink"] = nullptr;
    json trans = json::array();
    for (uint32_t s = 0; s < a.state_count; ++s)
      for (uint32_t sym = 0; sym < alpha.size(); ++sym)
        trans.push_back(json::array({s, alpha.symbol(sym), a.next(s, sym)}));
    ma["transitions"] = trans;
    j["minimal_automaton"] = ma;
  }
  j["factor_closed"] = r.factor_closed;
  j["prime"] = r.prime ? json(r.prime->prime) : json(nullptr);
  if (r.prime && !r.prime->prime) {
    json w;
    w["u"] = format_word(alpha, r.prime->u);
    w["v"] = format_word(alpha, r.prime->v);
    j["prime_witness"] = w;
  } else {
    j["prime_witness"] = nullptr;
  }
  if (r.structure) {
    const ClassStructure& cs = *r.structure;
    j["classes"] = cs.classes;
    json order = json::array();
    for (const auto& [x, y] : cs.order) order.push_back(json::array({x, y}));
    j["class_order"] = order;
    j["maximal_classes"] = cs.maximal;
    j["pivot"] = cs.pivot;
  } else {
    j["classes"] = nullptr;
    j["class_order"] = nullptr;
    j["maximal_classes"] = nullptr;
    j["pivot"] = nullptr;
  }
  if (r.generators) {
    j["generator_count"] = generator_count_to_string(*r.generators);
    json sample = json::array();
    for (const Word& w : r.generators_sample) sample.push_back(format_word(alpha, w));
    j["generators_sample"] = sample;
  } else {
    j["generator_count"] = nullptr;
    j["generators_sample"] = nullptr;
  }
  if (r.growth) {
    json g;
    g["kind"] = r.growth->kind == GrowthKind::exponential ? "exponential" : "polynomial";
    if (r.growth->kind == GrowthKind::polynomial) g["degree"] = r.growth->degree;
    j["growth"] = g;
  } else {
    j["growth"] = nullptr;
  }
  if (r.hilbert) {
    json h;
    h["numerator"] = poly_to_string(r.hilbert->numerator);
    h["denominator"] = poly_to_string(r.hilbert->denominator);
    j["hilbert"] = h;
  } else {
    j["hilbert"] = nullptr;
  }
  j["verdict"] = verdict_to_string(r.verdict);
  return j;
}

inline std::string report_to_json(const ClassificationReport& r) {
  return report_to_json_value(r).dump(2) + "\n";
}

// The classification is insensitive to reversing every word of the input:
// reversal preserves factor closure, primeness, the verdict, the growth,
// and the word counts. Checked here up to length 12.
inline bool check_reversal_invariance(const ClassificationReport& r1,
                                      const ClassificationReport& r2) {
  if (r1.factor_closed != r2.factor_closed) return false;
  if (r1.verdict != r2.verdict) return false;
  if (r1.prime.has_value() != r2.prime.has_value()) return false;
  if (r1.prime && r1.prime->prime != r2.prime->prime) return false;
  if (r1.growth != r2.growth) return false;
  return count_words_up_to(r1.minimal, 12) == count_words_up_to(r2.minimal, 12);
}

inline bool check_reversal_invariance(const Presentation& p) {
  return check_reversal_invariance(classify(p), classify(reverse_presentation(p)));
}

inline bool check_reversal_invariance(const Dfa& a) {
  return check_reversal_invariance(classify(a), classify(reverse_dfa(a)));
}

}  // namespace primal
