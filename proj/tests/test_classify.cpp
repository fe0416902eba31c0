#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "primal/classify.hpp"

using namespace primal;

namespace {

MinimalDfa minimal(const char* name) { return minimal_automaton(corpus::get(name)); }

Dfa parity_dfa() {
  return parse_automaton(
      "letters x y\n"
      "states 2\n"
      "initial 0\n"
      "accept 0\n"
      "trans 0 x 1\ntrans 0 y 0\n"
      "trans 1 x 0\ntrans 1 y 1\n");
}

Dfa empty_dfa() {
  Dfa a;
  a.alphabet = Alphabet({"x"});
  a.state_count = 1;
  a.initial = 0;
  a.accepting = {false};
  a.transition = {0};
  return a;
}

}  // namespace

TEST_CASE("growth is pinned on the corpus") {
  REQUIRE(growth(minimal("scalars_only")) == Growth{GrowthKind::polynomial, 0});
  REQUIRE(growth(minimal("free1")) == Growth{GrowthKind::polynomial, 1});
  REQUIRE(growth(minimal("one_x")) == Growth{GrowthKind::polynomial, 1});
  REQUIRE(growth(minimal("xx_yy")) == Growth{GrowthKind::polynomial, 1});
  REQUIRE(growth(minimal("yx")) == Growth{GrowthKind::polynomial, 2});
  REQUIRE(growth(minimal("xy")) == Growth{GrowthKind::polynomial, 2});
  REQUIRE(growth(minimal("chain3")) == Growth{GrowthKind::polynomial, 3});
  REQUIRE(growth(minimal("xx")).kind == GrowthKind::exponential);
  REQUIRE(growth(minimal("free2")).kind == GrowthKind::exponential);
  REQUIRE(growth(minimal("xx_yyy")).kind == GrowthKind::exponential);

  REQUIRE(growth(minimize(empty_dfa())) == Growth{GrowthKind::polynomial, 0});
  REQUIRE_THROWS_AS(growth(minimize(parity_dfa())), validation_error);
}

TEST_CASE("hilbert series are pinned on the corpus") {
  HilbertSeries h = hilbert_series(minimal("xx_yy"));
  REQUIRE(h.numerator == Poly{1, 1});
  REQUIRE(h.denominator == Poly{1, -1});
  REQUIRE(hilbert_to_string(h) == "(1 + t) / (1 - t)");

  REQUIRE(hilbert_to_string(hilbert_series(minimal("xx"))) == "(1 + t) / (1 - t - t^2)");
  REQUIRE(hilbert_to_string(hilbert_series(minimal("free1"))) == "1 / (1 - t)");
  REQUIRE(hilbert_to_string(hilbert_series(minimal("free2"))) == "1 / (1 - 2 t)");
  REQUIRE(hilbert_to_string(hilbert_series(minimal("yx"))) == "1 / (1 - 2 t + t^2)");
  REQUIRE(hilbert_to_string(hilbert_series(minimal("chain3"))) ==
          "1 / (1 - 3 t + 3 t^2 - t^3)");
  REQUIRE(hilbert_to_string(hilbert_series(minimal("scalars_only"))) == "1");
  REQUIRE(hilbert_to_string(hilbert_series(minimize(empty_dfa()))) == "0");
  REQUIRE_THROWS_AS(hilbert_series(minimize(parity_dfa())), validation_error);
}

TEST_CASE("hilbert series expands to the word counts") {
  for (const char* name : {"xx_yy", "xx", "free2", "chain3", "xx_yyy", "yx", "xyy"}) {
    MinimalDfa m = minimal(name);
    HilbertSeries h = hilbert_series(m);
    std::vector<Int> counts = count_words_up_to(m.get(), 20);
    // denominator * series == numerator, coefficient by coefficient
    for (size_t n = 0; n <= 20; ++n) {
      Int acc = 0;
      for (size_t j = 0; j < h.denominator.size() && j <= n; ++j)
        acc += h.denominator[j] * counts[n - j];
      Int expected = n < h.numerator.size() ? h.numerator[n] : Int(0);
      REQUIRE(acc == expected);
    }
  }
}

TEST_CASE("polynomial rendering") {
  REQUIRE(poly_to_string({}) == "0");
  REQUIRE(poly_to_string({5}) == "5");
  REQUIRE(poly_to_string({0, 1}) == "t");
  REQUIRE(poly_to_string({-1, 2}) == "-1 + 2 t");
  REQUIRE(poly_to_string({1, 0, -3}) == "1 - 3 t^2");
  REQUIRE(poly_to_string({0, -1, 0, 1}) == "-t + t^3");
  REQUIRE(hilbert_to_string({{0, 2}, {1}}) == "2 t");
}

TEST_CASE("primeness is pinned on the corpus") {
  for (const char* name : {"xx", "yy", "xx_yy", "free1", "free2", "xx_yyy",
                           "scalars_only", "one_x", "one_y"})
    REQUIRE(is_prime(minimal(name)).prime);

  auto witness = [](const char* name) {
    PrimeResult r = is_prime(minimal(name));
    REQUIRE_FALSE(r.prime);
    MinimalDfa m = minimal(name);
    const Alphabet& alpha = m.get().alphabet;
    return format_word(alpha, r.u) + "|" + format_word(alpha, r.v);
  };
  REQUIRE(witness("yx") == "y|x");
  REQUIRE(witness("xy") == "x|y");
  REQUIRE(witness("xxy") == "x x|y");
  REQUIRE(witness("xyy") == "x|y y");
  REQUIRE(witness("chain3") == "y|x");
  REQUIRE(witness("xy_yx") == "x|y");

  REQUIRE_THROWS_AS(is_prime(minimize(parity_dfa())), validation_error);
  REQUIRE_THROWS_AS(is_prime(minimize(empty_dfa())), validation_error);
  REQUIRE_THROWS_AS(is_prime(minimal("xx"), 1), resource_error);
}

TEST_CASE("prime verdicts agree with the brute force search") {
  std::mt19937 rng(77);
  Alphabet alpha({"x", "y"});
  auto check = [](const Dfa& a, const PrimeResult& r) {
    if (r.prime) {
      REQUIRE_FALSE(oracle::brute_prime_counterexample(a, 4, a.state_count).has_value());
    } else {
      REQUIRE(accepts(a, r.u));
      REQUIRE(accepts(a, r.v));
      // a middle shorter than the state count would exist if any did
      for (const Word& mid : oracle::all_words(a.alphabet.size(), a.state_count))
        REQUIRE_FALSE(accepts(a, concat(concat(r.u, mid), r.v)));
    }
  };
  for (const corpus::Sample& s : corpus::samples()) {
    MinimalDfa m = minimal_automaton(corpus::get(s.name));
    if (!m.get().accepting[m.get().initial]) continue;
    check(m.get(), is_prime(m));
  }
  for (int trial = 0; trial < 30; ++trial) {
    MinimalDfa m = minimal_automaton(oracle::random_presentation(rng, alpha, 3, 3));
    check(m.get(), is_prime(m));
  }
}

TEST_CASE("classification verdicts are pinned on the corpus") {
  auto verdict = [](const char* name) { return classify(corpus::get(name)).verdict; };
  REQUIRE(verdict("xx_yy") == Verdict::PI);
  REQUIRE(verdict("free1") == Verdict::PI);
  REQUIRE(verdict("one_x") == Verdict::PI);
  REQUIRE(verdict("scalars_only") == Verdict::PI);
  REQUIRE(verdict("xx") == Verdict::Primitive);
  REQUIRE(verdict("yy") == Verdict::Primitive);
  REQUIRE(verdict("free2") == Verdict::Primitive);
  REQUIRE(verdict("xx_yyy") == Verdict::Primitive);
  REQUIRE(verdict("yx") == Verdict::NotPrime);
  REQUIRE(verdict("xy") == Verdict::NotPrime);
  REQUIRE(verdict("chain3") == Verdict::NotPrime);
  REQUIRE(verdict("xy_yx") == Verdict::NotPrime);
}

TEST_CASE("prime algebras grow linearly or exponentially") {
  for (const corpus::Sample& s : corpus::samples()) {
    ClassificationReport r = classify(corpus::get(s.name));
    if (r.verdict != Verdict::PI && r.verdict != Verdict::Primitive) continue;
    REQUIRE((r.growth->kind == GrowthKind::exponential || r.growth->degree <= 1));
  }
}

TEST_CASE("inputs that are not factor closed get the fence verdict") {
  ClassificationReport r = classify(parity_dfa());
  REQUIRE(r.input == "automaton: 2 states over x y");
  REQUIRE_FALSE(r.factor_closed);
  REQUIRE(r.verdict == Verdict::NotMonomialLanguage);
  REQUIRE_FALSE(r.prime.has_value());
  REQUIRE_FALSE(r.structure.has_value());
  REQUIRE_FALSE(r.growth.has_value());
  REQUIRE_FALSE(r.hilbert.has_value());

  ClassificationReport e = classify(empty_dfa());
  REQUIRE(e.factor_closed);  // vacuously: there is no word to violate it
  REQUIRE(e.verdict == Verdict::NotMonomialLanguage);
  REQUIRE_FALSE(e.prime.has_value());
}

TEST_CASE("presentation and automaton inputs classify identically") {
  ClassificationReport a = classify(corpus::get("xx_yy"));
  ClassificationReport b = classify(build_factor_automaton(corpus::get("xx_yy")));
  REQUIRE(a.verdict == b.verdict);
  REQUIRE(a.prime == b.prime);
  REQUIRE(a.growth == b.growth);
  REQUIRE(a.hilbert->numerator == b.hilbert->numerator);
  REQUIRE(a.structure->pivot == b.structure->pivot);
  REQUIRE(a.minimal == b.minimal);
}

TEST_CASE("report text is pinned for the two-square algebra") {
  std::string expected =
      "input: presentation: letters x y; forbid x x; forbid y y\n"
      "minimal automaton: 4 states, initial 0, sink 3\n"
      "factor closed: yes\n"
      "prime: yes\n"
      "classes: {0} {1 2}\n"
      "class order: 0 < 1\n"
      "maximal classes: 1\n"
      "pivot: 1\n"
      "generators at pivot: one; sample: y x\n"
      "growth: polynomial, degree 1\n"
      "hilbert: (1 + t) / (1 - t)\n"
      "verdict: PI\n";
  REQUIRE(report_to_text(classify(corpus::get("xx_yy"))) == expected);
}

TEST_CASE("report text for the other verdicts") {
  std::string chain = report_to_text(classify(corpus::get("chain3")));
  REQUIRE(chain.find("prime: no (u = y, v = x)") != std::string::npos);
  REQUIRE(chain.find("verdict: NotPrime") != std::string::npos);

  std::string parity = report_to_text(classify(parity_dfa()));
  REQUIRE(parity.find("factor closed: no") != std::string::npos);
  REQUIRE(parity.find("verdict: NotMonomialLanguage") != std::string::npos);
  REQUIRE(parity.find("prime:") == std::string::npos);
  REQUIRE(parity.find("classes:") == std::string::npos);

  std::string xx = report_to_text(classify(corpus::get("xx")));
  REQUIRE(xx.find("growth: exponential") != std::string::npos);
  REQUIRE(xx.find("class order: none") != std::string::npos);
}

TEST_CASE("json report is pinned for the two-square algebra") {
  const char* expected_literal = R"json({
  "input": "presentation: letters x y; forbid x x; forbid y y",
  "minimal_automaton": {
    "states": 4,
    "initial": 0,
    "accepting": [0, 1, 2],
    "sink": 3,
    "transitions": [
      [0, "x", 1], [0, "y", 2],
      [1, "x", 3], [1, "y", 2],
      [2, "x", 1], [2, "y", 3],
      [3, "x", 3], [3, "y", 3]
    ]
  },
  "factor_closed": true,
  "prime": true,
  "prime_witness": null,
  "classes": [[0], [1, 2]],
  "class_order": [[0, 1]],
  "maximal_classes": [1],
  "pivot": 1,
  "generator_count": "one",
  "generators_sample": ["y x"],
  "growth": {
    "kind": "polynomial",
    "degree": 1
  },
  "hilbert": {
    "numerator": "1 + t",
    "denominator": "1 - t"
  },
  "verdict": "PI"
})json";
  nlohmann::ordered_json expected = nlohmann::ordered_json::parse(expected_literal);
  REQUIRE(report_to_json(classify(corpus::get("xx_yy"))) == expected.dump(2) + "\n");
}

TEST_CASE("json reports are byte identical across runs") {
  for (const char* name : {"xx_yy", "chain3", "free2"}) {
    std::string first = report_to_json(classify(corpus::get(name)));
    std::string second = report_to_json(classify(corpus::get(name)));
    REQUIRE(first == second);
  }
  std::string j = report_to_json(classify(parity_dfa()));
  REQUIRE(j.find("\"prime\": null") != std::string::npos);
  REQUIRE(j.find("\"verdict\": \"NotMonomialLanguage\"") != std::string::npos);
}

TEST_CASE("classification is invariant under reversal") {
  for (const corpus::Sample& s : corpus::samples())
    REQUIRE(check_reversal_invariance(corpus::get(s.name)));
  REQUIRE(check_reversal_invariance(parity_dfa()));

  std::mt19937 rng(4242);
  Alphabet alpha({"x", "y"});
  for (int trial = 0; trial < 20; ++trial)
    REQUIRE(check_reversal_invariance(oracle::random_presentation(rng, alpha, 3, 4)));
}
