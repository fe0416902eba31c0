// Command line front end: reads a forbidden-word presentation or an
// automaton description, runs the requested analysis, and reports in plain
// text, JSON, or dot. Exit codes: 0 success, 1 bad input or resource limit,
// 2 language not factor closed (or nothing to classify).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "primal/primal.hpp"

namespace {

using namespace primal;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw validation_error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct LoadedInput {
  InputKind kind = InputKind::presentation;
  std::optional<Presentation> pres;  // set when the input was a presentation
  Dfa automaton;                     // factor automaton, or as parsed
};

LoadedInput load(const std::string& path) {
  std::string text = read_input(path);
  LoadedInput in;
  in.kind = detect_input_kind(text);
  if (in.kind == InputKind::presentation) {
    Presentation p = parse_presentation(text);
    for (const std::string& w : validate(p)) std::cerr << "warning: " << w << "\n";
    in.automaton = build_factor_automaton(p);
    in.pres = std::move(p);
  } else {
    in.automaton = parse_automaton(text);
  }
  return in;
}

bool factor_closed_or_complain(const MinimalDfa& m) {
  if (is_factor_closed(m)) return true;
  std::cerr << "error: language is not factor closed\n";
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime/PI/primitive classifier for monomial algebras"};
  app.require_subcommand(1);

  std::string input = "-";
  bool as_json = false;
  unsigned basis_len = 6, count_len = 8;
  uint32_t state = 0;
  std::string word_text, element_text;

  CLI::App* cmd_classify = app.add_subcommand(
      "classify", "full report: primeness, classes, generators, growth, verdict");
  cmd_classify->add_option("input", input, "input file, - for stdin");
  cmd_classify->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* cmd_basis =
      app.add_subcommand("basis", "list the nonzero words, one per line");
  cmd_basis->add_option("input", input, "input file, - for stdin");
  cmd_basis->add_option("-n,--max-length", basis_len, "largest word length listed");

  CLI::App* cmd_count =
      app.add_subcommand("count", "number of nonzero words of each length");
  cmd_count->add_option("input", input, "input file, - for stdin");
  cmd_count->add_option("-n,--max-length", count_len, "largest length counted");

  CLI::App* cmd_growth = app.add_subcommand("growth", "polynomial or exponential");
  cmd_growth->add_option("input", input, "input file, - for stdin");

  CLI::App* cmd_hilbert =
      app.add_subcommand("hilbert", "word count generating function");
  cmd_hilbert->add_option("input", input, "input file, - for stdin");

  CLI::App* cmd_prime = app.add_subcommand("prime", "decide primeness");
  cmd_prime->add_option("input", input, "input file, - for stdin");

  CLI::App* cmd_decompose = app.add_subcommand(
      "decompose", "split a word into its return part and tail at a state");
  cmd_decompose->add_option("input", input, "input file, - for stdin");
  CLI::Option* opt_dec_state =
      cmd_decompose->add_option("--state", state, "anchor state (default: pivot)");
  cmd_decompose->add_option("--word", word_text, "word to split")->required();

  CLI::App* cmd_witness = app.add_subcommand(
      "witness", "two-sided multipliers landing an element in the corner");
  cmd_witness->add_option("input", input, "input file, - for stdin");
  CLI::Option* opt_wit_state =
      cmd_witness->add_option("--state", state, "anchor state (default: pivot)");
  cmd_witness->add_option("--element", element_text, "element to funnel")->required();

  CLI::App* cmd_dot =
      app.add_subcommand("dot", "minimal automaton in graphviz format");
  cmd_dot->add_option("input", input, "input file, - for stdin");

  CLI::App* cmd_reverse =
      app.add_subcommand("reverse", "the input with every word reversed");
  cmd_reverse->add_option("input", input, "input file, - for stdin");

  CLI::App* cmd_minimize =
      app.add_subcommand("minimize", "canonical minimal automaton as text");
  cmd_minimize->add_option("input", input, "input file, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    LoadedInput in = load(input);

    if (app.got_subcommand(cmd_reverse)) {
      if (in.kind == InputKind::presentation) {
        Presentation rev = normalize(reverse_presentation(normalize(*in.pres)));
        std::cout << presentation_to_text(rev);
      } else {
        std::cout << automaton_to_text(minimize(reverse_dfa(in.automaton)).get());
      }
      return 0;
    }

    MinimalDfa m = minimize(in.automaton);
    const Dfa& a = m.get();

    if (app.got_subcommand(cmd_classify)) {
      ClassificationReport r = in.pres ? classify(*in.pres) : classify(in.automaton);
      std::cout << (as_json ? report_to_json(r) : report_to_text(r));
      return r.verdict == Verdict::NotMonomialLanguage ? 2 : 0;
    }
    if (app.got_subcommand(cmd_basis)) {
      for (const Word& w : enumerate_accepted(a, basis_len))
        std::cout << format_word(a.alphabet, w) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_count)) {
      std::vector<Int> counts = count_words_up_to(a, count_len);
      for (size_t i = 0; i < counts.size(); ++i)
        std::cout << (i ? " " : "") << counts[i];
      std::cout << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_growth)) {
      if (!factor_closed_or_complain(m)) return 2;
      Growth g = growth(m);
      if (g.kind == GrowthKind::exponential)
        std::cout << "exponential\n";
      else
        std::cout << "polynomial " << g.degree << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_hilbert)) {
      if (!factor_closed_or_complain(m)) return 2;
      std::cout << hilbert_to_string(hilbert_series(m)) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_prime)) {
      if (!factor_closed_or_complain(m)) return 2;
      PrimeResult r = is_prime(m);
      if (r.prime)
        std::cout << "prime\n";
      else
        std::cout << "not prime: u = " << format_word(a.alphabet, r.u)
                  << ", v = " << format_word(a.alphabet, r.v) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_decompose)) {
      if (!factor_closed_or_complain(m)) return 2;
      uint32_t q = opt_dec_state->count() ? state : class_structure(m).pivot;
      Decomposition d = decompose_word(m, q, parse_word(a.alphabet, word_text));
      std::cout << "b = " << format_word(a.alphabet, d.b)
                << " ; x = " << format_word(a.alphabet, d.x) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_witness)) {
      if (!factor_closed_or_complain(m)) return 2;
      uint32_t q = opt_wit_state->count() ? state : class_structure(m).pivot;
      PrimeResult pr = is_prime(m);
      if (!pr.prime)
        throw validation_error("the algebra is not prime: u = " +
                               format_word(a.alphabet, pr.u) +
                               ", v = " + format_word(a.alphabet, pr.v));
      AlgebraElement z = parse_element(m, element_text);
      IntersectionWitness w = ideal_intersection_witness(m, q, z);
      std::cout << "v = " << format_word(a.alphabet, w.v)
                << " ; r = " << format_word(a.alphabet, w.r)
                << " ; result = " << format_element(w.result) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_dot)) {
      std::cout << to_dot(a);
      return 0;
    }
    if (app.got_subcommand(cmd_minimize)) {
      std::cout << automaton_to_text(a);
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
