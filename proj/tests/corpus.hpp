#pragma once

// Small presentations shared across the test suite. Facts asserted about
// them were derived by hand and double-checked against the brute-force
// oracles, so tests can pin exact values.

#include <stdexcept>
#include <string>
#include <vector>

#include "primal/presentation.hpp"

namespace corpus {

struct Sample {
  const char* name;
  const char* text;
};

inline const std::vector<Sample>& samples() {
  static const std::vector<Sample> list = {
      {"free1", "letters x\n"},
      {"free2", "letters x y\n"},
      {"one_x", "letters x y\nforbid x\n"},
      {"one_y", "letters x y\nforbid y\n"},
      {"xx", "letters x y\nforbid x x\n"},
      {"yy", "letters x y\nforbid y y\n"},
      {"xy", "letters x y\nforbid x y\n"},
      {"yx", "letters x y\nforbid y x\n"},
      {"xxx", "letters x y\nforbid x x x\n"},
      {"xxy", "letters x y\nforbid x x y\n"},
      {"xyx", "letters x y\nforbid x y x\n"},
      {"xyy", "letters x y\nforbid x y y\n"},
      {"yxx", "letters x y\nforbid y x x\n"},
      {"yxy", "letters x y\nforbid y x y\n"},
      {"yyx", "letters x y\nforbid y y x\n"},
      {"yyy", "letters x y\nforbid y y y\n"},
      {"xx_yy", "letters x y\nforbid x x\nforbid y y\n"},
      {"xy_yx", "letters x y\nforbid x y\nforbid y x\n"},
      {"xx_yyy", "letters x y\nforbid x x\nforbid y y y\n"},
      {"scalars_only", "letters x y\nforbid x\nforbid y\n"},
      {"chain3", "letters x y z\nforbid y x\nforbid z y\nforbid z x\n"},
  };
  return list;
}

inline primal::Presentation get(const std::string& name) {
  for (const Sample& s : samples())
    if (name == s.name) return primal::parse_presentation(s.text);
  throw std::runtime_error("unknown corpus sample: " + name);
}

// The fourteen single-relator presentations over two letters with relator
// length at most three, in a fixed order.
inline std::vector<std::string> single_relator_names() {
  return {"one_x", "one_y", "xx",  "xy",  "yx",  "yy",  "xxx",
          "xxy",   "xyx",   "xyy", "yxx", "yxy", "yyx", "yyy"};
}

}  // namespace corpus
