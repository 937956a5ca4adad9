#pragma once

// Published reference data: transforms of basic and composite operators and
// the decompositions of T2^2, sigma and sigma^2, plus the suite runner used by
// `verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace gsp4 {

struct GoldenTransform {
  std::string name;
  std::string expr;        // Hecke expression whose transform is listed
  std::string polynomial;  // as typeset, braces and spaces included
};
const std::vector<GoldenTransform>& golden_transforms();

struct GoldenTerm {
  std::int64_t m;
  std::int64_t l;
  std::string coeff;
};
struct GoldenDecomposition {
  std::string name;
  std::string expr;
  std::vector<GoldenTerm> terms;
};
const std::vector<GoldenDecomposition>& golden_decompositions();

struct VerifyItem {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Suites: transforms, decompositions, dictionary, all. Throws InvalidArgument
// for an unknown suite.
std::vector<VerifyItem> run_verify(const std::string& suite);

}  // namespace gsp4
