#pragma once

// Numerical model of the amplifier: Hecke eigenvalues of a lift at good
// primes, the choice between T2 and sigma, and the ratio of the restricted
// norm bound to the squared eigenvalue.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gsp4/errors.hpp"

namespace gsp4 {

double lambda1(double p, double lambda);
double lambda2(double p, double lambda);
double lambda_sigma(double p, double lambda);

struct ProfileSpec {
  enum class Distribution { Constant, Uniform, Bimodal, Alternating };
  Distribution distribution = Distribution::Constant;
  double a = 0.0;  // constant value, lower end, or first mode
  double b = 0.0;  // upper end or second mode
  std::uint64_t seed = 0;
  double lambda_max = 3.0;

  // "constant:c", "uniform:[a,b]", "bimodal:c1,c2", "alternating:c1,c2".
  static ProfileSpec parse(const std::string& text, std::uint64_t seed = 0);
  std::string str() const;
};

class EigenvalueProfile {
 public:
  explicit EigenvalueProfile(double lambda_max = 3.0) : lambda_max_(lambda_max) {}

  // Throws InvalidArgument when |lambda| exceeds the cap.
  void set(std::int64_t p, double lambda);
  // Throws InvalidArgument for primes outside the profile.
  double at(std::int64_t p) const;
  bool contains(std::int64_t p) const { return values_.count(p) != 0; }
  const std::map<std::int64_t, double>& values() const { return values_; }
  double lambda_max() const { return lambda_max_; }

  static EigenvalueProfile generate(const ProfileSpec& spec, const std::vector<std::int64_t>& primes);
  // Lines "<prime> <lambda>"; '#' starts a comment.
  static EigenvalueProfile load(std::istream& in, double lambda_max = 3.0);

 private:
  double lambda_max_;
  std::map<std::int64_t, double> values_;
};

enum class OperatorTag { T2, Sigma };
const char* operator_name(OperatorTag tag);

struct AmplifierEntry {
  std::int64_t prime = 0;
  double lambda = 0.0;
  int sign = 0;             // c(p) in {-1, 0, 1}
  double eigenvalue = 0.0;  // Lambda of the chosen operator at p
};

struct AmplifierReport {
  std::int64_t P = 0;
  int case_taken = 0;
  OperatorTag op = OperatorTag::T2;
  std::vector<AmplifierEntry> entries;  // every good prime, ascending
  std::size_t small_count = 0;          // primes with |lambda| <= 1/10
  double L_value = 0.0;
  double norm_bound = 0.0;
  double ratio = 0.0;
};

struct AmplifierOptions {
  std::int64_t P_min = 1000;
  mpq_class window_factor = 2;
};

// Throws EmptyWindow, InvalidArgument (P below P_min or profile gaps).
AmplifierReport build_amplifier(const EigenvalueProfile& profile, std::int64_t P, const AmplifierOptions& options = {});

// Independent recomputation of the report's L and norm bound: big integers for
// the bound, 256-bit floats for the eigenvalue sum.
struct ExactRecomputation {
  mpz_class norm_exact;
  mpf_class L_high;
  double norm_relative_error = 0.0;
  double L_relative_error = 0.0;
};
ExactRecomputation recompute_exact(const AmplifierReport& report);

struct SweepRow {
  std::int64_t P = 0;
  double worst_ratio = 0.0;
  double reference = 0.0;  // log P / P
  int worst_case_taken = 0;
};

// The family draws `draws` profiles with seeds spec.seed, spec.seed+1, ...
std::vector<SweepRow> ratio_sweep(const ProfileSpec& family, const std::vector<std::int64_t>& P_list, int draws = 4,
                                  const AmplifierOptions& options = {});

// Per-prime inequality grids over the first `prime_count` primes >= p_min.
struct GridResult {
  std::size_t points = 0;
  std::size_t failures = 0;
  std::int64_t first_failing_prime = 0;
  double first_failing_lambda = 0.0;
};
// Lambda_sigma <= -p^5/3 for |lambda| <= 1/10.
GridResult sigma_grid(std::int64_t p_min, std::size_t prime_count = 100, std::size_t lambda_count = 100);
// |Lambda_2| >= p^(5/2)/100 for 1/10 < |lambda| <= lambda_max.
GridResult t2_grid(std::int64_t p_min, std::size_t prime_count = 100, std::size_t lambda_count = 100,
                   double lambda_max = 3.0);

}  // namespace gsp4
