#include "gsp4/amplifier.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <random>
#include <sstream>

#include "gsp4/geometry_bounds.hpp"
#include "gsp4/hecke.hpp"

namespace gsp4 {

double lambda1(double p, double lambda) { return p * (std::sqrt(p) * lambda + p + 1.0); }

double lambda2(double p, double lambda) { return (p + 1.0) * (p * std::sqrt(p) * lambda + p - 1.0); }

double lambda_sigma(double p, double lambda) {
  const double l1 = lambda1(p, lambda);
  const double l2 = lambda2(p, lambda);
  return l2 * l2 - (p + 1.0) * l1 * l1;
}

// ---- profiles ---------------------------------------------------------------

namespace {

double parse_double(const std::string& s) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v = 0;
  in >> v;
  if (in.fail() || !in.eof()) throw Error(Errc::InvalidArgument, "not a number: '" + s + "'");
  return v;
}

std::pair<double, double> parse_pair(std::string body) {
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string::npos) throw Error(Errc::InvalidArgument, "expected two comma-separated values");
  return {parse_double(body.substr(0, comma)), parse_double(body.substr(comma + 1))};
}

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ProfileSpec ProfileSpec::parse(const std::string& text, std::uint64_t seed) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::InvalidArgument, "distribution needs the form kind:params");
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  ProfileSpec spec;
  spec.seed = seed;
  if (kind == "constant") {
    spec.distribution = Distribution::Constant;
    spec.a = spec.b = parse_double(body);
  } else if (kind == "uniform") {
    spec.distribution = Distribution::Uniform;
    std::tie(spec.a, spec.b) = parse_pair(body);
    if (spec.b < spec.a) throw Error(Errc::InvalidArgument, "uniform range is empty");
  } else if (kind == "bimodal") {
    spec.distribution = Distribution::Bimodal;
    std::tie(spec.a, spec.b) = parse_pair(body);
  } else if (kind == "alternating") {
    spec.distribution = Distribution::Alternating;
    std::tie(spec.a, spec.b) = parse_pair(body);
  } else {
    throw Error(Errc::InvalidArgument, "unknown distribution '" + kind + "'");
  }
  return spec;
}

std::string ProfileSpec::str() const {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  switch (distribution) {
    case Distribution::Constant: out << "constant:" << a; break;
    case Distribution::Uniform: out << "uniform:[" << a << "," << b << "]"; break;
    case Distribution::Bimodal: out << "bimodal:" << a << "," << b; break;
    case Distribution::Alternating: out << "alternating:" << a << "," << b; break;
  }
  return out.str();
}

void EigenvalueProfile::set(std::int64_t p, double lambda) {
  if (!std::isfinite(lambda) || std::fabs(lambda) > lambda_max_)
    throw Error(Errc::InvalidArgument, "eigenvalue at p=" + std::to_string(p) + " exceeds the cap");
  values_[p] = lambda;
}

double EigenvalueProfile::at(std::int64_t p) const {
  auto it = values_.find(p);
  if (it == values_.end()) throw Error(Errc::InvalidArgument, "profile has no eigenvalue at p=" + std::to_string(p));
  return it->second;
}

EigenvalueProfile EigenvalueProfile::generate(const ProfileSpec& spec, const std::vector<std::int64_t>& primes) {
  EigenvalueProfile profile(spec.lambda_max);
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    double v = spec.a;
    switch (spec.distribution) {
      case ProfileSpec::Distribution::Constant: break;
      case ProfileSpec::Distribution::Uniform: v = spec.a + (spec.b - spec.a) * unit_draw(rng); break;
      case ProfileSpec::Distribution::Bimodal: v = (rng() & 1u) ? spec.b : spec.a; break;
      case ProfileSpec::Distribution::Alternating: v = (i % 2 == 0) ? spec.a : spec.b; break;
    }
    profile.set(primes[i], v);
  }
  return profile;
}

EigenvalueProfile EigenvalueProfile::load(std::istream& in, double lambda_max) {
  EigenvalueProfile profile(lambda_max);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    std::string ptxt, ltxt, extra;
    if (!(fields >> ptxt)) continue;
    if (!(fields >> ltxt) || (fields >> extra))
      throw Error(Errc::InvalidArgument, "profile line " + std::to_string(lineno) + " needs '<prime> <lambda>'");
    std::int64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(ptxt, &used);
      if (used != ptxt.size()) throw std::invalid_argument(ptxt);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "profile line " + std::to_string(lineno) + ": bad prime");
    }
    profile.set(p, parse_double(ltxt));
  }
  return profile;
}

const char* operator_name(OperatorTag tag) { return tag == OperatorTag::T2 ? "T2" : "sigma"; }

// ---- amplifier --------------------------------------------------------------

namespace {

constexpr double kSmall = 0.1;

struct OperatorTables {
  HeckeElement single;
  HeckeElement squared;
};

const OperatorTables& tables(OperatorTag tag) {
  static const OperatorTables t2{decompose(eval_expr(parse_hecke("T2"))), decompose(eval_expr(parse_hecke("T2^2")))};
  static const OperatorTables sigma{decompose(eval_expr(parse_hecke("sigma"))),
                                    decompose(eval_expr(parse_hecke("sigma^2")))};
  return tag == OperatorTag::T2 ? t2 : sigma;
}

double eval_double(const LaurentPoly& f, double p) {
  std::vector<double> parts;
  for (const auto& [mono, c] : f.terms()) parts.push_back(c.get_d() * std::pow(p, static_cast<double>(mono.p)));
  std::sort(parts.begin(), parts.end(), [](double x, double y) { return std::fabs(x) > std::fabs(y); });
  double acc = 0;
  for (double x : parts) acc += x;
  return acc;
}

double sum_descending(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end(), [](double x, double y) { return std::fabs(x) > std::fabs(y); });
  double acc = 0;
  for (double x : xs) acc += x;
  return acc;
}

// Floating point counterpart of element_h_bound(...).numeric.
double bound_double(const HeckeElement& h, double p) {
  std::vector<double> parts;
  for (const auto& [idx, c] : h.terms()) {
    if (idx.m != 0) continue;
    parts.push_back(std::fabs(eval_double(c, p)) * eval_double(basic_h_bound(0, idx.l).value, p));
  }
  return sum_descending(parts);
}

}  // namespace

AmplifierReport build_amplifier(const EigenvalueProfile& profile, std::int64_t P, const AmplifierOptions& options) {
  if (P < options.P_min)
    throw Error(Errc::InvalidArgument, "P=" + std::to_string(P) + " is below P_min=" + std::to_string(options.P_min));
  const auto primes = good_primes(P, options.window_factor);
  if (primes.empty()) throw Error(Errc::EmptyWindow, "no good primes in the window");

  AmplifierReport rep;
  rep.P = P;
  for (auto p : primes)
    if (std::fabs(profile.at(p)) <= kSmall) ++rep.small_count;
  rep.case_taken = 2 * rep.small_count < primes.size() ? 1 : 2;
  rep.op = rep.case_taken == 1 ? OperatorTag::T2 : OperatorTag::Sigma;

  std::vector<double> signed_terms, diag_bounds, single_bounds;
  const auto& tab = tables(rep.op);
  for (auto p : primes) {
    AmplifierEntry e;
    e.prime = p;
    e.lambda = profile.at(p);
    const double pd = static_cast<double>(p);
    const bool small = std::fabs(e.lambda) <= kSmall;
    if (rep.case_taken == 1) {
      e.eigenvalue = lambda2(pd, e.lambda);
      e.sign = small ? 0 : (e.eigenvalue > 0) - (e.eigenvalue < 0);
    } else {
      e.eigenvalue = lambda_sigma(pd, e.lambda);
      e.sign = small ? -1 : 0;
    }
    if (e.sign != 0) {
      signed_terms.push_back(e.sign * e.eigenvalue);
      diag_bounds.push_back(bound_double(tab.squared, pd));
      single_bounds.push_back(bound_double(tab.single, pd));
    }
    rep.entries.push_back(e);
  }

  const double eig = sum_descending(signed_terms);
  rep.L_value = eig * eig;
  // sum_p b(op^2) + sum_{p != q} b(op_p) b(op_q)
  std::vector<double> squares;
  for (double b : single_bounds) squares.push_back(b * b);
  const double s1 = sum_descending(single_bounds);
  rep.norm_bound = sum_descending(diag_bounds) + (s1 * s1 - sum_descending(squares));
  rep.ratio = rep.norm_bound / rep.L_value;
  return rep;
}

ExactRecomputation recompute_exact(const AmplifierReport& report) {
  constexpr unsigned kBits = 256;
  mpf_set_default_prec(kBits);
  const auto& tab = tables(report.op);
  ExactRecomputation out;
  out.L_high = mpf_class(0, kBits);

  mpz_class diag = 0, single_sum = 0, single_sq = 0;
  mpf_class eig(0, kBits);
  for (const auto& e : report.entries) {
    if (e.sign == 0) continue;
    const mpz_class p = e.prime;
    diag += element_h_bound(tab.squared, p).numeric;
    const mpz_class b = element_h_bound(tab.single, p).numeric;
    single_sum += b;
    single_sq += b * b;

    const mpf_class pf(p, kBits);
    const mpf_class root = sqrt(pf);
    const mpf_class lam(e.lambda, kBits);
    const mpf_class l1 = pf * (root * lam + pf + 1);
    const mpf_class l2 = (pf + 1) * (pf * root * lam + pf - 1);
    const mpf_class value = report.op == OperatorTag::T2 ? mpf_class(l2) : mpf_class(l2 * l2 - (pf + 1) * l1 * l1);
    eig += e.sign * value;
  }
  out.norm_exact = diag + single_sum * single_sum - single_sq;
  out.L_high = eig * eig;

  auto rel = [](const mpf_class& exact, double approx) {
    if (exact == 0) return approx == 0 ? 0.0 : 1.0;
    const mpf_class diff = abs(exact - approx) / abs(exact);
    return diff.get_d();
  };
  out.norm_relative_error = rel(mpf_class(out.norm_exact, kBits), report.norm_bound);
  out.L_relative_error = rel(out.L_high, report.L_value);
  return out;
}

std::vector<SweepRow> ratio_sweep(const ProfileSpec& family, const std::vector<std::int64_t>& P_list, int draws,
                                  const AmplifierOptions& options) {
  if (!std::is_sorted(P_list.begin(), P_list.end())) throw Error(Errc::InvalidArgument, "P list must be ascending");
  const bool random = family.distribution == ProfileSpec::Distribution::Uniform ||
                      family.distribution == ProfileSpec::Distribution::Bimodal;
  const int n = random ? std::max(draws, 1) : 1;
  std::vector<SweepRow> rows;
  for (auto P : P_list) {
    const auto primes = good_primes(P, options.window_factor);
    SweepRow row;
    row.P = P;
    row.reference = std::log(static_cast<double>(P)) / static_cast<double>(P);
    for (int d = 0; d < n; ++d) {
      ProfileSpec spec = family;
      spec.seed = family.seed + static_cast<std::uint64_t>(d);
      const auto rep = build_amplifier(EigenvalueProfile::generate(spec, primes), P, options);
      if (d == 0 || rep.ratio > row.worst_ratio) {
        row.worst_ratio = rep.ratio;
        row.worst_case_taken = rep.case_taken;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

// ---- inequality grids -------------------------------------------------------

namespace {

std::vector<std::int64_t> primes_from(std::int64_t p_min, std::size_t count) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(p_min, 3); out.size() < count; ++n) {
    bool prime = n % 2 != 0;
    for (std::int64_t d = 3; prime && d * d <= n; d += 2) prime = n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

void record(GridResult& g, bool ok, std::int64_t p, double lambda) {
  ++g.points;
  if (ok) return;
  if (g.failures++ == 0) {
    g.first_failing_prime = p;
    g.first_failing_lambda = lambda;
  }
}

}  // namespace

GridResult sigma_grid(std::int64_t p_min, std::size_t prime_count, std::size_t lambda_count) {
  GridResult g;
  for (auto p : primes_from(p_min, prime_count)) {
    const double pd = static_cast<double>(p);
    for (std::size_t i = 0; i < lambda_count; ++i) {
      const double lam = -kSmall + 2 * kSmall * static_cast<double>(i) / static_cast<double>(lambda_count - 1);
      record(g, lambda_sigma(pd, lam) <= -std::pow(pd, 5) / 3, p, lam);
    }
  }
  return g;
}

GridResult t2_grid(std::int64_t p_min, std::size_t prime_count, std::size_t lambda_count, double lambda_max) {
  GridResult g;
  const std::size_t half = lambda_count / 2;
  for (auto p : primes_from(p_min, prime_count)) {
    const double pd = static_cast<double>(p);
    // Quadratic spacing crowds the points against |lambda| = 1/10, where
    // Lambda_2 is smallest for lambda < 0.
    for (std::size_t i = 1; i <= half; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(half);
      const double offset = kSmall + (lambda_max - kSmall) * t * t;
      for (double lam : {-offset, offset})
        record(g, std::fabs(lambda2(pd, lam)) >= std::pow(pd, 2.5) / 100, p, lam);
    }
  }
  return g;
}

}  // namespace gsp4
