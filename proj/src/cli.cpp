#include "gsp4/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>

#include "gsp4/amplifier.hpp"
#include "gsp4/geometry_bounds.hpp"
#include "gsp4/golden.hpp"
#include "gsp4/hecke.hpp"
#include "gsp4/padic_symplectic.hpp"

namespace gsp4 {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = "1";
  j["command"] = command;
  return j;
}

struct Globals {
  std::string format = "text";
  std::int64_t p = 0;  // 0 = not supplied
  std::uint64_t seed = 0;
  bool json() const { return format == "json"; }
};

Json terms_json(const HeckeElement& h) {
  Json arr = Json::array();
  for (const auto& [idx, c] : h.terms()) arr.push_back({{"m", idx.m}, {"l", idx.l}, {"coeff", print_canonical(c)}});
  return arr;
}

std::optional<std::int64_t> degree_of(const HNormBound& b) { return b.leading_degree; }

Json degree_json(const std::optional<std::int64_t>& d) { return d ? Json(*d) : Json(nullptr); }

std::string degree_text(const std::optional<std::int64_t>& d) { return d ? std::to_string(*d) : "-inf"; }

Json report_json(const AmplifierReport& rep, const ExactRecomputation& exact) {
  Json j;
  j["P"] = rep.P;
  j["case"] = rep.case_taken;
  j["operator"] = operator_name(rep.op);
  j["good_primes"] = rep.entries.size();
  j["small_count"] = rep.small_count;
  j["L_value"] = rep.L_value;
  j["norm_bound"] = rep.norm_bound;
  j["norm_bound_exact"] = exact.norm_exact.get_str();
  j["ratio"] = rep.ratio;
  j["norm_relative_error"] = exact.norm_relative_error;
  j["L_relative_error"] = exact.L_relative_error;
  Json entries = Json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"prime", e.prime}, {"lambda", e.lambda}, {"sign", e.sign}, {"eigenvalue", e.eigenvalue}});
  j["entries"] = entries;
  return j;
}

void print_report_text(std::ostream& out, const AmplifierReport& rep, const ExactRecomputation& exact) {
  out << "P " << rep.P << "\n"
      << "case " << rep.case_taken << " operator " << operator_name(rep.op) << "\n"
      << "good_primes " << rep.entries.size() << " small " << rep.small_count << "\n"
      << "L " << fmt_double(rep.L_value) << "\n"
      << "norm_bound " << fmt_double(rep.norm_bound) << "\n"
      << "norm_bound_exact " << exact.norm_exact.get_str() << "\n"
      << "ratio " << fmt_double(rep.ratio) << "\n"
      << "relative_error norm " << fmt_double(exact.norm_relative_error) << " L "
      << fmt_double(exact.L_relative_error) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the spherical Hecke algebra of PGSp4", "gsp4hecke"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--p", g.p, "Odd prime for numeric evaluation");
  app.add_option("--seed", g.seed, "Seed for random profiles");
  app.set_config("--config", "", "key=value file; amplifier keys go under [amplify]");

  std::int64_t m = 0, l = 0;
  std::string expr;

  auto* transform = app.add_subcommand("transform", "Satake transform of tau(m,l)");
  transform->add_option("m", m)->required();
  transform->add_option("l", l)->required();

  std::optional<std::int64_t> lmax;
  bool force_linear = false;
  auto* decomp = app.add_subcommand("decompose", "Expand a Hecke expression in basic operators");
  decomp->add_option("expr", expr)->required();
  decomp->add_option("--lmax", lmax, "Largest l for the linear-solve route");
  decomp->add_flag("--linear", force_linear, "Use the linear-solve route only");

  auto* vol = app.add_subcommand("volume", "Volume of the double coset of T_{0,m,l}");
  vol->add_option("m", m)->required();
  vol->add_option("l", l)->required();

  std::int64_t q = 0;
  auto* hbound = app.add_subcommand("hbound", "Bound for the norm restricted to a conjugate of H");
  hbound->add_option("expr", expr)->required();
  hbound->add_option("--q", q, "Second prime for a cross-prime product");

  std::int64_t amp_P = 1000, amp_pmin = 1000;
  std::string amp_dist = "constant:0", amp_profile, amp_window = "2";
  std::vector<std::int64_t> amp_sweep;
  int amp_draws = 4;
  double amp_cap = 3.0;
  auto* amplify = app.add_subcommand("amplify", "Build the amplifier for an eigenvalue profile");
  amplify->add_option("--P", amp_P, "Window start");
  amplify->add_option("--distribution", amp_dist, "constant:c, uniform:[a,b], bimodal:c1,c2, alternating:c1,c2");
  amplify->add_option("--profile", amp_profile, "File of '<prime> <lambda>' lines");
  amplify->add_option("--sweep", amp_sweep, "Ascending list of P for a ratio sweep")->delimiter(',');
  amplify->add_option("--draws", amp_draws, "Profiles drawn per P in a sweep");
  amplify->add_option("--pmin", amp_pmin, "Smallest admissible P");
  amplify->add_option("--window", amp_window, "Window factor (rational)");
  amplify->add_option("--lambda-max", amp_cap, "Cap on |lambda|");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the reference suite");
  verify->add_option("suite", suite)->check(CLI::IsMember({"all", "transforms", "decompositions", "dictionary"}));

  int k = 6;
  std::vector<std::int64_t> entries;
  auto* snf = app.add_subcommand("snf", "Smith valuations of a 2x2 or 4x4 matrix modulo p^k (uses --p, default 3)");
  snf->add_option("--k", k, "Precision");
  snf->add_option("entries", entries, "Row-major entries")->required();

  std::int64_t dict_p = 3;
  auto* dict = app.add_subcommand("dictionary", "Check the image of g_{m,l} under psi");
  dict->add_option("p", dict_p)->required();
  dict->add_option("m", m)->required();
  dict->add_option("l", l)->required();
  dict->add_option("--k", k, "Precision");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*transform) {
      const SatakePoly& t = basic_transform(m, l);
      if (g.json()) {
        Json j = envelope("transform");
        j["m"] = m;
        j["l"] = l;
        j["polynomial"] = t.str();
        out << j.dump() << "\n";
      } else {
        out << t.str() << "\n";
      }
      return kExitOk;
    }
    if (*decomp) {
      const HeckeExpr parsed = parse_hecke(expr);
      DecomposeOptions opts;
      opts.l_max = lmax ? *lmax : parsed.l_bound();
      opts.force_linear_solve = force_linear;
      const HeckeElement h = decompose(eval_expr(parsed), opts);
      if (g.json()) {
        Json j = envelope("decompose");
        j["expr"] = expr;
        j["terms"] = terms_json(h);
        out << j.dump() << "\n";
      } else {
        for (const auto& [idx, c] : h.terms())
          out << "tau(" << idx.m << "," << idx.l << ") " << print_canonical(c) << "\n";
      }
      return kExitOk;
    }
    if (*vol) {
      if (m < 0 || l < 2 * m) throw Error(Errc::InvalidIndex, "need l >= 2m >= 0");
      const LaurentPoly v = volume({0, m, l});
      Json j = envelope("volume");
      j["m"] = m;
      j["l"] = l;
      j["volume"] = print_canonical(v);
      if (g.p) j["value"] = v.eval_p(g.p).get_str();
      if (g.json()) {
        out << j.dump() << "\n";
      } else {
        out << print_canonical(v);
        if (g.p) out << " = " << j["value"].get<std::string>();
        out << "\n";
      }
      return kExitOk;
    }
    if (*hbound) {
      const HeckeElement h = decompose(eval_expr(parse_hecke(expr)));
      const std::int64_t p = g.p ? g.p : 3;
      const ElementBound b = element_h_bound(h, p);
      Json j = envelope("hbound");
      j["expr"] = expr;
      j["bound"] = print_canonical(b.symbolic.value);
      j["leading_degree"] = degree_json(degree_of(b.symbolic));
      if (g.p) {
        j["p"] = g.p;
        j["value"] = b.numeric.get_str();
      }
      if (q) {
        if (!g.p) throw Error(Errc::InvalidArgument, "--q needs --p");
        const ElementBound bq = element_h_bound(h, q);
        j["q"] = q;
        j["cross_prime_value"] = cross_prime_bound(b, p, bq, q).get_str();
      }
      if (g.json()) {
        out << j.dump() << "\n";
      } else {
        out << "bound " << print_canonical(b.symbolic.value) << "\n"
            << "leading_degree " << degree_text(degree_of(b.symbolic)) << "\n";
        if (g.p) out << "value_at_p " << b.numeric.get_str() << "\n";
        if (q) out << "cross_prime_value " << j["cross_prime_value"].get<std::string>() << "\n";
      }
      return kExitOk;
    }
    if (*amplify) {
      AmplifierOptions opts;
      opts.P_min = amp_pmin;
      try {
        opts.window_factor = mpq_class(amp_window);
        opts.window_factor.canonicalize();
      } catch (const std::invalid_argument&) {
        throw Error(Errc::InvalidArgument, "bad window factor '" + amp_window + "'");
      }
      ProfileSpec spec = ProfileSpec::parse(amp_dist, g.seed);
      spec.lambda_max = amp_cap;
      if (!amp_sweep.empty()) {
        const auto rows = ratio_sweep(spec, amp_sweep, amp_draws, opts);
        Json j = envelope("amplify");
        j["distribution"] = spec.str();
        Json arr = Json::array();
        for (const auto& r : rows)
          arr.push_back({{"P", r.P}, {"worst_ratio", r.worst_ratio}, {"reference", r.reference},
                        {"empirical_constant", r.worst_ratio / r.reference}, {"case", r.worst_case_taken}});
        j["sweep"] = arr;
        if (g.json()) {
          out << j.dump() << "\n";
        } else {
          out << "P worst_ratio log(P)/P constant case\n";
          for (const auto& r : rows)
            out << r.P << " " << fmt_double(r.worst_ratio) << " " << fmt_double(r.reference) << " "
                << fmt_double(r.worst_ratio / r.reference) << " " << r.worst_case_taken << "\n";
        }
        return kExitOk;
      }
      EigenvalueProfile profile(amp_cap);
      if (!amp_profile.empty()) {
        std::ifstream in(amp_profile);
        if (!in) throw Error(Errc::InvalidArgument, "cannot open profile '" + amp_profile + "'");
        profile = EigenvalueProfile::load(in, amp_cap);
      } else {
        profile = EigenvalueProfile::generate(spec, good_primes(amp_P, opts.window_factor));
      }
      const AmplifierReport rep = build_amplifier(profile, amp_P, opts);
      const ExactRecomputation exact = recompute_exact(rep);
      if (g.json()) {
        Json j = envelope("amplify");
        j["distribution"] = amp_profile.empty() ? spec.str() : "file";
        j["report"] = report_json(rep, exact);
        out << j.dump() << "\n";
      } else {
        print_report_text(out, rep, exact);
      }
      return kExitOk;
    }
    if (*verify) {
      const auto items = run_verify(suite);
      bool ok = true;
      Json arr = Json::array();
      for (const auto& it : items) {
        ok = ok && it.pass;
        arr.push_back({{"suite", it.suite}, {"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
      }
      if (g.json()) {
        Json j = envelope("verify");
        j["suite"] = suite;
        j["items"] = arr;
        j["all_pass"] = ok;
        out << j.dump() << "\n";
      } else {
        for (const auto& it : items)
          out << (it.pass ? "PASS " : "FAIL ") << it.suite << " " << it.name << " " << it.detail << "\n";
        out << (ok ? "all passed" : "failures present") << "\n";
      }
      return ok ? kExitOk : kExitDomain;
    }
    if (*snf) {
      const std::size_t n = entries.size() == 4 ? 2 : entries.size() == 16 ? 4 : 0;
      if (n == 0) throw Error(Errc::InvalidArgument, "snf needs 4 or 16 entries");
      const Modulus mod(g.p ? g.p : 3, k);
      MatMod M(mod, n);
      for (std::size_t i = 0; i < entries.size(); ++i) M.set(i / n, i % n, entries[i]);
      const auto vals = smith_valuations(M);
      if (g.json()) {
        Json j = envelope("snf");
        j["p"] = mod.p();
        j["k"] = k;
        j["valuations"] = vals;
        out << j.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? " " : "") << vals[i];
        out << "\n";
      }
      return kExitOk;
    }
    if (*dict) {
      const DictionaryReport rep = verify_dictionary(dict_p, m, l, k);
      if (g.json()) {
        Json j = envelope("dictionary");
        j["p"] = rep.p;
        j["m"] = rep.m;
        j["l"] = rep.l;
        j["k"] = rep.k;
        j["symplectic"] = rep.symplectic;
        j["similitude_valuation"] = rep.similitude_valuation;
        j["smith"] = rep.smith;
        j["expected"] = rep.expected;
        j["pass"] = rep.pass;
        out << j.dump() << "\n";
      } else {
        out << (rep.pass ? "PASS" : "FAIL") << " symplectic=" << (rep.symplectic ? "yes" : "no")
            << " similitude_valuation=" << rep.similitude_valuation << " smith=";
        for (std::size_t i = 0; i < rep.smith.size(); ++i) out << (i ? "," : "") << rep.smith[i];
        out << "\n";
      }
      return rep.pass ? kExitOk : kExitDomain;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::InvalidIndex:
      case Errc::InvalidArgument: return kExitUsage;
      default: return kExitDomain;
    }
  }
  return kExitUsage;
}

}  // namespace gsp4
