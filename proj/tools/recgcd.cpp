// recgcd: experiments on gcd(F(n), G(n)) for integral linear recurrences F
// and integer-valued polynomials G. Every subcommand prints to stdout; the
// density family can also append CSV records. All randomized internals are
// driven by --seed, and --threads never changes any output byte.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "recgcd/apparition.hpp"
#include "recgcd/decomposition.hpp"
#include "recgcd/degeneracy.hpp"
#include "recgcd/density.hpp"
#include "recgcd/fq.hpp"
#include "recgcd/intpoly.hpp"
#include "recgcd/recurrence.hpp"
#include "recgcd/tfp.hpp"
#include "recgcd/util.hpp"

using namespace recgcd;

namespace {

struct CommonArgs {
  std::string rec_spec;
  std::string poly_spec;
  bool fib = false;
  std::string lucas_spec;
  std::string h = "1";
  u64 x = 1000;
  u64 y = 10;
  u64 d_trunc = 100;
  u64 t_max = kDefaultTmax;
  u64 seed = 0;
  unsigned threads = 1;
  u64 n = 0;
  std::string m = "2";
  u64 p = 2;
  u64 ell = 0;
  double gamma = 0.25;
  u64 p_max = 100;
  std::string a = "2";
  std::string b = "3";
  std::string cache_path;
  std::string csv_path;
  bool brute = false;
};

LinearRecurrence resolve_rec(const CommonArgs& args) {
  if (args.fib) return LinearRecurrence::fibonacci();
  if (!args.lucas_spec.empty()) {
    auto fields = split(args.lucas_spec, ',');
    if (fields.size() != 2) throw domain_error("--lucas expects \"a1,a2\"");
    return LucasParams(parse_int(fields[0]), parse_int(fields[1])).rec();
  }
  if (args.rec_spec.empty()) throw domain_error("missing recurrence: use --rec, --fib or --lucas");
  return LinearRecurrence::parse(args.rec_spec);
}

LucasParams resolve_lucas(const CommonArgs& args) {
  if (args.fib) return LucasParams::fibonacci();
  if (!args.lucas_spec.empty()) {
    auto fields = split(args.lucas_spec, ',');
    if (fields.size() != 2) throw domain_error("--lucas expects \"a1,a2\"");
    return LucasParams(parse_int(fields[0]), parse_int(fields[1]));
  }
  throw domain_error("this subcommand needs --fib or --lucas \"a1,a2\"");
}

IntValuedPoly resolve_poly(const CommonArgs& args) {
  if (args.poly_spec.empty()) throw domain_error("missing polynomial: use --poly \"B; c0,..,cd\"");
  return IntValuedPoly::parse(args.poly_spec);
}

std::string default_cache_path(const CommonArgs& args) {
  if (!args.cache_path.empty()) return args.cache_path;
  const char* dir = std::getenv("RECGCD_CACHE_DIR");
  if (dir && *dir) return std::string(dir) + "/zcache.txt";
  return "";
}

void emit_csv(const CommonArgs& args, const std::string& header, const std::string& line) {
  if (args.csv_path.empty()) return;
  bool fresh = !std::ifstream(args.csv_path).good();
  std::ofstream out(args.csv_path, std::ios::app);
  if (!out) throw domain_error("cannot open CSV output: " + args.csv_path);
  if (fresh) out << header << "\n";
  out << line << "\n";
}

std::string rat_str(const Rat& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "recgcd: density experiments for gcd(F(n), G(n)) of linear recurrences and\n"
      "integer-valued polynomials.\n"
      "Recurrence spec: \"k; a_1,..,a_k; F(0),..,F(k-1)\".  Polynomial spec:\n"
      "\"B; c_0,..,c_d\" for (c_0 + .. + c_d X^d)/B.\n"
      "CSV columns for the density family: x, count, density, y, delta_y, gap,\n"
      "estimated_flag (ASCII, '.' decimal point, no locale dependence)."};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");
  CommonArgs args;

  auto sub_of = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");  // keep --h free for the gcd target
    return sub;
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", args.seed, "seed for all randomized internals (default 0)");
    sub->add_option("--threads", args.threads, "worker threads; output is identical for all values");
    sub->add_option("--cache", args.cache_path, "z-cache file path (or $RECGCD_CACHE_DIR/zcache.txt)");
    sub->add_option("--csv", args.csv_path, "append a CSV record to this file");
  };
  auto add_rec = [&](CLI::App* sub) {
    sub->add_option("--rec", args.rec_spec, "recurrence spec \"k; a_1,..; F(0),..\"");
    sub->add_flag("--fib", args.fib, "use the Fibonacci sequence");
    sub->add_option("--lucas", args.lucas_spec, "Lucas sequence \"a1,a2\" (F(0)=0, F(1)=1)");
  };

  auto* c_eval = sub_of("eval", "F(n), exactly");
  c_eval->add_option("--n", args.n)->required();
  add_rec(c_eval);
  add_common(c_eval);

  auto* c_evalmod = sub_of("eval-mod", "F(n) mod m without computing F(n)");
  c_evalmod->add_option("--n", args.n)->required();
  c_evalmod->add_option("--m", args.m)->required();
  add_rec(c_evalmod);
  add_common(c_evalmod);

  auto* c_period = sub_of("period", "preperiod and period of F mod m");
  c_period->add_option("--m", args.m)->required();
  add_rec(c_period);
  add_common(c_period);

  auto* c_degen = sub_of("degenerate", "root-of-unity ratio test for psi_F");
  add_rec(c_degen);
  add_common(c_degen);

  auto* c_decomp = sub_of(
      "decompose", "non-degenerate split of F; with --poly and --h, the full gcd-set decomposition");
  c_decomp->add_option("--poly", args.poly_spec);
  c_decomp->add_option("--h", args.h);
  add_rec(c_decomp);
  add_common(c_decomp);

  auto* c_fixdiv = sub_of("fixed-divisor", "gcd of all values G(n)");
  c_fixdiv->add_option("--poly", args.poly_spec)->required();
  add_common(c_fixdiv);

  auto* c_rho = sub_of("rho", "rho_G at a prime (or squarefree composite)");
  c_rho->add_option("--poly", args.poly_spec)->required();
  c_rho->add_option("--p", args.p)->required();
  add_common(c_rho);

  auto* c_splits = sub_of("splits", "does G split over Q, and its rational roots");
  c_splits->add_option("--poly", args.poly_spec)->required();
  add_common(c_splits);

  auto* c_tfp = sub_of("tfp", "T_F(p): prints \"p, T, s, flags\"");
  c_tfp->add_option("--p", args.p)->required();
  c_tfp->add_option("--Tmax", args.t_max);
  c_tfp->add_flag("--oracle", args.brute, "use the exact split-root oracle");
  add_rec(c_tfp);
  add_common(c_tfp);

  auto* c_census = sub_of("tfp-census", "P_{F,gamma}(x): primes with T_F(p) < p^gamma");
  c_census->add_option("--gamma", args.gamma)->required();
  c_census->add_option("--x", args.x)->required();
  add_rec(c_census);
  add_common(c_census);

  auto* c_tail = sub_of("tail-sum", "sum of 1/(p T_F(p)) over y < p <= Pmax");
  c_tail->add_option("--y", args.y)->required();
  c_tail->add_option("--Pmax", args.p_max)->required();
  c_tail->add_option("--Tmax", args.t_max);
  add_rec(c_tail);
  add_common(c_tail);

  auto* c_cong = sub_of("congruence-count", "#{m <= x : p | F(pm + ell)}");
  c_cong->add_option("--p", args.p)->required();
  c_cong->add_option("--ell", args.ell)->required();
  c_cong->add_option("--x", args.x)->required();
  add_rec(c_cong);
  add_common(c_cong);

  auto* c_zrank = sub_of("zrank", "rank of apparition z(m)");
  c_zrank->add_option("--m", args.m)->required();
  c_zrank->add_flag("--brute", args.brute, "use the linear-scan oracle");
  add_rec(c_zrank);
  add_common(c_zrank);

  auto* c_densform = sub_of("density-formula",
                                        "truncated Mobius series for d(A_{F,I,h})");
  c_densform->add_option("--h", args.h)->required();
  c_densform->add_option("--D", args.d_trunc)->required();
  add_rec(c_densform);
  add_common(c_densform);

  auto* c_nonempty = sub_of("nonempty", "is A_{F,I,h} non-empty (h = gcd(l, F_l))");
  c_nonempty->add_option("--h", args.h)->required();
  add_rec(c_nonempty);
  add_common(c_nonempty);

  auto* c_density = sub_of("density", "empirical density + exact delta_y + gap");
  c_density->add_option("--poly", args.poly_spec)->required();
  c_density->add_option("--h", args.h);
  c_density->add_option("--x", args.x)->required();
  c_density->add_option("--y", args.y)->required();
  add_rec(c_density);
  add_common(c_density);

  auto* c_delta = sub_of("delta-y", "exact density of C^-_{F,G,y}");
  c_delta->add_option("--poly", args.poly_spec)->required();
  c_delta->add_option("--y", args.y)->required();
  add_rec(c_delta);
  add_common(c_delta);

  auto* c_report = sub_of("report", "like density, and appends the CSV record");
  c_report->add_option("--poly", args.poly_spec)->required();
  c_report->add_option("--h", args.h);
  c_report->add_option("--x", args.x)->required();
  c_report->add_option("--y", args.y)->required();
  add_rec(c_report);
  add_common(c_report);

  auto* c_ailon = sub_of("ailon-rudnick", "n <= x with gcd(a^n-1, b^n-1) = 1");
  c_ailon->add_option("--a", args.a)->required();
  c_ailon->add_option("--b", args.b)->required();
  c_ailon->add_option("--x", args.x)->required();
  add_common(c_ailon);

  auto* c_lcensus = sub_of("large-prime-census",
                                       "n <= x where a prime > x divides gcd(F(n), G(n))");
  c_lcensus->add_option("--poly", args.poly_spec)->required();
  c_lcensus->add_option("--x", args.x)->required();
  add_rec(c_lcensus);
  add_common(c_lcensus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_eval->parsed()) {
      std::cout << resolve_rec(args).eval(args.n).get_str() << "\n";
    } else if (c_evalmod->parsed()) {
      std::cout << resolve_rec(args).eval_mod(args.n, parse_int(args.m)).get_str() << "\n";
    } else if (c_period->parsed()) {
      auto ep = resolve_rec(args).eventual_period_mod(parse_int(args.m));
      std::cout << ep.preperiod << " " << ep.period << "\n";
    } else if (c_degen->parsed()) {
      auto w = is_degenerate(resolve_rec(args));
      if (w)
        std::cout << "degenerate (witness order " << *w << ")\n";
      else
        std::cout << "non-degenerate\n";
    } else if (c_decomp->parsed()) {
      LinearRecurrence rec = resolve_rec(args);
      if (args.poly_spec.empty()) {
        auto dec = decompose_nondegenerate(rec);
        std::cout << "c=" << dec.stride << "\n";
        for (u64 j = 0; j < dec.stride; ++j)
          std::cout << "part " << j << ": " << dec.parts[j].to_string() << "\n";
      } else {
        auto dec = decompose_gcd_set(rec, resolve_poly(args), parse_int(args.h));
        std::cout << "stride=" << dec.stride << " preperiod=" << dec.preperiod << "\n";
        std::cout << "exceptional:";
        for (u64 n : dec.exceptional) std::cout << " " << n;
        std::cout << "\n";
        for (const auto& part : dec.parts) {
          std::cout << "offset " << part.offset << (part.bearing ? " [bearing]" : "          ")
                    << " fdiv=" << part.f_divisor.get_str() << " gdiv=" << part.g_divisor.get_str()
                    << " F~: " << part.rec_part.to_string() << " G~: " << part.poly_part.to_string()
                    << "\n";
        }
      }
    } else if (c_fixdiv->parsed()) {
      std::cout << fixed_divisor(resolve_poly(args)).get_str() << "\n";
    } else if (c_rho->parsed()) {
      IntValuedPoly g = resolve_poly(args);
      Rat r = 1;
      bool squarefree = true;
      for (auto [q, e] : factor_trial_u64(args.p)) {
        if (e > 1) squarefree = false;
        r *= rho(g, q);
      }
      if (!squarefree)
        std::cout << "0 (rho is supported on squarefree arguments)\n";
      else
        std::cout << rat_str(r) << "\n";
    } else if (c_splits->parsed()) {
      auto sp = splits_over_Q(resolve_poly(args));
      if (!sp.splits) {
        std::cout << "false\n";
      } else {
        std::cout << "true";
        for (auto& [root, mult] : sp.roots) {
          std::cout << " " << rat_str(root);
          if (mult > 1) std::cout << "^" << mult;
        }
        std::cout << "\n";
      }
    } else if (c_tfp->parsed()) {
      LinearRecurrence rec = resolve_rec(args);
      TfpResult t = args.brute ? t_f_p_oracle_split(rec, args.p, args.t_max)
                               : t_f_p(rec, args.p, args.t_max);
      std::cout << t.p << ", " << t.value_string() << ", " << t.s << ", " << t.flags.to_string()
                << "\n";
    } else if (c_census->parsed()) {
      auto res = census_P_F_gamma(resolve_rec(args), args.gamma, args.x);
      for (const auto& row : res.rows)
        std::cout << row.p << ", " << (row.flags.divides_ak ? "-" : row.value_string()) << ", "
                  << row.s << ", " << row.flags.to_string() << "\n";
      std::cout << "count " << res.count << "\n";
      std::cout << "members:";
      for (u64 p : res.members) std::cout << " " << p;
      std::cout << "\nflagged:";
      for (auto& [p, fl] : res.flagged) std::cout << " " << p << "(" << fl.to_string() << ")";
      std::cout << "\n";
    } else if (c_tail->parsed()) {
      auto res = tail_sum(resolve_rec(args), args.y, args.p_max, args.t_max);
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.9f", res.value);
      std::cout << buf << " (exact " << rat_str(res.exact) << ", flagged " << res.flagged
                << ", unresolved " << res.unresolved << ")\n";
    } else if (c_cong->parsed()) {
      std::cout << congruence_count(resolve_rec(args), args.p, args.ell, args.x) << "\n";
    } else if (c_zrank->parsed()) {
      LucasParams lp = resolve_lucas(args);
      u64 m = to_u64(parse_int(args.m));
      if (args.brute) {
        std::cout << z_of_bruteforce(lp, m) << "\n";
      } else {
        std::string path = default_cache_path(args);
        ZCache cache;
        if (!path.empty()) cache.load(path);
        std::cout << z_of(lp, m, path.empty() ? nullptr : &cache) << "\n";
        if (!path.empty()) cache.save_atomic(path);
      }
    } else if (c_densform->parsed()) {
      LucasParams lp = resolve_lucas(args);
      std::string path = default_cache_path(args);
      ZCache cache;
      if (!path.empty()) cache.load(path);
      auto res = density_formula(lp, to_u64(parse_int(args.h)), args.d_trunc,
                                 path.empty() ? nullptr : &cache);
      if (!path.empty()) cache.save_atomic(path);
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.9f", res.partial_sum_d);
      std::cout << buf << " (exact " << rat_str(res.partial_sum) << ", last term "
                << res.last_term_magnitude << ", skipped " << res.skipped_noncoprime
                << ", nonempty " << (res.nonempty ? "true" : "false") << ")\n";
    } else if (c_nonempty->parsed()) {
      auto res = nonempty_criterion(resolve_lucas(args), to_u64(parse_int(args.h)));
      std::cout << (res.nonempty ? "true" : "false") << " (l=" << res.ell
                << ", gcd=" << res.gcd_value.get_str() << ")\n";
    } else if (c_density->parsed() || c_report->parsed()) {
      auto rep = density_report(resolve_rec(args), resolve_poly(args), parse_int(args.h), args.x,
                                args.y, args.threads);
      std::cout << rep.csv_line() << "\n";
      std::cout << "summary: x=" << rep.x << " count=" << rep.count << " h=" << rep.h.get_str()
                << " y=" << rep.y << " delta_y=" << rat_str(rep.delta_y)
                << (rep.delta_estimated ? " (estimated)" : " (exact)") << " F=\"" << rep.f_spec
                << "\" G=\"" << rep.g_spec << "\"\n";
      emit_csv(args, DensityReport::csv_header(), rep.csv_line());
    } else if (c_delta->parsed()) {
      auto exact = delta_y_exact(resolve_rec(args), resolve_poly(args), args.y);
      if (exact) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.9f", exact->get_d());
        std::cout << rat_str(*exact) << " = " << buf << "\n";
      } else {
        std::cout << "work cap exceeded; use density for an empirical estimate\n";
      }
    } else if (c_ailon->parsed()) {
      auto res = ailon_rudnick(parse_int(args.a), parse_int(args.b), args.x);
      std::cout << "count " << res.count << "\n";
      std::cout << "members:";
      for (u64 n : res.members) std::cout << " " << n;
      std::cout << "\n";
    } else if (c_lcensus->parsed()) {
      auto res = large_prime_census(resolve_rec(args), resolve_poly(args), args.x, args.seed);
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6f", res.max_p_over_x);
      std::cout << "count " << res.count << " max_prime "
                << (res.max_prime > 0 ? res.max_prime.get_str() : "-") << " max_p_over_x " << buf
                << "\n";
    }
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
