// rankone-gap: command-line front end for the rankone library.
//
// Exit codes: 0 success / PASS, 1 FAIL verdict, 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankone/cfunction.hpp"
#include "rankone/compact_duals.hpp"
#include "rankone/error.hpp"
#include "rankone/gap_params.hpp"
#include "rankone/json_io.hpp"
#include "rankone/ktype_search.hpp"
#include "rankone/laplace_sim.hpp"
#include "rankone/stieltjes.hpp"

namespace {

using rankone::Complex;
using rankone::Error;
using rankone::ErrorCode;
using rankone::HighestWeight;
using rankone::io::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json big_json(const rankone::BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

HighestWeight weight(int n, const std::vector<std::int64_t>& entries) {
  return HighestWeight::validate(n, entries);
}

// "1", "-2.5", "0.5+0.25i", "1-2i", "3i"
Complex parse_complex(const std::string& text) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  static const std::regex pure_im(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pure_im)) {
    const std::string mag = m[1].str();
    const double im = mag.empty() || mag == "+" ? 1.0 : (mag == "-" ? -1.0 : std::stod(mag));
    return {0.0, im};
  }
  if (!std::regex_match(text, m, re) || (!m[1].matched && !m[2].matched))
    throw Error(ErrorCode::ParseError, "cannot parse complex number \"" + text + "\"");
  const double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im_part = 0.0;
  if (m[2].matched) {
    im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im_part = -im_part;
  }
  return {re_part, im_part};
}

std::vector<Complex> parse_grid(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_complex(item));
  return out;
}

std::vector<Complex> default_compare_grid() {
  std::vector<Complex> g;
  for (int i = 0; i < 10; ++i)
    for (double im : {0.0, 0.5}) g.emplace_back(0.2 + 0.2 * i, im);
  return g;
}

struct Globals {
  unsigned threads = 0;
  std::uint64_t seed = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation-theoretic and spectral computations for rank-one groups SO(d+1,1)"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for scans (default: RANKONE_GAP_THREADS or all cores)");
  app.add_option("--seed", g.seed, "Seed for randomised batches");

  std::function<int()> action;

  // ---------------------------------------------------------------- duals
  auto* duals = app.add_subcommand("duals", "Highest weights of SO(n)");
  duals->require_subcommand(1);
  duals->fallthrough();
  int n = 0;
  std::vector<std::int64_t> entries, sigma_entries, tau_entries;
  std::int64_t bound = 0;

  auto add_weight = [&](CLI::App* c) {
    c->add_option("--n", n, "Group parameter n of SO(n)")->required();
    c->add_option("--entries", entries, "Weight entries, comma separated")->delimiter(',');
  };

  auto* d_validate = duals->add_subcommand("validate", "Check a weight tuple");
  add_weight(d_validate);
  d_validate->callback([&] {
    action = [&] {
      try {
        emit(json{{"schema", rankone::io::kSchema}, {"valid", true}, {"weight", rankone::io::to_json(weight(n, entries))}});
        return kOk;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::WrongLength && e.code() != ErrorCode::OrderingViolation) throw;
        emit(json{{"schema", rankone::io::kSchema}, {"valid", false}, {"error", rankone::to_string(e.code())}, {"message", e.what()}});
        return kFail;
      }
    };
  });

  auto* d_dual = duals->add_subcommand("dual", "Dual representation");
  add_weight(d_dual);
  d_dual->callback([&] {
    action = [&] {
      emit(rankone::io::to_json(rankone::dual(weight(n, entries))));
      return kOk;
    };
  });

  auto* d_branch = duals->add_subcommand("branch", "Restriction to SO(n-1)");
  add_weight(d_branch);
  d_branch->add_option("--sigma", sigma_entries, "Test containment of this SO(n-1) weight")->delimiter(',');
  d_branch->callback([&] {
    action = [&] {
      const auto tau = weight(n, entries);
      if (d_branch->count("--sigma") > 0) {
        const bool c = rankone::branches_to(tau, weight(n - 1, sigma_entries));
        emit(json{{"schema", rankone::io::kSchema}, {"contains", c}});
        return kOk;
      }
      json out = json::array();
      for (const auto& s : rankone::branching_set(tau)) out.push_back(rankone::io::to_json(s));
      emit(out);
      return kOk;
    };
  });

  auto* d_dim = duals->add_subcommand("dim", "Weyl dimension");
  add_weight(d_dim);
  d_dim->callback([&] {
    action = [&] {
      const auto w = weight(n, entries);
      emit(json{{"n", w.n()}, {"entries", w.entries()}, {"dimension", big_json(rankone::dimension(w))}});
      return kOk;
    };
  });

  auto* d_enum = duals->add_subcommand("enum", "SO(n+1) weights containing the given SO(n) weight");
  add_weight(d_enum);
  d_enum->add_option("--bound", bound, "Cap on the first entry")->required();
  d_enum->callback([&] {
    action = [&] {
      json out = json::array();
      for (const auto& t : rankone::enumerate_ktypes_containing(weight(n, entries), bound))
        out.push_back(rankone::io::to_json(t));
      emit(out);
      return kOk;
    };
  });

  // ---------------------------------------------------------------- ktype
  auto* ktype = app.add_subcommand("ktype", "Minimal K-types");
  ktype->require_subcommand(1);
  ktype->fallthrough();
  int d = 0;

  auto* k_lambda = ktype->add_subcommand("lambda", "lambda_tau of an SO(d+1) weight");
  k_lambda->add_option("--d", d)->required();
  k_lambda->add_option("--tau", tau_entries)->delimiter(',');
  k_lambda->callback([&] {
    action = [&] {
      const auto tau = weight(d + 1, tau_entries);
      emit(json{{"schema", rankone::io::kSchema}, {"tau", rankone::io::to_json(tau)},
                {"lambda", rankone::io::to_json(rankone::lambda_tau(tau, d))}});
      return kOk;
    };
  });

  auto* k_witness = ktype->add_subcommand("witness", "Witness K-type for an M-type");
  k_witness->add_option("--d", d)->required();
  k_witness->add_option("--sigma", sigma_entries)->delimiter(',');
  k_witness->callback([&] {
    action = [&] {
      const auto sigma = weight(d, sigma_entries);
      const auto res = rankone::minimal_ktypes(sigma, d, rankone::default_search_bound(sigma));
      emit(rankone::io::to_json(res.witness));
      const auto& w = res.witness;
      return w.contains_sigma && w.contains_sigma_dual && w.is_minimal_over_bound ? kOk : kFail;
    };
  });

  auto* k_minimal = ktype->add_subcommand("minimal", "Brute-force lambda minimisers");
  k_minimal->add_option("--d", d)->required();
  k_minimal->add_option("--sigma", sigma_entries)->delimiter(',');
  k_minimal->add_option("--bound", bound, "Cap on the first entry of candidates (default max|sigma|+3)");
  k_minimal->callback([&] {
    action = [&] {
      const auto sigma = weight(d, sigma_entries);
      const std::int64_t b = k_minimal->count("--bound") ? bound : rankone::default_search_bound(sigma);
      const auto res = rankone::minimal_ktypes(sigma, d, b);
      json mins = json::array();
      for (const auto& t : res.minimizers) mins.push_back(rankone::io::to_json(t));
      emit(json{{"schema", rankone::io::kSchema},
                {"minimizers", mins},
                {"min_lambda", rankone::io::to_json(res.min_lambda)},
                {"candidates", res.candidates_scanned},
                {"witness", rankone::io::to_json(res.witness)}});
      return res.witness.is_minimal_over_bound ? kOk : kFail;
    };
  });

  // ---------------------------------------------------------------- cfun
  auto* cfun = app.add_subcommand("cfun", "Harish-Chandra C-function scalars");
  cfun->require_subcommand(1);
  cfun->fallthrough();
  double s = 0.0;
  std::size_t grid_n = 101;
  bool scaled = false;
  std::string format = "text";

  auto add_pair = [&](CLI::App* c, bool tau_required) {
    c->add_option("--d", d)->required();
    c->add_option("--sigma", sigma_entries, "SO(d) weight")->delimiter(',');
    auto* t = c->add_option("--tau", tau_entries, "SO(d+1) weight")->delimiter(',');
    if (tau_required) t->required();
  };
  // d = 1 has an empty sigma; accept a missing --sigma there.
  auto sigma_of = [&] { return weight(d, sigma_entries); };

  auto* c_expr = cfun->add_subcommand("expr", "Symbolic Gamma ratio");
  add_pair(c_expr, true);
  c_expr->callback([&] {
    action = [&] {
      std::cout << rankone::cplus_symbolic(weight(d + 1, tau_entries), sigma_of(), d).to_string() << "\n";
      return kOk;
    };
  });

  auto* c_eval = cfun->add_subcommand("eval", "Evaluate C_+(tau : sigma; s)");
  add_pair(c_eval, true);
  c_eval->add_option("--s", s)->required();
  c_eval->add_flag("--scaled", scaled, "Multiply by dim(tau)/dim(sigma)");
  c_eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_eval->callback([&] {
    action = [&] {
      const auto tau = weight(d + 1, tau_entries);
      const auto sigma = sigma_of();
      const auto r = rankone::evaluate(rankone::cplus_symbolic(tau, sigma, d), s);
      double value = r.value;
      if (scaled && r.classification == rankone::PointClass::Finite)
        value = rankone::cor43_scalar(tau, sigma, s, d);
      if (format == "json") {
        emit(json{{"schema", rankone::io::kSchema}, {"s", rankone::io::round15(s)},
                  {"value", std::isfinite(value) ? json(rankone::io::round15(value)) : json("inf")},
                  {"classification", rankone::to_string(r.classification)}});
      } else {
        std::cout << num(value) << "\n";
      }
      return r.classification == rankone::PointClass::Pole ? kFail : kOk;
    };
  });

  auto* c_scan = cfun->add_subcommand("scan", "Non-vanishing scan of the witness K-type over (d/2, d]");
  add_pair(c_scan, false);
  c_scan->add_option("--grid", grid_n, "Number of grid points")->check(CLI::PositiveNumber);
  c_scan->callback([&] {
    action = [&] {
      const auto sigma = sigma_of();
      const auto grid = rankone::uniform_s_grid(d, grid_n);
      rankone::ScanOptions so;
      so.threads = g.threads;
      const auto rep = c_scan->count("--tau")
                           ? rankone::nonvanishing_scan(sigma, weight(d + 1, tau_entries), d, grid, so)
                           : rankone::nonvanishing_scan(sigma, d, grid, so);
      std::cout << "s,value,classification\n";
      for (const auto& p : rep.points)
        std::cout << num(p.s) << "," << num(p.value) << "," << rankone::to_string(p.classification) << "\n";
      std::cerr << (rep.pass ? "PASS" : "FAIL") << " tau=" << rep.tau.to_string()
                << " min|value|=" << num(rep.min_abs_value) << " zeros=" << rep.zero_count
                << " poles=" << rep.pole_count << " sign_changes=" << rep.sign_changes << "\n";
      return rep.pass ? kOk : kFail;
    };
  });

  // ---------------------------------------------------------------- gap
  auto* gap = app.add_subcommand("gap", "Spectral gap parameters");
  gap->require_subcommand(1);
  gap->fallthrough();
  double kappa_gamma = 0.0, delta = 0.0;
  std::string model_path;
  bool no_enforce = false;

  auto* g_params = gap->add_subcommand("params", "kappa_0, kappa_1 and eta values");
  g_params->add_option("--kappa-gamma", kappa_gamma)->required();
  g_params->add_option("--d", d)->required();
  g_params->add_option("--delta", delta, "Critical exponent; enables the full parameter record");
  g_params->callback([&] {
    action = [&] {
      if (g_params->count("--delta")) {
        emit(rankone::io::to_json(rankone::make_gap_parameters(d, delta, kappa_gamma)));
      } else {
        const double k0 = rankone::kappa0(kappa_gamma);
        emit(json{{"schema", rankone::io::kSchema}, {"d", d},
                  {"kappa_gamma", rankone::io::round15(kappa_gamma)},
                  {"kappa0", rankone::io::round15(k0)},
                  {"kappa1", rankone::io::round15(rankone::kappa1(k0, d))}});
      }
      return kOk;
    };
  });

  auto* g_verdict = gap->add_subcommand("verdict", "Strong spectral gap verdict on a model's spectrum");
  g_verdict->add_option("--model", model_path)->required();
  g_verdict->add_flag("--no-enforce-support", no_enforce, "Accept measures outside I_sigma");
  g_verdict->callback([&] {
    action = [&] {
      const auto model = rankone::io::model_from_json(rankone::io::load_file(model_path));
      std::vector<rankone::SpectralChannel> spectrum;
      for (const auto& ch : model.channels) spectrum.push_back({ch.sigma, ch.measure});
      const auto v = rankone::ssg_verdict(spectrum, model.delta, model.d, {!no_enforce});
      emit(rankone::io::to_json(v));
      return v.verdict ? kOk : kFail;
    };
  });

  // ---------------------------------------------------------------- stieltjes
  auto* st = app.add_subcommand("stieltjes", "Stieltjes transforms of measures");
  st->require_subcommand(1);
  st->fallthrough();
  double z_re = 0.0, z_im = 0.0, a = 0.0, b = 0.0, y0 = 0.5;
  int k_max = 12;

  auto* s_transform = st->add_subcommand("transform", "Evaluate F(z)");
  s_transform->add_option("--model", model_path, "Measure JSON")->required();
  s_transform->add_option("--z-re", z_re)->required();
  s_transform->add_option("--z-im", z_im);
  s_transform->callback([&] {
    action = [&] {
      const auto nu = rankone::io::measure_from_json(rankone::io::load_file(model_path));
      const Complex f = rankone::transform(nu, Complex(z_re, z_im));
      emit(json{{"schema", rankone::io::kSchema}, {"z", rankone::io::complex_json({z_re, z_im})},
                {"value", rankone::io::complex_json(f)}});
      return kOk;
    };
  });

  auto* s_invert = st->add_subcommand("invert", "Recover (nu([a,b)) + nu((a,b]))/2");
  s_invert->add_option("--model", model_path, "Measure JSON")->required();
  s_invert->add_option("--a", a)->required();
  s_invert->add_option("--b", b)->required();
  s_invert->add_option("--y0", y0);
  s_invert->add_option("--k-max", k_max);
  s_invert->callback([&] {
    action = [&] {
      const auto nu = rankone::io::measure_from_json(rankone::io::load_file(model_path));
      rankone::InversionOptions o;
      o.y0 = y0;
      o.k_max = k_max;
      const auto r = rankone::invert_measure(nu, a, b, o);
      emit(rankone::io::to_json(r));
      return r.converged ? kOk : kFail;
    };
  });

  auto* s_detect = st->add_subcommand("detect", "Does nu vanish on (a, b)?");
  s_detect->add_option("--model", model_path, "Measure JSON")->required();
  s_detect->add_option("--a", a)->required();
  s_detect->add_option("--b", b)->required();
  s_detect->callback([&] {
    action = [&] {
      const auto nu = rankone::io::measure_from_json(rankone::io::load_file(model_path));
      const auto r = rankone::vanishing_detector(nu, a, b);
      emit(rankone::io::to_json(r));
      return r.verdict == rankone::Vanishing::Inconclusive ? kFail : kOk;
    };
  });

  // ---------------------------------------------------------------- sim
  auto* sim = app.add_subcommand("sim", "Synthetic spectral models");
  sim->require_subcommand(1);
  sim->fallthrough();
  double t_max = 80.0, dt = 0.1, eta = 0.1, resolution = 1e-3, tol_rank = 1e-10;
  std::string out_path, z_grid, q_path;
  std::size_t random_count = 0;

  auto load_model = [&] {
    auto m = rankone::io::model_from_json(rankone::io::load_file(model_path));
    rankone::validate_model(m);
    return m;
  };

  auto* m_corr = sim->add_subcommand("correlate", "Sample f(t) on [0, t_max]");
  m_corr->add_option("--model", model_path)->required();
  m_corr->add_option("--t-max", t_max);
  m_corr->add_option("--dt", dt)->check(CLI::PositiveNumber);
  m_corr->add_option("--out", out_path, "CSV destination (default stdout)");
  m_corr->callback([&] {
    action = [&] {
      const auto m = load_model();
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
        os = &file;
      }
      *os << "t,re,im\n";
      const auto steps = static_cast<long>(std::floor(t_max / dt + 1e-9));
      for (long i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        const Complex f = rankone::correlation(m, t);
        *os << num(t) << "," << num(f.real()) << "," << num(f.imag()) << "\n";
      }
      return kOk;
    };
  });

  auto* m_laplace = sim->add_subcommand("laplace", "Numeric and closed-form Laplace transforms");
  m_laplace->add_option("--model", model_path)->required();
  m_laplace->add_option("--z-grid", z_grid, "Comma-separated complex points, e.g. 0.5,1+0.25i")->required();
  m_laplace->add_option("--t-max", t_max);
  m_laplace->callback([&] {
    action = [&] {
      const auto m = load_model();
      rankone::LaplaceOptions lo;
      lo.t_max = t_max;
      std::cout << "z_re,z_im,numeric_re,numeric_im,closed_re,closed_im,truncation_bound\n";
      for (const Complex z : parse_grid(z_grid)) {
        const auto nv = rankone::laplace_numeric(m, z, lo);
        const Complex cv = rankone::laplace_closed(m, z);
        std::cout << num(z.real()) << "," << num(z.imag()) << "," << num(nv.value.real()) << ","
                  << num(nv.value.imag()) << "," << num(cv.real()) << "," << num(cv.imag()) << ","
                  << num(nv.truncation_bound) << "\n";
      }
      return kOk;
    };
  });

  auto* m_compare = sim->add_subcommand("compare", "Numeric vs closed-form Laplace transform");
  m_compare->add_option("--model", model_path)->required();
  m_compare->add_option("--z-grid", z_grid, "Default: Re z in 0.2..2.0, Im z in {0, 0.5}");
  m_compare->add_option("--t-max", t_max);
  m_compare->callback([&] {
    action = [&] {
      const auto m = load_model();
      rankone::CompareOptions co;
      co.laplace.t_max = t_max;
      const auto grid = z_grid.empty() ? default_compare_grid() : parse_grid(z_grid);
      const auto rep = rankone::compare_numeric_closed(m, grid, co);
      emit(rankone::io::to_json(rep));
      return rep.pass ? kOk : kFail;
    };
  });

  auto* m_poles = sim->add_subcommand("poles", "Continuation probe past Re z = 0");
  m_poles->add_option("--model", model_path)->required();
  m_poles->add_option("--eta", eta);
  m_poles->add_option("--resolution", resolution);
  m_poles->callback([&] {
    action = [&] {
      const auto m = load_model();
      rankone::PoleProbeOptions po;
      po.resolution = resolution;
      const auto rep = rankone::pole_probe(m, eta, po);
      emit(rankone::io::to_json(rep));
      return rep.pass ? kOk : kFail;
    };
  });

  auto* m_rank = sim->add_subcommand("rank", "Rank of a 2x2 sesquilinear-form sample");
  m_rank->add_option("--q", q_path, "Matrix JSON");
  m_rank->add_option("--tol", tol_rank);
  m_rank->add_option("--random", random_count, "Classify this many random outer products and random full-rank matrices (uses --seed)");
  m_rank->callback([&] {
    action = [&] {
      if (random_count > 0) {
        std::mt19937_64 rng(g.seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        auto c = [&] { return Complex(u(rng), u(rng)); };
        std::size_t outer_bad = 0, full_bad = 0, full_count = 0;
        for (std::size_t i = 0; i < random_count; ++i) {
          const Complex l1[2] = {c(), c()}, l2[2] = {c(), c()};
          rankone::Matrix2c q{};
          for (int r = 0; r < 2; ++r)
            for (int k = 0; k < 2; ++k) q[r][k] = l1[r] * std::conj(l2[k]);
          if (rankone::rank_test(q, tol_rank).rank > 1) ++outer_bad;
          rankone::Matrix2c p{};
          double ratio = 0.0;
          do {
            p = {{{c(), c()}, {c(), c()}}};
            const auto rr = rankone::rank_test(p, tol_rank);
            ratio = rr.abs_det / (rr.scale * rr.scale);
          } while (ratio < 0.1);
          ++full_count;
          if (rankone::rank_test(p, tol_rank).rank != 2) ++full_bad;
        }
        emit(json{{"schema", rankone::io::kSchema}, {"seed", g.seed}, {"outer_products", random_count},
                  {"outer_misclassified", outer_bad}, {"full_rank", full_count},
                  {"full_misclassified", full_bad}});
        return outer_bad + full_bad == 0 ? kOk : kFail;
      }
      if (q_path.empty()) throw CLI::RequiredError("--q or --random");
      const auto q = rankone::io::matrix_from_json(rankone::io::load_file(q_path));
      const auto r = rankone::rank_test(q, tol_rank);
      emit(json{{"schema", rankone::io::kSchema}, {"rank", r.rank}, {"abs_det", rankone::io::round15(r.abs_det)},
                {"scale", rankone::io::round15(r.scale)}});
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (!action) return kUsage;
  try {
    return action();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << rankone::to_string(e.code()) << "): " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error (parse_error): " << e.what() << "\n";
    return kUsage;
  }
}
