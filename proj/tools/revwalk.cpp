// revwalk: command-line front end to the library. Every output is a JSON
// header line followed by CSV or JSON.
//
// Exit codes: 0 success, 1 usage, 2 certification or insufficient path,
// 3 acceptance failure.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "revwalk/revwalk.hpp"

namespace {

using revwalk::io::Json;
namespace walk = revwalk::walk;
namespace ladder = revwalk::ladder;
namespace continuous = revwalk::continuous;

constexpr int kExitUsage = 1;
constexpr int kExitCertification = 2;
constexpr int kExitAcceptance = 3;

// Stream families for the simulation commands.
constexpr std::uint64_t kSimulateStream = 11;
constexpr std::uint64_t kWindingStream = 12;

struct Global {
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out;
  std::string config_file;
};

struct SimulateArgs {
  std::string model;
  std::int64_t steps = 1000;
  std::int64_t replicas = 1;
  std::int64_t m = 1;
  std::int64_t z = 0;
};

struct ExactArgs {
  std::string quantity;
  std::int64_t m = 0, h = 0, l = 0, n = 0;
  std::int64_t l_max = std::int64_t{1} << 16;
  double tol = 1e-10;
  double delta = 0.1;
};

struct WindingArgs {
  std::string regime;
  double logt = 25.0;
  std::int64_t n = 100000;
  std::int64_t samples = 100;
  double eps = 1.0;
  double m = 1.0;
  double censor_at = 4000.0;
};

struct ReportArgs {
  std::string out_dir;
  std::vector<std::string> only;
};

// Output sink: the --out file when given, standard output otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw CLI::ValidationError("--out", "cannot open " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// key=value lines; '#' starts a comment. Keys are long option names.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--config", path + ":" + std::to_string(lineno) + ": expected key=value");
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

// Applies config entries to options that were not given on the command line.
void apply_config(CLI::App& app, CLI::App* sub, const std::string& path) {
  for (const auto& [key, value] : read_config_file(path)) {
    if (key == "config") throw CLI::ValidationError("--config", "config files cannot nest");
    CLI::Option* opt = sub != nullptr ? sub->get_option_no_throw("--" + key) : nullptr;
    if (opt == nullptr) opt = app.get_option_no_throw("--" + key);
    if (opt == nullptr) throw CLI::ValidationError("--config", "unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    if (opt->get_expected_max() > 1) {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) opt->add_result(item);
    } else {
      opt->add_result(value);
    }
    opt->run_callback();
  }
}

void apply_env_seed(Global& g) {
  const char* env = std::getenv("REVWALK_SEED");
  if (env == nullptr || *env == '\0') return;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    g.seed = v;
  } catch (const std::exception&) {
    throw CLI::ValidationError("REVWALK_SEED", std::string("not an unsigned 64-bit integer: ") + env);
  }
}

Json global_json(const Global& g) { return Json{{"workers", g.workers}, {"out", g.out}}; }

// ---------------------------------------------------------------------------

int cmd_simulate(const Global& g, const SimulateArgs& a) {
  Json cfg = global_json(g);
  cfg["model"] = a.model;
  cfg["steps"] = a.steps;
  cfg["replicas"] = a.replicas;
  if (a.model == "g2") cfg["m"] = a.m;
  if (a.model == "sg") cfg["z"] = a.z;
  Sink sink(g.out);
  std::ostream& os = sink.os();
  os << revwalk::io::header("simulate", g.seed, cfg).dump() << '\n';
  const revwalk::RngStream base(g.seed, kSimulateStream);
  const auto n = static_cast<std::size_t>(a.replicas);

  if (a.model == "g2") {
    revwalk::io::CsvWriter csv(os, {"replica", "m", "epochs", "v1", "h1", "truncated", "steps_taken"});
    const auto traces = revwalk::run_replicas(n, g.workers, [&](std::size_t r) {
      revwalk::RngStream rng = base.substream(r);
      return walk::simulate_g2_ladder(a.m, a.steps, rng);
    });
    for (std::size_t r = 0; r < traces.size(); ++r) {
      const auto& t = traces[r];
      csv.cell(static_cast<std::int64_t>(r)).cell(a.m).cell(static_cast<std::int64_t>(t.entries.size()));
      if (!t.entries.empty()) {
        csv.cell(t.entries[0].v).cell(t.entries[0].h);
      } else {
        if (t.open_sigma_reached) csv.cell(t.open_v); else csv.empty();
        csv.empty();
      }
      csv.cell(t.truncated).cell(t.steps_taken);
      csv.end_row();
    }
  } else if (a.model == "g1") {
    revwalk::io::CsvWriter csv(os, {"replica", "n_vertical", "half_windings_started", "completed_windings", "xi_end", "s_end"});
    const auto rows = revwalk::run_replicas(n, g.workers, [&](std::size_t r) {
      revwalk::RngStream rng = base.substream(r);
      const auto sk = walk::simulate_g1(a.steps, rng);
      const auto w = walk::count_half_windings_g1(sk);
      return std::array<std::int64_t, 4>{w.half_windings_started, w.completed_windings, sk.xi.back(), sk.s.back()};
    });
    for (std::size_t r = 0; r < rows.size(); ++r) {
      csv.cell(static_cast<std::int64_t>(r)).cell(a.steps);
      for (auto v : rows[r]) csv.cell(v);
      csv.end_row();
    }
  } else {
    revwalk::io::CsvWriter csv(os, {"replica", "n", "z", "events", "widened_events", "winding_number"});
    const auto rows = revwalk::run_replicas(n, g.workers, [&](std::size_t r) {
      revwalk::RngStream rng = base.substream(r);
      return walk::sg_winding_stream(a.steps, a.z, rng);
    });
    for (std::size_t r = 0; r < rows.size(); ++r) {
      csv.cell(static_cast<std::int64_t>(r)).cell(a.steps).cell(a.z).cell(rows[r].events).cell(rows[r].widened_events);
      csv.cell(0.5 * static_cast<double>(rows[r].events));
      csv.end_row();
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

Json pmf_json(const revwalk::TruncatedPmf& p) {
  Json mass = Json::array();
  for (double v : p.mass) mass.push_back(v);
  return Json{{"support_lo", p.support_lo}, {"support_hi", p.support_hi}, {"tail_bound", p.tail_bound}, {"mass", mass}};
}

Json split_json(const ladder::ErrorSplit& e) {
  const bool f = e.kind == 'f';
  Json j;
  j["kind"] = f ? "R_f" : "R_g";
  j[f ? "m" : "h"] = e.argument;
  j["value"] = e.value;
  j["sum"] = e.sum;
  j["integral"] = e.integral;
  j["cutoff"] = e.cutoff;
  for (int k = 0; k < 4; ++k) j[(f ? "I" : "J") + std::to_string(k + 1)] = e.parts[k];
  return j;
}

Json exact_result(const ExactArgs& a, Json& cfg) {
  const auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw CLI::ValidationError("--quantity " + a.quantity, what);
  };
  const std::string& q = a.quantity;
  if (q == "pmh") {
    need(a.m >= 1 && a.h >= 1, "needs --m >= 1 and --h >= 1");
    cfg["m"] = a.m;
    cfg["h"] = a.h;
    const auto v = revwalk::p_mh(a.m, a.h, a.tol);
    return Json{{"quantity", q}, {"m", a.m}, {"h", a.h}, {"value", v.value}, {"error", v.error}};
  }
  if (q == "qhl") {
    need(a.h >= 1 && a.l >= 0, "needs --h >= 1 and --l >= 0");
    cfg["h"] = a.h;
    cfg["l"] = a.l;
    const auto v = revwalk::q_hl(a.h, a.l, a.tol);
    return Json{{"quantity", q}, {"h", a.h}, {"l", a.l}, {"value", v.value}, {"error", v.error}};
  }
  if (q == "h1law") {
    need(a.m >= 1 && a.l_max >= 1, "needs --m >= 1 and --l-max >= 1");
    cfg["m"] = a.m;
    cfg["l_max"] = a.l_max;
    Json j{{"quantity", q}, {"m", a.m}};
    j.update(pmf_json(ladder::h1_law(a.m, a.l_max, a.tol)));
    return j;
  }
  if (q == "drift") {
    need(a.m >= 3, "needs --m >= 3");
    cfg["m"] = a.m;
    cfg["delta"] = a.delta;
    Json j{{"quantity", q}};
    j.update(ladder::to_json(ladder::drift_report(a.m, a.delta, a.tol)));
    return j;
  }
  if (q == "return-prob") {
    need(a.n >= 1 && a.n <= revwalk::kBridgeCap, "needs 1 <= --n <= " + std::to_string(revwalk::kBridgeCap));
    cfg["n"] = a.n;
    const auto t = revwalk::return_prob_g1(a.n, std::min(a.tol, 1e-15));
    return Json{{"quantity", q}, {"n", a.n}, {"value", t.exact}, {"asymptote", t.asymptote}, {"ratio", t.ratio}};
  }
  // rfrg
  need(a.m >= 1 || a.h >= 1, "needs --m and/or --h");
  cfg["delta"] = a.delta;
  Json j{{"quantity", q}};
  if (a.m >= 1) {
    cfg["m"] = a.m;
    j["R_f"] = split_json(ladder::rf(a.m, a.delta, a.tol));
  }
  if (a.h >= 1) {
    cfg["h"] = a.h;
    j["R_g"] = split_json(ladder::rg(a.h, a.delta, a.tol));
  }
  return j;
}

int cmd_exact(const Global& g, const ExactArgs& a) {
  if (!(a.tol > 0.0)) throw CLI::ValidationError("--tol", "must be positive");
  Json cfg = global_json(g);
  cfg["quantity"] = a.quantity;
  cfg["tol"] = a.tol;
  Json result;
  int code = 0;
  try {
    result = exact_result(a, cfg);
  } catch (const revwalk::CertificationError& e) {
    result = Json{{"error", "certification"}, {"quantity", a.quantity}, {"message", e.what()}};
    code = kExitCertification;
  }
  Sink sink(g.out);
  sink.os() << revwalk::io::header("exact", g.seed, cfg).dump() << '\n' << result.dump() << '\n';
  return code;
}

// ---------------------------------------------------------------------------

int cmd_winding(const Global& g, const WindingArgs& a) {
  if (!(a.eps > 0.0)) throw CLI::ValidationError("--eps", "must be positive");
  Json cfg = global_json(g);
  cfg["regime"] = a.regime;
  cfg["samples"] = a.samples;
  const revwalk::RngStream base(g.seed, kWindingStream);
  const auto n = static_cast<std::size_t>(a.samples);
  std::ostringstream body;

  if (a.regime == "continuous") {
    if (!(a.logt > 0.0) || !(a.m > 0.0)) throw CLI::ValidationError("--logt/--m", "must be positive");
    const double scale = continuous::kWindingVariance / (a.logt * a.logt);
    const auto cap = static_cast<std::int64_t>(std::ceil(a.censor_at / scale)) + 1;
    cfg["logt"] = a.logt;
    cfg["eps"] = a.eps;
    cfg["m"] = a.m;
    cfg["sigma2"] = continuous::kWindingVariance;
    cfg["max_windings"] = cap;
    const auto rows = revwalk::run_replicas(n, g.workers, [&](std::size_t r) {
      revwalk::RngStream rng = base.substream(r);
      return continuous::stream_winding(a.m, a.logt, a.eps, rng, cap);
    });
    revwalk::io::CsvWriter csv(body, {"sample", "n_t", "n_star", "n_b", "value", "value_b", "censored"});
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& w = rows[r];
      csv.cell(static_cast<std::int64_t>(r)).cell(w.counts.n_t).cell(w.counts.n_star).cell(w.counts.n_b);
      csv.cell(scale * static_cast<double>(w.counts.n_t)).cell(scale * w.counts.n_b).cell(w.censored_t || w.censored_star);
      csv.end_row();
    }
  } else {
    if (a.n < 2) throw CLI::ValidationError("--n", "must be >= 2");
    cfg["n"] = a.n;
    const double log_n = std::log(static_cast<double>(a.n));
    revwalk::io::CsvWriter csv(body, {"sample", "half_windings_started", "winding_number", "value"});
    const auto rows = revwalk::run_replicas(n, g.workers, [&](std::size_t r) -> std::int64_t {
      revwalk::RngStream rng = base.substream(r);
      if (a.regime == "g1") return walk::count_half_windings_g1(walk::simulate_g1(a.n, rng)).half_windings_started;
      return walk::sg_winding_stream(a.n, 0, rng).events;
    });
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const double w = 0.5 * static_cast<double>(rows[r]);
      csv.cell(static_cast<std::int64_t>(r)).cell(rows[r]).cell(w).cell(w / log_n);
      csv.end_row();
    }
  }
  Sink sink(g.out);
  sink.os() << revwalk::io::header("winding", g.seed, cfg).dump() << '\n' << body.str();
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_report(const Global& g, const ReportArgs& a) {
  namespace acc = revwalk::acceptance;
  std::vector<std::string> ids = a.only.empty() ? acc::criterion_ids() : a.only;
  for (const auto& id : ids) {
    const auto& all = acc::criterion_ids();
    if (std::find(all.begin(), all.end(), id) == all.end())
      throw CLI::ValidationError("--only", "unknown criterion '" + id + "'");
  }
  Json cfg = global_json(g);
  cfg["suite"] = "acceptance";
  cfg["out_dir"] = a.out_dir;
  cfg["criteria"] = ids;
  const Json head = revwalk::io::header("report", g.seed, cfg);

  acc::Config ac;
  ac.seed = g.seed;
  ac.workers = g.workers;
  ac.progress = [](const std::string& s) { std::cerr << "[report] " << s << std::endl; };

  Json criteria = Json::array();
  std::ostringstream csv_body;
  revwalk::io::CsvWriter csv(csv_body, {"criterion", "statistic", "value", "threshold", "pass"});
  bool all_pass = true;
  for (const auto& id : ids) {
    const auto r = acc::run_criterion(id, ac);
    std::cerr << "[report] " << id << (r.pass() ? " PASS" : " FAIL") << " in " << r.seconds << " s" << std::endl;
    all_pass = all_pass && r.pass();
    criteria.push_back(acc::to_json(r));
    for (const auto& c : r.checks) {
      csv.cell(id).cell(c.statistic).cell(c.value).cell(c.threshold).cell(c.pass);
      csv.end_row();
    }
  }
  Json report;
  report["header"] = head;
  report["pass"] = all_pass;
  report["criteria"] = criteria;

  std::filesystem::create_directories(a.out_dir);
  const auto dir = std::filesystem::path(a.out_dir);
  {
    std::ofstream js(dir / "report.json", std::ios::binary);
    js << report.dump(2) << '\n';
  }
  {
    std::ofstream cs(dir / "report.csv", std::ios::binary);
    cs << head.dump() << '\n' << csv_body.str();
  }
  Sink sink(g.out);
  sink.os() << head.dump() << '\n';
  for (const auto& c : criteria) sink.os() << Json{{"id", c["id"]}, {"pass", c["pass"]}}.dump() << '\n';
  return all_pass ? 0 : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random walks on oriented planar lattices: simulation, exact laws and acceptance checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "64-bit seed (REVWALK_SEED overrides)");
  app.add_option("--workers", g.workers, "worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output file (default: standard output)");
  app.add_option("--config", g.config_file, "key=value file; command-line flags take precedence");

  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "simulate replicas and emit one CSV row each");
  sim->add_option("--model", sa.model, "g1, g2 or sg")->check(CLI::IsMember({"g1", "g2", "sg"}));
  sim->add_option("--steps", sa.steps, "steps (g2, sg) or vertical steps (g1)")->check(CLI::PositiveNumber);
  sim->add_option("--replicas", sa.replicas, "number of replicas")->check(CLI::NonNegativeNumber);
  sim->add_option("--m", sa.m, "g2 start (-m, 0)")->check(CLI::PositiveNumber);
  sim->add_option("--z", sa.z, "sg start level G_0 = 2z");

  ExactArgs ea;
  auto* ex = app.add_subcommand("exact", "certified exact quantity as JSON");
  ex->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  ex->add_option("--quantity", ea.quantity, "pmh, qhl, h1law, drift, return-prob or rfrg")
      ->check(CLI::IsMember({"pmh", "qhl", "h1law", "drift", "return-prob", "rfrg"}));
  ex->add_option("--m", ea.m, "starting distance m");
  ex->add_option("--h", ea.h, "height h");
  ex->add_option("--l", ea.l, "ladder height l");
  ex->add_option("--n", ea.n, "bridge half-length n");
  ex->add_option("--l-max", ea.l_max, "listed range of the H_1 law");
  ex->add_option("--tol", ea.tol, "certified error budget (> 0)");
  ex->add_option("--delta", ea.delta, "cutoff exponent for the error splits");

  WindingArgs wa;
  auto* wi = app.add_subcommand("winding", "normalised winding statistics as CSV");
  wi->add_option("--regime", wa.regime, "continuous, g1 or sg")->check(CLI::IsMember({"continuous", "g1", "sg"}));
  wi->add_option("--logt", wa.logt, "log t (continuous)");
  wi->add_option("--n", wa.n, "path length (g1: vertical steps, sg: steps)");
  wi->add_option("--samples", wa.samples, "number of paths")->check(CLI::NonNegativeNumber);
  wi->add_option("--eps", wa.eps, "big-winding threshold (default 1)");
  wi->add_option("--m", wa.m, "starting height (continuous)");
  wi->add_option("--censor-at", wa.censor_at, "normalised value beyond which a path is censored");

  ReportArgs ra;
  auto* re = app.add_subcommand("report", "run the acceptance suite");
  re->add_option("--out-dir", ra.out_dir, "directory for report.json and report.csv")->required();
  re->add_option("--only", ra.only, "criteria to run, e.g. c1,c8")->delimiter(',');

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    if (!g.config_file.empty()) apply_config(app, sub, g.config_file);
    apply_env_seed(g);
    if (sub == sim && sa.model.empty()) throw CLI::RequiredError("--model");
    if (sub == ex && ea.quantity.empty()) throw CLI::RequiredError("--quantity");
    if (sub == wi && wa.regime.empty()) throw CLI::RequiredError("--regime");
    if (sub == sim) return cmd_simulate(g, sa);
    if (sub == ex) return cmd_exact(g, ea);
    if (sub == wi) return cmd_winding(g, wa);
    return cmd_report(g, ra);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const revwalk::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const revwalk::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    return kExitCertification;
  } catch (const revwalk::InsufficientPathError& e) {
    std::cerr << "insufficient path: " << e.what() << '\n';
    return kExitCertification;
  }
}
