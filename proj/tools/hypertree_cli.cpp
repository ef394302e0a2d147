// Command-line surface: enumerate, sample, verify, linkgraph, spectral.
// Outputs are deterministic given (command, seed, version); complex
// streams are line-delimited JSON records, graphs are "u v" edge lists.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "hypertrees/coupling.hpp"
#include "hypertrees/errors.hpp"
#include "hypertrees/homology.hpp"
#include "hypertrees/io.hpp"
#include "hypertrees/measure.hpp"
#include "hypertrees/sampler.hpp"
#include "hypertrees/spectral.hpp"
#include "hypertrees/version.hpp"

using namespace hypertrees;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// data sink: --out file, else stdout
struct Output {
  std::ofstream file;
  bool to_file = false;

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::invalid_argument("cannot open output file: " + path);
      to_file = true;
    }
  }
  std::ostream& stream() { return to_file ? static_cast<std::ostream&>(file) : std::cout; }
  // status lines go to stdout unless that is the data channel
  std::ostream& status() { return to_file ? std::cout : std::cerr; }
};

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos)
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  if (text.find('.') != std::string::npos) {
    // exact decimal: a.b -> (a*10^len + b) / 10^len
    const std::string digits = text.substr(0, text.find('.')) + text.substr(text.find('.') + 1);
    const unsigned long frac = text.size() - text.find('.') - 1;
    return Rational(Integer(digits), int_pow(Integer(10), frac));
  }
  return Rational(Integer(text));
}

int cmd_enumerate(int n, int k, double budget, const std::string& out_path) {
  Output out(out_path);
  trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer& tor) {
    out.stream() << io::tree_record(t, tor) << '\n';
  });
  const auto v = measure::kalai_sum_verify(n, k, budget);
  out.status() << "kalai-sum: " << v.det_route << " = " << v.cauchy_binet_route << " = "
               << v.torsion_route << (v.equal ? "" : "  MISMATCH") << '\n';
  return v.equal ? kExitOk : kExitVerifyFailure;
}

int cmd_sample(int n, int k, std::size_t count, std::uint64_t seed, const std::string& method,
               const std::string& out_path) {
  Output out(out_path);
  const auto records =
      measure::sample_many(n, k, seed, count, measure::method_from_name(method));
  for (const auto& rec : records) out.stream() << io::sample_record(rec) << '\n';
  return kExitOk;
}

int cmd_linkgraph(int n, int k, int m, std::uint64_t seed, const std::string& out_path) {
  Output out(out_path);
  io::write_edge_list(out.stream(), spectral::sample_link_union(n, k, m, seed));
  return kExitOk;
}

struct VerifySink {
  std::vector<io::VerifyRecord> records;
  bool all_pass = true;

  void add(io::VerifyRecord rec, std::ostream& console) {
    console << (rec.pass ? "PASS " : "FAIL ") << rec.identity << " (n=" << rec.n
            << ", k=" << rec.k;
    if (rec.j >= 0) console << ", j=" << rec.j;
    console << "): " << rec.detail << '\n';
    all_pass = all_pass && rec.pass;
    records.push_back(std::move(rec));
  }
};

int cmd_verify(const std::string& suite, int n, int k, int j, double budget,
               const std::string& out_path) {
  Output out(out_path);
  std::ostream& console = out.to_file ? std::cout : std::cout;
  VerifySink sink;

  auto record = [&](const std::string& identity, bool pass, const std::string& detail,
                    int jj = -1) {
    io::VerifyRecord rec;
    rec.identity = identity;
    rec.n = n;
    rec.k = k;
    rec.j = jj;
    rec.pass = pass;
    rec.detail = detail;
    sink.add(std::move(rec), console);
  };

  if (suite == "kalai-sum") {
    const auto v = measure::kalai_sum_verify(n, k, budget);
    std::ostringstream d;
    d << v.det_route << " = " << v.cauchy_binet_route << " = " << v.torsion_route;
    record("kalai-sum", v.equal, d.str());
  } else if (suite == "hodge") {
    bool all = true;
    for (int kk = 0; kk <= n - 1; ++kk) all = all && homology::hodge_check(n, kk);
    record("hodge", all, "exact for all 0 <= k <= n-1");
  } else if (suite == "euler") {
    bool all = true;
    std::size_t count = 0;
    trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer&) {
      all = all && homology::euler_check(t);
      ++count;
    });
    record("euler", all, std::to_string(count) + " hypertrees checked");
  } else if (suite == "submain-bijection") {
    const auto rep = trees::submain_check(n, k, budget);
    std::ostringstream d;
    d << rep.tree_count << " trees vs " << rep.rooted_forest_count << " rooted forests";
    record("submain-bijection", rep.ok(), d.str());
  } else if (suite == "split") {
    const auto rep = coupling::split_identity_check(n, k, budget);
    record("split", rep.ok(), std::to_string(rep.pairs_checked) + " pairs checked");
  } else if (suite == "bridge") {
    const auto km1 = all_faces(n, k - 1);
    const auto kf = all_faces(n, k);
    std::vector<Face> a{km1.front()};
    if (km1.size() > 2) a.push_back(km1[2]);
    std::vector<Face> b{kf.front()};
    if (kf.size() > 1) b.push_back(kf[1]);
    const auto rep = measure::bridge_check(n, k, a, b, budget);
    std::ostringstream d;
    d << "Q-minor " << rep.q_minor << " vs sum " << rep.q_sum << "; P-minor " << rep.p_minor
      << " vs sum " << rep.p_sum;
    record("bridge", rep.ok(), d.str());
  } else if (suite == "incr") {
    const auto rep = coupling::incr_identity_check(n, k, budget);
    record("incr", rep.ok(), rep.ok() ? "both displays exact" : "identity violated");
  } else if (suite == "link-law") {
    record("link-law", coupling::link_law_check(n, k, budget), "pushforward vs model table");
  } else if (suite == "proj-law") {
    record("proj-law", coupling::proj_law_check(n, k, budget), "pushforward vs model table");
  } else if (suite == "simplex-link") {
    if (j < 1) throw std::invalid_argument("simplex-link requires --j >= 1");
    record("simplex-link", coupling::simplex_link_law_check(n, k, j, budget),
           "pushforward vs model table", j);
  } else if (suite == "coupling-joint") {
    const auto rep = coupling::CouplingLab(n, k, budget).verify();
    std::ostringstream d;
    d << "marginals " << (rep.joint_marginals_ok ? "ok" : "BAD") << ", support event "
      << (rep.support_event_ok ? "a.s." : "BAD") << ", cond. independence "
      << (rep.conditional_independence_ok ? "ok" : "BAD");
    record("coupling-joint", rep.ok(), d.str());
  } else if (suite == "negassoc") {
    const auto rep = measure::negative_association_check(n, k, budget);
    record("negassoc", rep.ok && rep.minors_agree,
           std::to_string(rep.pairs_checked) + " face pairs, exact");
  } else {
    throw std::invalid_argument("unknown verify suite: " + suite);
  }

  if (out.to_file)
    for (const auto& rec : sink.records) out.stream() << io::verify_record(rec) << '\n';
  return sink.all_pass ? kExitOk : kExitVerifyFailure;
}

struct SpectralArgs {
  std::string input;
  int n = 0, k = 2, m = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool er = false;
  std::string p_text;
  bool garland = false, zuk = false;
  bool do_sweep = false;
  std::vector<int> grid_n, grid_m;
  std::vector<std::string> grid_p;
  int runs = 1;
  std::string out_path;
};

void print_spectral_report(std::ostream& os, const spectral::SpectralReport& rep) {
  std::ostringstream line;
  line.precision(17);
  line << "{\"lambda2\":" << rep.lambda2 << ",\"min_degree\":" << rep.min_degree
       << ",\"avg_degree\":" << rep.avg_degree
       << ",\"connected\":" << (rep.connected ? "true" : "false")
       << ",\"residual\":" << rep.residual << ",\"iterations\":" << rep.iterations << "}";
  os << line.str() << '\n';
}

int cmd_spectral(const SpectralArgs& args) {
  Output out(args.out_path);

  if (args.do_sweep) {
    spectral::SweepConfig cfg;
    cfg.n_values = args.grid_n;
    cfg.k = args.k;
    cfg.runs = args.runs;
    cfg.seed = args.seed;
    const bool er = !args.grid_p.empty();
    if (er) {
      cfg.generator = spectral::SweepConfig::Generator::erdos_renyi;
      for (const auto& t : args.grid_p) cfg.p_values.push_back(parse_rational(t));
    } else {
      cfg.generator = spectral::SweepConfig::Generator::link_union;
      cfg.m_values = args.grid_m;
    }
    const auto rows = spectral::sweep(cfg);
    out.stream() << io::sweep_csv_header(er) << '\n';
    for (const auto& row : rows) out.stream() << io::sweep_csv_row(row, er) << '\n';
    return kExitOk;
  }

  if (args.garland || args.zuk) {
    std::ifstream in(args.input);
    if (!in) throw std::invalid_argument("cannot open complex input: " + args.input);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Complex x = io::parse_complex_record(line);
      if (args.garland) {
        const auto rep = spectral::garland_report(x);
        std::ostringstream os;
        os.precision(17);
        os << "{\"eps_star\":" << rep.eps_star << ",\"bound\":" << rep.bound
           << ",\"vacuous\":" << (rep.vacuous ? "true" : "false") << ",\"actual\":";
        if (rep.actual_gap)
          os << *rep.actual_gap;
        else
          os << "null";
        os << ",\"consistent\":" << (rep.consistent ? "true" : "false") << "}";
        out.stream() << os.str() << '\n';
      }
      if (args.zuk) {
        const auto rep = spectral::zuk_report(x);
        std::ostringstream os;
        os.precision(17);
        os << "{\"verdict\":" << (rep.verdict ? "true" : "false") << ",\"links\":[";
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
          const auto& row = rep.rows[i];
          os << (i ? "," : "") << "{\"vertex\":" << row.vertex
             << ",\"connected\":" << (row.connected ? "true" : "false")
             << ",\"lambda0\":" << row.lambda0 << "}";
        }
        os << "]}";
        out.stream() << os.str() << '\n';
      }
    }
    return kExitOk;
  }

  spectral::Graph g(0);
  if (!args.input.empty()) {
    if (args.input == "-") {
      g = io::read_edge_list(std::cin);
    } else {
      std::ifstream in(args.input);
      if (!in) throw std::invalid_argument("cannot open graph input: " + args.input);
      g = io::read_edge_list(in);
    }
  } else if (args.er) {
    if (!args.seed_set) throw std::invalid_argument("--seed is required for generators");
    g = spectral::er_baseline(args.n, parse_rational(args.p_text), args.seed);
  } else {
    if (!args.seed_set) throw std::invalid_argument("--seed is required for generators");
    g = spectral::sample_link_union(args.n, args.k, args.m, args.seed);
  }
  print_spectral_report(out.stream(), spectral::lambda2(g));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"determinantal hypertree measures, homological tree calculus, and "
               "spectral-gap experiments"};
  app.set_version_flag("--version", std::string("hypertree ") + kVersion);
  app.require_subcommand(1);

  int n = 0, k = 0, m = 1, j = -1;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  double budget = 1e7;
  std::string method = "exact", out_path, suite;

  auto* enumerate = app.add_subcommand("enumerate", "emit all hypertrees with torsion");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--budget", budget);
  enumerate->add_option("--out", out_path);

  auto* sample = app.add_subcommand("sample", "draw from nu_{n,k}");
  sample->add_option("--n", n)->required();
  sample->add_option("--k", k)->required();
  sample->add_option("--count", count);
  sample->add_option("--seed", seed)->required();
  sample->add_option("--method", method)->check(CLI::IsMember({"exact", "float", "ust"}));
  sample->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "machine-check a paper identity");
  verify
      ->add_option("suite", suite,
                   "one of: kalai-sum, hodge, euler, submain-bijection, split, bridge, "
                   "incr, link-law, proj-law, simplex-link, coupling-joint, negassoc")
      ->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--k", k);
  verify->add_option("--j", j);
  verify->add_option("--budget", budget);
  verify->add_option("--out", out_path);

  auto* linkgraph = app.add_subcommand("linkgraph", "emit an L_m^{k,k-1}(n) edge list");
  linkgraph->add_option("--n", n)->required();
  linkgraph->add_option("--k", k)->required();
  linkgraph->add_option("--m", m)->required();
  linkgraph->add_option("--seed", seed)->required();
  linkgraph->add_option("--out", out_path);

  SpectralArgs sargs;
  auto* spectral_cmd =
      app.add_subcommand("spectral", "lambda2 reports, garland/zuk tables, sweeps");
  spectral_cmd->add_option("--input", sargs.input, "edge list file, or - for stdin");
  spectral_cmd->add_option("--n", sargs.n);
  spectral_cmd->add_option("--k", sargs.k);
  spectral_cmd->add_option("--m", sargs.m);
  auto* seed_opt = spectral_cmd->add_option("--seed", sargs.seed);
  spectral_cmd->add_flag("--er", sargs.er, "Erdos-Renyi generator");
  spectral_cmd->add_option("--p", sargs.p_text, "edge probability (rational or decimal)");
  spectral_cmd->add_flag("--garland", sargs.garland, "complex input: Garland report");
  spectral_cmd->add_flag("--zuk", sargs.zuk, "complex input: Zuk criterion table");
  spectral_cmd->add_flag("--sweep", sargs.do_sweep);
  spectral_cmd->add_option("--grid-n", sargs.grid_n)->delimiter(',');
  spectral_cmd->add_option("--grid-m", sargs.grid_m)->delimiter(',');
  spectral_cmd->add_option("--grid-p", sargs.grid_p)->delimiter(',');
  spectral_cmd->add_option("--runs", sargs.runs);
  spectral_cmd->add_option("--out", sargs.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(n, k, budget, out_path);
    if (sample->parsed()) return cmd_sample(n, k, count, seed, method, out_path);
    if (verify->parsed()) return cmd_verify(suite, n, k, j, budget, out_path);
    if (linkgraph->parsed()) return cmd_linkgraph(n, k, m, seed, out_path);
    if (spectral_cmd->parsed()) {
      sargs.seed_set = seed_opt->count() > 0;
      return cmd_spectral(sargs);
    }
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << " (required " << e.required
              << ", budget " << e.budget << ")\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
