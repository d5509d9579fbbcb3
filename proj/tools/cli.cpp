// Copyright 2026 The telematch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "telematch/channel.hpp"
#include "telematch/errors.hpp"
#include "telematch/literals.hpp"
#include "telematch/measurement.hpp"
#include "telematch/montecarlo.hpp"
#include "telematch/numfmt.hpp"
#include "telematch/protocol.hpp"

namespace telematch::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 42;
const std::string kDefaultAmplitude = "0.7071067811865476";

struct Options {
  std::string channel;
  std::string basis = "bell";
  std::string alpha = kDefaultAmplitude;
  std::string beta = kDefaultAmplitude;
  std::string k = "max";
  std::uint64_t trials = 100000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  int steps = 0;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  std::string out_path;
  std::string format = "text";
};

// Thrown for argument problems detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool csv(const Options& o) { return o.format == "csv"; }

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

std::string policy_name(const KPolicy& p) {
  if (const auto* f = std::get_if<FixedK>(&p)) return "fixed K=" + format_real(f->k);
  if (std::holds_alternative<MaxGlobal>(p)) return "max (largest K valid for every outcome)";
  return "per-outcome (each outcome's own largest K)";
}

std::string basis_name(const TwoQubitBasis& b) {
  if (b.kind() == BasisKind::StandardBell) return "bell";
  return "gbm a'=" + format_real(b.a_prime()) + " b'=" + format_real(b.b_prime());
}

std::uint64_t resolve_seed(const Options& o, const Environment& env) {
  if (o.seed) return *o.seed;
  if (env.seed && !env.seed->empty()) {
    std::uint64_t v = 0;
    const std::string& s = *env.seed;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw UsageError("TELEMATCH_SEED is not an unsigned 64-bit integer: '" + s + "'");
    }
    return v;
  }
  return kDefaultSeed;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const TwoQubitChannel ch = parse_channel(o.channel);
  const CMatrix x = cpm(ch).matrix;
  const double det = std::abs(determinant2(x));
  const ChannelClass cls = classify(ch);
  const double c = concurrence(ch);
  if (csv(o)) {
    out << "x_00,x_01,x_10,x_11,abs_det,class,concurrence\n";
    out << join({format_complex(x(0, 0)), format_complex(x(0, 1)), format_complex(x(1, 0)),
                 format_complex(x(1, 1)), format_real(det), std::string(to_string(cls)),
                 format_real(c)})
        << '\n';
    return kOk;
  }
  out << "channel: x00=" << format_complex(ch.x00()) << " x01=" << format_complex(ch.x01())
      << " x10=" << format_complex(ch.x10()) << " x11=" << format_complex(ch.x11()) << '\n';
  out << "channel parameter matrix X:\n";
  for (std::size_t r = 0; r < 2; ++r) {
    out << "  [ " << format_complex(x(r, 0)) << ", " << format_complex(x(r, 1)) << " ]\n";
  }
  out << "|det X|: " << format_real(det) << '\n';
  out << "class: " << to_string(cls) << '\n';
  out << "concurrence: " << format_real(c) << '\n';
  return kOk;
}

void print_report(std::ostream& out, std::string_view title, const ProtocolReport& r) {
  out << title << '\n';
  out << "  " << std::left << std::setw(8) << "lambda" << std::setw(20) << "K" << std::setw(20)
      << "P_A" << std::setw(20) << "P_B" << std::setw(20) << "P_AB" << "fidelity\n";
  for (const auto& o : r.outcomes) {
    out << "  " << std::setw(8) << o.lam << std::setw(20) << format_real(o.k_used)
        << std::setw(20) << format_real(o.p_alice) << std::setw(20) << format_real(o.p_bob)
        << std::setw(20) << format_real(o.p_joint) << format_real(o.fidelity) << '\n';
  }
  out << "  total = " << format_real(r.total) << '\n';
}

int cmd_run(const Options& o, std::ostream& out) {
  const TwoQubitChannel ch = parse_channel(o.channel);
  const TwoQubitBasis basis = parse_basis(o.basis);
  const KPolicy policy = parse_k_policy(o.k);
  const PureInputState input = parse_input_state(o.alpha, o.beta);
  const ProtocolReport analytic = analytic_report(input, ch, basis, policy);
  const ProtocolReport simulated = simulate_report(input, ch, basis, policy);
  const double diff = max_abs_diff(analytic, simulated);

  if (csv(o)) {
    std::vector<std::string> header{"analytic_total", "simulated_total", "max_abs_diff"};
    std::vector<std::string> row{format_real(analytic.total), format_real(simulated.total),
                                 format_real(diff)};
    const std::pair<const char*, std::function<double(const OutcomeReport&)>> cols[] = {
        {"k", [](const OutcomeReport& r) { return r.k_used; }},
        {"p_alice", [](const OutcomeReport& r) { return r.p_alice; }},
        {"p_bob", [](const OutcomeReport& r) { return r.p_bob; }},
        {"p_joint", [](const OutcomeReport& r) { return r.p_joint; }},
    };
    for (const auto& [name, get] : cols) {
      for (const auto& rep : analytic.outcomes) {
        header.push_back(std::string(name) + "_" + std::to_string(rep.lam));
        row.push_back(format_real(get(rep)));
      }
    }
    for (const auto& rep : simulated.outcomes) {
      header.push_back("fidelity_" + std::to_string(rep.lam));
      row.push_back(format_real(rep.fidelity));
    }
    out << join(header) << '\n' << join(row) << '\n';
    return kOk;
  }
  out << "channel: " << o.channel << " (" << to_string(classify(ch)) << ")\n";
  out << "basis: " << basis_name(basis) << '\n';
  out << "K policy: " << policy_name(policy) << '\n';
  out << "input: alpha=" << format_complex(input.alpha())
      << " beta=" << format_complex(input.beta()) << "\n\n";
  print_report(out, "analytic", analytic);
  print_report(out, "simulated", simulated);
  out << "max |analytic - simulated| = " << format_real(diff) << '\n';
  out << "note: the total success probability does not depend on alpha and beta\n";
  return kOk;
}

int cmd_montecarlo(const Options& o, std::ostream& out, const Environment& env) {
  if (o.trials == 0) throw UsageError("--trials must be at least 1");
  const std::uint64_t seed = resolve_seed(o, env);
  const TwoQubitChannel ch = parse_channel(o.channel);
  const TwoQubitBasis basis = parse_basis(o.basis);
  const KPolicy policy = parse_k_policy(o.k);
  const PureInputState input = parse_input_state(o.alpha, o.beta);
  const double analytic = analytic_report(input, ch, basis, policy).total;
  const EmpiricalReport emp = monte_carlo(input, ch, basis, policy, o.trials, seed, o.threads);
  const double z = z_score(analytic, emp);
  if (csv(o)) {
    out << "analytic,empirical,stderr,z,trials,successes,seed\n";
    out << join({format_real(analytic), format_real(emp.estimate),
                 format_real(emp.standard_error), format_real(z), std::to_string(emp.trials),
                 std::to_string(emp.successes), std::to_string(seed)})
        << '\n';
    return kOk;
  }
  out << "analytic total: " << format_real(analytic) << '\n';
  out << "empirical total: " << format_real(emp.estimate) << " (" << emp.successes << " / "
      << emp.trials << ")\n";
  out << "standard error: " << format_real(emp.standard_error) << '\n';
  out << "z-score: " << format_real(z) << '\n';
  out << "seed: " << seed << '\n';
  for (std::size_t i = 0; i < 4; ++i) {
    out << "  lambda " << i + 1 << ": outcomes " << emp.outcome_counts[i] << ", successes "
        << emp.success_counts[i] << '\n';
  }
  return kOk;
}

std::vector<double> grid(double from, double to, int steps) {
  if (steps < 1 || !(from <= to)) throw UsageError("empty sweep grid");
  if (steps == 1) {
    if (from != to) throw UsageError("a one-point sweep needs --from equal to --to");
    return {from};
  }
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    g.push_back(i == steps - 1 ? to : from + (to - from) * i / (steps - 1));
  }
  return g;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const std::vector<double> points = grid(o.from, o.to, o.steps);
  const TwoQubitBasis basis = parse_basis(o.basis);
  const PureInputState input = parse_input_state(o.alpha, o.beta);

  struct Row {
    double param, analytic, simulated;
  };
  std::vector<Row> rows;
  rows.reserve(points.size());
  try {
    if (o.param == "k") {
      if (!(o.from > 0.0)) throw UsageError("K grid must be positive");
      const TwoQubitChannel ch = parse_channel(o.channel);
      for (double k : points) {
        const KPolicy p = FixedK{k};
        rows.push_back({k, analytic_report(input, ch, basis, p).total,
                        simulate_report(input, ch, basis, p).total});
      }
    } else {
      if (!(o.from > 0.0) || !(o.to < 1.0)) throw UsageError("b grid must lie in (0, 1)");
      const KPolicy policy = parse_k_policy(o.k);
      for (double b : points) {
        const auto ch = TwoQubitChannel::diagonal(std::sqrt(1.0 - b * b), b);
        rows.push_back({b, analytic_report(input, ch, basis, policy).total,
                        simulate_report(input, ch, basis, policy).total});
      }
    }
  } catch (const telematch::Error& e) {
    // Any domain failure on a grid point means the grid bounds were invalid.
    throw UsageError(std::string("sweep grid leaves the valid domain: ") + e.what());
  }

  if (csv(o)) {
    out << "param,analytic_total,simulated_total\n";
    for (const auto& r : rows) {
      out << join({format_real(r.param), format_real(r.analytic), format_real(r.simulated)})
          << '\n';
    }
    return kOk;
  }
  out << "sweep over " << o.param << " (basis " << basis_name(basis) << ")\n";
  out << std::left << std::setw(22) << o.param << std::setw(22) << "analytic total"
      << "simulated total\n";
  for (const auto& r : rows) {
    out << std::setw(22) << format_real(r.param) << std::setw(22) << format_real(r.analytic)
        << format_real(r.simulated) << '\n';
  }
  return kOk;
}

void write_fig1(std::ostream& os, int steps) {
  os << "b,p_opt,p_k1,p_ksqrt2\n";
  for (const auto& r : fig1_data(steps)) {
    os << join({format_real(r.b), format_real(r.p_opt), format_real(r.p_k1),
                format_real(r.p_ksqrt2)})
       << '\n';
  }
}

int cmd_fig1(const Options& o, std::ostream& out) {
  if (o.steps < 2) throw UsageError("--steps must be at least 2");
  if (o.out_path.empty()) {
    write_fig1(out, o.steps);
    return kOk;
  }
  std::ofstream file(o.out_path);
  if (!file) throw UsageError("cannot open '" + o.out_path + "' for writing");
  write_fig1(file, o.steps);
  file.flush();
  if (!file) throw UsageError("failed writing '" + o.out_path + "'");
  return kOk;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
}

void add_protocol_flags(CLI::App* cmd, Options& o, bool channel_required) {
  auto* ch = cmd->add_option("--channel", o.channel,
                             "Channel: 'x00,x01,x10,x11' or 'diag:a,b'; entries 're' or "
                             "'re+imi'");
  if (channel_required) ch->required();
  cmd->add_option("--basis", o.basis, "Alice's basis: 'bell' or 'gbm:a',b''")
      ->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Input amplitude of |0>")->capture_default_str();
  cmd->add_option("--beta", o.beta, "Input amplitude of |1>")->capture_default_str();
  cmd->add_option("--k", o.k, "Matching coefficient: a real, 'max' or 'per-outcome'")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  Options o;
  CLI::App app{"Probabilistic teleportation with entanglement-matched unitaries", "telematch"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Classify a channel and report its CPM");
  analyze->add_option("--channel", o.channel, "Channel literal")->required();
  add_format(analyze, o);

  auto* run_cmd = app.add_subcommand("run", "Analytic and simulated protocol reports");
  add_protocol_flags(run_cmd, o, true);
  add_format(run_cmd, o);

  auto* mc = app.add_subcommand("montecarlo", "Monte Carlo estimate of the success probability");
  add_protocol_flags(mc, o, true);
  mc->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  mc->add_option("--seed", o.seed, "RNG seed (falls back to TELEMATCH_SEED, then 42)");
  mc->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_format(mc, o);

  auto* sweep = app.add_subcommand("sweep", "Total success probability over a grid of K or b");
  add_protocol_flags(sweep, o, false);
  sweep->add_option("--param", o.param, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"k", "b"}));
  sweep->add_option("--from", o.from, "First grid value")->required();
  sweep->add_option("--to", o.to, "Last grid value")->required();
  sweep->add_option("--steps", o.steps, "Number of grid points")->required();
  add_format(sweep, o);

  auto* fig1 = app.add_subcommand("fig1", "CSV of optimal vs K=1 vs K=sqrt(2) probabilities");
  o.steps = 101;
  fig1->add_option("--steps", o.steps, "Number of b values")->capture_default_str();
  fig1->add_option("--out", o.out_path, "Output CSV path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*run_cmd) return cmd_run(o, out);
    if (*mc) return cmd_montecarlo(o, out, env);
    if (*sweep) {
      if (o.param == "k" && o.channel.empty()) throw UsageError("--param k needs --channel");
      return cmd_sweep(o, out);
    }
    if (*fig1) return cmd_fig1(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidValue& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const telematch::Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace telematch::cli
