// Copyright 2026 The hladder Authors
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

#include "cli.h"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hladder/factories.h"
#include "hladder/family.h"
#include "hladder/ladder.h"
#include "hladder/noise.h"
#include "hladder/rng.h"
#include "hladder/study.h"
#include "hladder/synthesis.h"

namespace hladder {

namespace {

std::string num(double x, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

struct Common {
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

struct AnglesArgs {
  std::string family = "H";
  int max = -1;
};

void cmd_angles(const AnglesArgs& a, std::ostream& out) {
  out << "family,level,theta,two_theta\n";
  for (Family f : parse_family_list(a.family)) {
    const int max = a.max >= 0 ? a.max : (f == Family::kH ? 16 : 8);
    if (max > kMaxLevel) throw std::invalid_argument("--max exceeds " + std::to_string(kMaxLevel));
    for (int i = 0; i <= max; ++i) {
      const double t = ladder_angle(f, i);
      out << family_name(f) << ',' << i << ',' << num(t) << ',' << num(2 * t) << '\n';
    }
  }
}

struct ClimbArgs {
  std::string family = "H";
  int level = 1;
  std::size_t runs = 10000;
};

void cmd_climb(const ClimbArgs& a, const Common& c, std::ostream& out) {
  const Family f = parse_family(a.family);
  if (a.level < 0 || a.level > kMaxLevel) throw std::invalid_argument("--level outside [0, 150]");
  if (a.runs < 2) throw std::invalid_argument("--runs must be at least 2");
  const double oracle = expected_climb_cost(f, a.level);
  double sum = 0, sq = 0;
  for (std::size_t r = 0; r < a.runs; ++r) {
    Rng rng = Rng::substream(c.seed, r);
    const double cost = simulate_climb(f, a.level, rng).offline_cost(f);
    sum += cost;
    sq += cost * cost;
  }
  const double n = static_cast<double>(a.runs);
  const double mean = sum / n;
  const double se = std::sqrt(std::max(0.0, sq / n - mean * mean) / (n - 1));
  out << "family " << family_name(f) << "\nlevel " << a.level << "\nrotation_angle " << num(rotation_angle(f, a.level))
      << "\nexpected_cost " << num(oracle) << "\nsimulated_mean " << num(mean, 8) << "\nstandard_error "
      << num(se, 4) << "\nruns " << a.runs << '\n';
}

struct FactoryArgs {
  std::string kind = "all";
};

int cmd_factory(const FactoryArgs& a, std::ostream& out) {
  std::vector<Family> kinds;
  for (Family f : parse_family_list(a.kind)) {
    if (f != Family::kH) kinds.push_back(f);
  }
  if (kinds.empty()) throw std::invalid_argument("--kind must name psi0, psi1 or psi2");
  bool all_ok = true;
  for (Family f : kinds) {
    const FactoryReport r = verify_factory_against_code(f);
    out << "[" << family_name(f) << "]\n"
        << "success_prob_circuit " << num(r.circuit_prob) << '\n'
        << "success_prob_projector " << num(r.projector_prob) << '\n'
        << "success_prob_closed_form " << num(r.closed_form_prob) << '\n'
        << "average_cost " << num(factory_average_cost(f)) << '\n'
        << "state_angle " << num(r.circuit_angle) << '\n'
        << "decoded_angle " << num(r.decoded_angle) << '\n'
        << "rotation_angle " << num(2 * r.circuit_angle) << '\n'
        << "verified " << (r.ok() ? "yes" : "no") << '\n';
    for (const auto& msg : r.failures) out << "failure " << msg << '\n';
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 1;
}

struct SynthArgs {
  double target = 0;
  double eps = 1e-6;
  std::string families = "H";
  int max_level = -1;
  bool no_clifford = false;
  bool sequence = false;
};

void print_result(const SynthesisResult& r, bool sequence, std::ostream& out) {
  out << "target " << num(r.target) << "\nonline " << r.online_cost << "\noffline " << num(r.offline_cost)
      << "\nresidual " << num(r.residual) << "\nclifford_corrections " << r.clifford_corrections << '\n';
  if (!sequence) return;
  for (const auto& s : r.applied) {
    out << "rotation " << family_name(s.family) << ' ' << s.level << ' ' << (s.sign > 0 ? '+' : '-') << '\n';
  }
  for (const auto& u : r.ancilla_uses) out << "ancilla " << num(u.angle) << ' ' << (u.sign > 0 ? '+' : '-') << '\n';
}

SynthesisConfig synth_config(const SynthArgs& a, const Common& c) {
  SynthesisConfig config;
  config.epsilon = a.eps;
  config.families = parse_family_list(a.families);
  config.max_level = a.max_level;
  config.free_clifford_reduction = !a.no_clifford;
  config.master_seed = c.seed;
  config.validate();
  return config;
}

void cmd_synth(const SynthArgs& a, const Common& c, bool min_online, std::ostream& out) {
  const SynthesisConfig config = synth_config(a, c);
  Rng rng(c.seed);
  const SynthesisResult r = min_online ? min_online_synthesize(a.target, config, rng) : synthesize(a.target, config, rng);
  print_result(r, a.sequence, out);
}

struct ScalingArgs {
  std::string scheme = "h-only";
  std::size_t trials = 18000;
  double eps_min = 1e-12;
  double eps_max = 1e-4;
  std::string output;
  std::string format = "csv";
};

void cmd_scaling(const ScalingArgs& a, const Common& c, std::ostream& out) {
  StudyOptions o;
  o.scheme = parse_scheme(a.scheme);
  o.n_samples = a.trials;
  o.eps_min = a.eps_min;
  o.eps_max = a.eps_max;
  o.seed = c.seed;
  o.jobs = c.jobs;
  const ScalingStudy s = run_scaling_study(o);
  out << "scheme " << scheme_name(o.scheme) << "\nsamples " << s.samples.size() << "\nzero_cost_samples "
      << s.zero_cost_samples << "\nmean_online " << num(s.mean_online, 6) << "\nmean_offline "
      << num(s.mean_offline, 6) << "\nonline_fit intercept " << num(s.online.intercept, 6) << " slope "
      << num(s.online.slope, 6) << " rms " << num(s.online.rms_residual, 4) << "\noffline_fit intercept "
      << num(s.offline.intercept, 6) << " slope " << num(s.offline.slope, 6) << " rms "
      << num(s.offline.rms_residual, 4) << '\n';
  if (a.output.empty()) return;
  if (a.format == "json") {
    write_file(a.output, study_summary_json(s, o));
  } else {
    std::ostringstream csv;
    write_samples_csv(csv, s.samples);
    write_file(a.output, csv.str());
  }
  out << "wrote " << a.output << '\n';
}

struct NoiseArgs {
  std::string model = "a";
  double strength = 1e-4;
  std::size_t instances = 1000;
  int first = -1;
  int last = -1;
};

void cmd_noise(const NoiseArgs& a, const Common& c, std::ostream& out) {
  NoiseModel m{parse_noise_kind(a.model), a.strength};
  m.validate();
  const LevelWindow w = default_fit_window(a.strength);
  const int first = a.first >= 0 ? a.first : w.first;
  const int last = a.last >= 0 ? a.last : w.last;
  if (first > last || last > kMaxLevel) throw std::invalid_argument("bad level window");
  const auto profile = mean_distance_profile(m, 0, last, a.instances, c.seed, c.jobs);
  out << "level,mean_distance\n";
  std::vector<DecayPoint> window;
  for (const auto& p : profile) {
    out << p.level << ',' << num(p.distance, 8) << '\n';
    if (p.level >= first) window.push_back(p);
  }
  const DecayFit fit = fit_exponential_decay(window);
  out << "fit levels " << fit.level_min << ".." << fit.level_max << " prefactor " << num(fit.prefactor, 6)
      << " base " << num(fit.base, 6) << " rms " << num(fit.residual_rms, 4) << '\n';
}

struct CompareArgs {
  bool table = false;
  std::string scheme = "h-only";
  std::size_t points = 9;
};

void print_line(std::ostream& out, const char* name, FitLine l) {
  out << name << " intercept " << num(l.intercept, 3) << " slope " << num(l.slope, 3) << '\n';
}

void cmd_compare(const CompareArgs& a, std::ostream& out) {
  const SkFitConstants& k = kPublishedFits;
  print_line(out, "sk_z", k.sk_z);
  print_line(out, "sk_u", k.sk_u);
  print_line(out, "h_online", k.h_online);
  print_line(out, "h_offline", k.h_offline);
  print_line(out, "multi_online", k.multi_online);
  print_line(out, "multi_offline", k.multi_offline);
  print_line(out, "min_online_offline", k.min_online_offline);
  out << "crossover,computed,quoted,ratio\n";
  for (const auto& row : published_crossovers()) {
    out << row.label << ',' << num(row.computed, 4) << ',' << num(row.quoted, 3) << ','
        << num(row.computed / row.quoted, 4) << '\n';
  }
  if (!a.table) return;
  const Scheme s = parse_scheme(a.scheme);
  const FitLine on = s == Scheme::kHOnly ? k.h_online : k.multi_online;
  const FitLine off = s == Scheme::kHOnly ? k.h_offline : k.multi_offline;
  out << "epsilon,ln_sk_z,ln_online_z,ln_offline_z,ln_sk_u,ln_online_u,ln_offline_u\n";
  for (const auto& p : comparison_table(on, off, 1e-12, 1e-2, a.points)) {
    out << num(p.epsilon, 6) << ',' << num(p.sk_z, 8) << ',' << num(p.online_z, 8) << ',' << num(p.offline_z, 8)
        << ',' << num(p.sk_u, 8) << ',' << num(p.online_u, 8) << ',' << num(p.offline_u, 8) << '\n';
  }
}

struct FixedArgs {
  double theta = std::numbers::pi / 16;
  std::vector<double> eps{1e-4, 1e-8, 1e-12};
  std::string scheme = "h-only";
  std::size_t trials = 2000;
};

void cmd_fixed(const FixedArgs& a, const Common& c, std::ostream& out) {
  const Scheme s = parse_scheme(a.scheme);
  if (s == Scheme::kMinOnline) throw std::invalid_argument("fixed-angle supports h-only and multi");
  const auto rows = fixed_angle_study(a.theta, a.eps, s, a.trials, c.seed, c.jobs);
  out << "epsilon,mean_online,se_online,mean_offline,se_offline,published_online,published_offline\n";
  for (const auto& r : rows) {
    double pub_on = 0, pub_off = 0;
    for (const auto& p : published_cost_table()) {
      if (std::abs(p.theta - a.theta) < 1e-12 && std::abs(p.epsilon / r.epsilon - 1) < 1e-9) {
        pub_on = s == Scheme::kHOnly ? p.c_on : p.c_on_multi;
        pub_off = s == Scheme::kHOnly ? p.c_off : p.c_off_multi;
      }
    }
    out << num(r.epsilon, 6) << ',' << num(r.mean_online, 6) << ',' << num(r.se_online, 3) << ','
        << num(r.mean_offline, 6) << ',' << num(r.se_offline, 3) << ',';
    if (pub_on > 0) {
      out << num(pub_on, 6) << ',' << num(pub_off, 6) << '\n';
    } else {
      out << ",\n";
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z-rotation synthesis from |H> ladder states", "hladder"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);

  Common common;
  app.add_option("--seed", common.seed, "master seed")->capture_default_str();
  app.add_option("--jobs", common.jobs, "worker threads; results do not depend on it")
      ->capture_default_str()
      ->check(CLI::Range(1u, 1024u));

  std::function<int()> action;

  AnglesArgs angles;
  auto* s_angles = app.add_subcommand("angles", "print ladder angles theta_i and rotations 2 theta_i");
  s_angles->add_option("--family", angles.family, "H, psi0, psi1, psi2, a comma list or all")->capture_default_str();
  s_angles->add_option("--max", angles.max, "highest level (default 16 for H, 8 otherwise)");
  s_angles->callback([&] { action = [&] { cmd_angles(angles, out); return 0; }; });

  ClimbArgs climb;
  auto* s_climb = app.add_subcommand("climb", "expected and simulated cost of preparing one ladder state");
  s_climb->add_option("--family", climb.family)->capture_default_str();
  s_climb->add_option("--level", climb.level)->capture_default_str();
  s_climb->add_option("--runs", climb.runs)->capture_default_str();
  s_climb->callback([&] { action = [&] { cmd_climb(climb, common, out); return 0; }; });

  FactoryArgs factory;
  auto* s_factory = app.add_subcommand("factory", "simulate the psi factories and check them against their codes");
  s_factory->add_option("--kind", factory.kind, "psi0, psi1, psi2 or all")->capture_default_str();
  s_factory->callback([&] { action = [&] { return cmd_factory(factory, out); }; });

  SynthArgs synth;
  auto add_synth_options = [](CLI::App* sub, SynthArgs& a) {
    sub->add_option("--target", a.target, "rotation angle in radians")->required();
    sub->add_option("--eps", a.eps, "precision")->capture_default_str();
    sub->add_option("--families", a.families, "resource families, comma list or all")->capture_default_str();
    sub->add_option("--max-level", a.max_level, "highest ladder level (default from eps)");
    sub->add_flag("--no-clifford", a.no_clifford, "disable free S corrections");
    sub->add_flag("--sequence", a.sequence, "print every applied rotation");
  };
  auto* s_synth = app.add_subcommand("synth", "synthesize one Z rotation");
  add_synth_options(s_synth, synth);
  s_synth->callback([&] { action = [&] { cmd_synth(synth, common, false, out); return 0; }; });

  SynthArgs min_online;
  min_online.families = "all";
  auto* s_min = app.add_subcommand("min-online", "synthesize with offline ancillas, about two online rotations");
  add_synth_options(s_min, min_online);
  s_min->callback([&] { action = [&] { cmd_synth(min_online, common, true, out); return 0; }; });

  ScalingArgs scaling;
  auto* s_scaling = app.add_subcommand("scaling", "cost scaling study over random targets and precisions");
  s_scaling->add_option("--scheme", scaling.scheme, "h-only, multi or min-online")
      ->capture_default_str()
      ->check(CLI::IsMember({"h-only", "multi", "min-online"}));
  s_scaling->add_option("--trials", scaling.trials)->capture_default_str();
  s_scaling->add_option("--eps-min", scaling.eps_min)->capture_default_str();
  s_scaling->add_option("--eps-max", scaling.eps_max)->capture_default_str();
  s_scaling->add_option("-o,--output", scaling.output, "write samples (csv) or the fit summary (json)");
  s_scaling->add_option("--format", scaling.format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  s_scaling->callback([&] { action = [&] { cmd_scaling(scaling, common, out); return 0; }; });

  NoiseArgs noise;
  auto* s_noise = app.add_subcommand("noise", "distance of noisy ladder states to the ideal ones");
  s_noise->add_option("--model", noise.model, "a, b or c")->capture_default_str()->check(CLI::IsMember({"a", "b", "c"}));
  s_noise->add_option("--strength", noise.strength)->capture_default_str();
  s_noise->add_option("--instances", noise.instances, "climbs per level")->capture_default_str();
  s_noise->add_option("--first", noise.first, "first fitted level");
  s_noise->add_option("--last", noise.last, "last fitted level");
  s_noise->callback([&] { action = [&] { cmd_noise(noise, common, out); return 0; }; });

  CompareArgs compare;
  auto* s_compare = app.add_subcommand("compare-sk", "crossovers with Solovay-Kitaev fit constants");
  s_compare->add_flag("--table", compare.table, "print ln C of every curve on an epsilon grid");
  s_compare->add_option("--scheme", compare.scheme)->capture_default_str()->check(CLI::IsMember({"h-only", "multi"}));
  s_compare->add_option("--points", compare.points)->capture_default_str()->check(CLI::Range(2, 1000));
  s_compare->callback([&] { action = [&] { cmd_compare(compare, out); return 0; }; });

  FixedArgs fixed;
  auto* s_fixed = app.add_subcommand("fixed-angle", "mean costs of one angle at several precisions");
  s_fixed->add_option("--theta", fixed.theta, "radians")->capture_default_str();
  s_fixed->add_option("--eps", fixed.eps)->capture_default_str()->delimiter(',');
  s_fixed->add_option("--scheme", fixed.scheme)->capture_default_str()->check(CLI::IsMember({"h-only", "multi"}));
  s_fixed->add_option("--trials", fixed.trials)->capture_default_str();
  s_fixed->callback([&] { action = [&] { cmd_fixed(fixed, common, out); return 0; }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hladder
