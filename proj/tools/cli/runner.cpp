#include "cli/runner.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "ptsmc/envelope.hpp"

namespace ptsmc::cli {

namespace {

namespace fs = std::filesystem;

double sample_error(ScenarioKind kind, const Trajectory& traj, std::size_t i) {
  if (kind == ScenarioKind::Attitude) {
    return traj.tracking[i].head(3).cwiseAbs().maxCoeff();
  }
  return traj.states[i].cwiseAbs().maxCoeff();
}

PtSlidingSpec spec_of(const ScenarioConfig& cfg) {
  return PtSlidingSpec(cfg.order(), cfg.eta, cfg.t_f, cfg.delta);
}

void append_row(std::string& line, const VecX& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    line += ',';
    line += format_double(v(i));
  }
}

struct RunResult {
  int code = kExitRuntimeError;
  std::optional<RunSummary> summary;
};

RunResult run_impl(const ScenarioConfig& cfg, const fs::path& out_dir, std::ostream& err) {
  RunResult result;
  try {
    validate(cfg);
    const Trajectory traj = simulate(cfg);
    const RunSummary summary = summarize(cfg, traj);

    fs::create_directories(out_dir);
    {
      std::ofstream csv(out_dir / "trajectory.csv", std::ios::binary);
      write_trajectory_csv(csv, cfg.scenario, traj);
      if (!csv) {
        throw Error("failed writing " + (out_dir / "trajectory.csv").string());
      }
    }
    {
      std::ofstream txt(out_dir / "summary.txt", std::ios::binary);
      write_summary(txt, cfg, summary);
      if (!txt) {
        throw Error("failed writing " + (out_dir / "summary.txt").string());
      }
    }
    result.summary = summary;
    if (!summary.invariants_hold()) {
      err << "invariant check failed (envelope pass=" << summary.envelope_pass
          << ", observer bound pass=" << summary.observer_pass << ")\n";
      result.code = kExitInvariantFailure;
    } else {
      result.code = kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    result.code = kExitRuntimeError;
  }
  return result;
}

}  // namespace

Trajectory simulate(const ScenarioConfig& cfg) {
  if (cfg.scenario == ScenarioKind::Attitude) {
    return run_attitude_scenario(make_attitude_scenario(cfg));
  }
  return run_scalar_scenario(make_scalar_scenario(cfg));
}

RunSummary summarize(const ScenarioConfig& cfg, const Trajectory& traj) {
  if (traj.empty()) {
    throw DomainError("summarize: empty trajectory");
  }
  const PtSlidingSpec spec = spec_of(cfg);
  RunSummary s;
  s.error_at_switch = sample_error(cfg.scenario, traj, traj.index_near(spec.switch_time()));
  s.error_at_tf = sample_error(cfg.scenario, traj, traj.index_near(cfg.t_f));
  s.final_error = sample_error(cfg.scenario, traj, traj.size() - 1);
  s.initial_abs_u = traj.controls.front().cwiseAbs().maxCoeff();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double u = traj.controls[i].cwiseAbs().maxCoeff();
    s.max_abs_u = std::max(s.max_abs_u, u);
    if (traj.regimes[i] == Regime::PrescribedPhase) {
      s.max_abs_u_prescribed = std::max(s.max_abs_u_prescribed, u);
    }
  }
  const EnvelopeReport env = envelope_check(traj, spec);
  s.envelope_max_violation = env.max_violation;
  s.envelope_tolerance = env.tolerance;
  s.envelope_pass = env.pass;
  if (cfg.scenario == ScenarioKind::Attitude) {
    const ObserverBoundReport obs = observer_bound_check(traj);
    s.has_observer = true;
    s.observer_max_violation = obs.max_violation;
    s.observer_max_ratio = obs.max_ratio;
    s.observer_pass = obs.pass;
    s.max_norm_drift = traj.max_norm_drift;
  }
  return s;
}

std::vector<std::string> csv_columns(ScenarioKind kind) {
  std::vector<std::string> cols{"t"};
  if (kind == ScenarioKind::Attitude) {
    for (const char* c : {"q1", "q2", "q3", "q4", "w1", "w2", "w3", "T1", "T2", "T3", "s1", "s2",
                          "s3", "envelope", "d_hat1", "d_hat2", "d_hat3", "d1", "d2", "d3", "K2",
                          "eps1_1", "eps1_2", "eps1_3", "eps4", "regime"}) {
      cols.emplace_back(c);
    }
    return cols;
  }
  const int n = kind == ScenarioKind::ThirdOrder ? 3 : 2;
  for (int i = 1; i <= n; ++i) {
    cols.push_back("x" + std::to_string(i));
  }
  for (const char* c : {"u", "s", "envelope", "d", "regime"}) {
    cols.emplace_back(c);
  }
  return cols;
}

void write_trajectory_csv(std::ostream& out, ScenarioKind kind, const Trajectory& traj) {
  const auto cols = csv_columns(kind);
  std::string line;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    line += (i == 0 ? "" : ",") + cols[i];
  }
  out << line << "\r\n";

  const bool attitude = kind == ScenarioKind::Attitude;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    line = format_double(traj.times[i]);
    append_row(line, traj.states[i]);
    append_row(line, traj.controls[i]);
    append_row(line, traj.sliding[i]);
    line += ',';
    line += format_double(traj.envelope[i]);
    if (attitude) {
      append_row(line, traj.d_hat[i]);
      append_row(line, traj.disturbance[i]);
      line += ',';
      line += format_double(traj.k2[i]);
      append_row(line, traj.tracking[i]);
    } else {
      append_row(line, traj.disturbance[i]);
    }
    line += traj.regimes[i] == Regime::PrescribedPhase ? ",0" : ",1";
    out << line << "\r\n";
  }
}

void write_summary(std::ostream& out, const ScenarioConfig& cfg, const RunSummary& s) {
  out << "# configuration (resolved)\n";
  write_config(out, cfg, "config.");
  out << "# results\n";
  const auto put = [&out](const char* key, double v) {
    out << "result." << key << " = " << format_double(v) << '\n';
  };
  const auto flag = [&out](const char* key, bool v) {
    out << "result." << key << " = " << (v ? "true" : "false") << '\n';
  };
  put("error_at_switch", s.error_at_switch);
  put("error_at_tf", s.error_at_tf);
  put("final_error", s.final_error);
  put("initial_abs_u", s.initial_abs_u);
  put("max_abs_u", s.max_abs_u);
  put("max_abs_u_prescribed", s.max_abs_u_prescribed);
  put("envelope_max_violation", s.envelope_max_violation);
  put("envelope_tolerance", s.envelope_tolerance);
  flag("envelope_pass", s.envelope_pass);
  if (s.has_observer) {
    put("observer_bound_max_violation", s.observer_max_violation);
    put("observer_bound_max_ratio", s.observer_max_ratio);
    flag("observer_bound_pass", s.observer_pass);
    put("max_quaternion_norm_drift", s.max_norm_drift);
  }
}

int run(const ScenarioConfig& cfg, const fs::path& out_dir, std::ostream& err) {
  return run_impl(cfg, out_dir, err).code;
}

int sweep(const ScenarioConfig& base, const std::string& key, const std::vector<double>& values,
          const fs::path& out_dir, std::ostream& err) {
  if (values.empty()) {
    err << "error: sweep needs at least one value\n";
    return kExitRuntimeError;
  }
  if (!is_numeric_key(key)) {
    err << "error: '" << key << "' is not a numeric configuration key\n";
    return kExitRuntimeError;
  }

  struct Job {
    std::string label;
    std::ostringstream log;
    RunResult result;
  };
  std::vector<Job> jobs(values.size());
  std::vector<std::future<void>> pending;
  pending.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    jobs[i].label = format_double(values[i]);
    pending.push_back(std::async(std::launch::async, [&, i] {
      Job& job = jobs[i];
      ScenarioConfig cfg = base;
      try {
        apply_setting(cfg, key, job.label);
      } catch (const std::exception& e) {
        job.log << "error: " << e.what() << '\n';
        return;
      }
      job.result = run_impl(cfg, out_dir / (key + "_" + job.label), job.log);
    }));
  }
  for (auto& f : pending) {
    f.get();
  }

  fs::create_directories(out_dir);
  std::ofstream csv(out_dir / "sweep.csv", std::ios::binary);
  csv << key
      << ",exit_code,error_at_switch,error_at_tf,final_error,initial_abs_u,max_abs_u,"
         "envelope_pass,observer_bound_pass\r\n";
  int worst = kExitOk;
  for (auto& job : jobs) {
    const std::string log = job.log.str();
    if (!log.empty()) {
      err << key << '=' << job.label << ": " << log;
    }
    const int code = job.result.code;
    if (code == kExitRuntimeError || (code == kExitInvariantFailure && worst == kExitOk)) {
      worst = code;
    }
    csv << job.label << ',' << code;
    if (const auto& s = job.result.summary) {
      csv << ',' << format_double(s->error_at_switch) << ',' << format_double(s->error_at_tf)
          << ',' << format_double(s->final_error) << ',' << format_double(s->initial_abs_u)
          << ',' << format_double(s->max_abs_u) << ',' << (s->envelope_pass ? "true" : "false")
          << ',' << (s->has_observer ? (s->observer_pass ? "true" : "false") : "");
    } else {
      csv << ",,,,,,,";
    }
    csv << "\r\n";
  }
  return worst;
}

}  // namespace ptsmc::cli
