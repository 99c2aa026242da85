#include "cli/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "ptsmc/sliding.hpp"

namespace ptsmc::cli {

namespace {

constexpr unsigned kScalarKinds = 0b011;
constexpr unsigned kAttitudeKind = 0b100;
constexpr unsigned kAllKinds = 0b111;

unsigned bit(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::SecondOrder: return 0b001;
    case ScenarioKind::ThirdOrder: return 0b010;
    case ScenarioKind::Attitude: return 0b100;
  }
  return 0;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& key, int line, const std::string& msg) {
  std::ostringstream os;
  if (line > 0) {
    os << "line " << line << ": ";
  }
  if (!key.empty()) {
    os << "key '" << key << "': ";
  }
  os << msg;
  throw ConfigError(os.str(), line, key);
}

double parse_number(std::string_view key, std::string_view text, int line) {
  const std::string_view t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    fail(std::string(key), line, "expected a finite number, got '" + std::string(t) + "'");
  }
  return v;
}

std::vector<double> parse_list(std::string_view key, std::string_view text, int line) {
  std::vector<double> out;
  std::string_view rest = trim(text);
  if (rest.empty()) {
    fail(std::string(key), line, "expected a comma-separated list of numbers");
  }
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_number(key, rest.substr(0, comma), line));
    if (comma == std::string_view::npos) {
      break;
    }
    rest = rest.substr(comma + 1);
  }
  return out;
}

int parse_int(std::string_view key, std::string_view text, int line) {
  const std::string_view t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    fail(std::string(key), line, "expected an integer, got '" + std::string(t) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text, int line) {
  const std::string_view t = trim(text);
  if (t == "true" || t == "1" || t == "on" || t == "yes") {
    return true;
  }
  if (t == "false" || t == "0" || t == "off" || t == "no") {
    return false;
  }
  fail(std::string(key), line, "expected true or false, got '" + std::string(t) + "'");
}

std::string format_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += format_double(v[i]);
  }
  return out;
}

struct KeySpec {
  std::string_view name;
  unsigned kinds;
  bool numeric;
  std::function<void(ScenarioConfig&, std::string_view, int)> set;
  std::function<std::string(const ScenarioConfig&)> get;
};

template <double ScenarioConfig::*Field>
KeySpec scalar_key(std::string_view name, unsigned kinds) {
  return {name, kinds, true,
          [name](ScenarioConfig& c, std::string_view v, int line) {
            c.*Field = parse_number(name, v, line);
          },
          [](const ScenarioConfig& c) { return format_double(c.*Field); }};
}

template <std::vector<double> ScenarioConfig::*Field>
KeySpec list_key(std::string_view name, unsigned kinds) {
  return {name, kinds, false,
          [name](ScenarioConfig& c, std::string_view v, int line) {
            c.*Field = parse_list(name, v, line);
          },
          [](const ScenarioConfig& c) { return format_list(c.*Field); }};
}

const std::vector<KeySpec>& key_table() {
  static const std::vector<KeySpec> table = [] {
    std::vector<KeySpec> t;
    t.push_back(scalar_key<&ScenarioConfig::t_f>("t_f", kAllKinds));
    t.push_back(scalar_key<&ScenarioConfig::eta>("eta", kAllKinds));
    t.push_back(scalar_key<&ScenarioConfig::delta>("delta", kAllKinds));
    t.push_back(scalar_key<&ScenarioConfig::K>("K", kAllKinds));
    t.push_back(scalar_key<&ScenarioConfig::K1>("K1", kAllKinds));
    t.push_back(scalar_key<&ScenarioConfig::phi>("phi", kAllKinds));
    t.push_back(scalar_key<&ScenarioConfig::dt>("dt", kAllKinds));
    t.push_back({"t_end", kAllKinds, true,
                 [](ScenarioConfig& c, std::string_view v, int line) {
                   c.t_end = parse_number("t_end", v, line);
                 },
                 [](const ScenarioConfig& c) { return format_double(c.resolved_t_end()); }});
    t.push_back({"record_stride", kAllKinds, true,
                 [](ScenarioConfig& c, std::string_view v, int line) {
                   c.record_stride = parse_int("record_stride", v, line);
                 },
                 [](const ScenarioConfig& c) { return std::to_string(c.record_stride); }});
    t.push_back(scalar_key<&ScenarioConfig::dist_amp>("dist_amp", kAllKinds));
    t.push_back(scalar_key<&ScenarioConfig::dist_omega>("dist_omega", kAllKinds));
    t.push_back(list_key<&ScenarioConfig::x0>("x0", kScalarKinds));
    t.push_back(list_key<&ScenarioConfig::a>("a", kScalarKinds));
    t.push_back(list_key<&ScenarioConfig::J_diag>("J_diag", kAttitudeKind));
    t.push_back(list_key<&ScenarioConfig::q0>("q0", kAttitudeKind));
    t.push_back(list_key<&ScenarioConfig::w0>("w0", kAttitudeKind));
    t.push_back(list_key<&ScenarioConfig::L_diag>("L_diag", kAttitudeKind));
    t.push_back({"obs_c", kAttitudeKind, true,
                 [](ScenarioConfig& c, std::string_view v, int line) {
                   c.obs_c = parse_number("obs_c", v, line);
                 },
                 [](const ScenarioConfig& c) { return format_double(c.resolved_obs_c()); }});
    t.push_back({"obs_e0", kAttitudeKind, true,
                 [](ScenarioConfig& c, std::string_view v, int line) {
                   c.obs_e0 = parse_number("obs_e0", v, line);
                 },
                 [](const ScenarioConfig& c) { return format_double(c.resolved_obs_e0()); }});
    t.push_back({"renorm", kAttitudeKind, false,
                 [](ScenarioConfig& c, std::string_view v, int line) {
                   c.renorm = parse_bool("renorm", v, line);
                 },
                 [](const ScenarioConfig& c) { return std::string(c.renorm ? "true" : "false"); }});
    return t;
  }();
  return table;
}

const KeySpec* find_key(std::string_view name) {
  const auto& t = key_table();
  const auto it = std::find_if(t.begin(), t.end(), [&](const KeySpec& k) { return k.name == name; });
  return it == t.end() ? nullptr : &*it;
}

void require(bool ok, const char* key, const std::string& msg) {
  if (!ok) {
    fail(key, 0, msg);
  }
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

bool all_positive(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0 && std::isfinite(x); });
}

}  // namespace

std::string_view to_string(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::SecondOrder: return "second_order";
    case ScenarioKind::ThirdOrder: return "third_order";
    case ScenarioKind::Attitude: return "attitude";
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_kind(std::string_view name) noexcept {
  for (auto k : {ScenarioKind::SecondOrder, ScenarioKind::ThirdOrder, ScenarioKind::Attitude}) {
    if (to_string(k) == name) {
      return k;
    }
  }
  return std::nullopt;
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

int ScenarioConfig::order() const noexcept {
  return scenario == ScenarioKind::ThirdOrder ? 3 : 2;
}

double ScenarioConfig::resolved_t_end() const noexcept { return t_end.value_or(t_f + 2.0); }

double ScenarioConfig::resolved_obs_c() const noexcept {
  return obs_c.value_or(std::abs(dist_amp) * std::abs(dist_omega));
}

double ScenarioConfig::resolved_obs_e0() const noexcept {
  if (obs_e0) {
    return *obs_e0;
  }
  // d_hat(0) = z(0) + L w0 with z(0) = 0.
  double d_hat0 = 0.0;
  for (std::size_t i = 0; i < w0.size() && i < L_diag.size(); ++i) {
    d_hat0 = std::max(d_hat0, std::abs(L_diag[i] * w0[i]));
  }
  return d_hat0 + K;
}

ScenarioConfig ScenarioConfig::defaults(ScenarioKind kind) {
  ScenarioConfig c;
  c.scenario = kind;
  switch (kind) {
    case ScenarioKind::SecondOrder:
      break;
    case ScenarioKind::ThirdOrder:
      c.eta = 4.0;
      c.x0 = {5.0, 3.0, 2.0};
      c.a = {1.0, 2.0};
      break;
    case ScenarioKind::Attitude:
      c.t_f = 30.0;
      c.eta = 3.0;
      c.delta = 0.05;
      c.dt = 1e-3;
      c.dist_omega = 0.1;
      c.x0.clear();
      c.a.clear();
      c.q0 = {std::sqrt(2.0) / 3.0, -1.0 / 3.0, std::sqrt(3.0) / 3.0, std::sqrt(3.0) / 3.0};
      break;
  }
  return c;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> list = [] {
    std::vector<Preset> p;
    p.push_back({"fig1", "second-order chain, x0=(5,3), eta=3, t_f=5",
                 ScenarioConfig::defaults(ScenarioKind::SecondOrder)});
    p.push_back({"fig2", "third-order chain, x0=(5,3,2), eta=4, t_f=5",
                 ScenarioConfig::defaults(ScenarioKind::ThirdOrder)});
    auto attitude = [](double t_f, double eta) {
      ScenarioConfig c = ScenarioConfig::defaults(ScenarioKind::Attitude);
      c.t_f = t_f;
      c.eta = eta;
      return c;
    };
    p.push_back({"case1_30", "spacecraft attitude, t_f=30, eta=3, delta=0.05", attitude(30, 3)});
    p.push_back({"case1_40", "spacecraft attitude, t_f=40, eta=3, delta=0.05", attitude(40, 3)});
    p.push_back({"case2_eta3", "spacecraft attitude, t_f=35, eta=3, delta=0.05", attitude(35, 3)});
    p.push_back({"case2_eta5", "spacecraft attitude, t_f=35, eta=5, delta=0.05", attitude(35, 5)});
    return p;
  }();
  return list;
}

std::optional<ScenarioConfig> base_config(std::string_view name) {
  if (const auto kind = parse_kind(name)) {
    return ScenarioConfig::defaults(*kind);
  }
  for (const auto& p : presets()) {
    if (p.name == name) {
      return p.config;
    }
  }
  return std::nullopt;
}

std::vector<double> parse_value_list(std::string_view text) {
  if (trim(text).empty()) {
    return {};
  }
  return parse_list("values", text, 0);
}

bool is_numeric_key(std::string_view key) noexcept {
  const KeySpec* k = find_key(key);
  return k != nullptr && k->numeric;
}

void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value, int line) {
  if (key == "scenario") {
    const auto kind = parse_kind(trim(value));
    if (!kind) {
      fail("scenario", line, "unknown scenario '" + std::string(trim(value)) + "'");
    }
    if (*kind != cfg.scenario) {
      fail("scenario", line,
           "file selects '" + std::string(to_string(*kind)) + "' but the run uses '" +
               std::string(to_string(cfg.scenario)) + "'");
    }
    return;
  }
  const KeySpec* k = find_key(key);
  if (k == nullptr) {
    fail(std::string(key), line, "unknown key");
  }
  if ((k->kinds & bit(cfg.scenario)) == 0) {
    fail(std::string(key), line,
         "does not apply to scenario " + std::string(to_string(cfg.scenario)));
  }
  k->set(cfg, value, line);
}

ScenarioConfig parse_config(std::istream& in, ScenarioConfig base) {
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) {
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      fail("", line, "expected 'key = value'");
    }
    const std::string_view key = trim(text.substr(0, eq));
    if (key.empty()) {
      fail("", line, "missing key before '='");
    }
    apply_setting(base, key, text.substr(eq + 1), line);
  }
  validate(base);
  return base;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'", 0, "");
  }
  return parse_config(in, std::move(base));
}

ScenarioConfig load_config(const std::string& path, ScenarioKind kind) {
  return load_config(path, ScenarioConfig::defaults(kind));
}

void validate(const ScenarioConfig& c) {
  const int n = c.order();
  require(c.t_f > 0.0 && std::isfinite(c.t_f), "t_f", "prescribed time must be positive");
  {
    std::ostringstream os;
    os << "eta must exceed the system order " << n << " (got " << c.eta << ")";
    require(c.eta > n && std::isfinite(c.eta), "eta", os.str());
  }
  require(c.delta >= 0.0 && c.delta < c.t_f, "delta", "switch margin must satisfy 0 <= delta < t_f");
  require(c.K > 0.0 && std::isfinite(c.K), "K", "switching gain must be positive");
  {
    std::ostringstream os;
    os << "switching gain K=" << c.K << " is below the disturbance bound " << std::abs(c.dist_amp)
       << " (K must dominate ||d||_inf)";
    require(c.K >= std::abs(c.dist_amp), "K", os.str());
  }
  require(c.K1 > 0.0 && std::isfinite(c.K1), "K1", "terminal gain must be positive");
  require(c.phi >= 0.0 && std::isfinite(c.phi), "phi", "boundary layer must be non-negative");
  require(c.dt > 0.0 && std::isfinite(c.dt), "dt", "step size must be positive");
  require(c.delta == 0.0 || c.dt <= (c.delta / 10.0) * (1.0 + 1e-9), "dt",
          "step size must satisfy dt <= delta / 10");
  require(std::isfinite(c.resolved_t_end()) && c.resolved_t_end() >= c.t_f, "t_end",
          "simulation must run at least to t_f");
  require(c.record_stride >= 1, "record_stride", "must be at least 1");
  require(std::isfinite(c.dist_amp), "dist_amp", "must be finite");
  require(std::isfinite(c.dist_omega), "dist_omega", "must be finite");

  if (c.scenario == ScenarioKind::Attitude) {
    require(c.J_diag.size() == 3 && all_positive(c.J_diag), "J_diag",
            "needs three positive inertias");
    require(c.q0.size() == 4 && all_finite(c.q0), "q0", "needs four finite components");
    const double n2 = c.q0[0] * c.q0[0] + c.q0[1] * c.q0[1] + c.q0[2] * c.q0[2] + c.q0[3] * c.q0[3];
    require(std::abs(n2 - 1.0) <= Quaternion::kUnitTolerance, "q0", "must be unit norm");
    require(std::abs(c.q0[3]) >= kAttitudeSingularityGuard, "q0",
            "scalar part too close to zero (attitude singularity)");
    require(c.w0.size() == 3 && all_finite(c.w0), "w0", "needs three finite components");
    require(c.L_diag.size() == 3 && all_positive(c.L_diag), "L_diag",
            "needs three positive observer gains");
    require(c.resolved_obs_c() >= 0.0 && std::isfinite(c.resolved_obs_c()), "obs_c",
            "must be non-negative");
    require(c.resolved_obs_e0() >= 0.0 && std::isfinite(c.resolved_obs_e0()), "obs_e0",
            "must be non-negative");
  } else {
    require(static_cast<int>(c.x0.size()) == n && all_finite(c.x0), "x0",
            "needs " + std::to_string(n) + " finite components");
    require(static_cast<int>(c.a.size()) == n - 1 && all_finite(c.a), "a",
            "needs " + std::to_string(n - 1) + " coefficients");
    require(is_hurwitz(c.a), "a", "terminal surface coefficients are not Hurwitz");
  }
}

void write_config(std::ostream& out, const ScenarioConfig& cfg, std::string_view prefix) {
  out << prefix << "scenario = " << to_string(cfg.scenario) << '\n';
  for (const auto& k : key_table()) {
    if ((k.kinds & bit(cfg.scenario)) != 0) {
      out << prefix << k.name << " = " << k.get(cfg) << '\n';
    }
  }
}

ScalarScenario make_scalar_scenario(const ScenarioConfig& c) {
  return ScalarScenario{
      PtSlidingSpec(c.order(), c.eta, c.t_f, c.delta),
      ClassicalSurface(c.a),
      ControlGains{c.K, c.K1, c.phi},
      ScalarPlant::double_integrator(),
      DisturbanceModel::sinusoid(VecX::Constant(1, c.dist_amp), c.dist_omega),
      SimConfig{c.dt, c.resolved_t_end(), true, c.record_stride},
      Eigen::Map<const VecX>(c.x0.data(), static_cast<Eigen::Index>(c.x0.size())),
  };
}

AttitudeScenario make_attitude_scenario(const ScenarioConfig& c) {
  ObserverConfig obs;
  obs.L = Vec3(c.L_diag[0], c.L_diag[1], c.L_diag[2]).asDiagonal();
  obs.c = c.resolved_obs_c();
  obs.e0_bound = c.resolved_obs_e0();
  return AttitudeScenario{
      .body = RigidBody::diagonal(c.J_diag[0], c.J_diag[1], c.J_diag[2]),
      .q0 = Quaternion(Vec3(c.q0[0], c.q0[1], c.q0[2]), c.q0[3]),
      .w0 = Vec3(c.w0[0], c.w0[1], c.w0[2]),
      .reference = AttitudeReference::constant(Quaternion()),
      .disturbance = DisturbanceModel::sinusoid(VecX::Constant(3, c.dist_amp), c.dist_omega),
      .observer = obs,
      .z0 = Vec3::Zero(),
      .spec = PtSlidingSpec(2, c.eta, c.t_f, c.delta),
      .gains = ControlGains{c.K, c.K1, c.phi},
      .sim = SimConfig{c.dt, c.resolved_t_end(), c.renorm, c.record_stride},
  };
}

}  // namespace ptsmc::cli
