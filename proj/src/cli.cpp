#include "specfact/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <random>

#include "specfact/arch_order.hpp"
#include "specfact/error.hpp"
#include "specfact/factor_levinson.hpp"
#include "specfact/factor_roots.hpp"
#include "specfact/fft.hpp"
#include "specfact/report.hpp"
#include "specfact/samples.hpp"

namespace specfact {
namespace {

constexpr int kCompareOrder = 64;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

class Settings {
 public:
  explicit Settings(const RunConfig& c) : cfg_(c), tol_(default_tolerances()) {
    for (const auto& [name, value] : c.tolerances) {
      if (!tol_.contains(name)) invalid("unknown tolerance \"" + name + "\"");
      if (!(value > 0.0)) invalid("tolerance \"" + name + "\" must be positive");
      tol_[name] = value;
    }
    if (c.grid != 0 && !fft::is_power_of_two(c.grid)) invalid("grid must be a power of two");
    if (c.order < 0) invalid("order must be nonnegative");
    if (c.ladder.m_max < 0.0 || c.ladder.n_max < 0) invalid("ladder entries must be nonnegative");
    if (c.samples == 0) invalid("sample count must be positive");
    if (c.box && !(c.box->y_min > 0.0 && c.box->y_max > c.box->y_min && c.box->x_max > c.box->x_min))
      invalid("box must satisfy x0 < x1 and 0 < y0 < y1");
  }

  double tol(const std::string& name) const { return tol_.at(name); }

  std::size_t grid(const std::string& method, bool torus) const {
    if (cfg_.grid != 0) return cfg_.grid;
    if (method == "levinson") return 4096;
    return torus ? 256 : 1024;
  }

  FejerRieszOptions roots() const { return {tol("nonneg_tol"), tol("pair_tol"), false}; }

  CepstralOptions cepstral(bool torus) const {
    CepstralOptions o;
    o.grid = grid("cepstral", torus);
    o.ladder = cfg_.ladder;
    o.nonneg_tol = tol("nonneg_tol");
    o.truncation = tol("truncation");
    o.nyquist_energy = tol("nyquist_energy");
    return o;
  }

  // compare runs Levinson at a fixed section order so its agreement is not limited by truncation.
  int levinson_order() const {
    if (cfg_.order > 0 || cfg_.command != "compare") return cfg_.order;
    return kCompareOrder;
  }

  LevinsonOptions levinson() const {
    LevinsonOptions o;
    o.order = levinson_order();
    o.grid = grid("levinson", false);
    o.nonneg_tol = tol("nonneg_tol");
    o.truncation = tol("truncation");
    return o;
  }

  ArchOrder order() const { return ArchOrder(*cfg_.alpha, tol("order_floor")); }

  Json echo(const std::string& kind) const {
    Json j;
    j["command"] = cfg_.command;
    j["target"] = cfg_.target.empty() ? Json(nullptr) : Json(cfg_.target);
    j["method"] = cfg_.command == "factor" ? Json(cfg_.method) : Json(nullptr);
    j["methods"] = cfg_.command == "compare" ? Json(cfg_.methods) : Json(nullptr);
    const bool torus = kind == "bivar";
    j["grid"] = cfg_.command == "factor" || cfg_.command == "compare" ? Json(grid(cfg_.method, torus)) : Json(nullptr);
    j["order"] = levinson_order();
    j["ladder"] = {cfg_.ladder.m_max, cfg_.ladder.n_max};
    j["alpha"] = cfg_.alpha ? Json(*cfg_.alpha) : Json(nullptr);
    j["tolerances"] = Json(tol_);
    j["box"] = cfg_.box ? Json{cfg_.box->x_min, cfg_.box->x_max, cfg_.box->y_min, cfg_.box->y_max} : Json(nullptr);
    j["input"] = cfg_.input.empty() ? Json(nullptr) : Json(cfg_.input);
    j["csv"] = cfg_.csv.empty() ? Json(nullptr) : Json(cfg_.csv);
    j["samples"] = cfg_.samples;
    if (cfg_.command == "verify" && cfg_.target == "fixtures") {
      j["count"] = cfg_.count;
      j["seed"] = cfg_.seed;
    }
    return j;
  }

 private:
  const RunConfig& cfg_;
  std::map<std::string, double> tol_;
};

void check_alpha(const RunConfig& c, const Function& f) {
  const bool bivar = std::holds_alternative<BivarPoly>(f);
  if (bivar && !c.alpha) invalid("bivariate input needs --alpha");
  if (!bivar && c.alpha) invalid("--alpha applies only to bivariate input");
}

const TrigPoly& need_trig(const Function& f, const std::string& command) {
  if (const auto* p = std::get_if<TrigPoly>(&f)) return *p;
  invalid(command + " expects a trig input, got " + kind_name(f));
}

// AP view of an input: circle polynomials lift along the axis, bivariate ones through the order.
APFunc as_ap(const Function& f, const Settings& s, const RunConfig& c) {
  if (const auto* a = std::get_if<APFunc>(&f)) return *a;
  if (const auto* p = std::get_if<TrigPoly>(&f)) return lift(*p);
  if (!c.alpha) invalid("bivariate input needs --alpha");
  return lift(s.order(), std::get<BivarPoly>(f));
}

TrigPoly factor_circle(const std::string& method, const TrigPoly& w, const Settings& s, FactorReport* r) {
  if (method == "roots") {
    const RootFactorization f = fejer_riesz(w, s.roots());
    if (r) fill(*r, f, mahler_quadrature(f.h));
    return f.h;
  }
  if (method == "cepstral") {
    const CepstralTrace<TrigPoly> t = cepstral_factor_circle(w, s.cepstral(false));
    if (r) fill(*r, t);
    return t.h;
  }
  if (method == "levinson") {
    const SzegoFactor f = szego_factor(w, s.levinson());
    if (r) fill(*r, f);
    return f.h;
  }
  invalid("unknown method \"" + method + "\"");
}

void cmd_factor(const RunConfig& c, const Settings& s, const Function& f, FactorReport& r) {
  r.method = c.method;
  check_alpha(c, f);
  if (const auto* w = std::get_if<TrigPoly>(&f)) {
    const TrigPoly h = factor_circle(c.method, *w, s, &r);
    if (!c.csv.empty()) emit_fit(*w, h, c.samples, c.csv);
    return;
  }
  if (const auto* w = std::get_if<BivarPoly>(&f)) {
    if (c.method != "cepstral") invalid("bivariate input supports only --method cepstral");
    const ArchOrder ord = s.order();
    r.order = order_json(ord);
    const OrderedTrace t = cepstral_factor_ordered(*w, ord, s.cepstral(true));
    fill(r, t);
    if (!c.csv.empty()) emit_samples(t.h, c.samples, c.csv);
    return;
  }
  invalid("factor expects trig or bivar input");
}

void cmd_mahler(const RunConfig& c, const Settings& s, const Function& f, FactorReport& r) {
  const TrigPoly& h = need_trig(f, c.command);
  if (h.is_zero()) throw Error(ErrorCode::AllCoefficientsZero, "Mahler measure of the zero polynomial");
  if (h.min_freq() < 0) invalid("mahler expects support in [0, d]");
  const MahlerQuadrature q = mahler_quadrature(h);
  const OuterDiagnosis d = diagnose_outer(h, s.tol("outer_tol"));
  const InnerOuter split = inner_outer_split(h);
  r.factor = to_json(split.outer);
  r.mahler = d.mahler;
  r.flags["jensen_outer"] = d.jensen_outer;
  r.flags["roots_outer"] = d.roots_outer;
  r.flags["clipped_samples"] = q.clipped;
  r.flags["inner_is_polynomial"] = split.inner_is_polynomial();
  r.diagnostics["mahler_quadrature"] = q.value;
  r.diagnostics["min_root_modulus"] = d.min_root_modulus;
  r.diagnostics["inner_num"] = to_json(split.inner_num);
  r.diagnostics["inner_den"] = to_json(split.inner_den);
}

void cmd_lift(const RunConfig& c, const Settings& s, const Function& f, FactorReport& r) {
  check_alpha(c, f);
  if (std::holds_alternative<APFunc>(f)) invalid("lift expects trig or bivar input");
  if (c.alpha) r.order = order_json(s.order());
  const APFunc lifted = as_ap(f, s, c);
  r.factor = to_json(lifted);
  r.diagnostics["bohr_mean"] = {{"re", bohr_mean(lifted).real()}, {"im", bohr_mean(lifted).imag()}};
  if (!c.csv.empty()) emit_samples(lifted, c.samples, c.csv, 2.0 * std::numbers::pi * 10.0);
}

void cmd_ahiezer(const RunConfig& c, const Settings& s, const Function& f, FactorReport& r) {
  check_alpha(c, f);
  if (c.alpha) r.order = order_json(s.order());
  const AhiezerPair p = ahiezer_from_factor(as_ap(f, s, c), c.box.value_or(Box{}));
  fill(r, p);
  if (!c.csv.empty()) emit_samples(p.S, c.samples, c.csv, 2.0 * std::numbers::pi * 10.0);
}

void cmd_verify_outer(const RunConfig& c, const Settings& s, const Function& f, FactorReport& r) {
  check_alpha(c, f);
  if (c.alpha) r.order = order_json(s.order());
  const bool circle = std::holds_alternative<TrigPoly>(f);
  const APFunc a = as_ap(f, s, c);
  // One period suffices on the circle; otherwise the box's x-range is used.
  const Box b = c.box.value_or(circle ? Box{0.0, 2.0 * std::numbers::pi, 1e-9, 5.0} : Box{-5.0, 5.0, 1e-9, 5.0});
  const ZeroFreeCertificate cert = certify_zero_free(a, b.x_min, b.x_max, b.y_min);
  r.flags["zero_free"] = cert.zero_free;
  r.diagnostics["zero_count"] = cert.zero_count;
  r.diagnostics["y_certified"] = cert.y_certified;
  r.diagnostics["boxes"] = cert.boxes.size();
  if (circle) {
    const OuterDiagnosis d = diagnose_outer(std::get<TrigPoly>(f), s.tol("outer_tol"));
    r.flags["jensen_outer"] = d.jensen_outer;
    r.flags["criteria_agree"] = d.jensen_outer == cert.zero_free;
    r.mahler = d.mahler;
  }
}

TrigPoly random_factor(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree(1, 8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  TrigPoly h;
  const int d = degree(rng);
  for (int k = 0; k <= d; ++k) h.coeffs.emplace(k, Complex{unit(rng), unit(rng)});
  return h;
}

void cmd_verify_fixtures(const RunConfig& c, const Settings& s, FactorReport& r) {
  if (c.count <= 0) invalid("count must be positive");
  std::mt19937_64 rng(c.seed);
  double worst = 0.0;
  int disagreements = 0;
  for (int i = 0; i < c.count; ++i) {
    const TrigPoly h = random_factor(rng);
    const TrigPoly w = squared_modulus(h);
    const RootFactorization f = fejer_riesz(w, s.roots());
    worst = std::max(worst, max_coeff_diff(squared_modulus(f.h), w));
    const bool outer = is_outer(h, s.tol("outer_tol"));
    const bool zero_free = certify_zero_free(lift(h), 0.0, 2.0 * std::numbers::pi).zero_free;
    if (outer != zero_free) ++disagreements;
  }
  r.residual = worst;
  r.flags["roundtrip_ok"] = worst < 1e-9;
  r.flags["criteria_agree"] = disagreements == 0;
  r.diagnostics["fixtures"] = c.count;
  r.diagnostics["disagreements"] = disagreements;
}

void cmd_compare(const RunConfig& c, const Settings& s, const Function& f, FactorReport& r) {
  const TrigPoly& w = need_trig(f, c.command);
  if (c.alpha) invalid("--alpha applies only to bivariate input");
  if (c.methods.size() < 2) invalid("compare needs at least two methods");
  std::vector<TrigPoly> hs;
  Json residuals;
  for (const std::string& m : c.methods) {
    FactorReport sub;
    hs.push_back(factor_circle(m, w, s, &sub));
    residuals[m] = sub.residual ? Json(*sub.residual) : Json(nullptr);
  }
  Json deltas;
  double worst = 0.0;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const double d = max_coeff_diff(hs[i], hs[j]);
      worst = std::max(worst, d);
      deltas[c.methods[i] + "/" + c.methods[j]] = d;
    }
  r.method = c.methods.front();
  r.factor = to_json(hs.front());
  r.residual = worst;
  r.flags["agree"] = worst < s.tol("compare_tol");
  r.diagnostics["deltas"] = deltas;
  r.diagnostics["residuals"] = residuals;
}

void dispatch(const RunConfig& c, const Settings& s, FactorReport& r) {
  if (c.command == "verify" && c.target == "fixtures") {
    cmd_verify_fixtures(c, s, r);
    return;
  }
  if (c.input.empty()) invalid(c.command + " needs --in");
  const Function f = read_function(c.input);
  r.kind = kind_name(f);
  r.config = s.echo(r.kind);
  if (c.command == "factor") cmd_factor(c, s, f, r);
  else if (c.command == "mahler") cmd_mahler(c, s, f, r);
  else if (c.command == "lift") cmd_lift(c, s, f, r);
  else if (c.command == "ahiezer") cmd_ahiezer(c, s, f, r);
  else if (c.command == "compare") cmd_compare(c, s, f, r);
  else if (c.command == "verify" && c.target == "outer") cmd_verify_outer(c, s, f, r);
  else if (c.command == "verify") invalid("verify target must be \"outer\" or \"fixtures\"");
  else invalid("unknown command \"" + c.command + "\"");
}

}  // namespace

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> defaults{
      {"compare_tol", 1e-5},  {"nonneg_tol", 1e-9},  {"nyquist_energy", 1e-8}, {"order_floor", 1e-9},
      {"outer_tol", 1e-9},    {"pair_tol", 1e-6},    {"truncation", 1e-10},
  };
  return defaults;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("SPECFACT_SEED");
  if (!s || !*s) return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  return *end == '\0' ? v : 1;
}

int run(const RunConfig& config, std::ostream& out) {
  FactorReport r;
  r.command = config.command;
  int code = kExitOk;
  try {
    const Settings s(config);
    r.config = s.echo("");
    dispatch(config, s, r);
  } catch (const Error& e) {
    r.error = e.code();
    r.error_message = e.what();
    code = is_validation(e.code()) ? kExitValidation : kExitNumerical;
  } catch (const std::exception& e) {
    r.error = ErrorCode::InvalidArgument;
    r.error_message = e.what();
    code = kExitValidation;
  }
  const Json j = to_json(r);
  if (config.output.empty()) {
    out << j.dump(2) << '\n';
  } else {
    try {
      write_json_file(config.output, j);
    } catch (const Error&) {
      out << j.dump(2) << '\n';
      return kExitValidation;
    }
  }
  return code;
}

}  // namespace specfact
