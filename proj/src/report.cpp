#include "specfact/report.hpp"

namespace specfact {
namespace {

template <class T>
Json or_null(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json order_json(const ArchOrder& ord) {
  Json j{{"alpha", ord.alpha}, {"floor", ord.floor}};
  j["tag"] = ord.tag.empty() ? Json(nullptr) : Json(ord.tag);
  return j;
}

Json ladder_json(const std::vector<LadderStage>& stages) {
  Json out = Json::array();
  for (const LadderStage& s : stages)
    out.push_back({{"m", s.m},
                   {"n", s.n},
                   {"grid_min", s.grid_min},
                   {"l2_delta", s.l2_delta},
                   {"min_abs_h", s.min_abs_h},
                   {"inverse_leak", s.inverse_leak},
                   {"invertible_certified", s.invertible_certified}});
  return out;
}

Json to_json(const FactorReport& r) {
  Json j;
  j["command"] = r.command;
  j["method"] = r.method.empty() ? Json(nullptr) : Json(r.method);
  j["kind"] = r.kind.empty() ? Json(nullptr) : Json(r.kind);
  j["factor"] = r.factor;
  Json roots = Json::array();
  for (const Complex& z : r.roots) roots.push_back({{"re", z.real()}, {"im", z.imag()}});
  j["roots"] = roots;
  j["mahler"] = or_null(r.mahler);
  j["residual"] = or_null(r.residual);
  j["flags"] = r.flags;
  j["diagnostics"] = r.diagnostics;
  j["order"] = r.order;
  j["config"] = r.config;
  if (r.error) {
    j["error"] = {{"name", std::string(error_name(*r.error))},
                  {"kind", is_validation(*r.error) ? "validation" : "numerical"},
                  {"message", r.error_message}};
  } else {
    j["error"] = nullptr;
  }
  return j;
}

void fill(FactorReport& r, const RootFactorization& f, const MahlerQuadrature& q) {
  r.factor = to_json(f.h);
  r.roots = f.roots;
  r.mahler = mahler_jensen(f.h);
  r.residual = f.residual;
  r.flags["boundary_pairs"] = f.boundary_pairs;
  r.flags["clipped_samples"] = q.clipped;
  r.diagnostics["mahler_quadrature"] = q.value;
  r.diagnostics["grid_min"] = f.grid_min;
  r.diagnostics["scale"] = {{"re", f.scale.real()}, {"im", f.scale.imag()}};
}

void fill(FactorReport& r, const CepstralTrace<TrigPoly>& t) {
  r.factor = to_json(t.h);
  r.mahler = std::abs(t.h[0]);
  r.residual = t.residual;
  r.flags["ladder_monotone"] = t.ladder_monotone;
  r.flags["invertible_certified"] = !t.ladder.empty() && t.ladder.back().invertible_certified;
  r.diagnostics["ladder"] = ladder_json(t.ladder);
}

void fill(FactorReport& r, const OrderedTrace& t) {
  r.factor = to_json(t.h);
  r.mahler = std::abs(t.h[{0, 0}]);
  r.residual = t.residual;
  r.flags["ladder_monotone"] = t.ladder_monotone;
  r.flags["invertible_certified"] = !t.ladder.empty() && t.ladder.back().invertible_certified;
  r.flags["spectrum_contained"] = t.containment.margin >= -1e-8;
  r.diagnostics["ladder"] = ladder_json(t.ladder);
  r.diagnostics["containment"] = {{"tau", t.containment.tau},
                                  {"min_freq", t.containment.min_freq},
                                  {"max_freq", t.containment.max_freq},
                                  {"margin", t.containment.margin}};
  r.diagnostics["lifted"] = to_json(t.lifted);
}

void fill(FactorReport& r, const SzegoFactor& f) {
  r.factor = to_json(f.h);
  r.mahler = f.sqrt_eps;
  r.residual = f.residual;
  r.flags["minimum_phase"] = f.min_root_modulus >= 1.0 - 1e-8;
  Json refl = Json::array();
  for (const Complex& k : f.section.reflection) refl.push_back({{"re", k.real()}, {"im", k.imag()}});
  r.diagnostics["order"] = f.section.n;
  r.diagnostics["eps"] = f.section.eps;
  r.diagnostics["mahler_w"] = f.mahler_w;
  r.diagnostics["gap"] = f.gap;
  r.diagnostics["flatness"] = f.section.flatness;
  r.diagnostics["min_abs_predictor"] = f.min_abs_predictor;
  r.diagnostics["min_root_modulus"] = f.min_root_modulus;
  r.diagnostics["reflection"] = refl;
}

void fill(FactorReport& r, const AhiezerPair& p) {
  r.factor = to_json(p.S);
  r.residual = p.identity_residual;
  r.flags["spectrum_contained"] = p.spectrum_contained;
  r.diagnostics["F"] = to_json(p.F);
  r.diagnostics["tau"] = p.tau;
  r.diagnostics["containment_margin"] = p.containment_margin;
  r.diagnostics["upper_zero_count"] = or_null(p.upper_zero_count);
}

}  // namespace specfact
