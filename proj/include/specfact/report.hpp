#ifndef SPECFACT_REPORT_HPP
#define SPECFACT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "specfact/ahiezer.hpp"
#include "specfact/arch_order.hpp"
#include "specfact/error.hpp"
#include "specfact/factor_cepstral.hpp"
#include "specfact/factor_levinson.hpp"
#include "specfact/factor_roots.hpp"
#include "specfact/serialize.hpp"

namespace specfact {

/// Everything a run writes out. Fields left empty are emitted as null so the
/// key set is fixed for a given command.
struct FactorReport {
  std::string command;
  std::string method;
  std::string kind;
  Json factor;
  std::vector<Complex> roots;
  std::optional<double> mahler;
  std::optional<double> residual;
  Json flags = Json::object();
  Json diagnostics = Json::object();
  /// alpha, floor and tag of the order, when one was used.
  Json order;
  Json config = Json::object();
  std::optional<ErrorCode> error;
  std::string error_message;
};

Json to_json(const FactorReport& r);

Json order_json(const ArchOrder& ord);

/// Report fields filled from each algorithm's result.
void fill(FactorReport& r, const RootFactorization& f, const MahlerQuadrature& q);
void fill(FactorReport& r, const CepstralTrace<TrigPoly>& t);
void fill(FactorReport& r, const OrderedTrace& t);
void fill(FactorReport& r, const SzegoFactor& f);
void fill(FactorReport& r, const AhiezerPair& p);

Json ladder_json(const std::vector<LadderStage>& stages);

}  // namespace specfact

#endif  // SPECFACT_REPORT_HPP
