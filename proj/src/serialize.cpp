#include "specfact/serialize.hpp"

#include <fstream>
#include <sstream>

#include "specfact/error.hpp"

namespace specfact {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const Json& entry, const char* key) {
  const auto it = entry.find(key);
  if (it == entry.end()) bad(std::string("coefficient entry lacks \"") + key + "\"");
  if (!it->is_number()) bad(std::string("\"") + key + "\" must be a number");
  return it->get<double>();
}

int integer(const Json& v) {
  if (!v.is_number_integer()) bad("lattice index must be an integer");
  const auto x = v.get<long long>();
  if (x < -(1LL << 30) || x > (1LL << 30)) bad("lattice index out of range");
  return static_cast<int>(x);
}

const Json& coeff_array(const Json& j, const char* kind) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto k = j.find("kind");
  if (k == j.end() || !k->is_string()) bad("missing \"kind\"");
  if (k->get<std::string>() != kind) bad("expected kind \"" + std::string(kind) + "\", got \"" + k->get<std::string>() + "\"");
  const auto c = j.find("coeffs");
  if (c == j.end() || !c->is_array()) bad("missing \"coeffs\" array");
  return *c;
}

Complex value(const Json& entry) { return {number(entry, "re"), number(entry, "im")}; }

const Json& index_array(const Json& entry, std::size_t len) {
  const auto it = entry.find("k");
  if (it == entry.end() || !it->is_array() || it->size() != len)
    bad("\"k\" must be an array of " + std::to_string(len) + " integer(s)");
  return *it;
}

}  // namespace

Json to_json(const TrigPoly& p) {
  Json coeffs = Json::array();
  for (const auto& [k, c] : p.coeffs) coeffs.push_back({{"k", {k}}, {"re", c.real()}, {"im", c.imag()}});
  return {{"kind", "trig"}, {"coeffs", coeffs}};
}

Json to_json(const BivarPoly& p) {
  Json coeffs = Json::array();
  for (const auto& [k, c] : p.coeffs)
    coeffs.push_back({{"k", {k.first, k.second}}, {"re", c.real()}, {"im", c.imag()}});
  return {{"kind", "bivar"}, {"coeffs", coeffs}};
}

Json to_json(const APFunc& f) {
  Json coeffs = Json::array();
  for (const auto& [omega, c] : f.coeffs()) coeffs.push_back({{"omega", omega}, {"re", c.real()}, {"im", c.imag()}});
  return {{"kind", "ap"}, {"coeffs", coeffs}};
}

Json to_json(const Function& f) {
  return std::visit([](const auto& x) { return to_json(x); }, f);
}

TrigPoly trig_from_json(const Json& j) {
  TrigPoly p;
  for (const Json& e : coeff_array(j, "trig")) {
    const int k = integer(index_array(e, 1)[0]);
    if (!p.coeffs.emplace(k, value(e)).second) bad("duplicate index " + std::to_string(k));
  }
  return p;
}

BivarPoly bivar_from_json(const Json& j) {
  BivarPoly p;
  for (const Json& e : coeff_array(j, "bivar")) {
    const Json& k = index_array(e, 2);
    const Lattice key{integer(k[0]), integer(k[1])};
    if (!p.coeffs.emplace(key, value(e)).second)
      bad("duplicate index (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
  }
  return p;
}

APFunc ap_from_json(const Json& j) {
  APFunc f;
  for (const Json& e : coeff_array(j, "ap")) f.add(number(e, "omega"), value(e));
  return f;
}

Function function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("missing \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "trig") return trig_from_json(j);
  if (kind == "bivar") return bivar_from_json(j);
  if (kind == "ap") return ap_from_json(j);
  bad("unknown kind \"" + kind + "\"");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

Function read_function(const std::filesystem::path& path) { return function_from_json(read_json_file(path)); }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + path.string());
}

const char* kind_name(const Function& f) {
  switch (f.index()) {
    case 0: return "trig";
    case 1: return "bivar";
    default: return "ap";
  }
}

}  // namespace specfact
