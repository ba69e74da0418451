#ifndef SPECFACT_SERIALIZE_HPP
#define SPECFACT_SERIALIZE_HPP

#include <filesystem>
#include <string>
#include <variant>

#include "json.hpp"
#include "specfact/ap_func.hpp"
#include "specfact/trig_poly.hpp"

namespace specfact {

using Json = nlohmann::ordered_json;

/// Any coefficient object the file format can carry.
using Function = std::variant<TrigPoly, BivarPoly, APFunc>;

Json to_json(const TrigPoly& p);
Json to_json(const BivarPoly& p);
Json to_json(const APFunc& f);
Json to_json(const Function& f);

/// Dispatches on "kind". Throws ParseError on any schema violation.
Function function_from_json(const Json& j);
TrigPoly trig_from_json(const Json& j);
BivarPoly bivar_from_json(const Json& j);
APFunc ap_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
Function read_function(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline. Throws InvalidArgument on I/O failure.
void write_json_file(const std::filesystem::path& path, const Json& j);

const char* kind_name(const Function& f);

}  // namespace specfact

#endif  // SPECFACT_SERIALIZE_HPP
