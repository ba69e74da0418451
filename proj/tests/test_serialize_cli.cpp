#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "doctest.h"
#include "specfact/arch_order.hpp"
#include "specfact/cli.hpp"
#include "specfact/error.hpp"
#include "specfact/samples.hpp"
#include "specfact/serialize.hpp"
#include "support.hpp"

using namespace specfact;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    function_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "specfact_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::vector<double>> read_csv(const fs::path& p, std::string* header = nullptr) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

Json run_json(const RunConfig& c, int* code) {
  std::ostringstream out;
  *code = run(c, out);
  return Json::parse(out.str());
}

fs::path write_input(const std::string& name, const Function& f) {
  const fs::path p = scratch(name);
  write_json_file(p, to_json(f));
  return p;
}

}  // namespace

TEST_CASE("json round trip is exact") {
  Rng rng(3);
  TrigPoly t;
  for (int k = -5; k <= 5; ++k) t.coeffs[k] = rng.unit_box() / 3.0;
  BivarPoly b;
  b.coeffs[{-2, 7}] = Complex{0.1, -1e-300};
  b.coeffs[{1 << 30, -(1 << 30)}] = Complex{1.0 / 7.0, 0.0};
  const APFunc a{{std::sqrt(2.0), Complex{0.3, 0.7}}, {-std::numbers::e, Complex{-1e17, 5e-324}}};

  for (const Function& f : {Function{t}, Function{b}, Function{a}}) {
    const Function back = function_from_json(Json::parse(to_json(f).dump()));
    CHECK(back == f);
    const fs::path p = scratch("round.json");
    write_json_file(p, to_json(f));
    CHECK(read_function(p) == f);
  }
  CHECK(std::string(kind_name(Function{b})) == "bivar");
}

TEST_CASE("json schema violations") {
  CHECK(parse_code(R"({"coeffs": []})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"kind": "spline", "coeffs": []})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"kind": "trig"})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"kind": "trig", "coeffs": [{"k": [1], "re": 1}]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"kind": "trig", "coeffs": [{"k": [1.5], "re": 1, "im": 0}]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"kind": "trig", "coeffs": [{"k": [1, 2], "re": 1, "im": 0}]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"kind": "trig", "coeffs": [{"k": [1], "re": "1", "im": 0}]})") == ErrorCode::ParseError);
  CHECK(parse_code(R"({"kind": "trig", "coeffs": [{"k": [1], "re": 1, "im": 0}, {"k": [1], "re": 2, "im": 0}]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"kind": "bivar", "coeffs": [{"k": [0, 3000000000], "re": 1, "im": 0}]})") ==
        ErrorCode::ParseError);
  CHECK(parse_code(R"({"kind": "ap", "coeffs": [{"re": 1, "im": 0}]})") == ErrorCode::ParseError);
  CHECK(parse_code("[1, 2]") == ErrorCode::ParseError);
  const fs::path p = scratch("broken.json");
  std::ofstream(p) << "{\"kind\": ";
  CHECK_THROWS_AS(read_function(p), Error);
  CHECK_THROWS_AS(read_function(scratch("missing.json")), Error);
}

TEST_CASE("emit_samples examples") {
  const fs::path p = scratch("s.csv");
  std::string header;
  emit_samples(Function{TrigPoly{{0, 1.0}}}, 4, p);
  auto rows = read_csv(p, &header);
  CHECK(header == "x,re,im");
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r[1] == 1.0);
    CHECK(r[2] == 0.0);
  }

  emit_samples(Function{one_plus(1.0)}, 8, p);
  rows = read_csv(p);
  REQUIRE(rows.size() == 8);
  CHECK(rows[4][0] == doctest::Approx(kPi));
  CHECK(std::abs(rows[4][1]) <= 1e-12);

  const ArchOrder ord(std::sqrt(2.0));
  const APFunc lifted = lift(ord, BivarPoly{{{0, 0}, 1.0}, {{1, 0}, 0.5}, {{0, 1}, 1.0 / 3.0}});
  emit_samples(Function{lifted}, 64, p, 2.0 * kPi * 10.0);
  rows = read_csv(p);
  REQUIRE(rows.size() == 64);
  for (const auto& r : rows) {
    const Complex v = ref_eval(lifted, Complex{r[0], 0.0});
    CHECK(std::abs(Complex{r[1], r[2]} - v) <= 1e-12);
  }
  CHECK(rows.back()[0] < 2.0 * kPi * 10.0);

  emit_samples(Function{BivarPoly{{{1, 0}, 1.0}}}, 4, p);
  rows = read_csv(p, &header);
  CHECK(header == "x,y,re");
  CHECK(rows.size() == 16);

  emit_fit(one_plus(0.5), TrigPoly{{0, 1.0}, {1, 0.5}}, 16, p);
  rows = read_csv(p, &header);
  CHECK(header == "x,w,h_sq");
  for (const auto& r : rows) CHECK(std::abs(r[1] - r[2]) < 1e-14);
}

TEST_CASE("run: factor, errors and compare") {
  RunConfig c;
  c.command = "factor";
  c.method = "roots";
  c.input = write_input("boundary.json", Function{one_plus(1.0)}).string();
  int code = -1;
  Json j = run_json(c, &code);
  CHECK(code == kExitOk);
  CHECK(j["error"].is_null());
  const TrigPoly h = trig_from_json(j["factor"]);
  CHECK(max_abs_diff(h, TrigPoly{{0, 1.0}, {1, 1.0}}) < 1e-7);
  CHECK(j["flags"]["boundary_pairs"] == 1);

  c.method = "levinson";
  c.input = write_input("indefinite.json", Function{TrigPoly{{-1, 1.0}, {0, 1.0}, {1, 1.0}}}).string();
  j = run_json(c, &code);
  CHECK(code == kExitValidation);
  CHECK(j["error"]["name"] == "NotNonnegative");
  CHECK(j["error"]["kind"] == "validation");

  c.method = "cepstral";
  c.input = write_input("boundary.json", Function{one_plus(1.0)}).string();
  j = run_json(c, &code);
  CHECK(code == kExitNumerical);
  CHECK(j["error"]["name"] == "NonpositiveStage");

  RunConfig cmp;
  cmp.command = "compare";
  cmp.input = write_input("half.json", Function{one_plus(0.5)}).string();
  j = run_json(cmp, &code);
  CHECK(code == kExitOk);
  CHECK(j["flags"]["agree"] == true);
  for (const auto& [pair, d] : j["diagnostics"]["deltas"].items()) CHECK(d.get<double>() < 1e-5);
  CHECK(j["diagnostics"]["deltas"].size() == 3);

  // Reports are byte-identical across repeated runs.
  std::ostringstream a, b;
  run(cmp, a);
  run(cmp, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("run: configuration validation") {
  RunConfig c;
  c.command = "factor";
  c.input = write_input("half.json", Function{one_plus(0.5)}).string();
  int code = -1;

  c.grid = 1000;
  c.method = "cepstral";
  run_json(c, &code);
  CHECK(code == kExitValidation);

  c.grid = 0;
  c.alpha = std::sqrt(2.0);
  run_json(c, &code);
  CHECK(code == kExitValidation);

  c.alpha.reset();
  c.tolerances["no_such_tol"] = 1.0;
  run_json(c, &code);
  CHECK(code == kExitValidation);

  c.tolerances.clear();
  c.input = scratch("missing.json").string();
  Json j = run_json(c, &code);
  CHECK(code == kExitValidation);
  CHECK(j["error"]["name"] == "ParseError");

  c.input = write_input("bivar.json", Function{BivarPoly{{{0, 0}, 4.0}}}).string();
  run_json(c, &code);
  CHECK(code == kExitValidation);  // bivariate input needs --alpha
  c.alpha = std::sqrt(2.0);
  j = run_json(c, &code);
  CHECK(code == kExitOk);
  CHECK(std::abs(bivar_from_json(j["factor"])[{0, 0}] - 2.0) < 1e-14);
}

TEST_CASE("run: mahler, lift, ahiezer and verify") {
  RunConfig c;
  int code = -1;
  c.command = "mahler";
  c.input = write_input("inner.json", Function{TrigPoly{{0, 1.0}, {1, 2.0}}}).string();
  Json j = run_json(c, &code);
  CHECK(code == kExitOk);
  CHECK(j["mahler"].get<double>() == doctest::Approx(2.0));

  c.command = "lift";
  c.alpha = std::sqrt(2.0);
  c.input = write_input("g.json", Function{BivarPoly{{{0, 0}, 1.0}, {{1, 0}, 0.5}, {{0, 1}, 1.0 / 3.0}}}).string();
  c.csv = scratch("lift.csv").string();
  j = run_json(c, &code);
  CHECK(code == kExitOk);
  CHECK(ap_from_json(j["factor"]).at(std::sqrt(2.0)) == Complex{1.0 / 3.0, 0.0});
  CHECK(fs::exists(c.csv));

  c = RunConfig{};
  c.command = "ahiezer";
  c.input = write_input("ap.json", Function{APFunc{{0.0, 1.0}, {1.0, 0.5}}}).string();
  j = run_json(c, &code);
  CHECK(code == kExitOk);
  CHECK(ap_from_json(j["factor"]).at(-0.5) == Complex{1.0, 0.0});

  c = RunConfig{};
  c.command = "verify";
  c.target = "outer";
  c.input = write_input("outer.json", Function{TrigPoly{{0, 1.0}, {1, 0.5}}}).string();
  j = run_json(c, &code);
  CHECK(code == kExitOk);
  CHECK(j["diagnostics"]["zero_count"] == 0);

  c.target = "fixtures";
  c.count = 5;
  j = run_json(c, &code);
  CHECK(code == kExitOk);
  CHECK(j["diagnostics"]["disagreements"] == 0);
}

TEST_CASE("command-line binary") {
  const fs::path in = write_input("bin.json", Function{one_plus(1.0)});
  const fs::path out = scratch("bin_report.json");
  const std::string exe = SPECFACT_EXE;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status(exe + " factor --method roots --in " + in.string() + " --out " + out.string()) == 0);
  const Json j = read_json_file(out);
  CHECK(max_abs_diff(trig_from_json(j["factor"]), TrigPoly{{0, 1.0}, {1, 1.0}}) < 1e-7);
  CHECK(status(exe + " factor --method cepstral --in " + in.string()) == 3);
  CHECK(status(exe + " factor --method bogus --in " + in.string()) == 2);
  CHECK(status(exe + " factor --grid notanumber --in " + in.string()) == 2);
  CHECK(status(exe + " factor --method cepstral --ladder 100,0 --in " + in.string()) == 0);
}
