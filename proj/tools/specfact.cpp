#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specfact/cli.hpp"

namespace {

struct Raw {
  std::vector<double> ladder;
  std::vector<double> box;
  std::vector<std::string> tols;
  double alpha = 0.0;
};

void add_common(CLI::App* sub, specfact::RunConfig& cfg, Raw& raw) {
  sub->add_option("--in", cfg.input, "input JSON (trig, bivar or ap)");
  sub->add_option("--out", cfg.output, "report path (default: stdout)");
  sub->add_option("--csv", cfg.csv, "CSV samples path");
  sub->add_option("--samples", cfg.samples, "number of CSV samples (per axis on the torus)");
  sub->add_option("--alpha", raw.alpha, "slope of the winding line; required for bivar input");
  sub->add_option("--tol", raw.tols, "tolerance override name=value (repeatable)");
}

void add_factor_options(CLI::App* sub, specfact::RunConfig& cfg, Raw& raw) {
  sub->add_option("--grid", cfg.grid, "grid size, a power of two");
  sub->add_option("--order", cfg.order, "Levinson section order (0: 4 x degree)");
  sub->add_option("--ladder", raw.ladder, "m_max,n_max")->delimiter(',')->expected(2);
}

bool parse_tol(const std::string& s, std::string& name, double& value) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) return false;
  name = s.substr(0, eq);
  const char* first = s.data() + eq + 1;
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral factorization toolkit"};
  app.require_subcommand(1);
  specfact::RunConfig cfg;
  Raw raw;

  auto* factor = app.add_subcommand("factor", "outer factor of a nonnegative weight");
  factor->add_option("--method", cfg.method, "roots, cepstral or levinson")
      ->check(CLI::IsMember({"roots", "cepstral", "levinson"}));
  add_common(factor, cfg, raw);
  add_factor_options(factor, cfg, raw);

  auto* mahler = app.add_subcommand("mahler", "Mahler measure and inner-outer split of a polynomial");
  add_common(mahler, cfg, raw);

  auto* lift = app.add_subcommand("lift", "move a torus or circle polynomial to the line");
  add_common(lift, cfg, raw);

  auto* ahiezer = app.add_subcommand("ahiezer", "entire function and Ahiezer factor of a one-sided AP function");
  add_common(ahiezer, cfg, raw);
  ahiezer->add_option("--box", raw.box, "x0,x1,y0,y1")->delimiter(',')->expected(4);

  auto* verify = app.add_subcommand("verify", "outerness certificate or random fixture sweep");
  verify->add_option("target", cfg.target, "outer or fixtures")->required()->check(CLI::IsMember({"outer", "fixtures"}));
  add_common(verify, cfg, raw);
  verify->add_option("--box", raw.box, "x0,x1,y0,y1")->delimiter(',')->expected(4);
  verify->add_option("--count", cfg.count, "number of random fixtures");

  auto* compare = app.add_subcommand("compare", "factor with several methods and report pairwise deltas");
  add_common(compare, cfg, raw);
  add_factor_options(compare, cfg, raw);
  compare->add_option("--methods", cfg.methods, "comma-separated method list")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return specfact::kExitValidation;
  }

  for (const CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
  const CLI::App* used = app.get_subcommands().front();
  if (used->count("--alpha") > 0) cfg.alpha = raw.alpha;
  if (raw.ladder.size() == 2) {
    cfg.ladder.m_max = raw.ladder[0];
    cfg.ladder.n_max = static_cast<int>(raw.ladder[1]);
    if (static_cast<double>(cfg.ladder.n_max) != raw.ladder[1]) {
      std::cerr << "--ladder: n_max must be an integer\n";
      return specfact::kExitValidation;
    }
  }
  if (raw.box.size() == 4) cfg.box = specfact::Box{raw.box[0], raw.box[1], raw.box[2], raw.box[3]};
  for (const std::string& t : raw.tols) {
    std::string name;
    double value = 0.0;
    if (!parse_tol(t, name, value)) {
      std::cerr << "--tol expects name=value, got \"" << t << "\"\n";
      return specfact::kExitValidation;
    }
    cfg.tolerances[name] = value;
  }
  if (cfg.command == "verify" && cfg.target == "fixtures") cfg.seed = specfact::seed_from_env();
  return specfact::run(cfg, std::cout);
}
