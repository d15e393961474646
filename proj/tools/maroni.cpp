// maroni: boundary coefficients of extended Maroni classes on compactified
// Hurwitz spaces.
//
//   maroni classes --d 3 --g 2 --variant st --format csv
//   maroni table1
//   maroni table2 --g 6
//   maroni patel --d 4 --g 6
//   maroni verify --suite all --radius 3 --max-d 5 --max-g 16
//
// Exit status: 0 success, 1 a check failed, 2 usage error.

#include "maroni/maroni.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  int d = 0;
  int g = 0;
  std::string variant = "st";
  std::string format = "table";
  std::string suite = "all";
  int radius = 3;
  int max_d = 5;
  int max_g = 16;
  bool tie_exhaustive = false;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
}

int run(CLI::App& app, Options& o) {
  using namespace maroni;
  const auto format = parse_format(o.format);

  if (app.got_subcommand("classes")) {
    const auto params = HurwitzParams::make(o.d, o.g);
    const auto table = build_table(params, parse_variant(o.variant), o.tie_exhaustive);
    std::cout << render(class_table(table), format);
    return kOk;
  }
  if (app.got_subcommand("table1")) {
    const auto report = table1_report();
    std::cout << render(table1_table(report), format);
    return report.all_pass() ? kOk : kCheckFailed;
  }
  if (app.got_subcommand("table2")) {
    if (o.g < 4 || o.g % 2 != 0) {
      throw DomainError("table2 compares trigonal covers (d=3) and needs an even genus g >= 4, got g=" +
                        std::to_string(o.g));
    }
    const auto report = dp_trigonal_check(o.g);
    std::cout << render(table2_table(report), format);
    return report.all_pass() ? kOk : kCheckFailed;
  }
  if (app.got_subcommand("patel")) {
    const auto params = HurwitzParams::make(o.d, o.g);
    std::cout << render(patel_table(params), format);
    for (const auto& row : patel_rows(params)) {
      if (!row.pass) return kCheckFailed;
    }
    return kOk;
  }
  if (app.got_subcommand("verify")) {
    VerifyOptions vo;
    vo.radius = o.radius;
    vo.max_d = o.max_d;
    vo.max_g = o.max_g;
    vo.tie_exhaustive = o.tie_exhaustive;
    const auto report = run_verify(o.suite, vo);
    std::cout << render(report);
    return report.ok() ? kOk : kCheckFailed;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary coefficients of extended Maroni classes"};
  app.require_subcommand(1);
  Options o;

  auto* classes = app.add_subcommand("classes", "Coefficient table for one (d, g)");
  classes->add_option("--d", o.d, "Degree of the covers (d >= 3)")->required();
  classes->add_option("--g", o.g, "Genus, g=(d-1)k")->required();
  classes->add_option("--variant", o.variant, "st, corr1, corr2 or min")
      ->check(CLI::IsMember({"st", "corr1", "corr2", "min"}));
  classes->add_flag("--tie-exhaustive", o.tie_exhaustive, "Follow every tie branch when rounding");
  add_format(classes, o);

  auto* table1 = app.add_subcommand("table1", "Positive first corrections for d = 3, 4, 5");
  add_format(table1, o);

  auto* table2 = app.add_subcommand("table2", "Trigonal comparison for an even genus");
  table2->add_option("--g", o.g, "Even genus g >= 4")->required();
  add_format(table2, o);

  auto* patel = app.add_subcommand("patel", "Coefficients at j=2 against their closed forms");
  patel->add_option("--d", o.d, "Degree of the covers (d >= 3)")->required();
  patel->add_option("--g", o.g, "Genus, g=(d-1)k")->required();
  add_format(patel, o);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", o.suite, "lattice, identities, tables or all")
      ->check(CLI::IsMember({"lattice", "identities", "tables", "all"}));
  verify->add_option("--radius", o.radius, "Box radius for integer-max scans")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-d", o.max_d, "Largest degree")->check(CLI::Range(3, 12));
  verify->add_option("--max-g", o.max_g, "Largest genus")->check(CLI::PositiveNumber);
  verify->add_flag("--tie-exhaustive", o.tie_exhaustive, "Follow every tie branch when rounding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run(app, o);
  } catch (const maroni::InvariantError& e) {
    std::cerr << "maroni: internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "maroni: " << e.what() << '\n';
    return kUsage;
  }
}
