#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "isoprod/document.hpp"
#include "isoprod/error.hpp"
#include "isoprod/examples.hpp"
#include "isoprod/report.hpp"
#include "isoprod/search.hpp"

namespace {

using isoprod::Error;
using isoprod::ErrorCode;
using isoprod::document::Json;

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::kConsistency:
    case ErrorCode::kTheoremViolation:
      return 3;
    default:
      return 2;
  }
}

struct Options {
  std::string format = "text";
  bool oracle = false;
  std::uint64_t seed = 0;
};

void emit(const Json& j, const Options& opt) {
  if (opt.format == "json")
    std::cout << isoprod::document::dump(j);
  else
    std::cout << isoprod::report::render_text(j);
}

int run_datum(const isoprod::AlgebraicDatum& d, isoprod::report::Sections s, const Options& opt,
              const std::string& provenance = {}) {
  s.oracle = opt.oracle;
  const Json r = isoprod::report::datum_report(d, s, provenance);
  emit(r, opt);
  return isoprod::report::validation_failed(r) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerically trivial automorphisms of threefolds isogenous to a product"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--oracle", opt.oracle, "Cross-check against the brute-force oracle");
  app.add_option("--seed", opt.seed, "Seed for the search work partition");

  using Sections = isoprod::report::Sections;
  struct FileCommand {
    const char* name;
    const char* help;
    Sections sections;
  };
  const FileCommand file_commands[] = {
      {"validate", "Validate a datum document", {}},
      {"report", "Full report", isoprod::report::all_sections()},
      {"aut0", "Aut0 with generators", {false, false, true, false, false}},
      {"kernels", "Representation kernels G_{p,q}", {false, false, false, true, false}},
      {"hodge", "Hodge diamond and invariants", {true, true, false, false, false}},
  };
  std::string file;
  const FileCommand* chosen = nullptr;
  for (const auto& fc : file_commands) {
    auto* sub = app.add_subcommand(fc.name, fc.help);
    sub->add_option("file", file, "Datum JSON document")->required();
    sub->callback([&chosen, &fc] { chosen = &fc; });
  }

  std::string example_name, params;
  bool datum_only = false;
  auto* example = app.add_subcommand("example", "Report on a built-in example");
  example->add_option("name", example_name, "example1 | example2a | example2b | example3 | example4")
      ->required();
  example->add_option("--param", params, "n1=..,n2=..,n3=.. or n=..");
  example->add_flag("--datum", datum_only, "Print the datum document only");

  std::string spec_file;
  auto* search = app.add_subcommand("search", "Survey Aut0 over a bounded space of data");
  search->add_option("specfile", spec_file, "Search specification JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (chosen != nullptr)
      return run_datum(isoprod::document::parse_datum(isoprod::document::read_file(file)),
                       chosen->sections, opt);
    if (example->parsed()) {
      const auto d = isoprod::examples::build(example_name, isoprod::examples::parse_params(params));
      if (datum_only) {
        std::cout << isoprod::document::dump(isoprod::document::datum_json(d));
        return 0;
      }
      return run_datum(d, isoprod::report::all_sections(), opt,
                       isoprod::examples::provenance(example_name));
    }
    auto spec = isoprod::document::parse_search_spec(isoprod::document::read_file(spec_file));
    spec.seed = opt.seed;
    emit(isoprod::report::survey_report(isoprod::survey(spec)), opt);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error [" << isoprod::code_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e.code());
  }
}
