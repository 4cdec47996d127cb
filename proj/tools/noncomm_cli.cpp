// Command-line front end: named verification suites with seeded randomness,
// plus decomposition and Reynolds services on polynomial files.
//
// Exit codes: 0 all checks pass, 1 verification failure or non-invariant
// input, 2 usage or format errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <noncomm/noncomm.hpp>

namespace {

int run_suite_command(const std::string& suite, const noncomm::SuiteParams& params,
                      const std::string& format, const std::string& output) {
  noncomm::SuiteReport report;
  try {
    report = noncomm::run_suite(suite, params);
  } catch (const noncomm::UnsupportedError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }

  // Failing checks leave their witness next to the report.
  for (auto& check : report.checks) {
    if (check.pass || check.witness.is_null()) continue;
    check.witness_file = report.suite + "-" + check.name + "-witness.json";
    for (auto& ch : check.witness_file)
      if (ch == '[' || ch == ']' || ch == ',' || ch == '=' || ch == '/') ch = '_';
    std::ofstream w(check.witness_file);
    w << check.witness.dump(2) << "\n";
  }

  const std::string body = (format == "json")
                               ? noncomm::render_json(report).dump(2) + "\n"
                               : noncomm::render_text(report);
  if (!output.empty()) {
    std::ofstream os(output);
    if (!os) {
      std::cerr << "error: cannot open output file " << output << "\n";
      return 2;
    }
    os << body;
  }
  std::cout << body;
  for (const auto& check : report.checks)
    std::cerr << "time " << check.name << " " << check.wall_ms << " ms\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification workbench for reflection-group invariants"};

  std::string suite, family_str = "B", sign_str, c_str, format = "text";
  std::string input, output, op = "decompose";
  int n = 2;
  std::uint64_t seed = 0;
  int trials = 100;

  app.add_option("--suite", suite,
                 "suite name: weyl-involutions, phi-isomorphism, bn-invariants, dn-invariants, "
                 "discriminant-freeness, skew-invariance-J, idempotents, clearing");
  app.add_option("--group", family_str, "group family: S, B or D");
  app.add_option("--n", n, "rank");
  app.add_option("--sign", sign_str, "involution sign: plus or minus");
  app.add_option("--c", c_str, "involution parameter, a rational like 1/2");
  app.add_option("--seed", seed, "random seed (NONCOMM_SEED overrides)");
  app.add_option("--trials", trials, "randomized trial count");
  app.add_option("--format", format, "report format: text or json");
  app.add_option("--input", input, "input polynomial JSON file");
  app.add_option("--output", output, "output file");
  app.add_option("--op", op, "file operation: decompose or reynolds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    if (app.exit(ex) == 0) return 0;  // --help
    return 2;
  }

  if (const char* env_seed = std::getenv("NONCOMM_SEED")) {
    try {
      seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "error: NONCOMM_SEED is not a number\n";
      return 2;
    }
  }

  if (suite.empty() == input.empty()) {
    std::cerr << "error: provide exactly one of --suite or --input\n";
    return 2;
  }
  if (format != "text" && format != "json") {
    std::cerr << "error: unknown format " << format << "\n";
    return 2;
  }

  noncomm::SuiteParams params;
  params.n = n;
  params.seed = seed;
  params.trials = trials;
  try {
    if (!sign_str.empty())
      params.sign = (sign_str == "plus") ? noncomm::Sign::Plus
                    : (sign_str == "minus")
                        ? noncomm::Sign::Minus
                        : throw std::invalid_argument("unknown sign: " + sign_str);
    if (!c_str.empty()) params.c = noncomm::rational_from_string(c_str);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }

  if (!suite.empty()) {
    if (app.count("--group")) {
      try {
        params.family = noncomm::family_from_string(family_str);
        noncomm::check_group_spec({*params.family, params.n});
      } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
      }
    }
    return run_suite_command(suite, params, format, output);
  }

  // file services
  if (output.empty()) {
    std::cerr << "error: --output is required with --input\n";
    return 2;
  }
  noncomm::Family family;
  try {
    family = noncomm::family_from_string(family_str);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  const noncomm::GroupSpec spec{family, n};

  if (op == "decompose") {
    noncomm::Basis basis;
    if (family == noncomm::Family::D) {
      basis = noncomm::Basis::D;
    } else if (family == noncomm::Family::B) {
      basis = (params.sign.value_or(noncomm::Sign::Minus) == noncomm::Sign::Minus)
                  ? noncomm::Basis::BMinus
                  : noncomm::Basis::BPlus;
    } else {
      std::cerr << "error: decomposition bases exist for families B and D\n";
      return 2;
    }
    try {
      return noncomm::decompose_file(basis, input, output, std::cout, std::cerr);
    } catch (const std::exception& ex) {
      std::cerr << "error: " << ex.what() << "\n";
      return 2;
    }
  }
  if (op == "reynolds") {
    const noncomm::Action variant =
        (family == noncomm::Family::S)
            ? noncomm::Action::Linear
            : (params.sign.value_or(family == noncomm::Family::D ? noncomm::Sign::Plus
                                                                 : noncomm::Sign::Minus) ==
               noncomm::Sign::Minus)
                ? noncomm::Action::TorusMinus
                : noncomm::Action::TorusPlus;
    try {
      return noncomm::reynolds_file(spec, variant, input, output, std::cout, std::cerr);
    } catch (const std::exception& ex) {
      std::cerr << "error: " << ex.what() << "\n";
      return 2;
    }
  }
  std::cerr << "error: unknown operation " << op << "\n";
  return 2;
}
