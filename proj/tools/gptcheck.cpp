// gptcheck: run verification suites against a theory spec.
//
//   gptcheck --theory qubit.theory --suite all --seed 42 --format structured
//
// Exit status: 0 when every check passes (or fails as expected), 1 when some
// check does not, 2 on bad input.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpt/cli/suites.hpp"

int main(int argc, char** argv) {
  using namespace gpt::cli;
  CLI::App app{"Verify operational GPT identities on quantum and classical theories"};
  app.set_version_flag("--version", version());

  std::string theory_path, suite = "all", format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::vector<std::string> expect_fail;
  bool timing = false;
  int samples = 100;

  app.add_option("--theory", theory_path, "Theory spec file")->required()->check(CLI::ExistingFile);
  app.add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_names()));
  app.add_option("--seed", seed, "Master seed (overrides the theory file)");
  app.add_option("--tol", tol, "Probability tolerance (overrides the theory file)")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--expect-fail", expect_fail, "Check expected to fail (name or prefix.*); repeatable");
  app.add_option("--samples", samples, "Samples per property check")->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "Record wall-clock time per check (breaks byte-identical output)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors share the bad-input code.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    TheorySpec spec = load_theory(theory_path);
    if (seed) spec.seed = *seed;
    if (tol) spec.tol.probability = *tol;
    Report report = run_suite(spec, suite, {timing, samples});
    report.expect_fail(std::set<std::string>(expect_fail.begin(), expect_fail.end()));
    emit_report(report, parse_format(format), std::cout);
    return report.exit_code();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
