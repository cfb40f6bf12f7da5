#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "qasc/cli.hpp"
#include "qasc/errors.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw qasc::InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qasc::cli;
  CLI::App app{"Eigenvalues, splitting fields and algebraic degrees of quasi-abelian semi-Cayley digraphs"};
  app.require_subcommand(1);

  std::string input = "-", format = "text";
  bool verify = false, undirected_only = false, integral_only = false, with_table = false;
  int max_classes = -1, primes = 64, height_cap = 4096, random = 0, threads = 0;
  std::int64_t cap = 2'000'000;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Input document (default: standard input)");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--probabilistic-primes", primes,
                    "Split primes tried before a non-square verdict is left undetermined")
        ->check(CLI::PositiveNumber);
    sub->add_option("--height-cap", height_cap, "Coefficient bit cap for square-root lifting")
        ->check(CLI::PositiveNumber);
  };
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues with multiplicities");
  auto* degree = app.add_subcommand("degree", "Full report: T, K, M, splitting field and degree");
  auto* integral = app.add_subcommand("integral", "Integrality verdict");
  auto* chartable = app.add_subcommand("chartable", "Character table of the input group");
  auto* census = app.add_subcommand("census", "Enumerate digraphs built from class unions");
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the pipeline against the oracles");
  for (auto* sub : {spectrum, degree, integral, chartable, census, verify_cmd}) add_common(sub);
  for (auto* sub : {spectrum, degree, integral, census})
    sub->add_flag("--verify", verify, "Run the brute-force oracles as well");
  for (auto* sub : {spectrum, degree})
    sub->add_flag("--chartable", with_table, "Include the character table");
  census->add_option("--max-classes", max_classes, "Classes per connection set (default: all)");
  census->add_flag("--undirected-only", undirected_only, "Only undirected digraphs");
  census->add_flag("--integral-only", integral_only, "List only integral digraphs");
  census->add_option("--cap", cap, "Largest enumeration allowed");
  census->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");
  verify_cmd->add_option("--random", random, "Random instances over the same group");
  verify_cmd->add_option("--seed", seed, "Seed for random instances");

  CLI11_PARSE(app, argc, argv);

  Outcome out;
  try {
    const std::string text = read_input(input);
    RunOptions run;
    run.sqrt.probabilistic_primes = primes;
    run.sqrt.height_cap_bits = height_cap;
    run.include_chartable = with_table;
    run.verify = verify;
    if (chartable->parsed() || census->parsed()) {
      // Only the group is needed; sets, if present, are ignored.
      auto doc = Json::parse(text);
      if (doc.is_object()) {
        doc.erase("sets");
      }
      const auto job = parse_job(doc);
      if (chartable->parsed()) {
        out = run_chartable(job.group);
      } else {
        CensusOptions c;
        c.max_classes = max_classes;
        c.undirected_only = undirected_only;
        c.integral_only = integral_only;
        c.verify = verify;
        c.cap = cap;
        c.threads = threads;
        c.sqrt = run.sqrt;
        out = run_census(job.group, c);
      }
    } else {
      const auto job = parse_job_text(text);
      if (spectrum->parsed()) out = run_spectrum(job, run);
      else if (degree->parsed()) out = run_report(job, run);
      else if (integral->parsed()) out = run_integral(job, run);
      else out = run_verify(job, run, random, seed);
    }
  } catch (const qasc::InputError& e) {
    out = {Json{{"status", "invalid_input"}, {"error", e.what()}}, ExitCode::invalid_input};
  } catch (const Json::exception& e) {
    out = {Json{{"status", "invalid_input"}, {"error", std::string("malformed document: ") + e.what()}},
           ExitCode::invalid_input};
  }
  if (format == "structured") std::cout << out.document.dump(2) << "\n";
  else std::cout << render_text(out.document);
  return out.exit_code;
}
