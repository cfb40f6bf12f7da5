#include "qasc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "qasc/errors.hpp"

namespace qasc::cli {
namespace {

const char* kSymmetric = R"J({
  "group": {"kind": "symmetric", "params": {"n": 3}},
  "sets": {"t11": ["(1 2)"], "t22": ["(1 2 3)"], "t12": ["(1 2)"], "t21": ["(1 2)"]}
})J";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GroupSpec group(const std::string& kind, Json params) { return {kind, std::move(params)}; }

TEST(Cli, ParseAndRoundTrip) {
  const auto spec = parse_job_text(kSymmetric);
  EXPECT_EQ(spec.group.kind, "symmetric");
  EXPECT_TRUE(spec.strict);
  EXPECT_FALSE(spec.verify);
  EXPECT_EQ(parse_job(render_job(spec)), spec);

  JobSpec other;
  other.group = group("table", {{"table", {{0, 1}, {1, 0}}}, {"labels", {"e", "x"}}});
  other.sets[0] = {SetSpec::Form::elements, {"x"}};
  other.sets[3] = {SetSpec::Form::classes, {"G"}};
  other.strict = false;
  other.verify = true;
  EXPECT_EQ(parse_job(render_job(other)), other);
  EXPECT_EQ(render_job(other)["sets"]["t22"], "empty");
}

TEST(Cli, InputFilesResolveToFixtures) {
  for (const auto& [file, degree] :
       std::vector<std::pair<std::string, int>>{{"s3", 4}, {"a4", 2}, {"d10", 4}}) {
    const auto spec = parse_job_text(read_file(std::string(QASC_SOURCE_DIR) + "/inputs/" + file + ".json"));
    const auto out = run_report(spec, {});
    ASSERT_EQ(out.exit_code, ExitCode::ok) << out.document.dump();
    EXPECT_EQ(out.document["field"]["degree"], degree) << file;
  }
}

TEST(Cli, Rejections) {
  EXPECT_THROW(parse_job_text("{"), InputError);
  EXPECT_THROW(parse_job_text(R"J({"sets": {}})J"), InputError);
  EXPECT_THROW(parse_job_text(R"J({"group": {"kind": "cyclic"}, "sets": {"t13": []}})J"),
               InputError);
  EXPECT_THROW(parse_job_text(R"J({"group": {"kind": "cyclic"}, "sets": {"t11": "all"}})J"),
               InputError);
  EXPECT_THROW(parse_job_text(R"J({"group": {"kind": "cyclic"}, "options": {"strict": 1}})J"),
               InputError);

  auto bad_label = parse_job_text(kSymmetric);
  bad_label.sets[0].terms = {"(1 4)"};
  const auto r1 = run_report(bad_label, {});
  EXPECT_EQ(r1.exit_code, ExitCode::invalid_input);
  EXPECT_NE(r1.document["error"].get<std::string>().find("unknown element"), std::string::npos);

  JobSpec split = parse_job_text(kSymmetric);
  split.sets[0] = {SetSpec::Form::elements, {"(1 2)"}};
  const auto r2 = run_report(split, {});
  EXPECT_EQ(r2.exit_code, ExitCode::invalid_input);
  EXPECT_NE(r2.document["error"].get<std::string>().find("T11"), std::string::npos);

  auto unknown_kind = parse_job_text(kSymmetric);
  unknown_kind.group.kind = "sporadic";
  EXPECT_EQ(run_report(unknown_kind, {}).exit_code, ExitCode::invalid_input);

  JobSpec table;
  table.group = group("table", {{"table", {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}}});
  EXPECT_EQ(run_report(table, {}).exit_code, ExitCode::invalid_input);
}

TEST(Cli, NonStrictClosesSets) {
  JobSpec spec = parse_job_text(kSymmetric);
  spec.sets[0] = {SetSpec::Form::elements, {"(1 2)"}};
  spec.strict = false;
  const auto job = resolve(spec);
  EXPECT_EQ(job.graph.t11().size(), 3);
  ASSERT_EQ(job.warnings.size(), 1u);
  EXPECT_EQ(run_report(spec, {}).document["field"]["degree"], 4);
}

TEST(Cli, Shorthands) {
  JobSpec spec;
  spec.group = group("dihedral", {{"n", 5}});
  spec.sets[0].terms = {"<a>\\1"};
  spec.sets[1].terms = {"b<a>"};
  spec.sets[2].terms = {"<a>"};
  spec.sets[3].terms = {"G"};
  const auto job = resolve(spec);
  EXPECT_EQ(job.graph.t11().size(), 4);
  EXPECT_EQ(job.graph.t22().size(), 5);
  EXPECT_EQ(job.graph.t12().size(), 5);
  EXPECT_EQ(job.graph.t21().size(), 10);
  EXPECT_EQ(job.table.method, "dihedral");
  spec.sets[0].terms = {"<b>"};
  EXPECT_THROW(resolve(spec), InputError);

  JobSpec perm;
  perm.group = group("permutation", {{"degree", 4}, {"generators", {"(1 2 3 4)", "(1 3)"}}});
  perm.sets[0].terms = {"(1,3)(2,4)"};
  EXPECT_EQ(resolve(perm).graph.t11().size(), 1);
}

TEST(Cli, ReportIsDeterministicAndTextMatches) {
  const auto spec = parse_job_text(kSymmetric);
  const auto a = run_report(spec, {});
  const auto b = run_report(spec, {});
  EXPECT_EQ(a.document.dump(), b.document.dump());
  const auto text = render_text(a.document);
  EXPECT_NE(text.find("splitting field: Q(sqrt(37), sqrt(61))"), std::string::npos);
  EXPECT_NE(text.find("degree: 4"), std::string::npos);
  for (const auto& c : a.document["characters"])
    for (const auto& e : c["eigenvalues"])
      EXPECT_NE(text.find(e["approx"].get<std::string>()), std::string::npos);
  EXPECT_EQ(a.document["characters"][0]["eigenvalues"][0]["approx"], "5.541381265");
}

TEST(Cli, VerifyAndExitCodes) {
  const auto spec = parse_job_text(kSymmetric);
  RunOptions verify;
  verify.verify = true;
  const auto v = run_report(spec, verify);
  EXPECT_EQ(v.exit_code, ExitCode::ok);
  EXPECT_TRUE(v.document["oracle"]["spectrum_identity"]["ok"].get<bool>());
  EXPECT_TRUE(v.document["oracle"]["integrality_bruteforce"]["agrees"].get<bool>());

  const auto r = run_verify(spec, {}, 30, 11);
  EXPECT_EQ(r.exit_code, ExitCode::ok);
  EXPECT_EQ(r.document["random"]["failures"], 0);

  RunOptions starved;
  starved.sqrt.probabilistic_primes = 1;
  const auto u = run_report(spec, starved);
  EXPECT_EQ(u.exit_code, ExitCode::undetermined);
  EXPECT_TRUE(u.document.contains("undetermined"));
  EXPECT_EQ(run_integral(spec, starved).exit_code, ExitCode::undetermined);

  const auto i = run_integral(spec, {});
  EXPECT_EQ(i.exit_code, ExitCode::ok);
  EXPECT_FALSE(i.document["integral"].get<bool>());
  const auto s = run_spectrum(spec, {});
  EXPECT_EQ(s.document["characters"].size(), 3u);
  const auto t = run_chartable(spec.group);
  EXPECT_TRUE(t.document["orthogonality"].get<bool>());
}

TEST(Cli, CensusTrivialGroup) {
  CensusOptions opts;
  opts.verify = true;
  const auto out = run_census(group("cyclic", {{"n", 1}}), opts);
  EXPECT_EQ(out.exit_code, ExitCode::ok);
  const auto& totals = out.document["totals"];
  EXPECT_EQ(totals["enumerated"], 16);
  // [[1,1],[1,0]] and [[0,1],[1,1]] have eigenvalues (1 +- sqrt 5)/2.
  EXPECT_EQ(totals["integral"], 14);
  EXPECT_EQ(totals["oracle_mismatches"], 0);
}

TEST(Cli, CensusSymmetric) {
  CensusOptions opts;
  opts.undirected_only = true;
  opts.integral_only = true;
  opts.verify = true;
  opts.max_classes = 3;
  const auto out = run_census(group("symmetric", {{"n", 3}}), opts);
  EXPECT_EQ(out.exit_code, ExitCode::ok);
  bool complete = false, fixture = false;
  for (const auto& row : out.document["rows"]) {
    if (row["T11"].empty() && row["T22"].empty() && row["T12"].size() == 3 &&
        row["T21"].size() == 3)
      complete = true;
    if (row["T11"] == Json{"(12)"} && row["T22"] == Json{"(123)"} && row["T12"] == Json{"(12)"} &&
        row["T21"] == Json{"(12)"})
      fixture = true;
  }
  EXPECT_TRUE(complete);
  EXPECT_FALSE(fixture);
  EXPECT_EQ(out.document["totals"]["oracle_mismatches"], 0);

  opts.max_classes = 2;
  const auto two = run_census(group("symmetric", {{"n", 3}}), opts);
  EXPECT_EQ(two.document["totals"]["enumerated"], 7 * 7 * 7 * 7);
}

TEST(Cli, CensusCyclicFourAgreesWithBruteForce) {
  CensusOptions opts;
  opts.verify = true;
  opts.threads = 3;
  const auto out = run_census(group("cyclic", {{"n", 4}}), opts);
  EXPECT_EQ(out.exit_code, ExitCode::ok);
  EXPECT_EQ(out.document["totals"]["enumerated"], 65536);
  EXPECT_EQ(out.document["totals"]["oracle_mismatches"], 0);
  for (const auto& row : out.document["rows"]) ASSERT_TRUE(row["oracle_agrees"].get<bool>());
}

TEST(Cli, CensusTotalsInvariantUnderShuffledOrder) {
  CensusOptions opts;
  opts.max_classes = 2;
  opts.threads = 2;
  const auto base = run_census(group("dihedral", {{"n", 3}}), opts);
  std::vector<std::int64_t> order(base.document["totals"]["enumerated"].get<std::int64_t>());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int64_t>(i);
  std::shuffle(order.begin(), order.end(), std::mt19937(5));
  opts.order = order;
  const auto shuffled = run_census(group("dihedral", {{"n", 3}}), opts);
  EXPECT_EQ(base.document.dump(), shuffled.document.dump());
}

TEST(Cli, CensusCap) {
  CensusOptions opts;
  opts.cap = 1000;
  const auto out = run_census(group("cyclic", {{"n", 4}}), opts);
  EXPECT_EQ(out.exit_code, ExitCode::invalid_input);
  EXPECT_NE(out.document["error"].get<std::string>().find("65536"), std::string::npos);
  EXPECT_FALSE(out.document.contains("rows"));
}

}  // namespace
}  // namespace qasc::cli
