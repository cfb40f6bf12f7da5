#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qasc/chartable.hpp"
#include "qasc/sc_digraph.hpp"
#include "qasc/square_root.hpp"

namespace qasc::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, invalid_input = 2, undetermined = 3, oracle_mismatch = 4 };

/// Group source: kind is one of cyclic, abelian, dihedral, symmetric,
/// alternating, dicyclic, metacyclic, catalog, table, permutation.
struct GroupSpec {
  std::string kind;
  Json params = Json::object();

  bool operator==(const GroupSpec&) const = default;
};

/// One connection set. In class form each term is an element label standing
/// for its conjugacy class, or a shorthand: "G", "<g>", "<g>\1", "h<g>".
/// In element form the terms are element labels taken literally.
struct SetSpec {
  enum class Form { classes, elements };
  Form form = Form::classes;
  std::vector<std::string> terms;

  bool operator==(const SetSpec&) const = default;
};

struct JobSpec {
  GroupSpec group;
  std::array<SetSpec, 4> sets;  // T11, T22, T12, T21
  bool strict = true;
  bool verify = false;

  bool operator==(const JobSpec&) const = default;
};

/// Parses the input document:
///   { "group": { "kind": ..., "params": {...} },
///     "sets": { "t11": [...], "t22": [...], "t12": [...], "t21": [...] },
///     "options": { "strict": true, "verify": false } }
/// A set is "empty", a list of class terms, or { "elements": [...] }.
JobSpec parse_job(const Json& doc);
JobSpec parse_job_text(const std::string& text);
Json render_job(const JobSpec& spec);

GroupPtr build_group(const GroupSpec& spec);
/// Built-in dihedral table for dihedral groups of odd n, otherwise the
/// dispatching engine.
CharacterTable table_for(const GroupSpec& spec, const GroupPtr& group);

struct ResolvedJob {
  GroupPtr group;
  SemiCayleyDigraph graph;
  CharacterTable table;
  std::vector<std::string> warnings;
};

/// Expands every set and validates quasi-abelianness. Explicit or shorthand
/// sets that are not conjugate-closed are rejected in strict mode and closed
/// under conjugation, with a warning, otherwise.
ResolvedJob resolve(const JobSpec& spec);

struct RunOptions {
  SqrtOptions sqrt;
  bool include_chartable = false;
  bool verify = false;
};

struct Outcome {
  Json document;
  int exit_code = ExitCode::ok;
};

/// Full report: inputs, class decompositions, I-multisets, per-character
/// eigenvalues, T, K, M, splitting field, degree, integrality, and oracle
/// results when verification is requested.
Outcome run_report(const JobSpec& spec, const RunOptions& options);
/// Eigenvalue section only.
Outcome run_spectrum(const JobSpec& spec, const RunOptions& options);
Outcome run_integral(const JobSpec& spec, const RunOptions& options);
Outcome run_chartable(const GroupSpec& spec);
/// Oracle comparison for one job, plus `random_instances` random
/// quasi-abelian digraphs over the same group drawn from `seed`.
Outcome run_verify(const JobSpec& spec, const RunOptions& options, int random_instances,
                   std::uint64_t seed);

struct CensusOptions {
  int max_classes = -1;  // -1: no limit
  bool undirected_only = false;
  bool integral_only = false;
  bool verify = false;
  std::int64_t cap = 2'000'000;
  int threads = 0;  // 0: hardware concurrency
  SqrtOptions sqrt;
  /// Evaluation order of the enumerated rows; identity when empty. Output is
  /// always sorted back into enumeration order.
  std::vector<std::int64_t> order;
};

/// Every quasi-abelian semi-Cayley digraph whose connection sets are unions
/// of at most max_classes classes.
Outcome run_census(const GroupSpec& spec, const CensusOptions& options);

/// Human-readable rendering of any document produced above.
std::string render_text(const Json& document);

}  // namespace qasc::cli
