#include "qasc/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "qasc/catalog.hpp"
#include "qasc/errors.hpp"
#include "qasc/oracle.hpp"
#include "qasc/splitting_field.hpp"

namespace qasc::cli {

namespace {

const std::array<std::string, 4> kSetKeys{"t11", "t22", "t12", "t21"};

int int_param(const GroupSpec& spec, const char* key) {
  if (!spec.params.contains(key) || !spec.params[key].is_number_integer())
    throw InputError("group kind '" + spec.kind + "' needs integer parameter '" + key + "'");
  return spec.params[key].get<int>();
}

std::vector<int> int_list_param(const GroupSpec& spec, const char* key) {
  if (!spec.params.contains(key) || !spec.params[key].is_array())
    throw InputError("group kind '" + spec.kind + "' needs list parameter '" + key + "'");
  std::vector<int> out;
  for (const auto& v : spec.params[key]) {
    if (!v.is_number_integer()) throw InputError(std::string("'") + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

/// Degree of the natural permutation representation, when there is one.
int permutation_degree(const GroupSpec& spec) {
  if (spec.kind == "symmetric" || spec.kind == "alternating") return int_param(spec, "n");
  if (spec.kind == "permutation") return int_param(spec, "degree");
  return 0;
}

int lookup(const FiniteGroup& g, const GroupSpec& spec, const std::string& label) {
  if (auto i = g.find(label)) return *i;
  const int degree = permutation_degree(spec);
  if (degree > 0 && !label.empty() && label.front() == '(') {
    try {
      if (auto i = g.find(format_permutation(parse_permutation(label, degree)))) return *i;
    } catch (const std::exception&) {
    }
  }
  throw InputError("unknown element label '" + label + "' in group " + g.name());
}

std::vector<int> cyclic_span(const FiniteGroup& g, int x) {
  std::vector<int> out;
  int y = g.identity();
  do {
    out.push_back(y);
    y = g.mul(y, x);
  } while (y != g.identity());
  return out;
}

/// Elements named by one class-form term, and whether the term is a plain
/// label (hence a whole class by construction).
std::pair<std::vector<int>, bool> expand_term(const FiniteGroup& g, const GroupSpec& spec,
                                              const std::string& term) {
  if (term == "G") {
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return {all, false};
  }
  const auto open = term.find('<');
  const auto close = term.rfind('>');
  if (open != std::string::npos && close != std::string::npos && close > open) {
    const std::string rest = term.substr(close + 1);
    if (!rest.empty() && rest != "\\1")
      throw InputError("malformed set term '" + term + "'");
    const int gen = lookup(g, spec, term.substr(open + 1, close - open - 1));
    const int coset = open == 0 ? g.identity() : lookup(g, spec, term.substr(0, open));
    std::vector<int> out;
    for (int y : cyclic_span(g, gen))
      if (!(rest == "\\1" && y == g.identity())) out.push_back(g.mul(coset, y));
    return {out, false};
  }
  return {g.class_of_element(lookup(g, spec, term)), true};
}

std::string approx(std::complex<double> z) {
  char buf[96];
  if (std::abs(z.imag()) < 1e-12) {
    std::snprintf(buf, sizeof buf, "%.10g", z.real() == 0.0 ? 0.0 : z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", std::abs(z.real()) < 1e-12 ? 0.0 : z.real(),
                  z.imag());
  }
  return buf;
}

Json class_reps(const GMultiset& s) {
  Json out = Json::array();
  const auto& g = *s.group();
  for (int c : s.class_decomposition()) out.push_back(g.label(g.classes().representatives[c]));
  return out;
}

Json group_section(const GroupPtr& g) {
  Json classes = Json::array();
  const auto& cs = g->classes();
  for (int c = 0; c < cs.size(); ++c) {
    Json elements = Json::array();
    for (int x : cs.classes[c]) elements.push_back(g->label(x));
    classes.push_back({{"representative", g->label(cs.representatives[c])},
                       {"size", cs.class_size(c)},
                       {"elements", elements}});
  }
  return {{"name", g->name()}, {"order", g->order()}, {"exponent", g->exponent()},
          {"classes", classes}};
}

Json table_section(const CharacterTable& t) {
  Json rows = Json::array();
  for (const auto& chi : t.characters) {
    Json values = Json::array();
    for (const auto& v : chi.values) values.push_back(v.to_string());
    rows.push_back({{"degree", chi.degree}, {"values", values}});
  }
  return {{"method", t.method}, {"modulus", t.modulus}, {"rows", rows}};
}

Json eigen_section(const std::vector<RadicalEigenvalue>& eigs) {
  Json out = Json::array();
  for (const auto& e : eigs) {
    const std::string a = e.trace_part.to_string(), r = e.radicand.to_string();
    const std::string den = std::to_string(2 * e.degree);
    const auto [plus, minus] = e.numeric();
    Json row{{"character", e.character + 1},
             {"degree", e.degree},
             {"chi_I1", a},
             {"radicand", r}};
    if (e.collapsed()) {
      row["eigenvalues"] = Json::array(
          {{{"exact", "(" + a + ")/" + den}, {"approx", approx(plus)},
            {"multiplicity", 2 * e.multiplicity()}}});
    } else {
      row["eigenvalues"] = Json::array(
          {{{"exact", "(" + a + " + sqrt(" + r + "))/" + den}, {"approx", approx(plus)},
            {"multiplicity", e.multiplicity()}},
           {{"exact", "(" + a + " - sqrt(" + r + "))/" + den}, {"approx", approx(minus)},
            {"multiplicity", e.multiplicity()}}});
    }
    out.push_back(row);
  }
  return out;
}

Json degree_section(const DegreeReport& r) {
  Json basis = Json::array();
  for (const auto& b : r.M.basis) basis.push_back(b.to_string());
  return {{"modulus", r.modulus},
          {"T", r.T.elements},
          {"K_degree", r.k_degree},
          {"K", r.k_description},
          {"M_basis", basis},
          {"M_order", r.M.order()},
          {"splitting_field", r.sf_description},
          {"degree", r.degree},
          {"integral", r.integral}};
}

/// Oracle results; sets *mismatch when any of them disagrees.
Json oracle_section(const ResolvedJob& job, const std::optional<bool>& integral, bool* mismatch) {
  const auto identity = spectrum_identity_check(job.graph, job.table);
  const auto numeric = numeric_spectrum_check(job.graph, job.table);
  Json out{{"spectrum_identity",
            {{"ok", identity.ok},
             {"charpoly", polynomial_to_string(identity.actual)},
             {"detail", identity.detail}}},
           {"numeric",
            {{"ok", numeric.ok},
             {"worst_cluster_error", numeric.worst_cluster_error},
             {"worst_discriminant_error", numeric.worst_discriminant_error},
             {"detail", numeric.detail}}}};
  bool bad = !identity.ok || !numeric.ok;
  if (integral) {
    const bool brute = integrality_bruteforce(job.graph);
    out["integrality_bruteforce"] = {{"integral", brute}, {"agrees", brute == *integral}};
    bad = bad || brute != *integral;
  }
  if (mismatch) *mismatch = bad;
  return out;
}

Json base_document(const std::string& command, const JobSpec& spec, const ResolvedJob& job) {
  Json sets = Json::object();
  for (int i = 0; i < 4; ++i) sets[connection_set_names()[i]] = class_reps(job.graph.sets()[i]);
  const auto im = i_multisets(job.graph);
  Json doc{{"command", command},
           {"input", render_job(spec)},
           {"group", group_section(job.group)},
           {"class_decomposition", sets},
           {"i_multisets",
            {{"I1", im.i1.to_string()}, {"I2", im.i2.to_string()}, {"I3", im.i3.to_string()}}},
           {"undirected", is_undirected(job.graph)}};
  if (!job.warnings.empty()) doc["warnings"] = job.warnings;
  return doc;
}

Outcome invalid(const std::string& message) {
  return {Json{{"status", "invalid_input"}, {"error", message}}, ExitCode::invalid_input};
}

std::int64_t binomial_sum(int n, int k) {
  std::int64_t total = 0, c = 1;
  for (int j = 0; j <= std::min(n, k); ++j) {
    total += c;
    c = c * (n - j) / (j + 1);
  }
  return total;
}

/// Class subsets of size at most k, by size then lexicographically.
std::vector<std::vector<int>> class_subsets(int n, int k) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> cur;
  for (int size = 1; size <= std::min(n, k); ++size) {
    cur.assign(size, 0);
    for (int i = 0; i < size; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      int i = size - 1;
      while (i >= 0 && cur[i] == n - size + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

void text_line(std::ostringstream& os, const std::string& key, const Json& v) {
  os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}  // namespace

JobSpec parse_job(const Json& doc) {
  if (!doc.is_object()) throw InputError("input document must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "group" && key != "sets" && key != "options")
      throw InputError("unknown top-level key '" + key + "'");
  JobSpec spec;
  if (!doc.contains("group") || !doc["group"].is_object())
    throw InputError("missing 'group' object");
  const auto& g = doc["group"];
  if (!g.contains("kind") || !g["kind"].is_string()) throw InputError("group needs a 'kind'");
  spec.group.kind = g["kind"].get<std::string>();
  if (g.contains("params")) {
    if (!g["params"].is_object()) throw InputError("group 'params' must be an object");
    spec.group.params = g["params"];
  }
  if (doc.contains("sets")) {
    const auto& sets = doc["sets"];
    if (!sets.is_object()) throw InputError("'sets' must be an object");
    for (const auto& [key, value] : sets.items())
      if (std::find(kSetKeys.begin(), kSetKeys.end(), key) == kSetKeys.end())
        throw InputError("unknown connection set '" + key + "'");
    for (int i = 0; i < 4; ++i) {
      if (!sets.contains(kSetKeys[i])) continue;
      const auto& s = sets[kSetKeys[i]];
      auto& out = spec.sets[i];
      auto read_terms = [&](const Json& list) {
        for (const auto& t : list) {
          if (!t.is_string()) throw InputError(kSetKeys[i] + ": set terms must be strings");
          out.terms.push_back(t.get<std::string>());
        }
      };
      if (s.is_string()) {
        if (s.get<std::string>() != "empty")
          throw InputError(kSetKeys[i] + ": the only string form is \"empty\"");
      } else if (s.is_array()) {
        read_terms(s);
      } else if (s.is_object() && s.size() == 1 && s.contains("elements") &&
                 s["elements"].is_array()) {
        out.form = SetSpec::Form::elements;
        read_terms(s["elements"]);
      } else {
        throw InputError(kSetKeys[i] + ": expected \"empty\", a list, or {\"elements\": [...]}");
      }
    }
  }
  if (doc.contains("options")) {
    const auto& o = doc["options"];
    if (!o.is_object()) throw InputError("'options' must be an object");
    for (const auto& [key, value] : o.items()) {
      if (key != "strict" && key != "verify") throw InputError("unknown option '" + key + "'");
      if (!value.is_boolean()) throw InputError("option '" + key + "' must be a boolean");
    }
    spec.strict = o.value("strict", true);
    spec.verify = o.value("verify", false);
  }
  return spec;
}

JobSpec parse_job_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  return parse_job(doc);
}

Json render_job(const JobSpec& spec) {
  Json sets = Json::object();
  for (int i = 0; i < 4; ++i) {
    const auto& s = spec.sets[i];
    if (s.form == SetSpec::Form::elements) sets[kSetKeys[i]] = {{"elements", s.terms}};
    else if (s.terms.empty()) sets[kSetKeys[i]] = "empty";
    else sets[kSetKeys[i]] = s.terms;
  }
  return {{"group", {{"kind", spec.group.kind}, {"params", spec.group.params}}},
          {"sets", sets},
          {"options", {{"strict", spec.strict}, {"verify", spec.verify}}}};
}

GroupPtr build_group(const GroupSpec& spec) {
  const auto& k = spec.kind;
  if (k == "cyclic") return cyclic_group(int_param(spec, "n"));
  if (k == "abelian") return abelian_group(int_list_param(spec, "factors"));
  if (k == "dihedral") return dihedral_group(int_param(spec, "n"));
  if (k == "symmetric") return symmetric_group(int_param(spec, "n"));
  if (k == "alternating") return alternating_group(int_param(spec, "n"));
  if (k == "dicyclic") return dicyclic_group(int_param(spec, "n"));
  if (k == "metacyclic")
    return metacyclic_group(int_param(spec, "n"), int_param(spec, "k"), int_param(spec, "r"));
  if (k == "catalog") {
    if (!spec.params.contains("name") || !spec.params["name"].is_string())
      throw InputError("catalog group needs a 'name'");
    return catalog_group(spec.params["name"].get<std::string>());
  }
  if (k == "table") {
    if (!spec.params.contains("table") || !spec.params["table"].is_array())
      throw InputError("table group needs a 'table'");
    std::vector<std::vector<int>> table;
    for (const auto& row : spec.params["table"]) {
      if (!row.is_array()) throw InputError("table rows must be lists");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw InputError("table entries must be integers");
        r.push_back(v.get<int>());
      }
      table.push_back(r);
    }
    std::vector<std::string> labels;
    if (spec.params.contains("labels"))
      for (const auto& l : spec.params["labels"]) labels.push_back(l.get<std::string>());
    return table_group(table, labels);
  }
  if (k == "permutation") {
    const int degree = int_param(spec, "degree");
    if (degree < 1 || degree > 16) throw InputError("permutation degree must lie in 1..16");
    if (!spec.params.contains("generators") || !spec.params["generators"].is_array())
      throw InputError("permutation group needs 'generators'");
    std::vector<Permutation> gens;
    for (const auto& s : spec.params["generators"]) {
      if (!s.is_string()) throw InputError("generators must be strings");
      gens.push_back(parse_permutation(s.get<std::string>(), degree));
    }
    return permutation_group(degree, gens);
  }
  throw InputError("unknown group kind '" + k + "'");
}

CharacterTable table_for(const GroupSpec& spec, const GroupPtr& group) {
  if (spec.kind == "dihedral" && group->order() >= 6 && (group->order() / 2) % 2 == 1)
    return char_table_dihedral(group);
  return character_table(group);
}

ResolvedJob resolve(const JobSpec& spec) {
  const GroupPtr g = build_group(spec.group);
  std::vector<std::string> warnings;
  std::array<GMultiset, 4> sets;
  for (int i = 0; i < 4; ++i) {
    const auto& name = connection_set_names()[i];
    GMultiset s(g);
    bool closed_by_construction = true;
    for (const auto& term : spec.sets[i].terms) {
      std::vector<int> elements;
      if (spec.sets[i].form == SetSpec::Form::elements) {
        elements = {lookup(*g, spec.group, term)};
        closed_by_construction = false;
      } else {
        auto [e, whole_class] = expand_term(*g, spec.group, term);
        elements = std::move(e);
        closed_by_construction = closed_by_construction && whole_class;
      }
      for (int x : elements) s.set_count(x, 1);
    }
    if (!closed_by_construction && !s.is_conjugate_closed()) {
      const std::string witness = g->label(s.split_class_witness());
      if (spec.strict)
        throw InputError(name + " is not a union of conjugacy classes: the class of " + witness +
                         " is split");
      for (int x : s.support())
        for (int y : g->class_of_element(x)) s.set_count(y, 1);
      warnings.push_back(name + " was closed under conjugation (the class of " + witness +
                         " was split)");
    }
    sets[i] = std::move(s);
  }
  auto graph = SemiCayleyDigraph::create(g, sets[0], sets[1], sets[2], sets[3]);
  return {g, graph, table_for(spec.group, g), warnings};
}

Outcome run_spectrum(const JobSpec& spec, const RunOptions& options) {
  try {
    const auto job = resolve(spec);
    Json doc = base_document("spectrum", spec, job);
    if (options.include_chartable) doc["character_table"] = table_section(job.table);
    doc["modulus"] = job.table.modulus;
    doc["characters"] = eigen_section(eigenvalues(job.graph, job.table));
    int code = ExitCode::ok;
    if (options.verify || spec.verify) {
      bool mismatch = false;
      doc["oracle"] = oracle_section(job, std::nullopt, &mismatch);
      if (mismatch) code = ExitCode::oracle_mismatch;
    }
    doc["status"] = code == ExitCode::ok ? "ok" : "oracle_mismatch";
    return {doc, code};
  } catch (const InputError& e) {
    return invalid(e.what());
  }
}

Outcome run_report(const JobSpec& spec, const RunOptions& options) {
  try {
    const auto job = resolve(spec);
    Json doc = base_document("degree", spec, job);
    if (options.include_chartable) doc["character_table"] = table_section(job.table);
    int code = ExitCode::ok;
    std::optional<bool> integral;
    try {
      const auto report = algebraic_degree(job.graph, job.table, options.sqrt);
      doc["characters"] = eigen_section(report.eigenvalues);
      doc["field"] = degree_section(report);
      integral = report.integral;
    } catch (const UndeterminedError& e) {
      doc["characters"] = eigen_section(eigenvalues(job.graph, job.table));
      doc["undetermined"] = {{"note", e.what()}, {"confidence", e.confidence()}};
      code = ExitCode::undetermined;
    }
    if (options.verify || spec.verify) {
      bool mismatch = false;
      doc["oracle"] = oracle_section(job, integral, &mismatch);
      if (mismatch) code = ExitCode::oracle_mismatch;
    }
    doc["status"] = code == ExitCode::ok             ? "ok"
                    : code == ExitCode::undetermined ? "undetermined"
                                                     : "oracle_mismatch";
    return {doc, code};
  } catch (const InputError& e) {
    return invalid(e.what());
  }
}

Outcome run_integral(const JobSpec& spec, const RunOptions& options) {
  try {
    const auto job = resolve(spec);
    Json doc{{"command", "integral"}, {"input", render_job(spec)}};
    int code = ExitCode::ok;
    try {
      const bool integral = is_integral(job.graph, job.table, options.sqrt);
      doc["integral"] = integral;
      if (options.verify || spec.verify) {
        const bool brute = integrality_bruteforce(job.graph);
        doc["oracle"] = {{"integrality_bruteforce", {{"integral", brute}, {"agrees", brute == integral}}}};
        if (brute != integral) code = ExitCode::oracle_mismatch;
      }
    } catch (const UndeterminedError& e) {
      doc["undetermined"] = {{"note", e.what()}, {"confidence", e.confidence()}};
      code = ExitCode::undetermined;
    }
    doc["status"] = code == ExitCode::ok             ? "ok"
                    : code == ExitCode::undetermined ? "undetermined"
                                                     : "oracle_mismatch";
    return {doc, code};
  } catch (const InputError& e) {
    return invalid(e.what());
  }
}

Outcome run_chartable(const GroupSpec& spec) {
  try {
    const auto g = build_group(spec);
    const auto table = table_for(spec, g);
    const auto orth = check_orthogonality(table);
    Json doc{{"command", "chartable"},
             {"group", group_section(g)},
             {"character_table", table_section(table)},
             {"orthogonality", orth.ok}};
    doc["status"] = orth.ok ? "ok" : "oracle_mismatch";
    return {doc, orth.ok ? ExitCode::ok : ExitCode::oracle_mismatch};
  } catch (const InputError& e) {
    return invalid(e.what());
  }
}

Outcome run_verify(const JobSpec& spec, const RunOptions& options, int random_instances,
                   std::uint64_t seed) {
  try {
    const auto job = resolve(spec);
    Json doc = base_document("verify", spec, job);
    int code = ExitCode::ok;
    std::optional<bool> integral;
    try {
      integral = algebraic_degree(job.graph, job.table, options.sqrt).integral;
    } catch (const UndeterminedError& e) {
      doc["undetermined"] = {{"note", e.what()}, {"confidence", e.confidence()}};
      code = ExitCode::undetermined;
    }
    bool mismatch = false;
    doc["oracle"] = oracle_section(job, integral, &mismatch);
    if (random_instances > 0) {
      std::mt19937_64 rng(seed);
      const int k = job.group->classes().size();
      int failures = 0;
      Json failed = Json::array();
      for (int n = 0; n < random_instances; ++n) {
        std::array<std::vector<int>, 4> choice;
        for (auto& c : choice)
          for (int cls = 0; cls < k; ++cls)
            if (rng() & 1) c.push_back(cls);
        ResolvedJob inst{job.group,
                         SemiCayleyDigraph::from_classes(job.group, choice[0], choice[1],
                                                         choice[2], choice[3]),
                         job.table,
                         {}};
        bool bad = false;
        std::optional<bool> inst_integral;
        try {
          inst_integral = algebraic_degree(inst.graph, inst.table, options.sqrt).integral;
        } catch (const UndeterminedError&) {
        }
        oracle_section(inst, inst_integral, &bad);
        if (bad) {
          ++failures;
          failed.push_back(choice);
        }
      }
      doc["random"] = {{"seed", seed},
                       {"instances", random_instances},
                       {"failures", failures},
                       {"failed_class_choices", failed}};
      mismatch = mismatch || failures > 0;
    }
    if (mismatch) code = ExitCode::oracle_mismatch;
    doc["status"] = code == ExitCode::ok             ? "ok"
                    : code == ExitCode::undetermined ? "undetermined"
                                                     : "oracle_mismatch";
    return {doc, code};
  } catch (const InputError& e) {
    return invalid(e.what());
  }
}

Outcome run_census(const GroupSpec& spec, const CensusOptions& options) {
  GroupPtr g;
  try {
    g = build_group(spec);
  } catch (const InputError& e) {
    return invalid(e.what());
  }
  if (g->order() > 64) return invalid("census supports groups of order at most 64");
  const int k = g->classes().size();
  const int max_classes = options.max_classes < 0 ? k : options.max_classes;
  const std::int64_t per_set = binomial_sum(k, max_classes);
  const long double total_ld = std::pow(static_cast<long double>(per_set), 4);
  if (total_ld > static_cast<long double>(options.cap)) {
    std::ostringstream os;
    os << "enumeration would produce " << std::llround(total_ld) << " digraphs, above the cap of "
       << options.cap;
    return invalid(os.str());
  }
  const std::int64_t total = per_set * per_set * per_set * per_set;
  const auto subsets = class_subsets(k, max_classes);
  const auto table = table_for(spec, g);

  struct Row {
    bool undirected = false;
    bool evaluated = false;
    bool undetermined = false;
    std::int64_t degree = 0;
    bool integral = false;
    std::optional<bool> agrees;
  };
  std::vector<Row> rows(total);
  auto choice_of = [&](std::int64_t idx) {
    std::array<int, 4> c{};
    for (int i = 3; i >= 0; --i) {
      c[i] = static_cast<int>(idx % per_set);
      idx /= per_set;
    }
    return c;
  };
  auto evaluate = [&](std::int64_t idx) {
    const auto c = choice_of(idx);
    const auto graph = SemiCayleyDigraph::from_classes(g, subsets[c[0]], subsets[c[1]],
                                                       subsets[c[2]], subsets[c[3]]);
    Row& row = rows[idx];
    row.undirected = is_undirected(graph);
    if (options.undirected_only && !row.undirected) return;
    row.evaluated = true;
    try {
      const auto r = algebraic_degree(graph, table, options.sqrt);
      row.degree = r.degree;
      row.integral = r.integral;
    } catch (const UndeterminedError&) {
      row.undetermined = true;
    }
    if (options.verify && !row.undetermined)
      row.agrees = integrality_bruteforce(graph) == row.integral;
  };

  std::vector<std::int64_t> order = options.order;
  if (order.empty()) {
    order.resize(total);
    for (std::int64_t i = 0; i < total; ++i) order[i] = i;
  } else if (static_cast<std::int64_t>(order.size()) != total) {
    return invalid("evaluation order does not cover the enumeration");
  }
  const int threads = std::max(
      1, options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency()));
  std::atomic<std::int64_t> next{0};
  std::mutex error_mutex;
  std::string error;
  auto worker = [&] {
    for (std::int64_t i; (i = next.fetch_add(1)) < total;) {
      try {
        evaluate(order[i]);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (error.empty()) error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!error.empty()) return invalid(error);

  Json listed = Json::array();
  std::int64_t evaluated = 0, undirected = 0, integral = 0, undetermined = 0, mismatches = 0;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const Row& r = rows[idx];
    if (r.undirected) ++undirected;
    if (!r.evaluated) continue;
    ++evaluated;
    if (r.undetermined) ++undetermined;
    if (r.integral) ++integral;
    if (r.agrees && !*r.agrees) ++mismatches;
    if (options.integral_only && !r.integral) continue;
    const auto c = choice_of(idx);
    Json row = Json::object();
    for (int i = 0; i < 4; ++i) {
      Json reps = Json::array();
      for (int cls : subsets[c[i]]) reps.push_back(g->label(g->classes().representatives[cls]));
      row[connection_set_names()[i]] = reps;
    }
    if (r.undetermined) {
      row["degree"] = nullptr;
      row["integral"] = nullptr;
    } else {
      row["degree"] = r.degree;
      row["integral"] = r.integral;
    }
    if (r.agrees) row["oracle_agrees"] = *r.agrees;
    listed.push_back(row);
  }
  int code = ExitCode::ok;
  if (mismatches > 0) code = ExitCode::oracle_mismatch;
  else if (undetermined > 0) code = ExitCode::undetermined;
  Json doc{{"command", "census"},
           {"group", {{"name", g->name()}, {"order", g->order()}, {"classes", k}}},
           {"constraints",
            {{"max_classes", max_classes},
             {"undirected_only", options.undirected_only},
             {"integral_only", options.integral_only},
             {"verify", options.verify}}},
           {"rows", listed},
           {"totals",
            {{"enumerated", total},
             {"undirected", undirected},
             {"evaluated", evaluated},
             {"integral", integral},
             {"undetermined", undetermined},
             {"listed", static_cast<std::int64_t>(listed.size())},
             {"oracle_mismatches", mismatches}}}};
  doc["status"] = code == ExitCode::ok             ? "ok"
                  : code == ExitCode::undetermined ? "undetermined"
                                                   : "oracle_mismatch";
  return {doc, code};
}

std::string render_text(const Json& doc) {
  std::ostringstream os;
  if (doc.contains("error")) {
    os << "error: " << doc["error"].get<std::string>() << "\n";
    return os.str();
  }
  const std::string command = doc.value("command", "");
  if (doc.contains("group")) {
    const auto& g = doc["group"];
    os << "group: " << g["name"].get<std::string>() << " (order " << g["order"] << ")\n";
    if (g.contains("classes") && g["classes"].is_array()) {
      os << "classes:";
      for (const auto& c : g["classes"])
        os << " " << c["representative"].get<std::string>() << "[" << c["size"] << "]";
      os << "\n";
    }
  }
  if (doc.contains("warnings"))
    for (const auto& w : doc["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  if (doc.contains("class_decomposition"))
    for (const auto& [name, reps] : doc["class_decomposition"].items()) {
      os << name << ":";
      if (reps.empty()) os << " empty";
      for (const auto& r : reps) os << " " << r.get<std::string>() << "^G";
      os << "\n";
    }
  if (doc.contains("i_multisets"))
    for (const auto& [name, v] : doc["i_multisets"].items()) text_line(os, name, v);
  if (doc.contains("undirected")) text_line(os, "undirected", doc["undirected"]);
  if (doc.contains("character_table")) {
    const auto& t = doc["character_table"];
    os << "character table (" << t["method"].get<std::string>() << ", values in Q(w"
       << t["modulus"] << ")):\n";
    int i = 1;
    for (const auto& row : t["rows"]) {
      os << "  chi" << i++ << ":";
      for (const auto& v : row["values"]) os << "  " << v.get<std::string>();
      os << "\n";
    }
  }
  if (doc.contains("orthogonality")) text_line(os, "orthogonality", doc["orthogonality"]);
  if (doc.contains("characters")) {
    os << "eigenvalues:\n";
    for (const auto& c : doc["characters"]) {
      os << "  chi" << c["character"] << " (degree " << c["degree"]
         << "): chi(I1) = " << c["chi_I1"].get<std::string>()
         << ", radicand = " << c["radicand"].get<std::string>() << "\n";
      for (const auto& e : c["eigenvalues"])
        os << "    " << e["exact"].get<std::string>() << " ~ " << e["approx"].get<std::string>()
           << "  x" << e["multiplicity"] << "\n";
    }
  }
  if (doc.contains("field")) {
    const auto& f = doc["field"];
    text_line(os, "T", f["T"]);
    os << "K: " << f["K"].get<std::string>() << " (degree " << f["K_degree"] << ")\n";
    os << "M basis:";
    if (f["M_basis"].empty()) os << " (trivial)";
    for (const auto& b : f["M_basis"]) os << " " << b.get<std::string>();
    os << "  |M| = " << f["M_order"] << "\n";
    text_line(os, "splitting field", f["splitting_field"]);
    text_line(os, "degree", f["degree"]);
    text_line(os, "integral", f["integral"]);
  }
  if (command == "integral" && doc.contains("integral")) text_line(os, "integral", doc["integral"]);
  if (doc.contains("undetermined"))
    os << "undetermined: " << doc["undetermined"]["note"].get<std::string>() << " (confidence "
       << doc["undetermined"]["confidence"] << ")\n";
  if (doc.contains("oracle")) {
    const auto& o = doc["oracle"];
    if (o.contains("spectrum_identity")) {
      os << "oracle spectrum identity: " << (o["spectrum_identity"]["ok"].get<bool>() ? "ok" : "MISMATCH")
         << "\n  charpoly: " << o["spectrum_identity"]["charpoly"].get<std::string>() << "\n";
      os << "oracle numeric: " << (o["numeric"]["ok"].get<bool>() ? "ok" : "MISMATCH")
         << " (worst cluster error " << o["numeric"]["worst_cluster_error"] << ")\n";
    }
    if (o.contains("integrality_bruteforce"))
      os << "oracle integrality: "
         << (o["integrality_bruteforce"]["agrees"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
  }
  if (doc.contains("random")) {
    const auto& r = doc["random"];
    os << "random instances: " << r["instances"] << " (seed " << r["seed"] << "), failures "
       << r["failures"] << "\n";
  }
  if (command == "census") {
    const auto& c = doc["constraints"];
    os << "constraints: max classes " << c["max_classes"]
       << (c["undirected_only"].get<bool>() ? ", undirected only" : "")
       << (c["integral_only"].get<bool>() ? ", integral only" : "") << "\n";
    for (const auto& row : doc["rows"]) {
      for (const auto& name : connection_set_names()) {
        os << name << "={";
        bool first = true;
        for (const auto& r : row[name]) {
          os << (first ? "" : ",") << r.get<std::string>();
          first = false;
        }
        os << "} ";
      }
      if (row["degree"].is_null()) os << "deg=? undetermined";
      else os << "deg=" << row["degree"] << (row["integral"].get<bool>() ? " integral" : "");
      if (row.contains("oracle_agrees"))
        os << (row["oracle_agrees"].get<bool>() ? " [oracle ok]" : " [ORACLE MISMATCH]");
      os << "\n";
    }
    const auto& t = doc["totals"];
    os << "totals: enumerated " << t["enumerated"] << ", undirected " << t["undirected"]
       << ", evaluated " << t["evaluated"] << ", integral " << t["integral"] << ", listed "
       << t["listed"] << ", undetermined " << t["undetermined"] << ", oracle mismatches "
       << t["oracle_mismatches"] << "\n";
  }
  if (doc.contains("status")) text_line(os, "status", doc["status"]);
  return os.str();
}

}  // namespace qasc::cli
