#include "skewlab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "skewlab/version.hpp"

namespace skewlab {

namespace {

void expect_keys(const ojson& j, const std::set<std::string>& required,
                 const std::set<std::string>& optional, const std::string& what) {
  if (!j.is_object())
    fail(ErrorCode::MalformedInstance, what + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key))
      fail(ErrorCode::MalformedInstance, "unexpected key '" + key + "' in " + what);
  }
  for (const std::string& key : required)
    if (!j.contains(key))
      fail(ErrorCode::MalformedInstance, "missing key '" + key + "' in " + what);
}

std::int64_t as_int(const ojson& j, const std::string& what) {
  if (!j.is_number_integer())
    fail(ErrorCode::MalformedInstance, what + " must be an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const ojson& j, const std::string& what) {
  if (!j.is_string())
    fail(ErrorCode::MalformedInstance, what + " must be a string");
  return j.get<std::string>();
}

} // namespace

ojson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::MalformedInstance, "cannot read '" + path + "'");
  try {
    return ojson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::MalformedInstance, "JSON parse error in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out)
    fail(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << content;
}

ojson field_to_json(const FieldSpec& field) {
  ojson j;
  if (field.kind() == FieldKind::GFp) {
    j["type"] = "gfp";
    j["p"] = field.p();
  } else {
    j["type"] = "rational";
  }
  return j;
}

FieldSpec field_from_json(const ojson& j) {
  expect_keys(j, {"type"}, {"p"}, "field");
  const std::string type = as_string(j.at("type"), "field type");
  if (type == "rational") return FieldSpec::rationals();
  if (type == "gfp") {
    if (!j.contains("p"))
      fail(ErrorCode::MalformedInstance, "missing key 'p' in field");
    return FieldSpec::gfp(as_int(j.at("p"), "field characteristic"));
  }
  fail(ErrorCode::MalformedInstance, "unknown field type '" + type + "'");
}

ojson group_to_json(const GroupSpec& group) {
  ojson j;
  j["free_rank"] = group.free_rank();
  j["torsion"] = group.torsion();
  return j;
}

GroupSpec group_from_json(const ojson& j) {
  expect_keys(j, {"free_rank", "torsion"}, {}, "group");
  const std::int64_t rank = as_int(j.at("free_rank"), "free_rank");
  if (!j.at("torsion").is_array())
    fail(ErrorCode::MalformedInstance, "torsion must be an array");
  std::vector<std::int64_t> torsion;
  for (const auto& entry : j.at("torsion")) torsion.push_back(as_int(entry, "torsion order"));
  try {
    return GroupSpec(static_cast<int>(rank), std::move(torsion));
  } catch (const Error& e) {
    fail(ErrorCode::MalformedInstance, std::string("bad group: ") + e.what());
  }
}

ojson instance_to_json(const PartialAction& action) {
  const GroupSpec& g = action.group();
  ojson j;
  j["group"] = group_to_json(g);
  j["set"] = action.labels();
  ojson domains = ojson::object();
  ojson maps = ojson::object();
  std::set<GroupElement> emitted;
  for (const auto& [t, slice] : action.slices()) {
    if (g.is_zero(t)) continue;
    ojson labels = ojson::array();
    for (int x : slice.domain) labels.push_back(action.label(x));
    domains[t.key()] = std::move(labels);

    const GroupElement rep = std::min(t, g.neg(t));
    if (emitted.count(rep)) continue;
    emitted.insert(rep);
    ojson entries = ojson::object();
    for (int x = 0; x < action.size(); ++x) {
      int y = action.maybe_apply(rep, x);
      if (y >= 0) entries[action.label(x)] = action.label(y);
    }
    maps[rep.key()] = std::move(entries);
  }
  j["domains"] = std::move(domains);
  j["maps"] = std::move(maps);
  return j;
}

PartialAction instance_from_json(const ojson& j) {
  expect_keys(j, {"group", "set"}, {"domains", "maps"}, "instance");
  GroupSpec group = group_from_json(j.at("group"));
  if (!j.at("set").is_array())
    fail(ErrorCode::MalformedInstance, "set must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& entry : j.at("set")) labels.push_back(as_string(entry, "set label"));

  std::map<GroupElement, std::vector<std::string>> domains;
  if (j.contains("domains")) {
    if (!j.at("domains").is_object())
      fail(ErrorCode::MalformedInstance, "domains must be an object");
    for (const auto& [key, value] : j.at("domains").items()) {
      if (!value.is_array())
        fail(ErrorCode::MalformedInstance, "domain for '" + key + "' must be an array");
      std::vector<std::string> dom;
      for (const auto& entry : value) dom.push_back(as_string(entry, "domain label"));
      domains[group.parse_key(key)] = std::move(dom);
    }
  }
  std::map<GroupElement, std::map<std::string, std::string>> maps;
  if (j.contains("maps")) {
    if (!j.at("maps").is_object())
      fail(ErrorCode::MalformedInstance, "maps must be an object");
    for (const auto& [key, value] : j.at("maps").items()) {
      if (!value.is_object())
        fail(ErrorCode::MalformedInstance, "map for '" + key + "' must be an object");
      std::map<std::string, std::string> entries;
      for (const auto& [from, to] : value.items())
        entries[from] = as_string(to, "map image");
      maps[group.parse_key(key)] = std::move(entries);
    }
  }
  return PartialAction(std::move(group), std::move(labels), domains, maps);
}

ojson element_to_json(const PartialAction& action, const SkewRingElement& a) {
  ojson terms = ojson::object();
  for (const auto& [t, f] : a.terms()) {
    ojson inner = ojson::object();
    for (const auto& [x, c] : f.terms()) {
      if (c.field().kind() == FieldKind::GFp)
        inner[action.label(x)] = c.residue();
      else
        inner[action.label(x)] = c.to_string();
    }
    terms[t.key()] = std::move(inner);
  }
  ojson j;
  j["terms"] = std::move(terms);
  return j;
}

SkewRingElement element_from_json(const PartialAction& action, const FieldSpec& field,
                                  const ojson& j) {
  expect_keys(j, {"terms"}, {}, "element");
  if (!j.at("terms").is_object())
    fail(ErrorCode::MalformedInstance, "terms must be an object");
  SkewRingElement out(field, action.size());
  for (const auto& [key, inner] : j.at("terms").items()) {
    const GroupElement t = action.group().parse_key(key);
    if (!inner.is_object())
      fail(ErrorCode::MalformedInstance, "coefficient of '" + key + "' must be an object");
    FinSuppFunction f(field, action.size());
    for (const auto& [label, value] : inner.items()) {
      int x;
      try {
        x = action.index_of(label);
      } catch (const Error&) {
        fail(ErrorCode::MalformedInstance, "label '" + label + "' is not in the set");
      }
      Scalar c = Scalar::zero(field);
      if (value.is_number_integer()) {
        c = Scalar::from_int(field, value.get<std::int64_t>());
      } else if (value.is_string()) {
        if (field.kind() == FieldKind::Rational)
          c = Scalar::from_rational(parse_rational(value.get<std::string>()));
        else
          fail(ErrorCode::MalformedInstance,
               "GF(p) coefficient for '" + label + "' must be an integer");
      } else {
        fail(ErrorCode::MalformedInstance, "bad coefficient for '" + label + "'");
      }
      f.set(x, c);
    }
    out.set_term(t, f);
  }
  require_member(action, out); // elements of R keep supp(f_t) inside X_t
  return out;
}

std::string pretty(const PartialAction& action, const SkewRingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  // descending group order reads naturally for shift-style elements
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    for (const auto& [x, c] : it->second.terms()) {
      if (!out.empty()) out += " + ";
      if (!c.is_one()) out += c.to_string() + "·";
      out += "χ{" + action.label(x) + "}δ(" + it->first.key() + ")";
    }
  }
  return out;
}

ojson guards_to_json(const Guards& guards) {
  ojson j;
  j["max_dim"] = guards.max_dim;
  j["max_subspaces"] = guards.max_subspaces;
  j["bfs_depth"] = guards.bfs_depth;
  j["max_unit_enum"] = guards.max_unit_enum;
  j["max_set"] = guards.max_set;
  return j;
}

ojson validation_report_json(const ValidationReport& report) {
  ojson j;
  j["version"] = kVersion;
  j["ok"] = report.ok();
  ojson violations = ojson::array();
  for (const ActionViolation& v : report.violations) {
    ojson entry;
    entry["axiom"] = v.axiom_name();
    entry["detail"] = v.detail;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  return j;
}

namespace {

ojson labels_json(const PartialAction& action, const std::vector<int>& points) {
  ojson out = ojson::array();
  for (int x : points) out.push_back(action.label(x));
  return out;
}

ojson criteria_theorem2_json(const CriteriaVerdict& v) {
  ojson j;
  j["minimal"] = v.minimal;
  j["free"] = v.free;
  return j;
}

ojson criteria_theorem1_json(const PartialAction& action, const CriteriaVerdict& v) {
  ojson j;
  j["g_simple"] = v.g_simple;
  if (v.corners_are_fields) {
    ojson units = ojson::array();
    for (const auto& unit_set : v.non_field_units) units.push_back(labels_json(action, unit_set));
    j["non_field_units"] = std::move(units);
  } else {
    j["non_field_units"] = nullptr; // coefficient field cannot be exhausted
  }
  return j;
}

ojson witnesses_json(const PartialAction& action, const SimplicityDecision& decision) {
  ojson w = ojson::object();
  if (decision.oracle && !decision.oracle->simple) {
    if (decision.oracle->generator)
      w["proper_ideal_generator"] = element_to_json(action, *decision.oracle->generator);
    if (decision.oracle->proper_ideal)
      w["proper_ideal_dim"] = decision.oracle->proper_ideal->basis.dim();
  }
  if (decision.criteria) {
    const CriteriaVerdict& c = *decision.criteria;
    if (!c.minimal) w["nonminimal_orbit"] = labels_json(action, c.minimality_witness);
    if (!c.free && c.freeness_witness) {
      ojson fp;
      fp["x"] = action.label(c.freeness_witness->first);
      fp["t"] = c.freeness_witness->second.key();
      w["fixed_point"] = std::move(fp);
    }
    if (!c.g_simple) w["invariant_subset"] = labels_json(action, c.g_simple_witness);
    if (c.non_field_witness)
      w["non_field_element"] = element_to_json(action, *c.non_field_witness);
  }
  return w;
}

} // namespace

ojson check_report_json(const PartialAction& action, const FieldSpec& field,
                        const Guards& guards) {
  ojson j;
  j["version"] = kVersion;
  ValidationReport validation = validate_action(action);
  j["valid"] = validation.ok();
  ojson violations = ojson::array();
  for (const ActionViolation& v : validation.violations) {
    ojson entry;
    entry["axiom"] = v.axiom_name();
    entry["detail"] = v.detail;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  j["group"] = action.group().describe();
  j["set_size"] = action.size();
  j["ring_dim"] = action.ring_dim();
  ojson support = ojson::array();
  for (const GroupElement& t : action.effective_support()) support.push_back(t.key());
  j["effective_support"] = std::move(support);
  if (validation.ok()) {
    ojson orbit_list = ojson::array();
    for (const auto& orbit : orbits(action)) orbit_list.push_back(labels_json(action, orbit));
    j["orbits"] = std::move(orbit_list);
    MinimalityResult minimal = is_minimal(action);
    j["minimal"] = minimal.minimal;
    FreenessResult freeness = is_free(action);
    j["free"] = freeness.free;
    j["topologically_free"] = freeness.topologically_free;
    try {
      GSimplicityResult gs = is_G_simple(action, field, guards);
      j["g_simple"] = gs.g_simple;
    } catch (const Error& e) {
      j["g_simple"] = nullptr;
      j["g_simple_error"] = e.what();
    }
  }
  return j;
}

ojson simplicity_report_json(const PartialAction& action, const FieldSpec& field,
                             const SimplicityDecision& decision, const Guards& guards,
                             const std::optional<ojson>& timings) {
  ojson j;
  j["version"] = kVersion;
  j["instance"] = instance_to_json(action);
  j["field"] = field_to_json(field);
  if (decision.oracle)
    j["oracle"] = decision.oracle->simple ? "simple" : "not-simple";
  else
    j["oracle"] = nullptr;
  if (decision.criteria) {
    j["theorem2"] = criteria_theorem2_json(*decision.criteria);
    j["theorem1"] = criteria_theorem1_json(action, *decision.criteria);
  } else {
    j["theorem2"] = nullptr;
    j["theorem1"] = nullptr;
  }
  j["simple"] = decision.simple;
  j["agree"] = decision.agree;
  j["witnesses"] = witnesses_json(action, decision);
  j["guards"] = guards_to_json(guards);
  if (timings) j["timings_ms"] = *timings;
  return j;
}

ojson suite_report_json(const std::vector<CorpusInstance>& corpus, const SuiteReport& report,
                        const SuiteOptions& options, const std::string& mode,
                        std::optional<std::uint64_t> seed,
                        const std::optional<ojson>& timings) {
  ojson j;
  j["version"] = kVersion;
  j["mode"] = mode;
  if (seed)
    j["seed"] = *seed;
  else
    j["seed"] = nullptr;
  ojson fields = ojson::array();
  for (const FieldSpec& f : options.fields) fields.push_back(f.name());
  j["fields"] = std::move(fields);
  j["method"] = options.method == DecisionMethod::Oracle
                    ? "oracle"
                    : options.method == DecisionMethod::Criteria ? "theorems" : "both";
  j["count"] = corpus.size();
  j["guards"] = guards_to_json(options.guards);

  ojson instances = ojson::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CorpusInstance& item = corpus[i];
    const SuiteInstanceResult& result = report.results.at(i);
    ojson entry;
    entry["id"] = item.id;
    entry["instance"] = instance_to_json(item.action);
    ojson outcomes = ojson::array();
    for (const FieldOutcome& outcome : result.outcomes) {
      ojson o;
      o["field"] = outcome.field.name();
      if (outcome.oracle)
        o["oracle"] = outcome.oracle->simple ? "simple" : "not-simple";
      else
        o["oracle"] = nullptr;
      if (outcome.oracle_error) o["oracle_error"] = *outcome.oracle_error;
      if (outcome.criteria) {
        o["theorem2"] = criteria_theorem2_json(*outcome.criteria);
        o["theorem1"] = criteria_theorem1_json(item.action, *outcome.criteria);
      } else {
        o["theorem2"] = nullptr;
        o["theorem1"] = nullptr;
      }
      if (outcome.criteria_error) o["criteria_error"] = *outcome.criteria_error;
      if (outcome.simple)
        o["simple"] = *outcome.simple;
      else
        o["simple"] = nullptr;
      o["agree"] = outcome.agree;
      outcomes.push_back(std::move(o));
    }
    entry["results"] = std::move(outcomes);
    instances.push_back(std::move(entry));
  }
  j["instances"] = std::move(instances);

  ojson summary;
  summary["total"] = report.summary.total;
  summary["decided"] = report.summary.decided;
  summary["simple"] = report.summary.simple;
  summary["not_simple"] = report.summary.not_simple;
  ojson by_obstruction;
  by_obstruction["not_minimal"] = report.summary.not_minimal;
  by_obstruction["not_free"] = report.summary.not_free;
  by_obstruction["not_g_simple"] = report.summary.not_g_simple;
  by_obstruction["corner_center_not_field"] = report.summary.corner_center_not_field;
  summary["by_obstruction"] = std::move(by_obstruction);
  summary["disagreements"] = report.summary.disagreements;
  summary["skipped"] = report.summary.skipped;
  j["summary"] = std::move(summary);
  if (timings) j["timings_ms"] = *timings;
  return j;
}

} // namespace skewlab
