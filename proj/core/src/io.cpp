#include "fewnomial/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace fewnomial::io {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Json exponents_to_json(const ExponentVector& e) {
  Json out = Json::array();
  for (const auto& entry : e.entries()) out.push_back(rational_to_string(entry));
  return out;
}

ExponentVector exponents_from_json(const Json& j, std::size_t arity) {
  if (!j.is_array() || j.size() != arity) bad("exponent vector has the wrong length");
  std::vector<Rational> entries;
  entries.reserve(arity);
  for (const auto& entry : j) {
    if (!entry.is_string()) bad("exponents must be rational strings");
    entries.push_back(parse_rational(entry.get<std::string>()));
  }
  return ExponentVector(std::move(entries));
}

Json term_to_json(const Term& t) {
  Json out;
  out["coeff"] = rational_to_string(t.coefficient);
  out["exponents"] = exponents_to_json(t.exponent);
  return out;
}

Term term_from_json(const Json& j, std::size_t arity) {
  return Term{parse_rational(string_field(j, "coeff")),
              exponents_from_json(field(j, "exponents"), arity)};
}

Json polynomial_to_json(const SparsePolynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back(term_to_json(t));
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

SparsePolynomial polynomial_from_json(const Json& j, std::size_t arity) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  std::vector<Term> parsed;
  parsed.reserve(terms.size());
  for (const auto& t : terms) parsed.push_back(term_from_json(t, arity));
  return SparsePolynomial(arity, std::move(parsed));
}

std::vector<std::string> variables_from_json(const Json& j) {
  const Json& vars = field(j, "variables");
  if (!vars.is_array() || vars.empty()) bad("'variables' must be a nonempty array");
  std::vector<std::string> out;
  out.reserve(vars.size());
  for (const auto& v : vars) {
    if (!v.is_string()) bad("variable names must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Json plan_to_json(const ConstructionPlan& plan) {
  Json out;
  out["n"] = plan.n;
  out["k"] = plan.k;
  out["m"] = plan.m;
  out["j"] = plan.j;
  out["block_ids"] = plan.block_ids;
  out["predicted"] = plan.predicted.str();
  Json layout;
  for (const auto& [local, global] : plan.variable_layout) layout[local] = global;
  out["variable_layout"] = std::move(layout);
  out["outside_theorem_range"] = plan.outside_theorem_range;
  return out;
}

ConstructionPlan plan_from_json(const Json& j) {
  ConstructionPlan plan;
  plan.n = size_field(j, "n");
  plan.k = size_field(j, "k");
  plan.m = size_field(j, "m");
  plan.j = size_field(j, "j");
  const Json& ids = field(j, "block_ids");
  if (!ids.is_array()) bad("'block_ids' must be an array");
  for (const auto& id : ids) {
    if (!id.is_string()) bad("block ids must be strings");
    plan.block_ids.push_back(id.get<std::string>());
  }
  plan.predicted = Integer(string_field(j, "predicted"));
  const Json& layout = field(j, "variable_layout");
  if (!layout.is_object()) bad("'variable_layout' must be an object");
  for (const auto& [local, global] : layout.items()) {
    if (!global.is_string()) bad("variable layout values must be strings");
    plan.variable_layout.emplace_back(local, global.get<std::string>());
  }
  const Json& flag = field(j, "outside_theorem_range");
  if (!flag.is_boolean()) bad("'outside_theorem_range' must be a boolean");
  plan.outside_theorem_range = flag.get<bool>();
  return plan;
}

Json manifest_to_json(const RunManifest& manifest) {
  Json out;
  out["command"] = manifest.command_line;
  Json inputs = Json::object();
  for (const auto& [path, hash] : manifest.inputs) inputs[path] = hash;
  out["inputs"] = std::move(inputs);
  out["precision"] = manifest.precision;
  out["version"] = manifest.version;
  if (!manifest.timestamp.empty()) out["timestamp"] = manifest.timestamp;
  return out;
}

Json system_to_json_value(const SparseSystem& system, const RunManifest* manifest) {
  Json out;
  out["variables"] = system.variables();
  Json polys = Json::array();
  for (const auto& p : system.polynomials()) polys.push_back(polynomial_to_json(p));
  out["polynomials"] = std::move(polys);
  Json metadata = Json::object();
  if (system.plan()) metadata["plan"] = plan_to_json(*system.plan());
  if (manifest) metadata["manifest"] = manifest_to_json(*manifest);
  out["metadata"] = std::move(metadata);
  return out;
}

SparseSystem system_from_json_value(const Json& j) {
  auto variables = variables_from_json(j);
  const std::size_t arity = variables.size();
  const Json& polys = field(j, "polynomials");
  if (!polys.is_array()) bad("'polynomials' must be an array");
  std::vector<SparsePolynomial> polynomials;
  polynomials.reserve(polys.size());
  for (const auto& p : polys) polynomials.push_back(polynomial_from_json(p, arity));
  SparseSystem system(std::move(variables), std::move(polynomials));
  if (const auto metadata = j.find("metadata"); metadata != j.end() && metadata->is_object()) {
    if (const auto plan = metadata->find("plan"); plan != metadata->end()) {
      system.attach_plan(std::make_shared<const ConstructionPlan>(plan_from_json(*plan)));
    }
  }
  return system;
}

Json parse(const std::string& text) {
  Json j = Json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) bad("malformed JSON");
  return j;
}

std::size_t variable_index(const std::vector<std::string>& variables, const std::string& name) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == name) return i;
  }
  bad("unknown variable '" + name + "'");
}

}  // namespace

std::string library_version() {
#ifdef FEWNOMIAL_VERSION
  return FEWNOMIAL_VERSION;
#else
  return "0.0.0";
#endif
}

std::string system_to_json(const SparseSystem& system, const RunManifest* manifest) {
  return dump(system_to_json_value(system, manifest));
}

SparseSystem system_from_json(const std::string& text) {
  return system_from_json_value(parse(text));
}

std::string block_to_json(const BlockRecipe& recipe) {
  Json out;
  out["id"] = recipe.id;
  out["m"] = recipe.m;
  out["expected_count"] = recipe.expected_count;
  out["principal_variable"] = recipe.system.variables().at(recipe.principal_variable);
  out["variables"] = recipe.system.variables();
  Json polys = Json::array();
  for (const auto& p : recipe.system.polynomials()) polys.push_back(polynomial_to_json(p));
  out["polynomials"] = std::move(polys);
  Json schedule = Json::array();
  for (const auto& step : recipe.schedule) {
    Json s;
    s["equation"] = step.equation;
    s["variable"] = recipe.system.variables().at(step.variable);
    s["numerator"] = polynomial_to_json(step.numerator);
    s["denominator"] = term_to_json(step.denominator);
    schedule.push_back(std::move(s));
  }
  out["schedule"] = std::move(schedule);
  Json eliminant = Json::array();
  for (const auto& c : recipe.eliminant.coefficients()) eliminant.push_back(rational_to_string(c));
  out["eliminant"] = std::move(eliminant);
  return dump(out);
}

BlockRecipe block_from_json(const std::string& text) {
  const Json j = parse(text);
  BlockRecipe recipe;
  recipe.id = string_field(j, "id");
  recipe.m = size_field(j, "m");
  recipe.expected_count = size_field(j, "expected_count");
  auto variables = variables_from_json(j);
  const std::size_t arity = variables.size();
  recipe.principal_variable = variable_index(variables, string_field(j, "principal_variable"));
  const Json& polys = field(j, "polynomials");
  if (!polys.is_array()) bad("'polynomials' must be an array");
  std::vector<SparsePolynomial> polynomials;
  for (const auto& p : polys) polynomials.push_back(polynomial_from_json(p, arity));
  recipe.system = SparseSystem(std::move(variables), std::move(polynomials));
  const Json& schedule = field(j, "schedule");
  if (!schedule.is_array()) bad("'schedule' must be an array");
  for (const auto& s : schedule) {
    ScheduleStep step;
    step.equation = size_field(s, "equation");
    step.variable = variable_index(recipe.system.variables(), string_field(s, "variable"));
    step.numerator = polynomial_from_json(field(s, "numerator"), arity);
    step.denominator = term_from_json(field(s, "denominator"), arity);
    recipe.schedule.push_back(std::move(step));
  }
  const Json& eliminant = field(j, "eliminant");
  if (!eliminant.is_array()) bad("'eliminant' must be an array of rational strings");
  std::vector<Rational> coeffs;
  for (const auto& c : eliminant) {
    if (!c.is_string()) bad("eliminant coefficients must be rational strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  recipe.eliminant = UnivariatePolynomial(std::move(coeffs));
  return recipe;
}

std::string solutions_to_json(const SolutionSet& set, unsigned digits,
                              const RunManifest* manifest) {
  Json out;
  out["count"] = set.count_claimed;
  Json solutions = Json::array();
  for (const auto& solution : set.solutions) {
    Json s;
    Json coords = Json::array();
    for (const auto& c : solution.coordinates) coords.push_back(real_to_string(c, digits));
    s["coords"] = std::move(coords);
    s["residual"] = real_to_string(solution.residual_norm, digits);
    s["jacobian_det"] = real_to_string(solution.jacobian_det, digits);
    solutions.push_back(std::move(s));
  }
  out["solutions"] = std::move(solutions);
  Json metadata = Json::object();
  if (manifest) metadata["manifest"] = manifest_to_json(*manifest);
  out["metadata"] = std::move(metadata);
  return dump(out);
}

SolutionFile solutions_from_json(const std::string& text) {
  const Json j = parse(text);
  SolutionFile out;
  out.count = size_field(j, "count");
  const Json& solutions = field(j, "solutions");
  if (!solutions.is_array()) bad("'solutions' must be an array");
  for (const auto& s : solutions) {
    const Json& coords = field(s, "coords");
    if (!coords.is_array()) bad("'coords' must be an array");
    std::vector<Real> point;
    point.reserve(coords.size());
    for (const auto& c : coords) {
      if (!c.is_string()) bad("coordinates must be decimal strings");
      try {
        point.emplace_back(c.get<std::string>());
      } catch (const std::runtime_error&) {
        bad("bad decimal literal '" + c.get<std::string>() + "'");
      }
    }
    out.points.push_back(std::move(point));
  }
  return out;
}

std::string report_to_json(const BoundReport& report, const RunManifest* manifest) {
  Json out;
  out["n"] = report.n;
  out["k"] = report.k;
  out["digits"] = report.digits;
  Json entries;
  for (const auto& [name, value] : report.entries) {
    Json entry;
    entry["exact_part"] = rational_to_string(value.exact_part);
    entry["factor"] = factor_name(value.factor);
    entry["approx"] = real_to_string(value.approx(report.digits), report.digits);
    entries[name] = std::move(entry);
  }
  out["entries"] = std::move(entries);
  Json ordering;
  if (report.ordering.lower_le_bs) ordering["lower_le_bs"] = *report.ordering.lower_le_bs;
  ordering["lemma3_lt_theorem2"] = report.ordering.lemma3_lt_theorem2;
  if (report.ordering.full_support_lt_theorem2) {
    ordering["full_support_lt_theorem2"] = *report.ordering.full_support_lt_theorem2;
  }
  ordering["kappa_doubles_to_bs"] = report.ordering.kappa_doubles_to_bs;
  ordering["singular_doubles_theorem2"] = report.ordering.singular_doubles_theorem2;
  ordering["perrucci_lt_lrw"] = report.ordering.perrucci_lt_lrw;
  out["ordering"] = std::move(ordering);
  Json metadata = Json::object();
  if (manifest) metadata["manifest"] = manifest_to_json(*manifest);
  out["metadata"] = std::move(metadata);
  return dump(out);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace fewnomial::io
