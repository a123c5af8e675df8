#include "pearl/dataset.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pearl/errors.hpp"

namespace pearl {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw SchemaError(path + ": " + msg);
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!ok.count(key)) fail(path + "." + key, "unknown field");
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required field");
  return *it;
}

const json* optional_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) fail(path, "integer out of range");
  return static_cast<int>(v);
}

int as_count(const json& j, const std::string& path) {
  const int v = as_int(j, path);
  if (v != 0 && v != 1) fail(path, "count must be 0 or 1");
  return v;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::vector<int> int_list(const json& j, const std::string& path) {
  std::vector<int> out;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_int(arr[i], item(path, i)));
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  std::vector<std::string> out;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_string(arr[i], item(path, i)));
  return out;
}

PearlData read_pearl(const json& j, const std::string& path) {
  check_keys(j, path, {"name", "N", "generators", "diff_terms", "unit", "betti_hint"});
  PearlData d;
  d.name = as_string(require(j, path, "name"), path + ".name");
  d.N = as_int(require(j, path, "N"), path + ".N");
  if (d.N < 1) fail(path + ".N", "must be >= 1");
  const auto gpath = path + ".generators";
  const auto& gens = as_array(require(j, path, "generators"), gpath);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto p = item(gpath, i);
    check_keys(gens[i], p, {"id", "index"});
    d.generators.push_back({as_string(require(gens[i], p, "id"), p + ".id"),
                            as_int(require(gens[i], p, "index"), p + ".index")});
  }
  const auto dpath = path + ".diff_terms";
  const auto& terms = as_array(require(j, path, "diff_terms"), dpath);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto p = item(dpath, i);
    check_keys(terms[i], p, {"x", "y", "mu_bar", "count"});
    DiffTerm t;
    t.x = as_string(require(terms[i], p, "x"), p + ".x");
    t.y = as_string(require(terms[i], p, "y"), p + ".y");
    t.mu_bar = as_int(require(terms[i], p, "mu_bar"), p + ".mu_bar");
    if (t.mu_bar < 0) fail(p + ".mu_bar", "must be >= 0");
    t.count = as_count(require(terms[i], p, "count"), p + ".count");
    d.diff_terms.push_back(std::move(t));
  }
  if (auto u = optional_field(j, "unit")) d.unit = string_list(*u, path + ".unit");
  if (auto b = optional_field(j, "betti_hint")) d.betti_hint = int_list(*b, path + ".betti_hint");
  return d;
}

std::vector<TwistTerm> read_twist(const json& j, const std::string& path) {
  std::vector<TwistTerm> out;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = item(path, i);
    check_keys(arr[i], p, {"x", "y", "mu_bar", "count"});
    TwistTerm t;
    t.x = as_string(require(arr[i], p, "x"), p + ".x");
    t.y = as_string(require(arr[i], p, "y"), p + ".y");
    t.mu_bar = as_int(require(arr[i], p, "mu_bar"), p + ".mu_bar");
    if (t.mu_bar < 0) fail(p + ".mu_bar", "must be >= 0");
    t.count = as_count(require(arr[i], p, "count"), p + ".count");
    out.push_back(std::move(t));
  }
  return out;
}

ProductData read_product(const json& j, const std::string& path) {
  check_keys(j, path, {"terms", "unit"});
  ProductData d;
  const auto tpath = path + ".terms";
  const auto& arr = as_array(require(j, path, "terms"), tpath);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = item(tpath, i);
    check_keys(arr[i], p, {"z", "x", "y", "mu_bar", "count"});
    ProductTerm t;
    t.z = as_string(require(arr[i], p, "z"), p + ".z");
    t.x = as_string(require(arr[i], p, "x"), p + ".x");
    t.y = as_string(require(arr[i], p, "y"), p + ".y");
    t.mu_bar = as_int(require(arr[i], p, "mu_bar"), p + ".mu_bar");
    if (t.mu_bar < 0) fail(p + ".mu_bar", "must be >= 0");
    t.count = as_count(require(arr[i], p, "count"), p + ".count");
    d.terms.push_back(std::move(t));
  }
  d.unit = string_list(require(j, path, "unit"), path + ".unit");
  return d;
}

ModuleActionData read_action(const json& j, const std::string& path) {
  check_keys(j, path, {"ambient_classes", "action_terms"});
  ModuleActionData d;
  const auto cpath = path + ".ambient_classes";
  const auto& classes = as_array(require(j, path, "ambient_classes"), cpath);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto p = item(cpath, i);
    check_keys(classes[i], p, {"id", "degree"});
    d.ambient_classes.push_back({as_string(require(classes[i], p, "id"), p + ".id"),
                                 as_int(require(classes[i], p, "degree"), p + ".degree")});
  }
  const auto tpath = path + ".action_terms";
  const auto& terms = as_array(require(j, path, "action_terms"), tpath);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto p = item(tpath, i);
    check_keys(terms[i], p, {"z", "a", "x", "mu_bar", "count"});
    ActionTerm t;
    t.z = as_string(require(terms[i], p, "z"), p + ".z");
    t.a = as_string(require(terms[i], p, "a"), p + ".a");
    t.x = as_string(require(terms[i], p, "x"), p + ".x");
    t.mu_bar = as_int(require(terms[i], p, "mu_bar"), p + ".mu_bar");
    if (t.mu_bar < 0) fail(p + ".mu_bar", "must be >= 0");
    t.count = as_count(require(terms[i], p, "count"), p + ".count");
    d.action_terms.push_back(std::move(t));
  }
  return d;
}

std::vector<ExpectedTerm> read_terms(const json& j, const std::string& path) {
  std::vector<ExpectedTerm> out;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = item(path, i);
    check_keys(arr[i], p, {"id", "exponents"});
    out.push_back({as_string(require(arr[i], p, "id"), p + ".id"),
                   int_list(require(arr[i], p, "exponents"), p + ".exponents")});
  }
  return out;
}

Expectations read_expectations(const json& j, const std::string& path) {
  check_keys(j, path,
             {"cohomology_dims", "gamma_dims", "classical_gamma_dims", "euler_class",
              "ambient_euler_class", "expect_gamma_vanishes", "euler_invertible"});
  Expectations e;
  if (auto v = optional_field(j, "cohomology_dims")) e.cohomology_dims = int_list(*v, path + ".cohomology_dims");
  if (auto v = optional_field(j, "gamma_dims")) e.gamma_dims = int_list(*v, path + ".gamma_dims");
  if (auto v = optional_field(j, "classical_gamma_dims"))
    e.classical_gamma_dims = int_list(*v, path + ".classical_gamma_dims");
  if (auto v = optional_field(j, "euler_class")) e.euler_class = read_terms(*v, path + ".euler_class");
  if (auto v = optional_field(j, "ambient_euler_class"))
    e.ambient_euler_class = read_terms(*v, path + ".ambient_euler_class");
  if (auto v = optional_field(j, "expect_gamma_vanishes"))
    e.expect_gamma_vanishes = as_bool(*v, path + ".expect_gamma_vanishes");
  if (auto v = optional_field(j, "euler_invertible"))
    e.euler_invertible = as_bool(*v, path + ".euler_invertible");
  return e;
}

// -- writing -----------------------------------------------------------------

json term_json(const std::string& x, const std::string& y, int mu, int count) {
  json j;
  j["x"] = x;
  j["y"] = y;
  j["mu_bar"] = mu;
  j["count"] = count;
  return j;
}

json terms_json(const std::vector<ExpectedTerm>& terms) {
  json arr = json::array();
  for (const auto& t : terms) {
    json j;
    j["id"] = t.id;
    j["exponents"] = t.exponents;
    arr.push_back(std::move(j));
  }
  return arr;
}

json to_json(const DatasetFile& d) {
  json root;
  root["schema_version"] = d.schema_version;
  json pearl;
  pearl["name"] = d.pearl.name;
  pearl["N"] = d.pearl.N;
  pearl["generators"] = json::array();
  for (const auto& g : d.pearl.generators) {
    json j;
    j["id"] = g.id;
    j["index"] = g.index;
    pearl["generators"].push_back(std::move(j));
  }
  pearl["diff_terms"] = json::array();
  for (const auto& t : d.pearl.diff_terms) pearl["diff_terms"].push_back(term_json(t.x, t.y, t.mu_bar, t.count));
  if (d.pearl.unit) pearl["unit"] = *d.pearl.unit;
  if (d.pearl.betti_hint) pearl["betti_hint"] = *d.pearl.betti_hint;
  root["pearl"] = std::move(pearl);

  if (d.twist) {
    root["twist"] = json::array();
    for (const auto& t : *d.twist) root["twist"].push_back(term_json(t.x, t.y, t.mu_bar, t.count));
  }
  if (d.product) {
    json p;
    p["terms"] = json::array();
    for (const auto& t : d.product->terms) {
      json j;
      j["z"] = t.z;
      j["x"] = t.x;
      j["y"] = t.y;
      j["mu_bar"] = t.mu_bar;
      j["count"] = t.count;
      p["terms"].push_back(std::move(j));
    }
    p["unit"] = d.product->unit;
    root["product"] = std::move(p);
  }
  if (d.module_action) {
    json m;
    m["ambient_classes"] = json::array();
    for (const auto& c : d.module_action->ambient_classes) {
      json j;
      j["id"] = c.id;
      j["degree"] = c.degree;
      m["ambient_classes"].push_back(std::move(j));
    }
    m["action_terms"] = json::array();
    for (const auto& t : d.module_action->action_terms) {
      json j;
      j["z"] = t.z;
      j["a"] = t.a;
      j["x"] = t.x;
      j["mu_bar"] = t.mu_bar;
      j["count"] = t.count;
      m["action_terms"].push_back(std::move(j));
    }
    root["module_action"] = std::move(m);
  }
  if (d.expectations) {
    const auto& e = *d.expectations;
    json j = json::object();
    if (e.cohomology_dims) j["cohomology_dims"] = *e.cohomology_dims;
    if (e.gamma_dims) j["gamma_dims"] = *e.gamma_dims;
    if (e.classical_gamma_dims) j["classical_gamma_dims"] = *e.classical_gamma_dims;
    if (e.euler_class) j["euler_class"] = terms_json(*e.euler_class);
    if (e.ambient_euler_class) j["ambient_euler_class"] = terms_json(*e.ambient_euler_class);
    if (e.expect_gamma_vanishes) j["expect_gamma_vanishes"] = *e.expect_gamma_vanishes;
    if (e.euler_invertible) j["euler_invertible"] = *e.euler_invertible;
    root["expectations"] = std::move(j);
  }
  return root;
}

bool scalar_or_scalar_array(const json& j) {
  if (j.is_primitive()) return true;
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!e.is_primitive()) return false;
  return true;
}

// Objects of scalars and arrays of scalars print on one line.
bool flat(const json& j) {
  if (j.is_primitive()) return true;
  if (j.is_array()) return scalar_or_scalar_array(j);
  for (const auto& [k, v] : j.items())
    if (!scalar_or_scalar_array(v)) return false;
  return true;
}

std::string inline_text(const json& j) {
  if (j.is_primitive()) return j.dump();
  std::string out = j.is_array() ? "[" : "{";
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    if (!first) out += ", ";
    first = false;
    if (j.is_object()) out += json(k).dump() + ": ";
    out += inline_text(v);
  }
  return out + (j.is_array() ? "]" : "}");
}

void emit(const json& j, int indent, std::string& out) {
  if (flat(j) && inline_text(j).size() + static_cast<std::size_t>(indent) <= 100) {
    out += inline_text(j);
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  out += j.is_array() ? "[\n" : "{\n";
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += json(k).dump() + ": ";
    emit(v, indent + 2, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

DatasetFile parse_dataset(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    const auto end = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i)
      if (text[i] == '\n') ++line;
    throw SchemaError("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  const std::string path = "$";
  check_keys(root, path, {"schema_version", "pearl", "twist", "product", "module_action", "expectations"});
  DatasetFile d;
  d.schema_version = as_int(require(root, path, "schema_version"), "$.schema_version");
  if (d.schema_version != kSchemaVersion)
    fail("$.schema_version", "unsupported version " + std::to_string(d.schema_version));
  d.pearl = read_pearl(require(root, path, "pearl"), "$.pearl");
  if (auto t = optional_field(root, "twist")) d.twist = read_twist(*t, "$.twist");
  if (auto p = optional_field(root, "product")) d.product = read_product(*p, "$.product");
  if (auto m = optional_field(root, "module_action")) d.module_action = read_action(*m, "$.module_action");
  if (auto e = optional_field(root, "expectations")) d.expectations = read_expectations(*e, "$.expectations");
  return d;
}

DatasetFile load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_dataset(buf.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

std::string format_dataset(const DatasetFile& d) {
  std::string out;
  emit(to_json(d), 0, out);
  return out + "\n";
}

void save_dataset(const DatasetFile& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError(path.string() + ": cannot write file");
  out << format_dataset(d);
}

Cochain cochain_from_terms(const PearlComplex& c, const std::vector<ExpectedTerm>& terms) {
  Cochain out = c.zero();
  for (const auto& t : terms) out[c.position(t.id)] += LaurentElement(t.exponents);
  return out;
}

}  // namespace pearl
