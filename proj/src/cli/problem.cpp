#include "grext/cli/problem.hpp"

#include <map>
#include "json.hpp"

#include "grext/error.hpp"

namespace grext {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& pointer, const std::string& what) {
  fail("SchemaError", pointer + ": " + what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("ParseError", "byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Rational parse_rational_at(const std::string& s, const std::string& pointer) {
  auto q = parse_rational(s);
  if (!q) schema(pointer, "not a rational: \"" + s + "\"");
  return *q;
}

std::string rational_text(const json& v, const std::string& pointer) {
  if (v.is_string()) return to_short_string(parse_rational_at(v.get<std::string>(), pointer));
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  schema(pointer, "expected a rational string");
}

Integer integer_at(const json& v, const std::string& pointer) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Rational q = parse_rational_at(v.get<std::string>(), pointer);
    if (q.get_den() != 1) schema(pointer, "expected an integer");
    return q.get_num();
  }
  schema(pointer, "expected an integer");
}

// "c0,c1,..." with each ci rational, normalized.
std::string coefficient_list(const json& v, const std::string& pointer) {
  if (!v.is_string() && !v.is_number_integer()) schema(pointer, "expected a coefficient string");
  std::string s = v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) schema(pointer, "empty coefficient in \"" + s + "\"");
    out += (i ? "," : "") + to_short_string(parse_rational_at(parts[i], pointer));
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts(1);
  for (char ch : s) {
    if (ch == ',') {
      parts.emplace_back();
    } else {
      parts.back() += ch;
    }
  }
  return parts;
}

const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> p = {
      {"lsqrt2", R"({
  "ambient_dim": 1,
  "field": {"min_poly": [-2, 0, 1], "root_interval": ["1", "2"]},
  "lattice_basis": [["1"], ["0,1"]]
}
)"},
      {"cubic", R"({
  "ambient_dim": 1,
  "field": {"min_poly": [-1, -1, 0, 1], "root_interval": ["1", "2"]},
  "lattice_basis": [["1"], ["0,1"]]
}
)"},
      {"complex-alpha-sqrt2", R"({
  "ambient_dim": 2,
  "field": {"min_poly": [-2, 0, 1], "root_interval": ["1", "2"]},
  "lattice_basis": [["1", "0"], ["0", "1"], ["0", "0,1"]]
}
)"},
      {"carriere-211", R"({
  "ambient_dim": 1,
  "field": {"min_poly": [-5, 0, 1], "root_interval": ["2", "3"]},
  "ga_matrix": [[2, 1], [1, 1]],
  "lattice_basis": [["1"], ["0,1"]]
}
)"},
  };
  return p;
}

}  // namespace

ProblemDocument parse_problem(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) schema("", "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "field" && k != "ambient_dim" && k != "lattice_basis" && k != "ga_matrix") schema("/" + k, "unknown key");
  }
  ProblemDocument d;
  if (!j.contains("field") || !j["field"].is_object()) schema("/field", "required object");
  const json& f = j["field"];
  if (!f.contains("min_poly") || !f["min_poly"].is_array() || f["min_poly"].empty()) {
    schema("/field/min_poly", "required nonempty integer array");
  }
  for (std::size_t i = 0; i < f["min_poly"].size(); ++i) {
    d.min_poly.push_back(integer_at(f["min_poly"][i], "/field/min_poly/" + std::to_string(i)));
  }
  if (d.min_poly.size() < 2) schema("/field/min_poly", "degree must be at least 1");
  if (d.min_poly.back() != 1) schema("/field/min_poly", "not monic");
  if (!f.contains("root_interval") || !f["root_interval"].is_array() || f["root_interval"].size() != 2) {
    schema("/field/root_interval", "required pair of rationals");
  }
  for (std::size_t i = 0; i < 2; ++i) {
    d.root_interval[i] = rational_text(f["root_interval"][i], "/field/root_interval/" + std::to_string(i));
  }
  if (!(*parse_rational(d.root_interval[0]) < *parse_rational(d.root_interval[1]))) {
    schema("/field/root_interval", "lower end must be below upper end");
  }
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer()) schema("/ambient_dim", "required 1 or 2");
  long n = j["ambient_dim"].get<long>();
  if (n != 1 && n != 2) schema("/ambient_dim", "must be 1 or 2");
  d.ambient_dim = static_cast<std::size_t>(n);
  if (!j.contains("lattice_basis") || !j["lattice_basis"].is_array() || j["lattice_basis"].empty()) {
    schema("/lattice_basis", "required nonempty array");
  }
  for (std::size_t i = 0; i < j["lattice_basis"].size(); ++i) {
    const json& v = j["lattice_basis"][i];
    std::string p = "/lattice_basis/" + std::to_string(i);
    if (!v.is_array() || v.size() != d.ambient_dim) schema(p, "expected " + std::to_string(n) + " coordinates");
    std::vector<std::string> coords;
    for (std::size_t c = 0; c < v.size(); ++c) coords.push_back(coefficient_list(v[c], p + "/" + std::to_string(c)));
    d.lattice_basis.push_back(coords);
  }
  if (j.contains("ga_matrix")) {
    const json& m = j["ga_matrix"];
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 || m[1].size() != 2) {
      schema("/ga_matrix", "expected a 2x2 integer array");
    }
    std::array<long, 4> a{};
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        if (!m[r][c].is_number_integer()) schema("/ga_matrix/" + std::to_string(r) + "/" + std::to_string(c), "expected an integer");
        a[2 * r + c] = m[r][c].get<long>();
      }
    }
    d.ga_matrix = a;
  }
  return d;
}

std::string problem_to_json(const ProblemDocument& d) {
  json j;
  json poly = json::array();
  for (const auto& c : d.min_poly) {
    if (c.fits_slong_p()) {
      poly.push_back(c.get_si());
    } else {
      poly.push_back(c.get_str());
    }
  }
  j["field"] = {{"min_poly", poly}, {"root_interval", {d.root_interval[0], d.root_interval[1]}}};
  j["ambient_dim"] = d.ambient_dim;
  j["lattice_basis"] = d.lattice_basis;
  if (d.ga_matrix) {
    const auto& a = *d.ga_matrix;
    j["ga_matrix"] = {{a[0], a[1]}, {a[2], a[3]}};
  }
  return j.dump();
}

EmbeddedLattice problem_lattice(const ProblemDocument& d) {
  NumberField f = NumberField::make(d.min_poly, *parse_rational(d.root_interval[0]), *parse_rational(d.root_interval[1]));
  std::vector<FieldVector> basis;
  for (const auto& v : d.lattice_basis) {
    FieldVector x;
    for (const auto& coords : v) x.push_back(parse_field_element(f, split_commas(coords)));
    basis.push_back(x);
  }
  return EmbeddedLattice::make(f, d.ambient_dim, basis);
}

const std::string& problem_preset(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end()) fail("UnknownPreset", name);
  return it->second;
}

std::vector<std::string> problem_preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : presets()) out.push_back(k);
  return out;
}

Nerve parse_nerve(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) schema("", "expected an object");
  auto ints = [&](const json& v, const std::string& p) {
    if (!v.is_array()) schema(p, "expected an integer array");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_integer()) schema(p + "/" + std::to_string(i), "expected an integer");
      out.push_back(v[i].get<int>());
    }
    return out;
  };
  auto simplices = [&](const char* key, std::size_t k) {
    std::vector<std::vector<int>> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) schema(std::string("/") + key, "expected an array");
    for (std::size_t i = 0; i < j[key].size(); ++i) {
      std::string p = std::string("/") + key + "/" + std::to_string(i);
      auto s = ints(j[key][i], p);
      if (s.size() != k) schema(p, "expected " + std::to_string(k) + " vertices");
      out.push_back(s);
    }
    return out;
  };
  if (!j.contains("vertices")) schema("/vertices", "required");
  std::vector<int> vertices = ints(j["vertices"], "/vertices");
  std::vector<Edge> edges;
  for (const auto& s : simplices("edges", 2)) edges.push_back({s[0], s[1]});
  std::vector<Triangle> tris;
  for (const auto& s : simplices("triangles", 3)) tris.push_back({s[0], s[1], s[2]});
  std::vector<Tetrahedron> tets;
  for (const auto& s : simplices("tetrahedra", 4)) tets.push_back({s[0], s[1], s[2], s[3]});
  int base = vertices.empty() ? 0 : vertices.front();
  if (j.contains("basepoint")) {
    if (!j["basepoint"].is_number_integer()) schema("/basepoint", "expected an integer");
    base = j["basepoint"].get<int>();
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
  return make_nerve(name, vertices, edges, tris, base, tets);
}

}  // namespace grext
