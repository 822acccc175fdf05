#include "digroup/finite_digroup.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "digroup/rewrite.hpp"

namespace digroup {

namespace {

using nlohmann::json;

std::string at(const char* name, std::size_t i) { return std::string(name) + "[" + std::to_string(i) + "]"; }

Element read_index(const json& v, const std::string& where, std::size_t n) {
  if (!v.is_number_integer()) throw DigroupLoadError(where + " is not an integer");
  auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= n) throw DigroupLoadError(where + " out of range");
  return static_cast<Element>(i);
}

Table read_table(const json& doc, const char* name, std::size_t n) {
  if (!doc.contains(name)) throw DigroupLoadError(std::string("missing \"") + name + "\"");
  const json& rows = doc[name];
  if (!rows.is_array() || rows.size() != n)
    throw DigroupLoadError(std::string("\"") + name + "\" must have one row per element");
  Table t(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!rows[a].is_array() || rows[a].size() != n)
      throw DigroupLoadError(at(name, a) + " must have one entry per element");
    for (std::size_t b = 0; b < n; ++b) t[a].push_back(read_index(rows[a][b], at(name, a) + "[" + std::to_string(b) + "]", n));
  }
  return t;
}

}  // namespace

FiniteDigroup parse_digroup_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DigroupLoadError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DigroupLoadError("top level must be an object");
  if (!doc.contains("elements")) throw DigroupLoadError("missing \"elements\"");
  const json& names = doc["elements"];
  if (!names.is_array() || names.empty()) throw DigroupLoadError("\"elements\" must be a nonempty array");

  FiniteDigroup d;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!names[i].is_string()) throw DigroupLoadError(at("elements", i) + " is not a string");
    d.elements.push_back(names[i].get<std::string>());
  }
  for (std::size_t i = 0; i < d.elements.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (d.elements[i] == d.elements[j]) throw DigroupLoadError(at("elements", i) + " duplicates a name");

  const std::size_t n = d.size();
  d.left = read_table(doc, "left", n);
  d.right = read_table(doc, "right", n);
  if (!doc.contains("dagger")) throw DigroupLoadError("missing \"dagger\"");
  if (!doc["dagger"].is_array() || doc["dagger"].size() != n)
    throw DigroupLoadError("\"dagger\" must have one entry per element");
  for (std::size_t a = 0; a < n; ++a) d.dagger.push_back(read_index(doc["dagger"][a], at("dagger", a), n));
  if (!doc.contains("unit")) throw DigroupLoadError("missing \"unit\"");
  d.unit = read_index(doc["unit"], "unit", n);
  return d;
}

FiniteDigroup load_digroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DigroupLoadError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_digroup_json(buf.str());
}

std::string to_json(const FiniteDigroup& d) {
  nlohmann::ordered_json j;
  j["elements"] = d.elements;
  j["left"] = d.left;
  j["right"] = d.right;
  j["dagger"] = d.dagger;
  j["unit"] = d.unit;
  return j.dump() + "\n";
}

void validate_shape(const FiniteDigroup& d) {
  const std::size_t n = d.size();
  if (n == 0) throw DigroupLoadError("no elements");
  auto check_table = [n](const Table& t, const char* name) {
    if (t.size() != n) throw DigroupLoadError(std::string("\"") + name + "\" must have one row per element");
    for (std::size_t a = 0; a < n; ++a) {
      if (t[a].size() != n) throw DigroupLoadError(at(name, a) + " must have one entry per element");
      for (std::size_t b = 0; b < n; ++b)
        if (t[a][b] >= n) throw DigroupLoadError(at(name, a) + "[" + std::to_string(b) + "] out of range");
    }
  };
  check_table(d.left, "left");
  check_table(d.right, "right");
  if (d.dagger.size() != n) throw DigroupLoadError("\"dagger\" must have one entry per element");
  for (std::size_t a = 0; a < n; ++a)
    if (d.dagger[a] >= n) throw DigroupLoadError(at("dagger", a) + " out of range");
  if (d.unit >= n) throw DigroupLoadError("unit out of range");
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::G1Left:
      return "G1 (|- associative)";
    case Axiom::G1Right:
      return "G1 (-| associative)";
    case Axiom::G2:
      return "G2";
    case Axiom::G3:
      return "G3";
    case Axiom::G4:
      return "G4";
    case Axiom::G5:
      return "G5";
    case Axiom::G6:
      return "G6";
  }
  return "?";
}

bool AxiomReport::pass() const {
  for (const auto& r : results)
    if (!r.holds) return false;
  return true;
}

const AxiomResult& AxiomReport::result(Axiom axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return r;
  throw std::out_of_range("axiom not in report");
}

AxiomReport check_axioms(const FiniteDigroup& d) {
  validate_shape(d);
  const std::size_t n = d.size();
  auto L = [&](Element a, Element b) { return d.vdash(a, b); };
  auto R = [&](Element a, Element b) { return d.dashv(a, b); };

  auto ternary = [&](Axiom axiom, auto&& holds) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!holds(a, b, c)) return AxiomResult{axiom, false, {a, b, c}};
    return AxiomResult{axiom, true, {}};
  };
  auto unary = [&](Axiom axiom, auto&& holds) {
    for (Element a = 0; a < n; ++a)
      if (!holds(a)) return AxiomResult{axiom, false, {a}};
    return AxiomResult{axiom, true, {}};
  };

  const Element one = d.unit;
  AxiomReport report;
  report.results = {
      ternary(Axiom::G1Left, [&](Element a, Element b, Element c) { return L(L(a, b), c) == L(a, L(b, c)); }),
      ternary(Axiom::G1Right, [&](Element a, Element b, Element c) { return R(R(a, b), c) == R(a, R(b, c)); }),
      ternary(Axiom::G2, [&](Element a, Element b, Element c) { return R(a, L(b, c)) == R(a, R(b, c)); }),
      ternary(Axiom::G3, [&](Element a, Element b, Element c) { return L(R(a, b), c) == L(L(a, b), c); }),
      ternary(Axiom::G4, [&](Element a, Element b, Element c) { return L(a, R(b, c)) == R(L(a, b), c); }),
      unary(Axiom::G5, [&](Element a) { return L(one, a) == a && R(a, one) == a; }),
      unary(Axiom::G6, [&](Element a) { return L(a, d.dagger[a]) == one && R(d.dagger[a], a) == one; }),
  };
  return report;
}

std::string report_to_text(const AxiomReport& report, const FiniteDigroup& d) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << to_string(r.axiom) << ": " << (r.holds ? "ok" : "FAIL");
    if (!r.holds) {
      out << " witness (";
      for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? ", " : "") << d.elements[r.witness[i]];
      out << ')';
    }
    out << '\n';
  }
  out << "verdict: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  FiniteGroup g;
  for (std::size_t i = 0; i < n; ++i) {
    g.elements.push_back(std::to_string(i));
    g.mul.emplace_back();
    for (std::size_t j = 0; j < n; ++j) g.mul[i].push_back((i + j) % n);
    g.inverse.push_back((n - i) % n);
  }
  return g;
}

FiniteGroup z2() {
  FiniteGroup g = cyclic_group(2);
  g.elements = {"1", "a"};
  return g;
}

FiniteDigroup group_digroup(const FiniteGroup& g) {
  return FiniteDigroup{g.elements, g.mul, g.mul, g.inverse, g.identity};
}

PointedActionSet trivial_action(std::vector<std::string> points, std::size_t group_size) {
  PointedActionSet e{std::move(points), 0, {}};
  std::vector<Element> identity(e.points.size());
  for (std::size_t v = 0; v < identity.size(); ++v) identity[v] = v;
  e.action.assign(group_size, identity);
  return e;
}

FiniteDigroup product_digroup(const PointedActionSet& e, const FiniteGroup& j) {
  const std::size_t ne = e.points.size();
  const std::size_t nj = j.size();
  if (ne == 0) throw std::invalid_argument("pointed set is empty");
  if (e.basepoint >= ne) throw std::invalid_argument("basepoint out of range");
  if (e.action.size() != nj) throw std::invalid_argument("action needs one row per group element");
  for (std::size_t h = 0; h < nj; ++h) {
    if (e.action[h].size() != ne) throw std::invalid_argument("action row has wrong length");
    for (std::size_t v = 0; v < ne; ++v)
      if (e.action[h][v] >= ne) throw std::invalid_argument("action value out of range");
    if (e.action[h][e.basepoint] != e.basepoint) throw std::invalid_argument("action does not fix the basepoint");
  }
  for (std::size_t v = 0; v < ne; ++v)
    if (e.action[j.identity][v] != v) throw std::invalid_argument("identity does not act trivially");
  for (std::size_t h = 0; h < nj; ++h)
    for (std::size_t k = 0; k < nj; ++k)
      for (std::size_t v = 0; v < ne; ++v)
        if (e.action[j.mul[h][k]][v] != e.action[h][e.action[k][v]])
          throw std::invalid_argument("action does not respect the group product");

  auto index = [nj](Element u, Element h) { return u * nj + h; };
  FiniteDigroup d;
  d.left.assign(ne * nj, std::vector<Element>(ne * nj));
  d.right = d.left;
  for (Element u = 0; u < ne; ++u)
    for (Element h = 0; h < nj; ++h) {
      d.elements.push_back("(" + e.points[u] + "," + j.elements[h] + ")");
      d.dagger.push_back(index(e.basepoint, j.inverse[h]));
      for (Element v = 0; v < ne; ++v)
        for (Element k = 0; k < nj; ++k) {
          d.left[index(u, h)][index(v, k)] = index(e.action[h][v], j.mul[h][k]);
          d.right[index(u, h)][index(v, k)] = index(u, j.mul[h][k]);
        }
    }
  d.unit = index(e.basepoint, j.identity);
  return d;
}

Element evaluate_hom(const std::vector<Element>& assignment, const DiWord& w, const FiniteDigroup& d) {
  auto image = [&](Letter l) -> Element {
    if (l.is_unit()) return d.unit;
    const Element a = assignment.at(l.gen());
    return l.is_positive() ? a : d.dagger[a];
  };
  // [x1 .. xt]_m = x1 |- .. |- x_m -| .. -| x_t; any bracketing agrees.
  const auto& word = w.word();
  Element acc = image(word[0]);
  for (std::size_t i = 1; i < w.center(); ++i) acc = d.vdash(acc, image(word[i]));
  for (std::size_t i = w.center(); i < word.size(); ++i) acc = d.dashv(acc, image(word[i]));
  return acc;
}

HomCount hom_count(std::size_t num_generators, const FiniteDigroup& d) {
  validate_shape(d);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_generators; ++i) names.push_back("x" + std::to_string(i + 1));
  const Alphabet alphabet(names);
  const auto relations = RuleSet::standard().instances(alphabet, 2);

  HomCount out;
  std::vector<Element> assignment(num_generators, 0);
  while (true) {
    ++out.count;
    bool ok = true;
    for (const auto& r : relations) {
      ++out.relations_checked;
      if (evaluate_hom(assignment, r.lhs, d) != evaluate_hom(assignment, r.rhs, d)) ok = false;
    }
    if (!ok) ++out.failed_assignments;

    std::size_t i = 0;
    while (i < num_generators && ++assignment[i] == d.size()) assignment[i++] = 0;
    if (i == num_generators) break;
  }
  return out;
}

std::vector<Element> bar_units(const FiniteDigroup& d) {
  std::vector<Element> out;
  for (Element e = 0; e < d.size(); ++e) {
    bool unit = true;
    for (Element a = 0; a < d.size() && unit; ++a) unit = d.vdash(e, a) == a && d.dashv(a, e) == a;
    if (unit) out.push_back(e);
  }
  return out;
}

InverseCheck unique_inverse_check(const FiniteDigroup& d) {
  for (Element a = 0; a < d.size(); ++a) {
    std::vector<Element> inverses;
    for (Element b = 0; b < d.size(); ++b)
      if (d.vdash(a, b) == d.unit && d.dashv(b, a) == d.unit) inverses.push_back(b);
    if (inverses != std::vector<Element>{d.dagger[a]}) return {false, a};
  }
  return {};
}

}  // namespace digroup
