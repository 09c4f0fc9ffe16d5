#include "gtqd/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "gtqd/error.hpp"

#ifndef GTQD_CATALOG
#define GTQD_CATALOG "data/catalog.json"
#endif

namespace gtqd {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InputError, where + ": " + what);
}

// Runs f, turning json type/range errors into InputError at `where`.
template <class F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    bad(where, e.what());
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

Json rational_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

Json cyclo_matrix_json(const CycloMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(to_json(z));
    out.push_back(std::move(r));
  }
  return out;
}

CycloMatrix cyclo_matrix_from(const Json& j, const std::string& where) {
  CycloMatrix m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::vector<Cyclotomic> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(cyclotomic_from_json(j[i][k]));
    if (row.size() != j.size()) bad(where, "matrix is not square");
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& where) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      bad(where, "not an integer: \"" + item + "\"");
    }
    if (used != item.size()) bad(where, "not an integer: \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(what, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::string default_catalog_path() { return GTQD_CATALOG; }

Catalog Catalog::load(const std::string& path) {
  const Json j = read_json_file(path);
  const Json& groups = field(j, "groups", path);
  if (!groups.is_object()) bad(path, "\"groups\" must be an object");
  Catalog c;
  for (auto it = groups.begin(); it != groups.end(); ++it) c.groups_[it.key()] = it.value();
  return c;
}

const Json& Catalog::entry(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) bad("catalog", "unknown group \"" + name + "\"");
  return it->second;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : groups_) out.push_back(k);
  return out;
}

Json to_json(const FiniteGroup& g) { return Json{{"order", g.order()}, {"table", g.table()}}; }

FiniteGroup group_from_json(const Json& j, const Catalog& catalog, int cap) {
  if (!j.is_object()) bad("group", "expected an object");
  if (j.contains("name")) {
    const std::string name = guarded("group.name", [&] { return j["name"].get<std::string>(); });
    return group_from_json(catalog.entry(name), catalog, cap);
  }
  if (j.contains("table")) {
    auto table = guarded("group.table", [&] { return j["table"].get<FiniteGroup::Table>(); });
    if (j.contains("order") && j["order"] != Json(table.size())) bad("group.order", "does not match the table");
    return FiniteGroup::from_table(table, {}, cap);
  }
  if (j.contains("generators")) {
    auto gens = guarded("group.generators", [&] { return j["generators"].get<std::vector<std::vector<int>>>(); });
    if (j.contains("degree")) {
      const auto deg = guarded("group.degree", [&] { return j["degree"].get<std::size_t>(); });
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].size() != deg) bad("group.generators[" + std::to_string(i) + "]", "wrong degree");
    }
    return FiniteGroup::from_generators(gens, cap);
  }
  bad("group", "expected \"table\", \"generators\" or \"name\"");
}

FiniteGroup resolve_group(const std::string& spec, const Catalog& catalog, int cap) {
  if (catalog.has(spec)) return group_from_json(catalog.entry(spec), catalog, cap);
  static const std::regex product(R"(Z\d+(xZ\d+)*)");
  if (std::regex_match(spec, product)) {
    std::vector<int> factors;
    std::stringstream ss(spec);
    std::string item;
    i64 order = 1;
    while (std::getline(ss, item, 'x')) {
      const int f = std::stoi(item.substr(1));
      if (f < 1) bad("--group", "cyclic factor must be positive");
      order *= f;
      if (order > cap) throw Error(ErrorKind::CapExceeded, "group order exceeds " + std::to_string(cap));
      factors.push_back(f);
    }
    return FiniteGroup::abelian(factors);
  }
  std::ifstream probe(spec);
  if (!probe) bad("--group", "\"" + spec + "\" is not a file, catalog name or Z<n> product");
  return group_from_json(read_json_file(spec), catalog, cap);
}

Json to_json(const Cyclotomic& z) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : z.terms()) coeffs.push_back(Json::array({e, c.num(), c.den()}));
  return Json{{"conductor", z.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  return guarded("cyclotomic", [&] {
    const i64 n = field(j, "conductor", "cyclotomic").get<i64>();
    if (n < 1) bad("cyclotomic.conductor", "must be positive");
    std::vector<std::pair<i64, Rational>> terms;
    for (const auto& t : field(j, "coeffs", "cyclotomic")) {
      if (!t.is_array() || t.size() != 3) bad("cyclotomic.coeffs", "expected [exponent, num, den]");
      if (t[2].get<i64>() == 0) bad("cyclotomic.coeffs", "zero denominator");
      terms.emplace_back(t[0].get<i64>(), Rational(t[1].get<i64>(), t[2].get<i64>()));
    }
    return Cyclotomic::from_terms(n, terms);
  });
}

Json cochain_json(const Cochain& c, const Json& group_ref) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < c.values().size(); ++i) {
    if (c.values()[i] == 0) continue;
    Json e = c.unindex(i);
    e.push_back(c.values()[i]);
    entries.push_back(std::move(e));
  }
  return Json{{"group", group_ref}, {"degree", c.degree()}, {"modulus", c.modulus()}, {"entries", entries}};
}

Cochain cochain_from_json(const Json& j, const GroupPtr& g) {
  return guarded("cocycle", [&] {
    const int degree = field(j, "degree", "cocycle").get<int>();
    const i64 modulus = field(j, "modulus", "cocycle").get<i64>();
    if (degree < 0) bad("cocycle.degree", "must be non-negative");
    if (modulus < 1) bad("cocycle.modulus", "must be positive");
    Cochain c(g, degree, modulus);
    const Json& entries = field(j, "entries", "cocycle");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string where = "cocycle.entries[" + std::to_string(k) + "]";
      const Json& e = entries[k];
      if (!e.is_array() || e.size() != static_cast<std::size_t>(degree) + 1) bad(where, "wrong arity");
      std::vector<int> args;
      for (int i = 0; i < degree; ++i) {
        const int a = e[i].get<int>();
        if (a < 0 || a >= g->order()) bad(where, "element out of range");
        args.push_back(a);
      }
      const i64 v = mod(e[degree].get<i64>(), modulus);
      if (v != 0 && std::find(args.begin(), args.end(), 0) != args.end())
        bad(where, "nonzero value at an identity argument");
      c.set(args, v);
    }
    return c;
  });
}

Cochain resolve_cocycle(const std::string& spec, const GroupPtr& g, int cohomology_cap) {
  if (spec == "trivial") return Cochain(g, 3, 1);
  if (spec.rfind("cyclic:", 0) == 0) {
    const auto q = parse_int_list(spec.substr(7), "--cocycle");
    if (q.size() != 1) bad("--cocycle", "expected cyclic:q");
    const int n = g->order();
    int gen = -1;
    for (int x = 0; x < n && gen < 0; ++x)
      if (g->element_order(x) == n) gen = x;
    if (gen < 0) bad("--cocycle", "cyclic:q needs a cyclic group");
    // projection g^k -> k is an isomorphism onto Z/n
    std::vector<int> projection(n);
    for (int k = 0, x = 0; k < n; ++k, x = g->mul(x, gen)) projection[x] = k;
    return inflate(cyclic_cocycle(n, q[0]), g, projection);
  }
  if (spec.rfind("h3:", 0) == 0) {
    const auto k = parse_int_list(spec.substr(3), "--cocycle");
    const CohomologyGroup h = h3(g, 0, cohomology_cap);
    if (k.size() != h.generators.size())
      bad("--cocycle", "H^3 has " + std::to_string(h.generators.size()) + " generators, got " +
                           std::to_string(k.size()) + " coefficients");
    Cochain out(g, 3, 1);
    for (std::size_t i = 0; i < k.size(); ++i) out = out + h.generators[i].scaled(k[i]);
    return out;
  }
  std::ifstream probe(spec);
  if (!probe) bad("--cocycle", "\"" + spec + "\" is not a file, trivial, cyclic:q or h3:k1,...");
  return cochain_from_json(read_json_file(spec), g);
}

std::vector<int> resolve_central(const std::string& spec, const FiniteGroup& g) {
  if (spec == "none") return {0};
  if (spec == "center") return g.center();
  if (spec == "involution") {
    auto t = unique_involution(g);
    if (!t) throw Error(ErrorKind::NoUniqueInvolution, "group has no unique involution");
    return {0, *t};
  }
  auto elems = parse_int_list(spec, "--central");
  for (int a : elems)
    if (a < 0 || a >= g.order()) bad("--central", "element " + std::to_string(a) + " out of range");
  return g.generated_subgroup(elems);
}

Json cohomology_json(const CohomologyGroup& h, const Json& group_ref) {
  Json gens = Json::array();
  for (const auto& c : h.generators) gens.push_back(cochain_json(c, group_ref));
  return Json{{"degree", h.degree}, {"invariant_factors", h.invariant_factors}, {"generators", gens}};
}

Json to_json(const QuotientCertificate& c) {
  Json tau = Json::array();
  for (const auto& [a, t] : c.tau) tau.push_back(Json::array({a, t.values()}));
  Json nu = Json::array();
  for (const auto& [a, v] : c.nu) nu.push_back(Json::array({a, v}));
  Json beta = Json::array();
  for (const auto& [k, v] : c.beta) beta.push_back(Json::array({k.first, k.second, v}));
  return Json{{"subgroup", c.subgroup},   {"modulus", c.modulus},       {"exists", c.exists},
              {"is_mtc", c.is_mtc},       {"reasons", c.reasons},       {"tau", tau},
              {"nu", nu},                 {"beta", beta},               {"bicharacter", c.bicharacter},
              {"radical", c.radical},     {"nu_candidates", c.nu_candidates}};
}

QuotientCertificate certificate_from_json(const Json& j, const GroupPtr& g) {
  return guarded("certificate", [&] {
    QuotientCertificate c;
    c.subgroup = field(j, "subgroup", "certificate").get<std::vector<int>>();
    c.modulus = field(j, "modulus", "certificate").get<i64>();
    c.exists = field(j, "exists", "certificate").get<bool>();
    c.is_mtc = field(j, "is_mtc", "certificate").get<bool>();
    c.reasons = j.value("reasons", std::vector<std::string>{});
    for (const auto& t : j.value("tau", Json::array())) {
      const auto values = t.at(1).get<std::vector<i64>>();
      if (static_cast<int>(values.size()) != g->order()) bad("certificate.tau", "wrong length");
      Cochain tau(g, 1, c.modulus);
      for (int x = 1; x < g->order(); ++x) tau.set({x}, mod(values[x], c.modulus));
      c.tau.emplace(t.at(0).get<int>(), std::move(tau));
    }
    for (const auto& t : j.value("nu", Json::array())) c.nu[t.at(0).get<int>()] = t.at(1).get<std::vector<i64>>();
    for (const auto& t : j.value("beta", Json::array()))
      c.beta[{t.at(0).get<int>(), t.at(1).get<int>()}] = t.at(2).get<std::vector<i64>>();
    c.bicharacter = j.value("bicharacter", std::vector<std::vector<i64>>{});
    c.radical = j.value("radical", std::vector<int>{});
    c.nu_candidates = j.value("nu_candidates", std::size_t{0});
    return c;
  });
}

Json to_json(const ModularData& md, int group_order) {
  Json labels = Json::array();
  for (const auto& l : md.labels) {
    Json chi = Json::array();
    for (const auto& z : l.chi) chi.push_back(to_json(z));
    labels.push_back(Json{{"g", l.g},
                          {"class_index", l.class_index},
                          {"class_size", l.class_size},
                          {"degree", l.degree},
                          {"dim", l.dim()},
                          {"centralizer", l.centralizer},
                          {"chi", chi},
                          {"conjugator", l.conjugator}});
  }
  Json t = Json::array();
  for (const auto& z : md.T) t.push_back(to_json(z));
  Json fusion = Json::array();
  for (const auto& f : md.fusion) fusion.push_back(Json::array({f.i, f.j, f.k, f.n}));
  return Json{{"group_order", group_order},
              {"rank", md.rank()},
              {"conductor", md.conductor},
              {"D2", md.D2},
              {"modular", md.modular},
              {"radical", md.radical},
              {"issues", md.issues},
              {"labels", labels},
              {"T", t},
              {"S_unnormalized", cyclo_matrix_json(md.S_unnormalized)},
              {"S", cyclo_matrix_json(md.S)},
              {"fusion", fusion}};
}

ModularData modular_data_from_json(const Json& j) {
  return guarded("modular", [&] {
    ModularData md;
    const int n = field(j, "group_order", "modular").get<int>();
    const int rank = field(j, "rank", "modular").get<int>();
    const Json& labels = field(j, "labels", "modular");
    if (static_cast<int>(labels.size()) != rank) bad("modular.labels", "length differs from rank");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Json& l = labels[i];
      const std::string where = "modular.labels[" + std::to_string(i) + "]";
      SimpleLabel s;
      s.g = field(l, "g", where).get<int>();
      s.class_index = field(l, "class_index", where).get<int>();
      s.class_size = field(l, "class_size", where).get<int>();
      s.degree = field(l, "degree", where).get<int>();
      s.centralizer = field(l, "centralizer", where).get<std::vector<int>>();
      for (const auto& z : field(l, "chi", where)) s.chi.push_back(cyclotomic_from_json(z));
      if (s.chi.size() != s.centralizer.size()) bad(where, "chi and centralizer differ in length");
      s.conjugator = field(l, "conjugator", where).get<std::vector<int>>();
      s.position.assign(n, -1);
      for (std::size_t k = 0; k < s.centralizer.size(); ++k) {
        const int x = s.centralizer[k];
        if (x < 0 || x >= n) bad(where, "centralizer element out of range");
        s.position[x] = static_cast<int>(k);
      }
      md.labels.push_back(std::move(s));
    }
    for (const auto& z : field(j, "T", "modular")) md.T.push_back(cyclotomic_from_json(z));
    if (static_cast<int>(md.T.size()) != rank) bad("modular.T", "length differs from rank");
    md.S_unnormalized = cyclo_matrix_from(field(j, "S_unnormalized", "modular"), "modular.S_unnormalized");
    md.S = cyclo_matrix_from(field(j, "S", "modular"), "modular.S");
    if (static_cast<int>(md.S.size()) != rank || md.S_unnormalized.size() != md.S.size())
      bad("modular.S", "size differs from rank");
    md.D2 = field(j, "D2", "modular").get<i64>();
    if (md.D2 < 1) bad("modular.D2", "must be positive");
    md.D = Cyclotomic::sqrt_of(md.D2);
    md.conductor = field(j, "conductor", "modular").get<i64>();
    md.modular = field(j, "modular", "modular").get<bool>();
    md.radical = j.value("radical", std::vector<int>{});
    md.issues = j.value("issues", std::vector<std::string>{});
    for (const auto& f : field(j, "fusion", "modular")) {
      if (!f.is_array() || f.size() != 4) bad("modular.fusion", "expected [i, j, k, n]");
      md.fusion.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>(), f[3].get<i64>()});
    }
    return md;
  });
}

Json to_json(const TwoGeneratorCount& c) {
  Json orders = Json::array();
  Json multiplicity = Json::object();
  for (const auto& [o, m] : c.orders) {
    orders.push_back(o);
    multiplicity[std::to_string(o)] = m;
  }
  return Json{{"count", c.count}, {"orders", orders}, {"multiplicity", multiplicity}};
}

Json to_json(const DiscriminantData& d) {
  Json basis = Json::array();
  for (const auto& v : d.dual_basis) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rational_json(x));
    basis.push_back(std::move(row));
  }
  Json section = Json::array();
  for (const auto& v : d.section) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rational_json(x));
    section.push_back(std::move(row));
  }
  return Json{{"factors", d.factors},
              {"order", d.group->order()},
              {"exponent", d.exponent},
              {"dual_basis", basis},
              {"section", section}};
}

}  // namespace gtqd
