// Command-line driver: check, modular, h3, lattice, catalog, two-generators.
// Every command writes one JSON document; identical inputs give identical bytes.

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "gtqd/error.hpp"
#include "gtqd/io.hpp"

using namespace gtqd;

namespace {

// exit codes of `check`; every other command uses 0 / kExitInput
constexpr int kExitMtc = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotMtc = 2;
constexpr int kExitNoCertificate = 3;

struct RunConfig {
  std::string group;
  std::string cocycle = "trivial";
  std::string central;
  std::string gram;
  std::string out;
  std::string catalog = default_catalog_path();
  std::uint64_t seed = 0;
  int cap_group = kDefaultGroupCap;
  int cap_cohomology = kCohomologyCap;
  int cap_oracle = kOracleCap;
  NuPolicy nu_policy = NuPolicy::Least;
  BicharConvention bichar = BicharConvention::Divide;
  bool oracle = false;
  int jobs = 0;
  i64 h3_order = 0;
  i64 sylow2 = 0;
};

const char* policy_name(NuPolicy p) {
  switch (p) {
    case NuPolicy::Least: return "least";
    case NuPolicy::FirstNondegenerate: return "first-nondegenerate";
    case NuPolicy::Random: return "random";
  }
  return "?";
}

Json conventions(const RunConfig& c) {
  return Json{{"tau", c.seed == 0 ? "least solution" : "least solution shifted by a seeded character"},
              {"seed", c.seed},
              {"nu", policy_name(c.nu_policy)},
              {"bicharacter", c.bichar == BicharConvention::Divide ? "divide" : "invert"},
              {"T", "chi(g)/chi(1), no central charge factor"},
              {"S", "trace of the reverse double braiding over D"},
              {"c0", "half the strict upper Gram triangle minus its transpose"}};
}

QuotientOptions quotient_options(const RunConfig& c) {
  QuotientOptions o;
  o.policy = c.nu_policy;
  o.seed = c.seed;
  o.convention = c.bichar;
  return o;
}

void emit(const RunConfig& c, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error(ErrorKind::InputError, c.out + ": cannot write");
  f << text;
}

struct Input {
  Catalog catalog;
  GroupPtr group;
  Json group_ref;
};

Input load_group(const RunConfig& c) {
  Input in;
  in.catalog = Catalog::load(c.catalog);
  in.group = std::make_shared<const FiniteGroup>(resolve_group(c.group, in.catalog, c.cap_group));
  in.group_ref = in.catalog.has(c.group) ? Json{{"name", c.group}} : to_json(*in.group);
  return in;
}

int cmd_check(const RunConfig& c) {
  const Input in = load_group(c);
  const Cochain omega = resolve_cocycle(c.cocycle, in.group, c.cap_cohomology);
  const TwistedDouble d(omega);
  const auto A = resolve_central(c.central.empty() ? "involution" : c.central, *in.group);
  const auto cert = check_quotient_exists(d, A, quotient_options(c));
  const int code = !cert.exists ? kExitNoCertificate : cert.is_mtc ? kExitMtc : kExitNotMtc;
  emit(c, Json{{"command", "check"},
               {"group", in.group_ref},
               {"cocycle", cochain_json(omega, in.group_ref)},
               {"certificate", to_json(cert)},
               {"verdict", code == kExitMtc ? "mtc" : code == kExitNotMtc ? "not-mtc" : "no-certificate"},
               {"conventions", conventions(c)}});
  return code;
}

int cmd_modular(const RunConfig& c) {
  const Input in = load_group(c);
  const Cochain omega = resolve_cocycle(c.cocycle, in.group, c.cap_cohomology);
  const TwistedDouble d(omega);
  ModularData md = modular_data(d);
  Json report{{"command", "modular"}, {"group", in.group_ref}, {"cocycle", cochain_json(omega, in.group_ref)}};
  if (!c.central.empty()) {
    const auto cert = check_quotient_exists(d, resolve_central(c.central, *in.group), quotient_options(c));
    report["certificate"] = to_json(cert);
    if (!cert.exists) {
      report["conventions"] = conventions(c);
      emit(c, report);
      return kExitNoCertificate;
    }
    md = restrict_to_quotient(d, md, cert);
  }
  if (c.oracle) {
    Json oracle{{"checked", false}};
    if (in.group->order() <= std::min(c.cap_oracle, kOracleCap)) {
      bool agrees = true;
      for (int i = 0; i < md.rank(); ++i)
        for (int j = 0; j < md.rank(); ++j)
          agrees = agrees && braiding_oracle(d, md.labels[i], md.labels[j]) == md.S_unnormalized[i][j];
      oracle = Json{{"checked", true}, {"agrees", agrees}};
    }
    report["oracle"] = oracle;
  }
  report["modular_data"] = to_json(md, in.group->order());
  report["conventions"] = conventions(c);
  emit(c, report);
  return 0;
}

int cmd_h3(const RunConfig& c) {
  const Input in = load_group(c);
  const CohomologyGroup h = h3(in.group, 0, c.cap_cohomology);
  Json orders = Json::array();
  for (const auto& g : h.generators) orders.push_back(class_order(g));
  Json report = cohomology_json(h, in.group_ref);
  report["command"] = "h3";
  report["group"] = in.group_ref;
  report["generator_class_orders"] = orders;
  emit(c, report);
  return 0;
}

int cmd_lattice(const RunConfig& c) {
  const bool inline_json = !c.gram.empty() && c.gram.front() == '[';
  const Json g = inline_json ? parse_json(c.gram, "--gram") : read_json_file(c.gram);
  IntMatrix gram;
  try {
    gram = g.get<IntMatrix>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InputError, std::string("--gram: ") + e.what());
  }
  const EvenLattice l(gram);
  const LatticeResult res = lattice_pipeline(l);
  const Json group_ref = to_json(*res.data.group);
  Json report{{"command", "lattice"},
              {"gram", gram},
              {"discriminant", to_json(res.data)},
              {"cocycle", cochain_json(res.omega, group_ref)},
              {"class_order", class_order(res.omega)},
              {"certificate", to_json(res.cert)},
              {"twists_match_quadratic_form", res.twists_match_quadratic_form}};
  if (res.cert.exists) report["modular_data"] = to_json(res.modular, res.data.group->order());
  report["conventions"] = conventions(c);
  emit(c, report);
  return 0;
}

// Every H^3 class as coefficients on the generators, first generator fastest.
std::vector<std::vector<i64>> class_coefficients(const CohomologyGroup& h) {
  std::vector<std::vector<i64>> out{{}};
  for (i64 f : h.invariant_factors) {
    std::vector<std::vector<i64>> next;
    for (i64 k = 0; k < f; ++k)
      for (auto base : out) {
        base.push_back(k);
        next.push_back(std::move(base));
      }
    out = std::move(next);
  }
  return out;
}

int cmd_catalog(const RunConfig& c) {
  const Catalog cat = Catalog::load(c.catalog);
  struct Task {
    std::size_t group;
    GroupPtr g;
    int involution;
    Cochain omega;
    std::vector<i64> coeffs;
  };
  std::vector<Json> groups;
  std::vector<Task> tasks;
  for (const auto& name : cat.names()) {
    auto g = std::make_shared<const FiniteGroup>(group_from_json(cat.entry(name), cat));
    Json row{{"group", name}, {"order", g->order()}};
    const auto t = unique_involution(*g);
    if (!t) {
      row["skipped"] = "no unique involution";
    } else if (g->order() > c.cap_group || g->order() > c.cap_cohomology) {
      row["skipped"] = "order above cap";
    } else {
      const CohomologyGroup h = h3(g, 0, c.cap_cohomology);
      row["invariant_factors"] = h.invariant_factors;
      for (const auto& k : class_coefficients(h)) {
        Cochain omega(g, 3, 1);
        for (std::size_t i = 0; i < k.size(); ++i) omega = omega + h.generators[i].scaled(k[i]);
        tasks.push_back({groups.size(), g, *t, std::move(omega), k});
      }
    }
    groups.push_back(std::move(row));
  }

  std::vector<Json> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      const Task& t = tasks[i];
      Json r{{"class", t.coeffs}, {"class_order", class_order(t.omega)}};
      try {
        const TwistedDouble d(t.omega);
        const auto cert = check_quotient_exists(d, {0, t.involution}, quotient_options(c));
        const bool two = two_generator_test(t.omega);
        r["exists"] = cert.exists;
        r["is_mtc"] = cert.is_mtc;
        r["two_generator"] = two;
        r["pass"] = cert.exists && cert.is_mtc == two;
      } catch (const Error& e) {
        r["error"] = e.what();
        r["pass"] = false;
      }
      results[i] = std::move(r);
    }
  };
  const int jobs = c.jobs > 0 ? c.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  bool all = true;
  for (auto& row : groups)
    if (!row.contains("skipped")) row["classes"] = Json::array();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    all = all && results[i]["pass"].get<bool>();
    groups[tasks[i].group]["classes"].push_back(std::move(results[i]));
  }
  emit(c, Json{{"command", "catalog"}, {"groups", groups}, {"pass", all}, {"conventions", conventions(c)}});
  return all ? 0 : kExitNotMtc;
}

int cmd_two_generators(const RunConfig& c) {
  Json report = to_json(count_two_generators(c.h3_order, c.sylow2));
  report["command"] = "two-generators";
  report["h3_order"] = c.h3_order;
  report["sylow2"] = c.sylow2;
  emit(c, report);
  return 0;
}

void add_group_flags(CLI::App* sub, RunConfig& c, bool cocycle) {
  sub->add_option("--group", c.group, "JSON file, catalog name, Z<n> or Z<a>xZ<b>...")->required();
  if (cocycle) sub->add_option("--cocycle", c.cocycle, "JSON file, trivial, cyclic:q or h3:k1,k2,...");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted quantum doubles, their quotients and modular data"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--out", c.out, "write the JSON report here instead of stdout");
  app.add_option("--catalog", c.catalog, "group catalog file");
  app.add_option("--seed", c.seed, "0 keeps the least tau; otherwise randomize tau shifts and pivots");
  app.add_option("--cap-group", c.cap_group, "largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--cap-cohomology", c.cap_cohomology, "largest group order for H^3")->check(CLI::PositiveNumber);
  app.add_option("--cap-oracle", c.cap_oracle, "largest group order for the braiding oracle")
      ->check(CLI::PositiveNumber);
  const std::map<std::string, NuPolicy> policies{{"least", NuPolicy::Least},
                                                 {"first-nondegenerate", NuPolicy::FirstNondegenerate},
                                                 {"random", NuPolicy::Random}};
  app.add_option("--convention-nu", c.nu_policy, "least, first-nondegenerate or random")
      ->transform(CLI::CheckedTransformer(policies));
  const std::map<std::string, BicharConvention> bichars{{"divide", BicharConvention::Divide},
                                                        {"invert", BicharConvention::Invert}};
  app.add_option("--convention-bicharacter", c.bichar, "divide or invert")
      ->transform(CLI::CheckedTransformer(bichars));

  auto* check = app.add_subcommand("check", "does the quotient by a central subgroup exist, and is it modular");
  add_group_flags(check, c, true);
  check->add_option("--central", c.central, "a1,a2,..., involution, center or none (default involution)");

  auto* modular = app.add_subcommand("modular", "S, T and fusion of the double or of its quotient");
  add_group_flags(modular, c, true);
  modular->add_option("--central", c.central, "restrict to the quotient by this subgroup");
  modular->add_flag("--oracle", c.oracle, "compare S with traces on explicit modules");

  auto* h3cmd = app.add_subcommand("h3", "H^3(G, C^x) with generators");
  add_group_flags(h3cmd, c, false);

  auto* lattice = app.add_subcommand("lattice", "modular data from an even lattice");
  lattice->add_option("--gram", c.gram, "Gram matrix as JSON, e.g. [[2,1],[1,2]], or a file holding it")->required();

  auto* catalog = app.add_subcommand("catalog", "quotient verdict against the 2-generator test over the catalog");
  catalog->add_option("--jobs", c.jobs, "worker threads (0: one per core)");

  auto* two = app.add_subcommand("two-generators", "count H^3 classes whose order the 2-part divides");
  two->add_option("--h3-order", c.h3_order, "order of the cyclic H^3")->required()->check(CLI::PositiveNumber);
  two->add_option("--sylow2", c.sylow2, "order of a Sylow 2-subgroup")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) return cmd_check(c);
    if (*modular) return cmd_modular(c);
    if (*h3cmd) return cmd_h3(c);
    if (*lattice) return cmd_lattice(c);
    if (*catalog) return cmd_catalog(c);
    if (*two) return cmd_two_generators(c);
  } catch (const Error& e) {
    std::cerr << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
