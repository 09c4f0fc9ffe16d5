#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "gtqd/lattice.hpp"
#include "gtqd/modular_data.hpp"

namespace gtqd {

using Json = nlohmann::json;

inline constexpr int kDefaultGroupCap = 256;

/// Named groups from the bundled catalog file.
class Catalog {
 public:
  Catalog() = default;
  /// Throws InputError when the file is missing or malformed.
  static Catalog load(const std::string& path);

  bool has(const std::string& name) const { return groups_.count(name) > 0; }
  const Json& entry(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Json> groups_;
};

/// Path of the catalog shipped with the sources.
std::string default_catalog_path();

// Groups: {"order": n, "table": [[...]]} or {"degree": d, "generators": [[...]]}
// or {"name": "<catalog name>"}.
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j, const Catalog& catalog = {}, int cap = kDefaultGroupCap);

/// A JSON file path, a catalog name, "Z<n>", or a product "Z<a>xZ<b>...".
FiniteGroup resolve_group(const std::string& spec, const Catalog& catalog, int cap = kDefaultGroupCap);

// {"conductor": N, "coeffs": [[exponent, num, den], ...]}
Json to_json(const Cyclotomic& z);
Cyclotomic cyclotomic_from_json(const Json& j);

// {"group": <ref>, "degree": n, "modulus": N, "entries": [[a, b, c, e], ...]},
// nonzero normalized entries only.
Json cochain_json(const Cochain& c, const Json& group_ref);
Cochain cochain_from_json(const Json& j, const GroupPtr& g);

/// A cocycle JSON file, "trivial", "cyclic:q" (G cyclic; residues follow the
/// least generator), or "h3:k1,k2,..." (combination of the H^3 generators).
Cochain resolve_cocycle(const std::string& spec, const GroupPtr& g, int cohomology_cap = kCohomologyCap);

/// "a1,a2,...", "involution", "center" or "none" (trivial subgroup).
std::vector<int> resolve_central(const std::string& spec, const FiniteGroup& g);

Json cohomology_json(const CohomologyGroup& h, const Json& group_ref);

Json to_json(const QuotientCertificate& c);
QuotientCertificate certificate_from_json(const Json& j, const GroupPtr& g);

Json to_json(const ModularData& md, int group_order);
ModularData modular_data_from_json(const Json& j);

Json to_json(const TwoGeneratorCount& c);

Json to_json(const DiscriminantData& d);

/// Parses a JSON document, turning parse errors into InputError with the byte position.
Json parse_json(const std::string& text, const std::string& what);
Json read_json_file(const std::string& path);

}  // namespace gtqd
