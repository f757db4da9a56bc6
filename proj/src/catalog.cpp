#include "ghg/catalog.hpp"

#include "ghg/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef GHG_DEFAULT_CATALOG
#define GHG_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace ghg {

using nlohmann::json;

PairingMatrix PairingMatrix::zero(int n, int m, const FgAbGroup& left, const FgAbGroup& right,
                                  const FgAbGroup& target) {
  PairingMatrix p{n, m, left, right, target, {}};
  p.values.assign(static_cast<std::size_t>(left.generator_count()),
                  std::vector<GroupElement>(static_cast<std::size_t>(right.generator_count()),
                                            GroupElement::zero(target)));
  return p;
}

int GroupCatalogEntry::table_depth() const {
  int depth = -1;
  while (pi_table.count(depth + 1) != 0) ++depth;
  return depth;
}

bool Catalog::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const GroupCatalogEntry& e) { return e.name == name; });
}

const GroupCatalogEntry& Catalog::entry(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  std::string known;
  for (const auto& e : entries_) known += (known.empty() ? "" : ", ") + e.name;
  throw UnknownGroup("unknown group '" + std::string(name) + "' (catalogued: " + known + ")");
}

// ------------------------------------------------------------------ parsing

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError("catalog " + where + ": " + what);
}

[[noreturn]] void invalid(const std::string& entry, const std::string& field,
                          const std::string& what) {
  throw ValidationError("catalog entry '" + entry + "', field " + field + ": " + what);
}

void check_keys(const json& object, const std::string& where,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!object.is_object()) schema_error(where, "expected an object");
  for (const char* key : required)
    if (!object.contains(key)) schema_error(where, std::string("missing field \"") + key + "\"");
  for (const auto& item : object.items()) {
    const auto& key = item.key();
    auto matches = [&](const char* k) { return key == k; };
    if (std::none_of(required.begin(), required.end(), matches) &&
        std::none_of(optional.begin(), optional.end(), matches))
      schema_error(where, "unknown field \"" + key + "\"");
  }
}

long get_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) schema_error(where, "expected an integer");
  return value.get<long>();
}

std::vector<long> get_int_array(const json& value, const std::string& where) {
  if (!value.is_array()) schema_error(where, "expected an array of integers");
  std::vector<long> out;
  for (const auto& v : value) out.push_back(get_int(v, where));
  return out;
}

const json& get_array(const json& value, const std::string& where) {
  if (!value.is_array()) schema_error(where, "expected an array");
  return value;
}

PiRow parse_pi_row(const json& row, const std::string& entry, int& degree) {
  const std::string where = "entry '" + entry + "' pi row";
  check_keys(row, where, {"degree", "rank", "factors", "source"});
  degree = static_cast<int>(get_int(row["degree"], where + " degree"));
  const long rank = get_int(row["rank"], where + " rank");
  if (!row["source"].is_string()) schema_error(where + " source", "expected a string");
  const std::string field = "pi[degree " + std::to_string(degree) + "]";
  if (degree < 0) invalid(entry, field, "negative degree");
  if (rank < 0) invalid(entry, field, "negative rank");
  std::vector<Integer> factors;
  for (long d : get_int_array(row["factors"], where + " factors")) factors.emplace_back(d);
  try {
    return {FgAbGroup(static_cast<std::size_t>(rank), std::move(factors)),
            row["source"].get<std::string>()};
  } catch (const InvalidArgument& e) {
    invalid(entry, field, e.what());
  }
}

PairingMatrix parse_pairing(const json& row, const GroupCatalogEntry& entry) {
  const std::string where = "entry '" + entry.name + "' samelson row";
  check_keys(row, where, {"n", "m", "values"});
  const int n = static_cast<int>(get_int(row["n"], where + " n"));
  const int m = static_cast<int>(get_int(row["m"], where + " m"));
  const std::string field = "samelson[" + std::to_string(n) + "," + std::to_string(m) + "]";
  for (int d : {n, m, n + m})
    if (entry.pi_table.count(d) == 0)
      invalid(entry.name, field, "degree " + std::to_string(d) + " is not in the pi table");

  const FgAbGroup& left = entry.pi_table.at(n).group;
  const FgAbGroup& right = entry.pi_table.at(m).group;
  const FgAbGroup& target = entry.pi_table.at(n + m).group;
  PairingMatrix p{n, m, left, right, target, {}};

  const json& rows = get_array(row["values"], where + " values");
  if (static_cast<Eigen::Index>(rows.size()) != left.generator_count())
    invalid(entry.name, field,
            "expected " + std::to_string(left.generator_count()) + " rows of values");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& cols = get_array(rows[i], where + " values row");
    if (static_cast<Eigen::Index>(cols.size()) != right.generator_count())
      invalid(entry.name, field,
              "expected " + std::to_string(right.generator_count()) + " values per row");
    std::vector<GroupElement> out_row;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto coords = get_int_array(cols[j], where + " value");
      if (static_cast<Eigen::Index>(coords.size()) != target.generator_count())
        invalid(entry.name, field,
                "value needs " + std::to_string(target.generator_count()) + " coordinates");
      GroupElement value(target, coords);
      const std::string cell = " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (value.order() == 0)
        invalid(entry.name, field, "value" + cell + " has infinite order; pairings are torsion");
      for (const Integer& d : {left.generator_order(static_cast<Eigen::Index>(i)),
                               right.generator_order(static_cast<Eigen::Index>(j))}) {
        if (d != 0 && !(d * value).is_zero())
          invalid(entry.name, field,
                  "value" + cell + " is not killed by generator order " + d.get_str());
      }
      out_row.push_back(std::move(value));
    }
    p.values.push_back(std::move(out_row));
  }
  return p;
}

GroupCatalogEntry parse_entry(const json& object, std::size_t index) {
  const std::string where = "entry #" + std::to_string(index);
  check_keys(object, where, {"name", "connected", "rational_exponents", "pi", "samelson"},
             {"abelian"});
  if (!object["name"].is_string()) schema_error(where + " name", "expected a string");
  if (!object["connected"].is_boolean()) schema_error(where + " connected", "expected a boolean");

  GroupCatalogEntry entry;
  entry.name = object["name"].get<std::string>();
  entry.connected = object["connected"].get<bool>();
  if (object.contains("abelian")) {
    if (!object["abelian"].is_boolean()) schema_error(where + " abelian", "expected a boolean");
    entry.abelian = object["abelian"].get<bool>();
  }
  if (!entry.connected)
    invalid(entry.name, "connected", "only connected structure groups are supported");

  for (long e : get_int_array(object["rational_exponents"], where + " rational_exponents")) {
    if (e < 1 || e % 2 == 0)
      invalid(entry.name, "rational_exponents",
              "exponent " + std::to_string(e) + " is not an odd integer >= 1");
    entry.rational_exponents.push_back(static_cast<int>(e));
  }
  std::sort(entry.rational_exponents.begin(), entry.rational_exponents.end());

  for (const auto& row : get_array(object["pi"], where + " pi")) {
    int degree = 0;
    PiRow parsed = parse_pi_row(row, entry.name, degree);
    if (!entry.pi_table.emplace(degree, std::move(parsed)).second)
      invalid(entry.name, "pi", "degree " + std::to_string(degree) + " appears twice");
  }
  for (const auto& [degree, row] : entry.pi_table) {
    const auto multiplicity = static_cast<std::size_t>(std::count(
        entry.rational_exponents.begin(), entry.rational_exponents.end(), degree));
    if (tensor_q(row.group) != multiplicity)
      invalid(entry.name, "pi[degree " + std::to_string(degree) + "]",
              "free rank " + std::to_string(row.group.rank()) +
                  " disagrees with rational exponent multiplicity " + std::to_string(multiplicity));
  }

  for (const auto& row : get_array(object["samelson"], where + " samelson")) {
    PairingMatrix p = parse_pairing(row, entry);
    const auto key = std::make_pair(p.n, p.m);
    if (!entry.samelson_table.emplace(key, std::move(p)).second)
      invalid(entry.name, "samelson",
              "pair (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                  ") appears twice");
  }
  return entry;
}

}  // namespace

Catalog parse_catalog(std::string_view json_text) {
  json document;
  try {
    document = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!document.is_array()) schema_error("document", "top level must be a list of entries");

  std::vector<GroupCatalogEntry> entries;
  std::set<std::string> names;
  for (std::size_t i = 0; i < document.size(); ++i) {
    auto entry = parse_entry(document[i], i);
    if (!names.insert(entry.name).second) invalid(entry.name, "name", "duplicate entry name");
    entries.push_back(std::move(entry));
  }
  return Catalog(std::move(entries));
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open catalog file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_catalog(text.str());
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("GHG_CATALOG"); env != nullptr && *env != '\0') return env;
  return GHG_DEFAULT_CATALOG;
}

// ------------------------------------------------------------------ lookups

const FgAbGroup& lookup_pi(const GroupCatalogEntry& entry, int n) {
  if (n < 0) throw InvalidArgument("homotopy degree must be nonnegative, got " + std::to_string(n));
  auto it = entry.pi_table.find(n);
  if (it == entry.pi_table.end())
    throw TableDepthExceeded("pi_" + std::to_string(n) + "(" + entry.name +
                             ") is not catalogued (table depth " +
                             std::to_string(entry.table_depth()) + ")");
  return it->second.group;
}

std::optional<PairingMatrix> lookup_samelson(const GroupCatalogEntry& entry, int n, int m) {
  const FgAbGroup& left = lookup_pi(entry, n);
  const FgAbGroup& right = lookup_pi(entry, m);
  const FgAbGroup& target = lookup_pi(entry, n + m);
  if (auto it = entry.samelson_table.find({n, m}); it != entry.samelson_table.end())
    return it->second;
  if (left.is_trivial() || right.is_trivial() || target.is_trivial() || entry.abelian)
    return PairingMatrix::zero(n, m, left, right, target);
  return std::nullopt;
}

GroupElement samelson_apply(const PairingMatrix& pairing, const GroupElement& a,
                            const GroupElement& b) {
  if (!(a.group() == pairing.left) || !(b.group() == pairing.right))
    throw InvalidArgument("samelson product of degree (" + std::to_string(pairing.n) + "," +
                          std::to_string(pairing.m) + ") applied to elements of " +
                          a.group().name() + " and " + b.group().name());
  IntVector sum = zero_vector(pairing.target.generator_count());
  for (Eigen::Index i = 0; i < a.coordinates().size(); ++i) {
    if (a.coordinates()(i) == 0) continue;
    for (Eigen::Index j = 0; j < b.coordinates().size(); ++j) {
      if (b.coordinates()(j) == 0) continue;
      const Integer weight = a.coordinates()(i) * b.coordinates()(j);
      sum += weight * pairing.value(i, j).coordinates();
    }
  }
  return GroupElement(pairing.target, std::move(sum));
}

int rational_pi(const GroupCatalogEntry& entry, int n) {
  if (n < 1) throw InvalidArgument("rational homotopy degree must be >= 1, got " + std::to_string(n));
  return static_cast<int>(
      std::count(entry.rational_exponents.begin(), entry.rational_exponents.end(), n));
}

}  // namespace ghg
