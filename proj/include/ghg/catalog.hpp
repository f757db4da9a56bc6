#pragma once

#include "ghg/abelian_group.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ghg {

struct PiRow {
  FgAbGroup group;
  std::string source;
};

/// Samelson products <a_i, b_j> in pi_{n+m}(K) of the catalogued generators
/// a_i of pi_n(K) and b_j of pi_m(K).
struct PairingMatrix {
  int n = 0;
  int m = 0;
  FgAbGroup left;    // pi_n(K)
  FgAbGroup right;   // pi_m(K)
  FgAbGroup target;  // pi_{n+m}(K)
  std::vector<std::vector<GroupElement>> values;  // [i][j]

  const GroupElement& value(Eigen::Index i, Eigen::Index j) const {
    return values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  /// Pairing with every value zero.
  static PairingMatrix zero(int n, int m, const FgAbGroup& left, const FgAbGroup& right,
                            const FgAbGroup& target);
};

struct GroupCatalogEntry {
  std::string name;
  bool connected = true;
  bool abelian = false;
  std::vector<int> rational_exponents;
  std::map<int, PiRow> pi_table;
  std::map<std::pair<int, int>, PairingMatrix> samelson_table;

  /// Largest D such that degrees 0..D are all catalogued, or -1.
  int table_depth() const;
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<GroupCatalogEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<GroupCatalogEntry>& entries() const { return entries_; }
  bool contains(std::string_view name) const;
  /// Throws UnknownGroup.
  const GroupCatalogEntry& entry(std::string_view name) const;

 private:
  std::vector<GroupCatalogEntry> entries_;
};

/// Parses and validates a catalog document. Throws ParseError for malformed
/// JSON or schema violations and ValidationError for broken invariants.
Catalog parse_catalog(std::string_view json_text);
Catalog load_catalog(const std::filesystem::path& path);

/// $GHG_CATALOG when set, otherwise the catalog shipped with the sources.
std::filesystem::path default_catalog_path();

/// Throws TableDepthExceeded when n is not catalogued.
const FgAbGroup& lookup_pi(const GroupCatalogEntry& entry, int n);

/// Stored pairing; a zero pairing when pi_n, pi_m or pi_{n+m} is trivial or K
/// is abelian; std::nullopt when the data is simply not catalogued.
std::optional<PairingMatrix> lookup_samelson(const GroupCatalogEntry& entry, int n, int m);

/// Bilinear extension of the generator values.
GroupElement samelson_apply(const PairingMatrix& pairing, const GroupElement& a,
                            const GroupElement& b);

/// Multiplicity of n among the odd-sphere exponents of the rational model.
int rational_pi(const GroupCatalogEntry& entry, int n);

}  // namespace ghg
