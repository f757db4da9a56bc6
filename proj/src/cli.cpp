#include "ghg/cli.hpp"

#include "ghg/catalog.hpp"
#include "ghg/errors.hpp"
#include "ghg/exact_sequence.hpp"
#include "ghg/gauge.hpp"
#include "ghg/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>

namespace ghg::cli {

namespace {

using nlohmann::ordered_json;

struct Query {
  std::string group;
  std::string base_text;
  std::string class_text;
  int degree = 0;
  std::string format = "text";
  std::string catalog_path;
  std::size_t torsion_bound = kDefaultTorsionBound;
};

struct UsageError {
  std::string message;
};

long parse_long(const std::string& text, const std::string& what) {
  long value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw UsageError{"invalid " + what + " '" + text + "'"};
  return value;
}

Base parse_base(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError{"--base must look like sphere:<m> or surface:<genus>, got '" + text + "'"};
  const std::string kind = text.substr(0, colon);
  const long value = parse_long(text.substr(colon + 1), "base parameter");
  if (kind == "sphere") {
    if (value < 1) throw UsageError{"sphere dimension must be >= 1"};
    return Base::sphere(static_cast<int>(value));
  }
  if (kind == "surface") {
    if (value < 0) throw UsageError{"surface genus must be >= 0"};
    return Base::surface(static_cast<int>(value));
  }
  throw UsageError{"unknown base kind '" + kind + "' (expected sphere or surface)"};
}

// Comma-separated coordinates over the catalogued generators; a single
// integer is accepted for a cyclic group, "0" for the trivial group.
IntVector parse_class(const std::string& text, const FgAbGroup& group, int degree,
                      const std::string& group_name) {
  const std::string where = "pi_" + std::to_string(degree) + "(" + group_name + ") = " + group.name();
  if (text.empty()) return zero_vector(group.generator_count());
  std::vector<long> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(parse_long(item, "class coordinate"));
  if (text.back() == ',') throw UsageError{"invalid class '" + text + "'"};

  if (group.is_trivial()) {
    if (std::any_of(values.begin(), values.end(), [](long v) { return v != 0; }))
      throw UsageError{"class must be 0 in the trivial group " + where};
    return zero_vector(0);
  }
  if (static_cast<Eigen::Index>(values.size()) != group.generator_count())
    throw UsageError{"class needs " + std::to_string(group.generator_count()) +
                     " comma-separated coordinates in " + where};
  IntVector v(group.generator_count());
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

ordered_json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

ordered_json group_json(const FgAbGroup& g) {
  ordered_json factors = ordered_json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(integer_json(d));
  return {{"name", g.name()}, {"rank", g.rank()}, {"factors", factors}};
}

ordered_json base_json(const Base& base) {
  return {{"kind", base.is_sphere() ? "sphere" : "surface"}, {"value", base.dimension_or_genus}};
}

ordered_json class_json(const GroupElement& clazz) {
  ordered_json coords = ordered_json::array();
  for (Eigen::Index i = 0; i < clazz.coordinates().size(); ++i)
    coords.push_back(integer_json(clazz.coordinates()(i)));
  return coords;
}

Catalog open_catalog(const Query& q) {
  const std::filesystem::path path =
      q.catalog_path.empty() ? default_catalog_path() : std::filesystem::path(q.catalog_path);
  return load_catalog(path);
}

int report(std::ostream& err, const std::string& stage, const std::string& message, int code) {
  err << "error [" << stage << "]: " << message << '\n';
  return code;
}

// Loads the catalog, checks the group and class, and returns the bundle.
struct Prepared {
  Catalog catalog;
  const GroupCatalogEntry* entry = nullptr;
  BundleSpec bundle;
};

Prepared prepare(const Query& q) {
  Base base = parse_base(q.base_text);
  if (q.degree < 1)
    throw UsageError{"--degree must be >= 1 (the sequence has no group structure at degree 0)"};
  Catalog catalog = open_catalog(q);
  if (!catalog.contains(q.group)) {
    std::string known;
    for (const auto& e : catalog.entries()) known += (known.empty() ? "" : ", ") + e.name;
    throw UsageError{"unknown group '" + q.group + "' (catalogued: " + known + ")"};
  }
  const GroupCatalogEntry& entry = catalog.entry(q.group);
  const FgAbGroup& class_group = lookup_pi(entry, base.class_degree());
  IntVector clazz = parse_class(q.class_text, class_group, base.class_degree(), q.group);
  BundleSpec bundle = make_bundle(entry, base, clazz);
  Prepared p{std::move(catalog), nullptr, std::move(bundle)};
  p.entry = &p.catalog.entry(q.group);
  return p;
}

int do_compute(const Query& q, std::ostream& out) {
  Prepared p = prepare(q);
  const SequenceResult result = gauge_homotopy(*p.entry, p.bundle, q.degree, q.torsion_bound);
  if (q.format == "json") {
    ordered_json doc;
    doc["command"] = "compute";
    doc["group"] = q.group;
    doc["base"] = base_json(p.bundle.base);
    doc["class"] = class_json(p.bundle.clazz);
    doc["degree"] = q.degree;
    doc["kind"] = result.resolved() ? "resolved" : "ambiguous";
    doc["name"] = describe(result);
    doc["rank"] = result.rank();
    if (result.resolved()) doc["factors"] = group_json(result.group)["factors"];
    doc["sub"] = group_json(result.sub);
    doc["quot"] = group_json(result.quot);
    ordered_json candidates = ordered_json::array();
    for (const auto& c : result.candidates) candidates.push_back(group_json(c));
    doc["candidates"] = candidates;
    out << doc.dump(2) << '\n';
  } else {
    out << describe(result) << '\n';
  }
  return kOk;
}

int do_rational(const Query& q, std::ostream& out) {
  Prepared p = prepare(q);
  const int dimension = gauge_homotopy_rational(*p.entry, p.bundle, q.degree);
  const std::string name = "Q^" + std::to_string(dimension);
  if (q.format == "json") {
    ordered_json doc;
    doc["command"] = "rational";
    doc["group"] = q.group;
    doc["base"] = base_json(p.bundle.base);
    doc["degree"] = q.degree;
    doc["dimension"] = dimension;
    doc["name"] = name;
    out << doc.dump(2) << '\n';
  } else {
    out << name << '\n';
  }
  return kOk;
}

int do_catalog(const Query& q, std::ostream& out) {
  const Catalog catalog = open_catalog(q);
  if (q.format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& e : catalog.entries()) {
      ordered_json pairings = ordered_json::array();
      for (const auto& [key, pairing] : e.samelson_table) pairings.push_back({key.first, key.second});
      doc.push_back({{"name", e.name},
                     {"abelian", e.abelian},
                     {"rational_exponents", e.rational_exponents},
                     {"table_depth", e.table_depth()},
                     {"samelson", pairings}});
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }
  for (const auto& e : catalog.entries()) {
    out << e.name << ": table depth " << e.table_depth() << ", rational exponents {";
    for (std::size_t i = 0; i < e.rational_exponents.size(); ++i)
      out << (i ? "," : "") << e.rational_exponents[i];
    out << "}, samelson pairings [";
    bool first = true;
    for (const auto& [key, pairing] : e.samelson_table) {
      out << (first ? "" : " ") << '(' << key.first << ',' << key.second << ')';
      first = false;
    }
    out << ']' << (e.abelian ? ", abelian" : "") << '\n';
  }
  return kOk;
}

int do_verify(const Query& q, std::ostream& out) {
  const Catalog catalog = open_catalog(q);
  const auto reports = verify::run_all(catalog);
  std::size_t passed = 0;
  for (const auto& r : reports)
    if (r.passed) ++passed;
  const std::size_t failed = reports.size() - passed;
  if (q.format == "json") {
    ordered_json checks = ordered_json::array();
    for (const auto& r : reports)
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases},
                        {"detail", r.detail}});
    ordered_json doc;
    doc["command"] = "verify";
    doc["checks"] = checks;
    doc["passed"] = passed;
    doc["failed"] = failed;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports)
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    out << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kVerifyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homotopy groups of gauge groups of principal bundles over spheres and surfaces",
               "ghg"};
  app.require_subcommand(1, 1);
  Query q;

  auto add_catalog = [&](CLI::App* sub) {
    sub->add_option("--catalog", q.catalog_path, "Catalog JSON file (default: $GHG_CATALOG)");
    sub->add_option("--format", q.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_query = [&](CLI::App* sub, bool class_flag) {
    sub->add_option("--group", q.group, "Structure group name from the catalog")->required();
    sub->add_option("--base", q.base_text, "sphere:<m> or surface:<genus>")->required();
    if (class_flag)
      sub->add_option("--class", q.class_text,
                      "Characteristic class: comma-separated coordinates (default 0)");
    sub->add_option("--degree", q.degree, "Homotopy degree n >= 1")->required();
    add_catalog(sub);
  };

  CLI::App* compute = app.add_subcommand("compute", "pi_n of the gauge group");
  add_query(compute, true);
  compute->add_option("--torsion-bound", q.torsion_bound,
                      "Largest torsion order searched when an extension is ambiguous");
  CLI::App* rational = app.add_subcommand("rational", "Rational dimension of pi_n of the gauge group");
  add_query(rational, true);
  CLI::App* catalog = app.add_subcommand("catalog", "List catalogued structure groups");
  add_catalog(catalog);
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  add_catalog(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error [arguments]: " << e.what() << '\n';
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kUsageError;
  }

  try {
    if (compute->parsed()) return do_compute(q, out);
    if (rational->parsed()) return do_rational(q, out);
    if (catalog->parsed()) return do_catalog(q, out);
    return do_verify(q, out);
  } catch (const UsageError& e) {
    err << "error [arguments]: " << e.message << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    return report(err, "arguments", e.what(), kUsageError);
  } catch (const ParseError& e) {
    return report(err, "catalog", e.what(), kComputationError);
  } catch (const ValidationError& e) {
    return report(err, "catalog", e.what(), kComputationError);
  } catch (const UnknownGroup& e) {
    return report(err, "catalog", e.what(), kUsageError);
  } catch (const TableDepthExceeded& e) {
    return report(err, "catalog lookup", e.what(), kComputationError);
  } catch (const PairingUnavailableError& e) {
    return report(err, "connecting map", e.what(), kComputationError);
  } catch (const CapacityExceeded& e) {
    return report(err, "extension", e.what(), kComputationError);
  } catch (const Error& e) {
    return report(err, "compute", e.what(), kComputationError);
  }
}

}  // namespace ghg::cli
