#include "ghg/verify.hpp"

#include "ghg/errors.hpp"
#include "ghg/exact_sequence.hpp"
#include "ghg/gauge.hpp"
#include "ghg/oracle.hpp"
#include "ghg/random.hpp"
#include "ghg/smith.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

namespace ghg::verify {

namespace {

// A check body returns the number of cases run and throws Failure on the
// first violation.
struct Failure {
  std::string what;
};

[[noreturn]] void fail(const std::string& what) { throw Failure{what}; }

CheckReport timed(const std::string& name, const std::function<std::size_t()>& body) {
  CheckReport report;
  report.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    report.cases = body();
    report.passed = true;
    report.detail = std::to_string(report.cases) + " cases";
  } catch (const Failure& f) {
    report.detail = f.what;
  } catch (const std::exception& e) {
    report.detail = std::string("unexpected error: ") + e.what();
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string show(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i ? "; " : "");
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
  }
  out << ']';
  return out.str();
}

std::string show(const std::vector<FgAbGroup>& groups) {
  std::string out;
  for (const auto& g : groups) out += (out.empty() ? "" : ", ") + g.name();
  return "{" + out + "}";
}

// Elements used for exhaustive bilinearity checks: everything when finite,
// otherwise free coordinates in [-2, 2].
std::vector<GroupElement> sample_elements(const FgAbGroup& g, std::size_t cap) {
  std::vector<GroupElement> out;
  const FgAbGroup torsion(0, g.invariant_factors());
  const auto torsion_elements = enumerate_elements(torsion, 1u << 20);
  const long rank = static_cast<long>(g.rank());
  long free_combinations = 1;
  for (long r = 0; r < rank; ++r) free_combinations *= 5;
  for (long f = 0; f < free_combinations && out.size() < cap; ++f) {
    for (const auto& t : torsion_elements) {
      if (out.size() >= cap) break;
      IntVector coords(g.generator_count());
      long code = f;
      for (long r = 0; r < rank; ++r) {
        coords(r) = code % 5 - 2;
        code /= 5;
      }
      for (Eigen::Index k = 0; k < t.coordinates().size(); ++k) coords(rank + k) = t.coordinates()(k);
      out.emplace_back(g, std::move(coords));
    }
  }
  return out;
}

int closed_form_rational(const std::vector<int>& exponents, const Base& base, int n) {
  const auto q = [&](int k) {
    return static_cast<int>(std::count(exponents.begin(), exponents.end(), k));
  };
  if (base.is_sphere()) return q(n + base.dimension_or_genus) + q(n);
  return q(n + 2) + 2 * base.dimension_or_genus * q(n + 1) + q(n);
}

std::vector<GroupElement> class_samples(const FgAbGroup& g) { return sample_elements(g, 60); }

}  // namespace

// ------------------------------------------------------------------- algebra

CheckReport snf_properties(std::size_t matrices, std::uint64_t seed) {
  return timed("snf_properties", [&] {
    Rng rng(seed);
    for (std::size_t t = 0; t < matrices; ++t) {
      const IntMatrix a = random_matrix(rng, uniform(rng, 1, 6), uniform(rng, 1, 6), -9, 9);
      const auto snf = smith_normal_form(a);
      const std::string where = " for A = " + show(a);
      if (IntMatrix(snf.U * a * snf.V) != snf.D) fail("U*A*V != D" + where);
      if (abs(oracle::determinant(snf.U)) != 1) fail("U is not unimodular" + where);
      if (abs(oracle::determinant(snf.V)) != 1) fail("V is not unimodular" + where);
      if (IntMatrix(snf.V * snf.V_inverse) != identity_matrix(a.cols()))
        fail("V_inverse is not the inverse of V" + where);
      Integer previous = 1;
      for (Eigen::Index i = 0; i < snf.D.rows(); ++i) {
        for (Eigen::Index j = 0; j < snf.D.cols(); ++j) {
          if (i != j && snf.D(i, j) != 0) fail("D is not diagonal" + where);
        }
        if (i >= snf.D.cols()) continue;
        const Integer d = snf.D(i, i);
        if (d < 0) fail("negative diagonal entry" + where);
        if (d != 0 && previous == 0) fail("zero before nonzero on the diagonal" + where);
        if (previous != 0 && d % previous != 0) fail("divisibility chain broken" + where);
        previous = d;
      }
    }
    return matrices;
  });
}

CheckReport canonicalize_idempotent(std::size_t groups, std::uint64_t seed) {
  return timed("canonicalize_idempotent", [&] {
    Rng rng(seed);
    for (std::size_t t = 0; t < groups; ++t) {
      const FgAbGroup g = random_group(rng, 200, 2);
      if (!(canonicalize(presentation_of(g)) == g)) fail("canonicalize moved " + g.name());
      Presentation p = presentation_of(g);
      p.relations = random_unimodular(rng, p.relations.rows()) * p.relations;
      if (!(canonicalize(p) == g)) fail("row-mixed presentation of " + g.name() + " changed");
    }
    return groups;
  });
}

CheckReport presentation_orders(std::size_t presentations, std::uint64_t seed) {
  return timed("presentation_orders", [&] {
    Rng rng(seed);
    std::size_t done = 0;
    while (done < presentations) {
      const long k = uniform(rng, 1, 3);
      std::vector<long> moduli;
      for (long i = 0; i < k; ++i) moduli.push_back(uniform(rng, 1, 12));
      const long extra = uniform(rng, 0, 2);
      IntMatrix relations = zero_matrix(k + extra, k);
      for (long i = 0; i < k; ++i) relations(i, i) = moduli[static_cast<std::size_t>(i)];
      relations.bottomRows(extra) = random_matrix(rng, extra, k, -6, 6);

      // Brute force: ambient group modulo the extra relations.
      const oracle::FiniteGroup explicit_g(moduli);
      std::vector<std::size_t> generators;
      for (long r = 0; r < extra; ++r) {
        std::vector<long> element(static_cast<std::size_t>(k));
        for (long c = 0; c < k; ++c) element[static_cast<std::size_t>(c)] = relations(k + r, c).get_si();
        generators.push_back(explicit_g.index(element));
      }
      const auto subgroup = explicit_g.closure(generators);
      const auto brute_order =
          explicit_g.order() /
          static_cast<std::size_t>(std::count(subgroup.begin(), subgroup.end(), true));
      if (brute_order > 200) continue;

      // Mix rows and generators; neither changes the isomorphism class.
      IntMatrix mixed = random_unimodular(rng, k + extra) * relations * random_unimodular(rng, k);
      const FgAbGroup g = canonicalize(Presentation(k, mixed));
      const std::string where = " for relations " + show(mixed);
      if (!g.is_finite()) fail("finite presentation gave " + g.name() + where);
      if (g.torsion_order() != static_cast<unsigned long>(brute_order))
        fail("order " + g.torsion_order().get_str() + " != brute force " +
             std::to_string(brute_order) + where);
      if (enumerate_elements(g, 200).size() != brute_order)
        fail("enumerate_elements disagrees" + where);
      if (oracle::order_statistics(g) != oracle::quotient_order_statistics(explicit_g, subgroup))
        fail("element orders of " + g.name() + " disagree with brute force" + where);
      ++done;
    }
    return done;
  });
}

CheckReport hom_counts(std::size_t maps, std::uint64_t seed) {
  return timed("hom_counts", [&] {
    Rng rng(seed);
    for (std::size_t t = 0; t < maps; ++t) {
      const FgAbGroup g = random_finite_group(rng, 64);
      const FgAbGroup h = random_finite_group(rng, 64);
      const Homomorphism f = random_homomorphism(rng, g, h);
      const auto parts = hom_decompose(f);
      const auto counts = oracle::count_kernel_image(g, h, f.matrix());
      const std::string where = " for " + g.name() + " -> " + h.name() + " " + show(f.matrix());
      if (!parts.kernel.is_finite() || !parts.image.is_finite() || !parts.cokernel.is_finite())
        fail("infinite part of a finite map" + where);
      if (parts.kernel.torsion_order() != static_cast<unsigned long>(counts.kernel))
        fail("|ker| = " + parts.kernel.torsion_order().get_str() + ", brute force " +
             std::to_string(counts.kernel) + where);
      if (parts.image.torsion_order() != static_cast<unsigned long>(counts.image))
        fail("|im| = " + parts.image.torsion_order().get_str() + ", brute force " +
             std::to_string(counts.image) + where);
      if (parts.kernel.torsion_order() * parts.image.torsion_order() != g.torsion_order())
        fail("|ker|*|im| != |domain|" + where);
      if (parts.image.torsion_order() * parts.cokernel.torsion_order() != h.torsion_order())
        fail("|im|*|coker| != |codomain|" + where);
    }
    return maps;
  });
}

CheckReport hom_special_maps(std::size_t groups, std::uint64_t seed) {
  return timed("hom_special_maps", [&] {
    Rng rng(seed);
    const FgAbGroup trivial;
    for (std::size_t t = 0; t < groups; ++t) {
      const FgAbGroup g = random_group(rng, 64, 2);
      const FgAbGroup h = random_group(rng, 64, 2);
      const auto zero = hom_decompose(Homomorphism::zero(g, h));
      if (!(zero.kernel == g && zero.image == trivial && zero.cokernel == h))
        fail("zero map " + g.name() + " -> " + h.name());
      const auto id = hom_decompose(Homomorphism::identity(g));
      if (!(id.kernel == trivial && id.image == g && id.cokernel == trivial))
        fail("identity map of " + g.name());
    }
    return groups;
  });
}

CheckReport tensor_q_additivity(std::size_t pairs, std::uint64_t seed) {
  return timed("tensor_q_additivity", [&] {
    Rng rng(seed);
    for (std::size_t t = 0; t < pairs; ++t) {
      const FgAbGroup g = random_group(rng, 100, 3);
      const FgAbGroup h = random_group(rng, 100, 3);
      if (tensor_q(direct_sum(g, h)) != tensor_q(g) + tensor_q(h))
        fail("tensor_q not additive on " + g.name() + " and " + h.name());
    }
    return pairs;
  });
}

CheckReport extension_oracle(std::size_t instances, std::uint64_t seed) {
  return timed("extension_oracle", [&] {
    Rng rng(seed);
    for (std::size_t t = 0; t < instances; ++t) {
      const long n = uniform(rng, 1, 64);
      const auto groups = oracle::abelian_groups_of_order(n);
      const FgAbGroup x = groups[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(groups.size()) - 1))];
      const oracle::FiniteGroup explicit_x = oracle::explicit_group(x);
      std::vector<std::size_t> generators;
      for (long k = uniform(rng, 0, 2); k > 0; --k)
        generators.push_back(static_cast<std::size_t>(uniform(rng, 0, n - 1)));
      const auto s = explicit_x.closure(generators);
      const FgAbGroup sub = oracle::type_of(explicit_x, s);
      const FgAbGroup quot = oracle::quotient_type(explicit_x, s);
      const auto result = resolve_extension(sub, quot);
      if (std::find(result.groups.begin(), result.groups.end(), x) == result.groups.end())
        fail("X = " + x.name() + " missing from extension of " + quot.name() + " by " +
             sub.name() + ": " + show(result.groups));
      for (const auto& c : result.groups)
        if (c.torsion_order() != sub.torsion_order() * quot.torsion_order())
          fail("candidate " + c.name() + " has the wrong order");
    }
    return instances;
  });
}

CheckReport sign_invariance(std::size_t fragments, std::uint64_t seed) {
  return timed("sign_invariance", [&] {
    Rng rng(seed);
    for (std::size_t t = 0; t < fragments; ++t) {
      const FgAbGroup a = random_group(rng, 24, 1);
      const FgAbGroup b = random_group(rng, 24, 1);
      const FgAbGroup c = random_group(rng, 24, 1);
      const FgAbGroup d = random_group(rng, 24, 1);
      const Homomorphism left = random_homomorphism(rng, a, b);
      const Homomorphism right = random_homomorphism(rng, c, d);
      const SequenceResult base = middle_group(left, right);
      if (!(middle_group(-left, right) == base))
        fail("negating the left map " + show(left.matrix()) + " changed " + describe(base));
      if (!(middle_group(left, -right) == base))
        fail("negating the right map " + show(right.matrix()) + " changed " + describe(base));
    }
    return fragments;
  });
}

// ------------------------------------------------------------------ catalog

CheckReport catalog_consistency(const Catalog& catalog) {
  return timed("catalog_consistency", [&] {
    std::size_t cases = 0;
    for (const auto& entry : catalog.entries()) {
      for (const auto& [degree, row] : entry.pi_table) {
        if (degree >= 1 && tensor_q(row.group) != static_cast<std::size_t>(rational_pi(entry, degree)))
          fail(entry.name + ": rank of pi_" + std::to_string(degree) +
               " disagrees with the rational exponents");
        ++cases;
      }
      for (const auto& [key, pairing] : entry.samelson_table) {
        for (const auto& row : pairing.values)
          for (const auto& value : row)
            if (value.order() == 0) fail(entry.name + ": pairing value of infinite order");
        ++cases;
      }
    }
    return cases;
  });
}

CheckReport samelson_biadditivity(const Catalog& catalog) {
  return timed("samelson_biadditivity", [&] {
    std::size_t cases = 0;
    for (const auto& entry : catalog.entries()) {
      for (const auto& [key, pairing] : entry.samelson_table) {
        const auto as = sample_elements(pairing.left, 24);
        const auto bs = sample_elements(pairing.right, 24);
        const std::string where = entry.name + " <" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ">";
        for (const auto& a : as) {
          for (const auto& b : bs) {
            const GroupElement ab = samelson_apply(pairing, a, b);
            for (const auto& a2 : as)
              if (!(samelson_apply(pairing, a + a2, b) == ab + samelson_apply(pairing, a2, b)))
                fail(where + " not additive in the first slot");
            for (const auto& b2 : bs)
              if (!(samelson_apply(pairing, a, b + b2) == ab + samelson_apply(pairing, a, b2)))
                fail(where + " not additive in the second slot");
            const Integer order = a.order();
            if (order != 0 && !samelson_apply(pairing, order * a, b).is_zero())
              fail(where + " does not respect the order of a");
            ++cases;
          }
        }
      }
    }
    return cases;
  });
}

CheckReport delta_well_defined(const Catalog& catalog) {
  return timed("delta_well_defined", [&] {
    std::size_t cases = 0;
    for (const auto& entry : catalog.entries()) {
      const int depth = entry.table_depth();
      for (int m = 1; m <= 6; ++m) {
        if (m - 1 > depth) break;
        for (const auto& b : class_samples(lookup_pi(entry, m - 1))) {
          for (int n = 1; n + m - 1 <= depth; ++n) {
            auto delta = connecting_hom_sphere(entry, m, b, n);
            auto negated = connecting_hom_sphere(entry, m, -b, n);
            if (auto* f = std::get_if<Homomorphism>(&delta)) {
              if (!is_well_defined(f->domain(), f->codomain(), f->matrix()))
                fail(entry.name + ": delta_" + std::to_string(n) + " is not well defined");
              auto* g = std::get_if<Homomorphism>(&negated);
              if (g == nullptr || !(*g == -*f))
                fail(entry.name + ": negating the class does not negate delta_" + std::to_string(n));
            }
            if (n + m <= depth) {
              try {
                const auto bundle = make_bundle(entry, Base::sphere(m), b.coordinates());
                const auto flipped = make_bundle(entry, Base::sphere(m), (-b).coordinates());
                if (!(gauge_homotopy(entry, bundle, n) == gauge_homotopy(entry, flipped, n)))
                  fail(entry.name + ": negating the class changed pi_" + std::to_string(n));
              } catch (const PairingUnavailableError&) {
              } catch (const CapacityExceeded&) {
              }
            }
            ++cases;
          }
        }
      }
    }
    return cases;
  });
}

CheckReport gcd_table(const Catalog& catalog) {
  return timed("gcd_table", [&] {
    for (long k = -24; k <= 24; ++k) {
      const FgAbGroup expected = FgAbGroup::cyclic(std::gcd(k, 12L));
      const FgAbGroup got = su2_s4_pi2(catalog, k);
      if (!(got == expected))
        fail("k = " + std::to_string(k) + ": got " + got.name() + ", expected " + expected.name());
    }
    return std::size_t{49};
  });
}

CheckReport hopf_bundle(const Catalog& catalog) {
  return timed("hopf_bundle", [&] {
    const FgAbGroup got = su2_s4_pi2(catalog, 1);
    if (!got.is_trivial()) fail("pi_2 of the Hopf bundle gauge group is " + got.name());
    return std::size_t{1};
  });
}

CheckReport rational_theorem(const Catalog& catalog, const std::vector<std::string>& groups) {
  return timed("rational_theorem", [&] {
    std::size_t cases = 0;
    for (const auto& name : groups) {
      const auto& entry = catalog.entry(name);
      std::vector<Base> bases;
      for (int m = 1; m <= 6; ++m) bases.push_back(Base::sphere(m));
      for (int g = 0; g <= 3; ++g) bases.push_back(Base::surface(g));
      for (const auto& base : bases) {
        const auto classes = class_samples(lookup_pi(entry, base.class_degree()));
        for (int n = 1; n <= 10; ++n) {
          const int expected = closed_form_rational(entry.rational_exponents, base, n);
          const std::string where =
              name + " over " + base.name() + " at n = " + std::to_string(n);
          if (gauge_homotopy_rational(entry, base, n) != expected)
            fail(where + ": closed form mismatch");
          if (gauge_homotopy_rational_via_sequence(entry, base, n) != expected)
            fail(where + ": zero-delta sequence gives " +
                 std::to_string(gauge_homotopy_rational_via_sequence(entry, base, n)) +
                 ", expected " + std::to_string(expected));
          for (const auto& c : classes)
            if (gauge_homotopy_rational(entry, make_bundle(entry, base, c.coordinates()), n) !=
                expected)
              fail(where + ": depends on the bundle class");
          ++cases;
        }
      }
    }
    return cases;
  });
}

CheckReport even_degree_vanishing(const Catalog& catalog, const std::vector<std::string>& groups) {
  return timed("even_degree_vanishing", [&] {
    std::size_t cases = 0;
    for (const auto& name : groups) {
      const auto& entry = catalog.entry(name);
      for (int m = 2; m <= 6; m += 2) {
        for (int n = 2; n <= 8; n += 2) {
          const int d = gauge_homotopy_rational(entry, Base::sphere(m), n);
          if (d != 0)
            fail(name + " over sphere:" + std::to_string(m) + " at n = " + std::to_string(n) +
                 " has rational dimension " + std::to_string(d));
          ++cases;
        }
      }
    }
    return cases;
  });
}

std::vector<CheckReport> run_all(const Catalog& catalog) {
  std::vector<std::string> lie_groups;
  for (const char* name : {"SU2", "SU3", "U1"})
    if (catalog.contains(name)) lie_groups.emplace_back(name);
  std::vector<std::string> odd_exponent_groups;
  for (const char* name : {"SU2", "SU3"})
    if (catalog.contains(name)) odd_exponent_groups.emplace_back(name);

  std::vector<CheckReport> reports;
  reports.push_back(snf_properties());
  reports.push_back(canonicalize_idempotent());
  reports.push_back(presentation_orders());
  reports.push_back(hom_counts());
  reports.push_back(hom_special_maps());
  reports.push_back(tensor_q_additivity());
  reports.push_back(extension_oracle());
  reports.push_back(sign_invariance());
  reports.push_back(catalog_consistency(catalog));
  reports.push_back(samelson_biadditivity(catalog));
  reports.push_back(delta_well_defined(catalog));
  if (catalog.contains("SU2")) {
    reports.push_back(gcd_table(catalog));
    reports.push_back(hopf_bundle(catalog));
  }
  reports.push_back(rational_theorem(catalog, lie_groups));
  reports.push_back(even_degree_vanishing(catalog, odd_exponent_groups));
  return reports;
}

}  // namespace ghg::verify
