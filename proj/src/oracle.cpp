#include "ghg/oracle.hpp"

#include "ghg/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace ghg::oracle {

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer previous = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer value = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = value;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::vector<long> moduli) : moduli_(std::move(moduli)) {
  for (long m : moduli_) {
    if (m < 1) throw InvalidArgument("explicit group moduli must be positive");
    order_ *= static_cast<std::size_t>(m);
  }
}

std::vector<long> FiniteGroup::element(std::size_t index) const {
  std::vector<long> out(moduli_.size());
  for (std::size_t k = moduli_.size(); k-- > 0;) {
    const auto m = static_cast<std::size_t>(moduli_[k]);
    out[k] = static_cast<long>(index % m);
    index /= m;
  }
  return out;
}

std::size_t FiniteGroup::index(const std::vector<long>& element) const {
  std::size_t out = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    const long m = moduli_[k];
    out = out * static_cast<std::size_t>(m) + static_cast<std::size_t>(((element[k] % m) + m) % m);
  }
  return out;
}

std::size_t FiniteGroup::add(std::size_t a, std::size_t b) const {
  auto x = element(a);
  const auto y = element(b);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
  return index(x);
}

std::size_t FiniteGroup::multiple(long n, std::size_t a) const {
  auto x = element(a);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = (x[k] * (n % moduli_[k])) % moduli_[k];
  return index(x);
}

std::vector<bool> FiniteGroup::closure(const std::vector<std::size_t>& generators) const {
  std::vector<bool> in(order_, false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t g : generators) {
      const std::size_t next = add(members[i], g);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  return in;
}

// -------------------------------------------------------------- statistics

namespace {

std::size_t count(const std::vector<bool>& mask) {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

// Smallest k >= 1 with k * x in H.
std::size_t relative_order(const FiniteGroup& g, const std::vector<bool>& subgroup, std::size_t x) {
  std::size_t k = 1;
  std::size_t current = x;
  while (!subgroup[current]) {
    current = g.add(current, x);
    ++k;
  }
  return k;
}

std::vector<long> small_primes_dividing(std::size_t n) {
  std::vector<long> out;
  for (long p = 2; static_cast<std::size_t>(p) <= n; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (prime && n % static_cast<std::size_t>(p) == 0) out.push_back(p);
  }
  return out;
}

int log_exact(std::size_t value, long p) {
  int e = 0;
  while (value % static_cast<std::size_t>(p) == 0 && value > 1) {
    value /= static_cast<std::size_t>(p);
    ++e;
  }
  return e;
}

// Assembles invariant factors from, for every prime p, the sequence
// s_k = log_p #{x : p^k x = 0}.
FgAbGroup type_from_torsion_counts(std::size_t order,
                                   const std::function<std::size_t(long)>& killed_by) {
  std::vector<std::vector<int>> parts_by_prime;
  std::vector<long> primes = small_primes_dividing(order);
  for (long p : primes) {
    std::vector<int> at_least;  // at_least[k-1] = number of parts >= k
    int previous = 0;
    long power = p;
    for (;;) {
      const int s = log_exact(killed_by(power), p);
      if (s == previous) break;
      at_least.push_back(s - previous);
      previous = s;
      power *= p;
    }
    std::vector<int> parts;  // descending
    for (int t = 1; !at_least.empty() && t <= at_least.front(); ++t)
      parts.push_back(static_cast<int>(
          std::count_if(at_least.begin(), at_least.end(), [t](int c) { return c >= t; })));
    parts_by_prime.push_back(parts);
  }
  std::size_t length = 0;
  for (const auto& parts : parts_by_prime) length = std::max(length, parts.size());
  std::vector<Integer> factors;
  for (std::size_t t = length; t-- > 0;) {
    Integer d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (t < parts_by_prime[i].size())
        for (int e = 0; e < parts_by_prime[i][t]; ++e) d *= primes[i];
    factors.push_back(d);
  }
  return FgAbGroup(0, factors);
}

}  // namespace

OrderStatistics order_statistics(const FiniteGroup& g, const std::vector<bool>& subgroup) {
  OrderStatistics out;
  const std::vector<bool> trivial = g.closure({});
  for (std::size_t x = 0; x < g.order(); ++x)
    if (subgroup[x]) out[relative_order(g, trivial, x)] += 1;
  return out;
}

OrderStatistics quotient_order_statistics(const FiniteGroup& g, const std::vector<bool>& subgroup) {
  OrderStatistics out;
  const std::size_t h = count(subgroup);
  for (std::size_t x = 0; x < g.order(); ++x) out[relative_order(g, subgroup, x)] += 1;
  for (auto& [order, n] : out) n /= h;
  return out;
}

OrderStatistics order_statistics(const FgAbGroup& g) {
  const FiniteGroup explicit_g = explicit_group(g);
  return order_statistics(explicit_g, std::vector<bool>(explicit_g.order(), true));
}

FgAbGroup type_of(const FiniteGroup& g, const std::vector<bool>& subgroup) {
  return type_from_torsion_counts(count(subgroup), [&](long n) {
    std::size_t killed = 0;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (subgroup[x] && g.multiple(n, x) == 0) ++killed;
    return killed;
  });
}

FgAbGroup quotient_type(const FiniteGroup& g, const std::vector<bool>& subgroup) {
  const std::size_t h = count(subgroup);
  return type_from_torsion_counts(g.order() / h, [&](long n) {
    std::size_t killed = 0;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (subgroup[g.multiple(n, x)]) ++killed;
    return killed / h;
  });
}

std::vector<std::vector<bool>> all_subgroups(const FiniteGroup& g) {
  if (g.order() > 64) throw CapacityExceeded("subgroup enumeration is limited to order 64");
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{g.closure({})};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::vector<bool> current = queue[i];
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (current[x]) continue;
      // <H, x> = union of the cosets H + kx.
      std::vector<bool> joined = current;
      std::size_t shift = x;
      while (!current[shift]) {
        for (std::size_t h = 0; h < g.order(); ++h)
          if (current[h]) joined[g.add(h, shift)] = true;
        shift = g.add(shift, x);
      }
      if (seen.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  return queue;
}

std::vector<FgAbGroup> abelian_groups_of_order(long n) {
  std::vector<FgAbGroup> out;
  std::vector<Integer> chain;
  std::function<void(long, long)> build = [&](long smallest, long remaining) {
    if (remaining == 1) {
      out.emplace_back(0, chain);
      return;
    }
    for (long d = smallest; d <= remaining; d += smallest) {
      if (d < 2 || remaining % d != 0) continue;
      const long rest = remaining / d;
      if (rest != 1 && rest % d != 0) continue;
      chain.emplace_back(d);
      build(d, rest);
      chain.pop_back();
    }
  };
  build(1, n);
  return out;
}

std::vector<FgAbGroup> extension_candidates(const FgAbGroup& sub, const FgAbGroup& quot) {
  if (!sub.is_finite() || !quot.is_finite())
    throw InvalidArgument("brute-force extension oracle needs finite groups");
  const long n = static_cast<long>(sub.torsion_order().get_si() * quot.torsion_order().get_si());
  const auto sub_order = static_cast<std::size_t>(sub.torsion_order().get_si());
  std::vector<FgAbGroup> out;
  for (const auto& x : abelian_groups_of_order(n)) {
    const FiniteGroup g = explicit_group(x);
    for (const auto& h : all_subgroups(g)) {
      if (count(h) != sub_order) continue;
      if (type_of(g, h) == sub && quotient_type(g, h) == quot) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

MapCounts count_kernel_image(const FgAbGroup& domain, const FgAbGroup& codomain,
                             const IntMatrix& matrix) {
  const FiniteGroup g = explicit_group(domain);
  std::set<std::vector<Integer>> images;
  MapCounts counts;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto coords = g.element(x);
    std::vector<Integer> y(static_cast<std::size_t>(codomain.generator_count()), Integer(0));
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
      Integer sum = 0;
      for (Eigen::Index j = 0; j < matrix.cols(); ++j)
        sum += matrix(i, j) * coords[static_cast<std::size_t>(j)];
      const Integer e = codomain.generator_order(i);
      y[static_cast<std::size_t>(i)] = floor_mod(sum, e);
    }
    if (std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; })) ++counts.kernel;
    images.insert(std::move(y));
  }
  counts.image = images.size();
  return counts;
}

FiniteGroup explicit_group(const FgAbGroup& g) {
  if (!g.is_finite()) throw InvalidArgument("explicit groups must be finite");
  std::vector<long> moduli;
  for (const auto& d : g.invariant_factors()) moduli.push_back(d.get_si());
  return FiniteGroup(std::move(moduli));
}

}  // namespace ghg::oracle
