#include "ghg/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ghg {

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> build = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(n, n);
  return out;
}

namespace {

int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

struct TableauSearch {
  const Partition& outer;
  const Partition& inner;
  const Partition& content;
  std::vector<std::vector<int>> filling;
  std::vector<int> used;

  // Cells in reverse reading order: rows top to bottom, right to left.
  std::vector<std::pair<std::size_t, int>> cells;

  bool run(std::size_t k) {
    if (k == cells.size()) return true;
    auto [r, c] = cells[k];
    const int row_start = part(inner, r);
    const int max_value = static_cast<int>(content.size());
    int upper = max_value;
    // Rows weakly increase left to right; the cell to the right is filled.
    if (c + 1 < outer[r]) upper = std::min(upper, filling[r][static_cast<std::size_t>(c + 1 - row_start)]);
    int lower = 1;
    // Columns strictly increase downwards.
    if (r > 0 && c >= part(inner, r - 1) && c < outer[r - 1])
      lower = filling[r - 1][static_cast<std::size_t>(c - part(inner, r - 1))] + 1;
    for (int v = lower; v <= upper; ++v) {
      auto vi = static_cast<std::size_t>(v - 1);
      if (used[vi] >= content[vi]) continue;
      if (v > 1 && used[vi] + 1 > used[vi - 1]) continue;
      used[vi] += 1;
      filling[r][static_cast<std::size_t>(c - row_start)] = v;
      if (run(k + 1)) return true;
      used[vi] -= 1;
    }
    return false;
  }
};

}  // namespace

bool lr_coefficient_positive(const Partition& outer, const Partition& inner,
                             const Partition& content) {
  if (partition_size(outer) != partition_size(inner) + partition_size(content)) return false;
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;

  TableauSearch search{outer, inner, content, {}, std::vector<int>(content.size(), 0), {}};
  search.filling.resize(outer.size());
  for (std::size_t r = 0; r < outer.size(); ++r) {
    const int start = part(inner, r);
    search.filling[r].assign(static_cast<std::size_t>(outer[r] - start), 0);
    for (int c = outer[r] - 1; c >= start; --c) search.cells.emplace_back(r, c);
  }
  return search.run(0);
}

std::map<Integer, int> factorize(Integer n) {
  std::map<Integer, int> out;
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
  }
  if (n > 1) out[n] += 1;
  return out;
}

Partition primary_type(const FgAbGroup& group, const Integer& p) {
  Partition out;
  for (const auto& d : group.invariant_factors()) {
    int e = 0;
    Integer rest = d;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

FgAbGroup group_from_primary_types(std::size_t rank, const std::map<Integer, Partition>& types) {
  std::size_t length = 0;
  for (const auto& [p, type] : types) length = std::max(length, type.size());
  // Largest invariant factor collects the largest part of every prime.
  std::vector<Integer> factors(length, Integer(1));
  for (const auto& [p, type] : types) {
    for (std::size_t k = 0; k < type.size(); ++k) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(type[k]));
      factors[length - 1 - k] *= power;
    }
  }
  std::vector<Integer> kept;
  for (auto& d : factors)
    if (d > 1) kept.push_back(d);
  return FgAbGroup(rank, std::move(kept));
}

}  // namespace ghg
