#include "ghg/abelian_group.hpp"

#include "ghg/errors.hpp"
#include "ghg/smith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ghg {

Presentation::Presentation(Eigen::Index generator_count, IntMatrix relation_rows)
    : generators(generator_count), relations(std::move(relation_rows)) {
  if (generator_count < 0) throw InvalidArgument("presentation: negative generator count");
  if (relations.rows() == 0 && relations.cols() != generators) relations.resize(0, generators);
  if (relations.cols() != generators)
    throw InvalidArgument("presentation: relation matrix has " +
                          std::to_string(relations.cols()) + " columns for " +
                          std::to_string(generators) + " generators");
}

// ---------------------------------------------------------------- FgAbGroup

FgAbGroup::FgAbGroup(std::size_t rank, std::vector<Integer> invariant_factors)
    : rank_(rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw InvalidArgument("invariant factor " + factors_[i].get_str() + " is below 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw InvalidArgument("invariant factors " + factors_[i].get_str() + ", " +
                            factors_[i + 1].get_str() + " break the divisibility chain");
  }
}

FgAbGroup FgAbGroup::cyclic(const Integer& order) {
  if (order == 0) return free(1);
  if (abs(order) == 1) return {};
  return FgAbGroup(0, {Integer(abs(order))});
}

Integer FgAbGroup::generator_order(Eigen::Index i) const {
  if (i < 0 || i >= generator_count()) throw InvalidArgument("generator index out of range");
  auto idx = static_cast<std::size_t>(i);
  return idx < rank_ ? Integer(0) : factors_[idx - rank_];
}

Integer FgAbGroup::torsion_order() const {
  Integer order = 1;
  for (const auto& d : factors_) order *= d;
  return order;
}

std::string FgAbGroup::name() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank_ > 0) {
    out << "Z";
    if (rank_ > 1) out << '^' << rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    if (!first) out << " + ";
    out << "Z/" << d.get_str();
    first = false;
  }
  return out.str();
}

bool canonical_less(const FgAbGroup& a, const FgAbGroup& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return std::lexicographical_compare(
      a.invariant_factors().begin(), a.invariant_factors().end(),
      b.invariant_factors().begin(), b.invariant_factors().end(),
      [](const Integer& x, const Integer& y) { return x < y; });
}

// ------------------------------------------------------------- GroupElement

IntVector reduce_coordinates(const FgAbGroup& group, IntVector coordinates) {
  if (coordinates.size() != group.generator_count())
    throw InvalidArgument("element of " + group.name() + " needs " +
                          std::to_string(group.generator_count()) + " coordinates, got " +
                          std::to_string(coordinates.size()));
  for (Eigen::Index i = static_cast<Eigen::Index>(group.rank()); i < coordinates.size(); ++i)
    coordinates(i) = floor_mod(coordinates(i), group.generator_order(i));
  return coordinates;
}

GroupElement::GroupElement(FgAbGroup group, IntVector coordinates)
    : group_(std::move(group)), coords_(reduce_coordinates(group_, std::move(coordinates))) {}

GroupElement::GroupElement(FgAbGroup group, const std::vector<long>& coordinates)
    : group_(std::move(group)) {
  IntVector v(static_cast<Eigen::Index>(coordinates.size()));
  for (std::size_t i = 0; i < coordinates.size(); ++i) v(static_cast<Eigen::Index>(i)) = coordinates[i];
  coords_ = reduce_coordinates(group_, std::move(v));
}

GroupElement GroupElement::zero(const FgAbGroup& group) {
  return GroupElement(group, zero_vector(group.generator_count()));
}

GroupElement GroupElement::generator(const FgAbGroup& group, Eigen::Index i) {
  IntVector v = zero_vector(group.generator_count());
  if (i < 0 || i >= v.size()) throw InvalidArgument("generator index out of range");
  v(i) = 1;
  return GroupElement(group, std::move(v));
}

Integer GroupElement::order() const {
  Integer result = 1;
  for (Eigen::Index i = 0; i < coords_.size(); ++i) {
    if (coords_(i) == 0) continue;
    Integer d = group_.generator_order(i);
    if (d == 0) return 0;
    result = lcm(result, Integer(d / gcd(d, coords_(i))));
  }
  return result;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (!(group_ == other.group_)) throw InvalidArgument("adding elements of different groups");
  return GroupElement(group_, IntVector(coords_ + other.coords_));
}

GroupElement GroupElement::operator-() const {
  return GroupElement(group_, IntVector(-coords_));
}

GroupElement operator*(const Integer& n, const GroupElement& x) {
  return GroupElement(x.group_, IntVector(n * x.coords_));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.group_ == b.group_ && a.coords_ == b.coords_;
}

// ------------------------------------------------------------- Homomorphism

bool is_well_defined(const FgAbGroup& domain, const FgAbGroup& codomain,
                     const IntMatrix& matrix) {
  if (matrix.rows() != codomain.generator_count() || matrix.cols() != domain.generator_count())
    return false;
  for (Eigen::Index j = static_cast<Eigen::Index>(domain.rank()); j < matrix.cols(); ++j) {
    const Integer d = domain.generator_order(j);
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
      const Integer image = d * matrix(i, j);
      const Integer e = codomain.generator_order(i);
      if (e == 0 ? image != 0 : image % e != 0) return false;
    }
  }
  return true;
}

Homomorphism::Homomorphism(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.generator_count() ||
      matrix_.cols() != domain_.generator_count())
    throw InvalidArgument("homomorphism " + domain_.name() + " -> " + codomain_.name() +
                          " needs a " + std::to_string(codomain_.generator_count()) + "x" +
                          std::to_string(domain_.generator_count()) + " matrix, got " +
                          std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
  if (!is_well_defined(domain_, codomain_, matrix_))
    throw IllDefinedMap("matrix does not define a homomorphism " + domain_.name() + " -> " +
                        codomain_.name());
  for (Eigen::Index j = 0; j < matrix_.cols(); ++j)
    matrix_.col(j) = reduce_coordinates(codomain_, matrix_.col(j));
}

Homomorphism Homomorphism::zero(const FgAbGroup& domain, const FgAbGroup& codomain) {
  return Homomorphism(domain, codomain,
                      zero_matrix(codomain.generator_count(), domain.generator_count()));
}

Homomorphism Homomorphism::identity(const FgAbGroup& group) {
  return Homomorphism(group, group, identity_matrix(group.generator_count()));
}

GroupElement Homomorphism::operator()(const GroupElement& x) const {
  if (!(x.group() == domain_)) throw InvalidArgument("element is not in the domain");
  return GroupElement(codomain_, IntVector(matrix_ * x.coordinates()));
}

Homomorphism Homomorphism::operator-() const {
  return Homomorphism(domain_, codomain_, IntMatrix(-matrix_));
}

bool operator==(const Homomorphism& a, const Homomorphism& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.matrix_ == b.matrix_;
}

// ------------------------------------------------------------ canonical form

CanonicalForm canonical_form(const Presentation& presentation) {
  const Eigen::Index g = presentation.generators;
  const auto snf = smith_normal_form(presentation.relations);

  // x -> V^T x carries Z^g / rowspan(R) onto Z^g / rowspan(D).
  std::vector<Eigen::Index> free_positions;
  std::vector<Eigen::Index> torsion_positions;
  std::vector<Integer> factors;
  const Eigen::Index diagonal = std::min(snf.D.rows(), snf.D.cols());
  for (Eigen::Index i = 0; i < g; ++i) {
    const Integer d = i < diagonal ? snf.D(i, i) : Integer(0);
    if (d == 0) {
      free_positions.push_back(i);
    } else if (d > 1) {
      torsion_positions.push_back(i);
      factors.push_back(d);
    }
  }

  std::vector<Eigen::Index> order = free_positions;
  order.insert(order.end(), torsion_positions.begin(), torsion_positions.end());
  const auto n = static_cast<Eigen::Index>(order.size());

  CanonicalForm form{FgAbGroup(free_positions.size(), std::move(factors)), IntMatrix(n, g),
                     IntMatrix(g, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    form.to_canonical.row(k) = snf.V.col(order[static_cast<std::size_t>(k)]).transpose();
    form.from_canonical.col(k) = snf.V_inverse.row(order[static_cast<std::size_t>(k)]).transpose();
  }
  return form;
}

FgAbGroup canonicalize(const Presentation& presentation) {
  return canonical_form(presentation).group;
}

Presentation presentation_of(const FgAbGroup& group) {
  const Eigen::Index g = group.generator_count();
  const auto t = static_cast<Eigen::Index>(group.invariant_factors().size());
  IntMatrix relations = zero_matrix(t, g);
  for (Eigen::Index k = 0; k < t; ++k)
    relations(k, static_cast<Eigen::Index>(group.rank()) + k) =
        group.invariant_factors()[static_cast<std::size_t>(k)];
  return Presentation(g, std::move(relations));
}

CanonicalForm direct_sum_form(const std::vector<FgAbGroup>& summands) {
  Eigen::Index generators = 0;
  Eigen::Index relations = 0;
  for (const auto& s : summands) {
    generators += s.generator_count();
    relations += static_cast<Eigen::Index>(s.invariant_factors().size());
  }
  IntMatrix block = zero_matrix(relations, generators);
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  for (const auto& s : summands) {
    const auto p = presentation_of(s);
    block.block(row, col, p.relations.rows(), p.relations.cols()) = p.relations;
    row += p.relations.rows();
    col += p.generators;
  }
  return canonical_form(Presentation(generators, std::move(block)));
}

FgAbGroup direct_sum(const FgAbGroup& g, const FgAbGroup& h) {
  return direct_sum_form({g, h}).group;
}

// -------------------------------------------------------------- decomposition

IntMatrix integer_nullspace(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  const Eigen::Index r = snf.rank();
  return snf.V.rightCols(a.cols() - r);
}

namespace {

// Column-relation matrix of a canonical group: one column d_i * e_i per
// invariant factor.
IntMatrix torsion_relation_columns(const FgAbGroup& group) {
  return presentation_of(group).relations.transpose();
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  IntMatrix out(left.rows(), left.cols() + right.cols());
  out.leftCols(left.cols()) = left;
  out.rightCols(right.cols()) = right;
  return out;
}

}  // namespace

HomDecomposition hom_decompose(const Homomorphism& f) {
  const FgAbGroup& domain = f.domain();
  const FgAbGroup& codomain = f.codomain();
  const Eigen::Index a = domain.generator_count();
  const Eigen::Index b = codomain.generator_count();
  const IntMatrix& M = f.matrix();
  const IntMatrix domain_rel = torsion_relation_columns(domain);
  const IntMatrix codomain_rel = torsion_relation_columns(codomain);

  HomDecomposition out;

  // coker = Z^b / <columns of M and codomain relations>
  out.cokernel = canonicalize(Presentation(b, hstack(M, codomain_rel).transpose()));

  // Preimage lattice L = { x in Z^a : M x in span(codomain relations) },
  // read off the integer kernel of [M | -N_H].
  const IntMatrix null = integer_nullspace(hstack(M, IntMatrix(-codomain_rel)));
  const IntMatrix preimage_gens = null.topRows(a);

  // im = Z^a / L
  out.image = canonicalize(Presentation(a, preimage_gens.transpose()));

  // ker = L / span(domain relations). Pick a basis of L via the SNF of its
  // generator rows, then write the domain relations in that basis.
  const auto snf = smith_normal_form(IntMatrix(preimage_gens.transpose()));
  const Eigen::Index r = snf.rank();
  const IntMatrix coords = snf.V.transpose() * domain_rel;
  IntMatrix in_basis(r, domain_rel.cols());
  for (Eigen::Index j = 0; j < domain_rel.cols(); ++j) {
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
      if (i < r) {
        if (coords(i, j) % snf.D(i, i) != 0)
          throw IllDefinedMap("domain relation outside the preimage lattice");
        in_basis(i, j) = coords(i, j) / snf.D(i, i);
      } else if (coords(i, j) != 0) {
        throw IllDefinedMap("domain relation outside the preimage lattice");
      }
    }
  }
  out.kernel = canonicalize(Presentation(r, in_basis.transpose()));
  return out;
}

std::size_t tensor_q(const FgAbGroup& group) { return group.rank(); }

bool is_isomorphic(const FgAbGroup& g, const FgAbGroup& h) { return g == h; }

std::vector<GroupElement> enumerate_elements(const FgAbGroup& group, std::size_t bound) {
  if (!group.is_finite())
    throw CapacityExceeded("cannot enumerate the infinite group " + group.name());
  const Integer order = group.torsion_order();
  if (order > Integer(static_cast<unsigned long>(bound)))
    throw CapacityExceeded("group " + group.name() + " has order " + order.get_str() +
                           " above the enumeration bound " + std::to_string(bound));

  const auto& factors = group.invariant_factors();
  const Eigen::Index t = static_cast<Eigen::Index>(factors.size());
  std::vector<GroupElement> out;
  out.reserve(order.get_ui());
  IntVector digits = zero_vector(t);
  for (;;) {
    out.emplace_back(group, digits);
    Eigen::Index k = t - 1;
    while (k >= 0) {
      digits(k) += 1;
      if (digits(k) < factors[static_cast<std::size_t>(k)]) break;
      digits(k) = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace ghg
