#include "arex/groth.hpp"

namespace arex {

K0Vector operator+(const K0Vector& a, const K0Vector& b) {
  if (a.coords.size() != b.coords.size()) throw DimensionMismatch("K0 vectors of different rank");
  K0Vector out{a.coords};
  for (Eigen::Index i = 0; i < out.coords.size(); ++i) out.coords(i) += b.coords(i);
  return out;
}

K0Vector operator-(const K0Vector& a, const K0Vector& b) {
  if (a.coords.size() != b.coords.size()) throw DimensionMismatch("K0 vectors of different rank");
  K0Vector out{a.coords};
  for (Eigen::Index i = 0; i < out.coords.size(); ++i) out.coords(i) -= b.coords(i);
  return out;
}

bool operator==(const K0Vector& a, const K0Vector& b) {
  if (a.coords.size() != b.coords.size()) return false;
  for (Eigen::Index i = 0; i < a.coords.size(); ++i)
    if (a.coords(i) != b.coords(i)) return false;
  return true;
}

K0Vector class_of(const IndecRegistry& reg, const ModuleRep& m) {
  const std::vector<int> counts = reg.summands(m);
  K0Vector out{IntVector(static_cast<Eigen::Index>(counts.size()))};
  for (std::size_t i = 0; i < counts.size(); ++i) out.coords(static_cast<Eigen::Index>(i)) = counts[i];
  return out;
}

K0Vector class_of(const IndecRegistry& reg, const Conflation& c) {
  return class_of(reg, c.x()) - class_of(reg, c.y()) + class_of(reg, c.z());
}

K0Vector ar_class(const IndecRegistry& reg, std::size_t z) { return class_of(reg, reg.ar_sequence(z)); }

namespace {

constexpr std::int64_t kFullExtEnumeration = 4096;

// One class per line of Ext^1(z, x) when there are few, else a basis.
std::vector<FpVector> ext_representatives(const PrimeField& f, const ExtGroup& e) {
  const Eigen::Index d = e.dim();
  std::int64_t count = 1;
  for (Eigen::Index i = 0; i < d && count <= kFullExtEnumeration; ++i) count *= f.characteristic();
  std::vector<FpVector> out;
  if (count > kFullExtEnumeration) {
    for (Eigen::Index j = 0; j < d; ++j) out.push_back(e.classes.col(j));
    return out;
  }
  FpVector c = FpVector::Zero(d);
  for (std::int64_t n = 1; n < count; ++n) {
    std::int64_t r = n;
    for (Eigen::Index i = 0; i < d; ++i, r /= f.characteristic()) c(i) = r % f.characteristic();
    Eigen::Index lead = 0;
    while (c(lead) == 0) ++lead;
    if (c(lead) == 1) out.push_back(f.reduce(e.classes * c));
  }
  return out;
}

}  // namespace

GenLattice ex_lattice(const IndecRegistry& reg) {
  const Algebra& a = reg.algebra();
  std::vector<IntVector> gens;
  for (std::size_t z = 0; z < reg.size(); ++z)
    for (std::size_t x = 0; x < reg.size(); ++x) {
      const ExtGroup e = ext1(a, reg.module(z), reg.module(x));
      for (const FpVector& cl : ext_representatives(a.field(), e))
        gens.push_back(class_of(reg, realize_extension(a, e, cl)).coords);
    }
  return lattice_from_generators(reg.size(), gens);
}

GenLattice ar_lattice(const IndecRegistry& reg) {
  std::vector<IntVector> gens;
  for (std::size_t z = 0; z < reg.size(); ++z)
    if (!reg.is_projective(z)) gens.push_back(ar_class(reg, z).coords);
  return lattice_from_generators(reg.size(), gens);
}

ExArVerdict check_ar_eq_ex(const IndecRegistry& reg) {
  ExArVerdict v;
  v.ar_lattice = ar_lattice(reg);
  v.ex_lattice = ex_lattice(reg);
  v.equal_exact = equal(v.ar_lattice, v.ex_lattice);
  v.equal_rational = equal(saturation(v.ar_lattice), saturation(v.ex_lattice));
  const QuotientInvariants q = quotient_invariants(reg.size(), v.ex_lattice);
  v.k0_free_rank = q.free_rank;
  v.k0_torsion = q.torsion;
  return v;
}

}  // namespace arex
