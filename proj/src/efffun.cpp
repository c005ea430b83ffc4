#include "arex/efffun.hpp"

#include <algorithm>

namespace arex {

FpVector EffValue::lift(const PrimeField& f, const FpVector& v) const { return f.reduce(complement * v); }

FpVector EffValue::coordinates(const PrimeField& f, const FpVector& hom_coords) const {
  const auto x = solve(f, hstack(complement, image), hom_coords);
  if (!x) throw Error(ErrorCode::VerificationFailed, "vector outside Hom(W, Z)");
  return x->topRows(k_dimension());
}

EffPresentation::EffPresentation(const IndecRegistry& reg, Conflation presenting)
    : reg_(&reg), presenting_(std::move(presenting)) {
  const Algebra& a = reg.algebra();
  const PrimeField& f = a.field();
  values_.reserve(reg.size());
  for (std::size_t w = 0; w < reg.size(); ++w) {
    EffValue v{hom_space(a, reg.module(w), presenting_.z()), {}, {}};
    const FpMatrix img = post_composition_image(f, hom_space(a, reg.module(w), presenting_.y()), presenting_.g);
    v.image = img.cols() == 0 ? FpMatrix(v.hom.ambient_dim(), 0) : column_basis(f, img);
    v.complement = relative_complement(f, v.image, v.hom.basis);
    values_.push_back(std::move(v));
  }
}

const EffValue& evaluate(const EffPresentation& m, std::size_t w) { return m.value(w); }

std::vector<std::size_t> support(const EffPresentation& m) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < m.registry().size(); ++w)
    if (m.value(w).k_dimension() > 0) out.push_back(w);
  return out;
}

int MultiplicityVector::length() const {
  int s = 0;
  for (int m : mults) s += m;
  return s;
}

MultiplicityVector multiplicities(const EffPresentation& m) {
  const IndecRegistry& reg = m.registry();
  MultiplicityVector out{std::vector<int>(reg.size(), 0)};
  for (std::size_t w = 0; w < reg.size(); ++w) {
    const Eigen::Index k = m.value(w).k_dimension(), d = reg.division_degree(w);
    if (k % d != 0)
      throw Error(ErrorCode::NonIntegralMultiplicity,
                  "dim M(" + reg.label(w) + ") = " + std::to_string(k) + " is not a multiple of " + std::to_string(d));
    out.mults[w] = static_cast<int>(k / d);
  }
  return out;
}

MultiplicityVector decompose_into_ar(const IndecRegistry& reg, const Conflation& c) {
  const MultiplicityVector m = multiplicities(EffPresentation(reg, c));
  K0Vector sum{IntVector::Constant(static_cast<Eigen::Index>(reg.size()), BigInt(0))};
  for (std::size_t w = 0; w < reg.size(); ++w) {
    if (m.mults[w] == 0) continue;
    if (reg.is_projective(w))
      throw Error(ErrorCode::IdentityViolated, "cokernel functor is nonzero at the projective " + reg.label(w));
    K0Vector t = ar_class(reg, w);
    for (Eigen::Index i = 0; i < t.coords.size(); ++i) t.coords(i) *= m.mults[w];
    sum = sum + t;
  }
  if (!(sum == class_of(reg, c)))
    throw Error(ErrorCode::IdentityViolated, "class differs from the sum of AR classes weighted by multiplicities");
  return m;
}

EffacementWitness effacement_witness(const EffPresentation& m, std::size_t w, const FpVector& v) {
  const IndecRegistry& reg = m.registry();
  const Algebra& a = reg.algebra();
  const PrimeField& f = a.field();
  const EffValue& val = m.value(w);
  EffacementWitness out{val.hom.element(val.lift(f, v)), {}, false};
  out.pulled_back = pullback(a, m.presenting(), out.phi);
  const ModMorphism& psi = out.pulled_back.conflation.g;
  const ModMorphism composite = compose(f, out.phi, psi);
  out.verified = verify_conflation(a, out.pulled_back.conflation) &&
                 factor_through(a, composite, m.presenting().g).has_value();
  return out;
}

bool is_conflation_morphism(const Algebra& alg, const Conflation& c1, const Conflation& c2,
                            const ConflationMorphism& t) {
  const PrimeField& f = alg.field();
  if (!is_morphism(alg, t.a) || !is_morphism(alg, t.b) || !is_morphism(alg, t.c)) return false;
  if (!(t.a.source == c1.x()) || !(t.a.target == c2.x()) || !(t.b.source == c1.y()) || !(t.b.target == c2.y()) ||
      !(t.c.source == c1.z()) || !(t.c.target == c2.z()))
    return false;
  const ModMorphism d1 = add(f, compose(f, t.b, c1.f), scale(f, -1, compose(f, c2.f, t.a)));
  const ModMorphism d2 = add(f, compose(f, t.c, c1.g), scale(f, -1, compose(f, c2.g, t.b)));
  return is_zero(d1) && is_zero(d2);
}

FpMatrix induced_map(const EffPresentation& m1, const EffPresentation& m2, const ModMorphism& c, std::size_t w) {
  const PrimeField& f = m1.registry().algebra().field();
  const EffValue& v1 = m1.value(w);
  const EffValue& v2 = m2.value(w);
  FpMatrix out(v2.k_dimension(), v1.k_dimension());
  for (Eigen::Index j = 0; j < v1.k_dimension(); ++j)
    out.col(j) = v2.coordinates(f, flatten(compose(f, c, v1.hom.element(v1.complement.col(j)))));
  return out;
}

namespace {

ModMorphism restrict_to_kernels(const Algebra& alg, const Conflation& c1, const Conflation& c2, const ModMorphism& b) {
  const PrimeField& f = alg.field();
  const ModMorphism bf = compose(f, b, c1.f);
  ModMorphism a{c1.x(), c2.x(), {}};
  for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
    const auto s = solve(f, c2.f.blocks[v], bf.blocks[v]);
    if (!s) throw Error(ErrorCode::NonCommuting, "b does not carry X1 into X2");
    a.blocks.push_back(*s);
  }
  return a;
}

}  // namespace

std::optional<ConflationMorphism> lift_to_triple(const Algebra& alg, const Conflation& c1, const Conflation& c2,
                                                 const ModMorphism& c) {
  const auto b = factor_through(alg, compose(alg.field(), c, c1.g), c2.g);
  if (!b) return std::nullopt;
  return ConflationMorphism{restrict_to_kernels(alg, c1, c2, *b), *b, c};
}

ConflationMorphism random_triple(const Algebra& alg, const Conflation& c1, const Conflation& c2,
                                 std::mt19937_64& rng) {
  const PrimeField& f = alg.field();
  const HomSpace hb = hom_space(alg, c1.y(), c2.y());
  const HomSpace hc = hom_space(alg, c1.z(), c2.z());
  const FpMatrix lhs = post_composition_image(f, hb, c2.g);
  const FpMatrix rhs = pre_composition_image(f, hc, c1.g);
  const Eigen::Index rows = hom_ambient_dim(c1.y(), c2.z());
  FpMatrix sys(rows, hb.dim() + hc.dim());
  if (hb.dim() > 0) sys.leftCols(hb.dim()) = lhs;
  if (hc.dim() > 0) sys.rightCols(hc.dim()) = f.reduce(-rhs);
  const FpMatrix sols = kernel(f, sys);
  std::uniform_int_distribution<std::int64_t> coef(0, f.characteristic() - 1);
  FpVector pick = FpVector::Zero(sys.cols());
  for (Eigen::Index j = 0; j < sols.cols(); ++j) pick = f.reduce(pick + coef(rng) * sols.col(j));
  const ModMorphism b = hb.combination(f, pick.head(hb.dim()));
  const ModMorphism c = hc.combination(f, pick.tail(hc.dim()));
  return ConflationMorphism{restrict_to_kernels(alg, c1, c2, b), b, c};
}

KerImCoker ker_im_coker(const EffPresentation& m1, const EffPresentation& m2, const ConflationMorphism& t) {
  const IndecRegistry& reg = m1.registry();
  const Algebra& alg = reg.algebra();
  const PrimeField& f = alg.field();
  const Conflation& c1 = m1.presenting();
  const Conflation& c2 = m2.presenting();
  if (!is_conflation_morphism(alg, c1, c2, t)) throw Error(ErrorCode::NonCommuting, "triple does not commute");

  const BaseChange po = pushout(alg, c1, t.a);
  const Conflation& mid = po.conflation;  // X2 -> E -> Z1
  const ModuleRep& e = mid.y();

  const ModuleRep x2y1 = direct_sum(c2.x(), c1.y());
  const Conflation kc{column_morphism(c1.x(), {scale(f, -1, t.a), c1.f}, x2y1),
                      row_morphism(x2y1, {mid.f, po.comparison}, e)};

  const auto h = extend_along(alg, row_morphism(x2y1, {c2.f, t.b}, c2.y()), kc.g);
  if (!h) throw Error(ErrorCode::VerificationFailed, "no map from the pushout to Y2");
  const ModuleRep y2z1 = direct_sum(c2.y(), c1.z());
  const Conflation cc{column_morphism(e, {*h, mid.g}, y2z1), row_morphism(y2z1, {c2.g, scale(f, -1, t.c)}, c2.z())};

  if (!verify_conflation(alg, kc) || !verify_conflation(alg, mid) || !verify_conflation(alg, cc))
    throw Error(ErrorCode::VerificationFailed, "pushout diagram rows are not exact");
  return KerImCoker{EffPresentation(reg, kc), EffPresentation(reg, mid), EffPresentation(reg, cc)};
}

AdmissibilityReport check_admissible(const IndecRegistry& reg) {
  const Algebra& a = reg.algebra();
  AdmissibilityReport out;
  auto record = [&](const Conflation& c) {
    out.max_length = std::max(out.max_length, multiplicities(EffPresentation(reg, c)).length());
    ++out.presentations;
  };
  for (std::size_t z = 0; z < reg.size(); ++z) {
    if (!reg.is_projective(z)) record(reg.ar_sequence(z));
    for (std::size_t x = 0; x < reg.size(); ++x)
      for (const Conflation& c : ext1_basis(a, reg.module(z), reg.module(x))) record(c);
  }
  return out;
}

CFVerdict check_cf_pair(const IndecRegistry& reg, const Conflation& c1, const Conflation& c2) {
  if (!(class_of(reg, c1) == class_of(reg, c2)))
    throw Error(ErrorCode::ClassMismatch, "conflations have different classes");
  const EffPresentation m1(reg, c1), m2(reg, c2);
  CFVerdict v;
  v.support1 = support(m1);
  v.support2 = support(m2);
  v.length1 = multiplicities(m1).length();
  v.length2 = multiplicities(m2).length();
  v.supports_equal = v.support1 == v.support2;
  v.lengths_equal = v.length1 == v.length2;
  return v;
}

Conflation pad_with_split(const Algebra& alg, const Conflation& c, const ModuleRep& x, const ModuleRep& z) {
  return direct_sum(c, split_conflation(alg, x, z));
}

}  // namespace arex
