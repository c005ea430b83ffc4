#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arex/fp.hpp"

namespace arex {

enum class ErrorCode {
  NonAdmissible,
  CapExceeded,
  AlgebraMismatch,
  NotIndecomposable,
  IsProjective,
  IsInjective,
  BoundExceeded,
  VerificationFailed,
  UnknownSummand,
  NonIntegralMultiplicity,
  IdentityViolated,
  NonCommuting,
  ClassMismatch,
  NoRelativeARFound,
  NotInSyzygyCategory,
  Malformed,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Quiver with monomial relations over F_p. Relations are paths given by
/// arrow names, composable left to right.
struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::string>> relations;
  std::int64_t field_char = 2;
};

/// A path as a sequence of arrow indices; length-zero paths are the vertex
/// idempotents.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;
  std::size_t length() const { return arrows.size(); }
};

/// A bound quiver algebra kQ/I with I generated by paths. Cheap to copy;
/// the opposite algebra shares storage.
class Algebra {
 public:
  const QuiverPresentation& presentation() const;
  const PrimeField& field() const;
  std::size_t num_vertices() const;
  std::size_t num_arrows() const;
  const Arrow& arrow(std::size_t i) const;
  const std::vector<std::vector<std::size_t>>& relations() const;

  const std::vector<Path>& path_basis() const;
  std::size_t dimension() const { return path_basis().size(); }
  /// Indices into path_basis() of the nonzero paths from v to w.
  const std::vector<std::size_t>& paths_between(std::size_t v, std::size_t w) const;
  std::optional<std::size_t> path_index(std::size_t source, const std::vector<std::size_t>& arrows) const;

  /// Same vertices, every arrow reversed, relations read backwards.
  Algebra opposite() const;

  std::string vertex_label(std::size_t v) const;

  struct Data;

 private:
  friend Algebra build_algebra(const QuiverPresentation&, std::size_t);
  std::shared_ptr<const Data> self_;
  std::shared_ptr<const Data> op_;
};

/// Enumerates the path basis breadth first. Throws NonAdmissible if a cycle
/// survives the relations, CapExceeded past `cap` basis paths.
Algebra build_algebra(const QuiverPresentation& p, std::size_t cap = 10000);

/// A finite-dimensional representation: one vector space per vertex, one
/// matrix of shape dims[target] x dims[source] per arrow.
struct ModuleRep {
  std::vector<Eigen::Index> dims;
  std::vector<FpMatrix> action;

  Eigen::Index total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

bool operator==(const ModuleRep& a, const ModuleRep& b);

ModuleRep zero_module(const Algebra& a);
ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);
ModuleRep direct_sum(const std::vector<ModuleRep>& ms, const Algebra& a);

/// Checks shapes against the quiver and that every relation acts as zero.
void validate_module(const Algebra& a, const ModuleRep& m);

/// Matrix by which a path acts: the arrow matrices multiplied right to left.
FpMatrix path_action(const Algebra& a, const ModuleRep& m, const Path& p);

struct ModMorphism {
  ModuleRep source;
  ModuleRep target;
  std::vector<FpMatrix> blocks;  // per vertex, target.dims[v] x source.dims[v]
};

ModMorphism identity_morphism(const ModuleRep& m);
ModMorphism zero_morphism(const ModuleRep& m, const ModuleRep& n);
/// g after f.
ModMorphism compose(const PrimeField& f, const ModMorphism& g, const ModMorphism& h);
ModMorphism add(const PrimeField& f, const ModMorphism& a, const ModMorphism& b);
ModMorphism scale(const PrimeField& f, std::int64_t c, const ModMorphism& a);
ModMorphism direct_sum(const ModMorphism& a, const ModMorphism& b);
bool is_morphism(const Algebra& a, const ModMorphism& h);
bool is_zero(const ModMorphism& h);
bool is_injective_map(const PrimeField& f, const ModMorphism& h);
bool is_surjective_map(const PrimeField& f, const ModMorphism& h);
bool is_isomorphism(const PrimeField& f, const ModMorphism& h);

/// Morphism into a direct sum n_1 ⊕ n_2 ⊕ ... from its components.
ModMorphism column_morphism(const ModuleRep& source, const std::vector<ModMorphism>& parts,
                            const ModuleRep& target);
/// Morphism out of a direct sum m_1 ⊕ m_2 ⊕ ... from its components.
ModMorphism row_morphism(const ModuleRep& source, const std::vector<ModMorphism>& parts,
                         const ModuleRep& target);

/// Coordinates of Hom spaces: the blocks of a morphism stacked vertex by
/// vertex, each block in column-major order.
FpVector flatten(const ModMorphism& h);
ModMorphism unflatten(const ModuleRep& m, const ModuleRep& n, const FpVector& coords);
Eigen::Index hom_ambient_dim(const ModuleRep& m, const ModuleRep& n);

/// Hom(M, N) as a subspace of its coordinate space.
struct HomSpace {
  ModuleRep source;
  ModuleRep target;
  FpMatrix basis;  // columns, in hom coordinates

  Eigen::Index dim() const { return basis.cols(); }
  Eigen::Index ambient_dim() const { return basis.rows(); }
  ModMorphism element(const FpVector& coords) const { return unflatten(source, target, coords); }
  ModMorphism basis_element(Eigen::Index i) const { return element(basis.col(i)); }
  /// Combination of basis elements with the given coefficients.
  ModMorphism combination(const PrimeField& f, const FpVector& coeffs) const;
};

/// Solution space of the commuting-square system, basis in rref order.
HomSpace hom_space(const Algebra& a, const ModuleRep& m, const ModuleRep& n);
std::vector<ModMorphism> hom_basis(const Algebra& a, const ModuleRep& m, const ModuleRep& n);

/// Sub-representation spanned at each vertex by the given columns.
struct Subobject {
  ModuleRep module;
  ModMorphism inclusion;
};
struct Quotient {
  ModuleRep module;
  ModMorphism projection;
  std::vector<FpMatrix> lifts;  // per vertex, columns lifting the quotient basis
};

/// `spans[v]` must be a submodule; columns need not be independent.
Subobject submodule(const Algebra& a, const ModuleRep& m, const std::vector<FpMatrix>& spans);
Quotient quotient_module(const Algebra& a, const ModuleRep& m, const std::vector<FpMatrix>& spans);
Subobject kernel_of(const Algebra& a, const ModMorphism& h);
Quotient cokernel_of(const Algebra& a, const ModMorphism& h);
Subobject image_of(const Algebra& a, const ModMorphism& h);

/// rad M: the sum of the images of the arrows.
std::vector<FpMatrix> radical_spans(const Algebra& a, const ModuleRep& m);
/// soc M: vectors killed by every arrow.
std::vector<FpMatrix> socle_spans(const Algebra& a, const ModuleRep& m);

ModuleRep simple_module(const Algebra& a, std::size_t v);

/// Module over a.opposite(): every block transposed.
ModuleRep dual(const ModuleRep& m);
ModMorphism dual(const ModMorphism& h);

std::string dimension_vector_string(const ModuleRep& m);

}  // namespace arex
