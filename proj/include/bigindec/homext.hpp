#pragma once

#include <optional>
#include <vector>

#include "bigindec/linalg.hpp"
#include "bigindec/module.hpp"

namespace bigindec {

/// Hom(F, N) for a free module F with the given degrees, as a direct sum of
/// shifted copies of N. Slot (i, k) = i * num_generators(N) + k holds the
/// image coefficient of generator k of N for basis vector i of F.
GradedModule hom_free_module(const std::vector<std::int32_t>& free_degrees, const GradedModule& n);
/// Matrix of Hom(d, N): Hom(F, N) -> Hom(G, N) for d : G -> F.
PolyMatrix hom_free_map(const PolyMatrix& d, const GradedModule& n);

/// Flattened coordinates of a map F -> N (matrix rows = N generators).
ModVec flatten_map(const PolyMatrix& matrix, std::int32_t shift, const GradedModule& n);
PolyMatrix unflatten_map(const ModVec& flat, const std::vector<std::int32_t>& free_degrees, std::int32_t shift,
                         const GradedModule& n);

struct HomModule {
  GradedModule source;
  GradedModule target;
  GradedModule module;  // presentation of Hom(M, N)
  GradedModule flat;    // Hom(F0, N)
  Subquotient sub;      // generators of the kernel inside flat

  std::size_t size() const noexcept { return module.num_generators(); }
  ModuleMap decode(std::size_t j) const;
  /// Element in generator coordinates of `module`, homogeneous of degree `shift`.
  ModuleMap decode(const ModVec& element, std::int32_t shift) const;
  /// Coordinates of a homomorphism in the generators of `module`.
  ModVec encode(const ModuleMap& f) const;
};

HomModule hom_module(const GradedModule& m, const GradedModule& n);

/// End(M) with multiplication on generators: table[a][b] = x_a * x_b = x_a after x_b.
struct EndAlgebra {
  HomModule hom;
  std::vector<std::vector<ModVec>> table;
  ModVec unit;

  std::size_t h() const noexcept { return hom.size(); }
  ModVec multiply(const ModVec& x, const ModVec& y) const;
};

EndAlgebra end_algebra(const GradedModule& m);
/// Checks associativity on all generator triples.
bool end_algebra_associative(const EndAlgebra& e);

/// An element of Ext^1(M, N) as a cocycle F1 -> N (F1 = relation columns of M)
/// that kills the second syzygies; `degree` is its internal degree.
struct ExtClass {
  GradedModule source;
  GradedModule target;
  PolyMatrix cocycle;
  std::int32_t degree = 0;

  static ExtClass make(GradedModule m, GradedModule n, PolyMatrix cocycle, std::int32_t degree,
                       bool validate = true);
  static ExtClass zero(const GradedModule& m, const GradedModule& n, std::int32_t degree = 0);
  bool is_cocycle() const;
  /// The same matrices viewed over M(-d): a class of degree `degree - d`.
  ExtClass regraded(std::int32_t d) const;
};

ExtClass add(const ExtClass& a, const ExtClass& b);
ExtClass scale(const ExtClass& a, Coeff c);

/// Pullback along f : M' -> M by chain-map lifting, returning a class over M'.
ExtClass ext_action(const ExtClass& alpha, const ModuleMap& f);
/// Lift of f to F1' -> F1 (the restriction of a chain map over f).
PolyMatrix lift_to_relations(const ModuleMap& f);

/// Difference is a coboundary u o d1 plus N-relations.
bool ext_class_equal(const ExtClass& a, const ExtClass& b);

/// Ext^1(M, N) for N of finite length as a k-vector space with an explicit
/// basis of cocycles (deterministic: degree ascending, then the order of the
/// standard-monomial coordinates).
class ExtSpace {
 public:
  ExtSpace(GradedModule m, GradedModule n);

  const GradedModule& source() const noexcept { return m_; }
  const GradedModule& target() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<ExtClass>& basis() const noexcept { return basis_; }
  std::int32_t min_degree() const noexcept { return dmin_; }
  std::int32_t max_degree() const noexcept { return dmax_; }

  /// Coordinates in the basis; throws on a non-cocycle.
  std::vector<Coeff> coordinates(const ExtClass& c) const;
  bool is_zero(const ExtClass& c) const;

 private:
  struct Piece {
    std::int32_t degree;
    std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> slot_basis;  // per F1 column
    std::vector<std::size_t> offsets;
    std::size_t size = 0;
    std::size_t first_class = 0;
    std::size_t num_classes = 0;
    DenseMatrix reps_then_boundaries;  // columns: class reps, then a boundary basis
  };

  std::vector<Coeff> piece_vector(const Piece& p, const PolyMatrix& cocycle) const;
  const Piece* find_piece(std::int32_t d) const;

  GradedModule m_, n_;
  std::vector<Piece> pieces_;
  std::vector<ExtClass> basis_;
  std::int32_t dmin_ = 0, dmax_ = -1;
};

/// Ext^i(M, N) as a graded module from a minimal free resolution of M.
struct ExtModule {
  int i = 0;
  Resolution resolution;
  GradedModule module;
  GradedModule flat;  // Hom(F_i, N)
  Subquotient sub;
  std::optional<ExtSpace> space;  // i = 1 and N of finite length

  /// i = 1 only: the cocycle of a generator of `module`.
  ExtClass decode(std::size_t j, const GradedModule& n) const;
};

ExtModule ext_module(const GradedModule& m, const GradedModule& n, int i);
/// Ext^i(M, N) == 0, computed from the given resolution (length >= i + 1).
bool ext_vanishes(const Resolution& res, const GradedModule& n, int i);

/// Minimal s with m^s Ext^1(M, Omega^1 M) = 0.
int annihilator_exponent(const GradedModule& m);
/// True iff every monomial of standard degree s kills every generator of e.
bool killed_by_power(const GradedModule& e, int s);

/// Degree-zero homomorphisms M -> N as a k-vector space.
class HomDegree0 {
 public:
  HomDegree0(GradedModule m, GradedModule n);
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<ModuleMap>& basis() const noexcept { return basis_; }
  /// Coordinates of a degree-0 homomorphism (columns normal-formed in N).
  std::vector<Coeff> coordinates(const ModuleMap& f) const;
  ModuleMap combination(const std::vector<Coeff>& c) const;
  /// Coordinates of the generator images in the standard-monomial bases.
  std::vector<Coeff> raw_vector(const ModuleMap& f) const;
  std::size_t raw_size() const noexcept { return raw_size_; }
  const DenseMatrix& raw_basis() const noexcept { return raw_basis_; }

 private:
  GradedModule m_, n_;
  std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> slot_basis_;
  std::vector<std::size_t> offsets_;
  std::size_t raw_size_ = 0;
  DenseMatrix raw_basis_;  // rows = basis vectors
  std::vector<std::size_t> free_columns_;
  std::vector<ModuleMap> basis_;
};

}  // namespace bigindec
