#pragma once

// Leibniz algebras sl_n + I built from an irreducible right sl_n-module I,
// their block-triangular automorphisms, and the local-automorphism decision.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "locaut/liecore.hpp"
#include "locaut/localaut.hpp"
#include "locaut/sln.hpp"

namespace locaut {

/// v . b = R(b) v for every basis element b of sl_n, in model basis order.
struct RightModule {
  std::string name;
  std::size_t n = 2;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  /// R(g) for an arbitrary coordinate vector g of sl_n.
  Matrix act(const Vector& g) const;
};

RightModule build_module_sl2(std::size_t m);
RightModule build_module_natural(const SlnModel& model);
RightModule build_module_adjoint(const SlnModel& model);

struct RightModuleViolation {
  std::size_t a = 0, b = 0;
  Matrix defect;  // R([b_a, b_b]) - (R(b_b) R(b_a) - R(b_a) R(b_b))
};
std::optional<RightModuleViolation> check_right_module_law(const SlnModel& model, const RightModule& module);
/// The commutant {T : T R(b) = R(b) T} is one-dimensional.
bool is_irreducible(const RightModule& module);

/// Action b -> R(phi(b)); `phi` is a coordinate matrix on sl_n.
RightModule twist_module(const RightModule& module, const Matrix& phi);
/// Invertible T with T R1(b) = R2(b) T for all b, i.e. T(v.b) = T(v).b.
std::optional<Matrix> module_isomorphism(const RightModule& m1, const RightModule& m2);

class SemidirectLeibniz {
 public:
  SemidirectLeibniz(SlnModel model, RightModule module);

  const SlnModel& model() const { return model_; }
  const RightModule& module() const { return module_; }
  const StructureAlgebra& algebra() const { return algebra_; }
  std::size_t s_dim() const { return model_.dim(); }
  std::size_t i_dim() const { return module_.dim; }
  std::size_t dim() const { return s_dim() + i_dim(); }

  Vector embed(const Vector& g, const Vector& v) const;
  Vector s_part(const Vector& x) const;
  Vector i_part(const Vector& x) const;
  /// Coordinate subspace spanned by the module basis.
  Subspace module_subspace() const;

 private:
  SlnModel model_;
  RightModule module_;
  StructureAlgebra algebra_;
};

/// Throws DimensionMismatch when the module does not act on this model.
SemidirectLeibniz build_semidirect(const SlnModel& model, const RightModule& module);

/// I is nonzero, sl_n acts nontrivially and I is irreducible.
bool is_simple_leibniz(const SemidirectLeibniz& L);

/// [[S, 0], [SI, I]] in block form.
struct BlockMap {
  Matrix S;
  Matrix SI;
  Matrix I;

  Matrix full() const;
  static BlockMap from_full(const SemidirectLeibniz& L, const Matrix& m);
};
Vector apply(const SemidirectLeibniz& L, const BlockMap& map, const Vector& x);
BlockMap compose(const BlockMap& first, const BlockMap& second);
std::optional<BlockMap> inverse(const BlockMap& map);
bool is_automorphism(const SemidirectLeibniz& L, const BlockMap& map);

struct WeightSpace {
  /// Values v . h_k = weight[k] v on the Cartan generators h_k.
  std::vector<Scalar> weight;
  Subspace vectors;
};
/// Simultaneous eigenspaces of the Cartan action. Throws std::logic_error
/// when the action is not diagonalizable with integral eigenvalues.
std::vector<WeightSpace> weight_decomposition(const SemidirectLeibniz& L);
std::vector<Scalar> weight_of(const SemidirectLeibniz& L, const Vector& v);

/// Joint kernel of the positive root actions, first nonzero coordinate 1.
/// Throws std::logic_error if that kernel is not a line.
Vector highest_weight_vector(const SemidirectLeibniz& L);

/// Phi_I is an isomorphism I -> I^{Phi_S}; Phi_SI = omega * theta o Phi_S where
/// theta: S -> I is a module isomorphism from the adjoint module, or 0 when
/// none exists. nullopt means Phi_S does not extend.
std::optional<BlockMap> extend_automorphism(const SemidirectLeibniz& L, const CanonicalShape& phi_s,
                                            const Scalar& omega = Scalar(0));

namespace leibniz_cert {
struct RestrictionNotLocal {
  Obstruction obstruction;
};
struct NotInjective {
  Vector kernel_vector;
};
/// [z, z] = 0 but [Delta z, Delta z] != 0.
struct BracketSquare {
  std::string site;
  Vector z;
  Vector square;
};
/// [[z, z], z] = c [z, z] but [[Dz, Dz], Dz] - c [Dz, Dz] = defect != 0.
struct SquareEigen {
  std::string site;
  Vector z;
  Scalar c;
  Vector defect;
};
/// The reduced map sends h0 or y_beta outside the weight spaces that any
/// automorphism agreeing with it at h0 + y_beta could reach.
struct WeightSupport {
  std::string reason;
  CanonicalShape reduction;
  Vector image;
};
struct AntiRestriction {
  CanonicalShape shape;
};
struct HomomorphismFailure {
  BracketFailure failure;
};
}  // namespace leibniz_cert

using LeibnizCertificate =
    std::variant<leibniz_cert::RestrictionNotLocal, leibniz_cert::NotInjective, leibniz_cert::BracketSquare,
                 leibniz_cert::SquareEigen, leibniz_cert::WeightSupport, leibniz_cert::AntiRestriction,
                 leibniz_cert::HomomorphismFailure>;
std::string certificate_name(const LeibnizCertificate& c);
/// Bracket-square and square-eigen certificates are checked by a bracket
/// identity alone; the rest lean on the classification argument.
bool is_direct_certificate(const LeibnizCertificate& c);

enum class LeibnizVerdictKind { LocalAut, NotLocal };
std::string to_string(LeibnizVerdictKind k);

struct LeibnizVerdict {
  LeibnizVerdictKind kind = LeibnizVerdictKind::NotLocal;
  std::optional<Verdict> restriction;
  /// Shape of Delta_S, whose conjugator is used to reduce Delta.
  std::optional<CanonicalShape> reduction;
  std::optional<LeibnizCertificate> certificate;
};

LeibnizVerdict decide_local_aut_leibniz(const SemidirectLeibniz& L, const BlockMap& delta);

std::optional<leibniz_cert::BracketSquare> bracket_square_obstruction(const SemidirectLeibniz& L,
                                                                      const BlockMap& delta, const Vector& z);
std::optional<leibniz_cert::SquareEigen> square_eigen_obstruction(const SemidirectLeibniz& L, const BlockMap& delta,
                                                                  const Vector& z);
/// Recomputes a direct certificate from the structure constants.
bool reverify(const SemidirectLeibniz& L, const BlockMap& delta, const LeibnizCertificate& c);

struct DiagonalConjugatorResult {
  std::optional<Matrix> a;
  std::string problem;
};
/// For an automorphism shape with Phi(h0) = -h0, recovers a diagonal a with
/// Phi(x) = -a x^t a^-1.
DiagonalConjugatorResult diagonal_conjugator_check(const SlnModel& model, const CanonicalShape& phi, const Matrix& h0);

struct ScalingResult {
  std::optional<Scalar> lambda;
  std::optional<Vector> image;
  std::string problem;
};
/// For an automorphism fixing h0, Phi(y_beta) = lambda y_beta.
ScalingResult highest_weight_scaling_check(const SemidirectLeibniz& L, const BlockMap& phi, const Matrix& h0);

}  // namespace locaut
