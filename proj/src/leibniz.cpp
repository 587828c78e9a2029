#include "locaut/leibniz.hpp"

#include <stdexcept>

namespace locaut {

Matrix RightModule::act(const Vector& g) const {
  if (g.size() != action.size()) throw DimensionMismatch("element does not belong to the acting algebra");
  Matrix out(dim, dim);
  for (std::size_t b = 0; b < g.size(); ++b)
    if (!g[b].is_zero()) out += g[b] * action[b];
  return out;
}

RightModule build_module_sl2(std::size_t m) {
  if (m < 1) throw std::invalid_argument("V(m) needs m >= 1");
  const SlnModel model(2);
  const std::size_t d = m + 1;
  // Left action on v_0..v_m, then v.g := -rho(g) v.
  Matrix rho_e(d, d), rho_f(d, d), rho_h(d, d);
  const long ml = static_cast<long>(m);
  for (std::size_t k = 0; k < d; ++k) {
    const long kl = static_cast<long>(k);
    rho_h(k, k) = Scalar(ml - 2 * kl);
    if (k > 0) rho_e(k - 1, k) = Scalar(ml - kl + 1);
    if (k + 1 < d) rho_f(k + 1, k) = Scalar(kl + 1);
  }
  RightModule out{"V(" + std::to_string(m) + ")", 2, d, std::vector<Matrix>(model.dim())};
  out.action[model.root_index(0, 1)] = -rho_e;
  out.action[model.root_index(1, 0)] = -rho_f;
  out.action[model.cartan_index(0)] = -rho_h;
  if (check_right_module_law(model, out)) throw std::logic_error("V(m) violates the right module law");
  return out;
}

RightModule build_module_natural(const SlnModel& model) {
  RightModule out{"natural", model.n(), model.n(), {}};
  for (const auto& b : model.basis()) out.action.push_back(-b);
  if (check_right_module_law(model, out)) throw std::logic_error("natural module violates the right module law");
  return out;
}

RightModule build_module_adjoint(const SlnModel& model) {
  RightModule out{"adjoint", model.n(), model.dim(), {}};
  for (std::size_t b = 0; b < model.dim(); ++b) {
    Matrix r(model.dim(), model.dim());
    for (std::size_t v = 0; v < model.dim(); ++v) {
      const Vector& col = model.algebra().basis_bracket(v, b);
      for (std::size_t k = 0; k < model.dim(); ++k) r(k, v) = col[k];
    }
    out.action.push_back(std::move(r));
  }
  if (check_right_module_law(model, out)) throw std::logic_error("adjoint module violates the right module law");
  return out;
}

std::optional<RightModuleViolation> check_right_module_law(const SlnModel& model, const RightModule& module) {
  if (module.action.size() != model.dim() || module.n != model.n()) {
    throw DimensionMismatch("module does not act on this sl_n");
  }
  for (std::size_t a = 0; a < model.dim(); ++a)
    for (std::size_t b = 0; b < model.dim(); ++b) {
      const Matrix lhs = module.act(model.algebra().basis_bracket(a, b));
      const Matrix rhs = module.action[b] * module.action[a] - module.action[a] * module.action[b];
      if (lhs != rhs) return RightModuleViolation{a, b, lhs - rhs};
    }
  return std::nullopt;
}

bool is_irreducible(const RightModule& module) {
  IntertwinerPairs pairs;
  for (const auto& r : module.action) pairs.emplace_back(r, r);
  return module.dim > 0 && intertwiner_space(pairs, module.dim).dim() == 1;
}

RightModule twist_module(const RightModule& module, const Matrix& phi) {
  RightModule out{module.name + "^phi", module.n, module.dim, {}};
  for (std::size_t b = 0; b < module.action.size(); ++b) out.action.push_back(module.act(phi.column(b)));
  return out;
}

std::optional<Matrix> module_isomorphism(const RightModule& m1, const RightModule& m2) {
  if (m1.dim != m2.dim || m1.action.size() != m2.action.size()) return std::nullopt;
  IntertwinerPairs pairs;
  for (std::size_t b = 0; b < m1.action.size(); ++b) pairs.emplace_back(m2.action[b], m1.action[b]);
  const Subspace space = intertwiner_space(pairs, m1.dim);
  if (space.dim() == 0) return std::nullopt;
  return invertible_element(space, m1.dim);
}

// ---------------------------------------------------------------------------

SemidirectLeibniz::SemidirectLeibniz(SlnModel model, RightModule module)
    : model_(std::move(model)), module_(std::move(module)) {
  if (module_.action.size() != model_.dim() || module_.n != model_.n()) {
    throw DimensionMismatch("module does not act on this sl_n");
  }
  for (const auto& r : module_.action)
    if (r.rows() != module_.dim || r.cols() != module_.dim) throw DimensionMismatch("action matrix of the wrong size");

  std::vector<std::string> labels = model_.algebra().labels();
  for (std::size_t k = 0; k < module_.dim; ++k) labels.push_back("v" + std::to_string(k));
  algebra_ = StructureAlgebra(dim(), labels, AlgebraKind::Leibniz);
  const std::size_t s = s_dim();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) algebra_.set_basis_bracket(a, b, embed(model_.algebra().basis_bracket(a, b), Vector(i_dim())));
  // [(0, v_k), (b, 0)] = (0, R(b) v_k); brackets with a module element on the right vanish.
  for (std::size_t k = 0; k < i_dim(); ++k)
    for (std::size_t b = 0; b < s; ++b) algebra_.set_basis_bracket(s + k, b, embed(Vector(s), module_.action[b].column(k)));
}

Vector SemidirectLeibniz::embed(const Vector& g, const Vector& v) const {
  if (g.size() != s_dim() || v.size() != i_dim()) throw DimensionMismatch("parts of the wrong length");
  Vector out = g;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Vector SemidirectLeibniz::s_part(const Vector& x) const {
  if (x.size() != dim()) throw DimensionMismatch("element of the wrong length");
  return Vector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(s_dim()));
}

Vector SemidirectLeibniz::i_part(const Vector& x) const {
  if (x.size() != dim()) throw DimensionMismatch("element of the wrong length");
  return Vector(x.begin() + static_cast<std::ptrdiff_t>(s_dim()), x.end());
}

Subspace SemidirectLeibniz::module_subspace() const {
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < i_dim(); ++k) vs.push_back(unit_vector(dim(), s_dim() + k));
  return Subspace::span(dim(), vs);
}

SemidirectLeibniz build_semidirect(const SlnModel& model, const RightModule& module) {
  return SemidirectLeibniz(model, module);
}

bool is_simple_leibniz(const SemidirectLeibniz& L) {
  if (L.i_dim() == 0) return false;
  bool acts = false;
  for (const auto& r : L.module().action) acts = acts || !r.is_zero();
  return acts && is_irreducible(L.module());
}

// ---------------------------------------------------------------------------

Matrix BlockMap::full() const {
  const std::size_t s = S.rows(), d = I.rows();
  if (S.cols() != s || I.cols() != d || SI.rows() != d || SI.cols() != s) {
    throw DimensionMismatch("inconsistent block sizes");
  }
  Matrix m(s + d, s + d);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m(i, j) = S(i, j);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < s; ++j) m(s + i, j) = SI(i, j);
    for (std::size_t j = 0; j < d; ++j) m(s + i, s + j) = I(i, j);
  }
  return m;
}

BlockMap BlockMap::from_full(const SemidirectLeibniz& L, const Matrix& m) {
  const std::size_t s = L.s_dim(), d = L.i_dim();
  if (m.rows() != s + d || m.cols() != s + d) throw DimensionMismatch("map size does not match the algebra");
  BlockMap out{Matrix(s, s), Matrix(d, s), Matrix(d, d)};
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!m(i, s + j).is_zero()) throw std::invalid_argument("map is not block lower triangular");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) out.S(i, j) = m(i, j);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < s; ++j) out.SI(i, j) = m(s + i, j);
    for (std::size_t j = 0; j < d; ++j) out.I(i, j) = m(s + i, s + j);
  }
  return out;
}

Vector apply(const SemidirectLeibniz& L, const BlockMap& map, const Vector& x) {
  const Vector g = L.s_part(x), v = L.i_part(x);
  return L.embed(map.S * g, map.SI * g + map.I * v);
}

BlockMap compose(const BlockMap& first, const BlockMap& second) {
  return {second.S * first.S, second.SI * first.S + second.I * first.SI, second.I * first.I};
}

std::optional<BlockMap> inverse(const BlockMap& map) {
  auto s_inv = inverse(map.S);
  auto i_inv = inverse(map.I);
  if (!s_inv || !i_inv) return std::nullopt;
  return BlockMap{*s_inv, -(*i_inv * map.SI * *s_inv), *i_inv};
}

bool is_automorphism(const SemidirectLeibniz& L, const BlockMap& map) { return is_automorphism(L.algebra(), map.full()); }

// ---------------------------------------------------------------------------

namespace {

Scalar eigen_bound(const Matrix& m) {
  Rational best(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational row(0);
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j).re().abs() + m(i, j).im().abs();
    if (best < row) best = row;
  }
  return Scalar(Rational(best.ceil(), mpz_class(1)));
}

/// Restriction of R to the subspace W, solved as ker((R - c) restricted to W).
Subspace eigen_in(const Matrix& r, const Subspace& w, const Scalar& c) {
  // x = sum t_i w_i; (R - c) x = 0 is linear in t.
  const std::size_t d = r.rows(), p = w.dim();
  Matrix sys(d, p);
  for (std::size_t i = 0; i < p; ++i) {
    const Vector col = r * w.basis()[i] - c * w.basis()[i];
    for (std::size_t k = 0; k < d; ++k) sys(k, i) = col[k];
  }
  const Subspace coeffs = kernel(sys);
  std::vector<Vector> vs;
  for (const auto& t : coeffs.basis()) {
    Vector x(d);
    for (std::size_t i = 0; i < p; ++i)
      if (!t[i].is_zero()) x = x + t[i] * w.basis()[i];
    vs.push_back(std::move(x));
  }
  return Subspace::span(d, vs);
}

}  // namespace

std::vector<WeightSpace> weight_decomposition(const SemidirectLeibniz& L) {
  const SlnModel& model = L.model();
  const std::size_t d = L.i_dim();
  std::vector<WeightSpace> spaces{{{}, Subspace::full(d)}};
  for (std::size_t k = 0; k + 1 < model.n(); ++k) {
    const Matrix& r = L.module().action[model.cartan_index(k)];
    const long bound = eigen_bound(r).re().num().get_si();
    std::vector<WeightSpace> refined;
    for (const auto& ws : spaces) {
      for (long c = -bound; c <= bound; ++c) {
        Subspace e = eigen_in(r, ws.vectors, Scalar(c));
        if (e.dim() == 0) continue;
        WeightSpace next{ws.weight, std::move(e)};
        next.weight.push_back(Scalar(c));
        refined.push_back(std::move(next));
      }
    }
    spaces = std::move(refined);
  }
  std::size_t total = 0;
  for (const auto& ws : spaces) total += ws.vectors.dim();
  if (total != d) throw std::logic_error("Cartan action is not diagonalizable over the integers");
  return spaces;
}

std::vector<Scalar> weight_of(const SemidirectLeibniz& L, const Vector& v) {
  std::size_t pivot = 0;
  while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
  if (pivot == v.size()) throw std::invalid_argument("zero vector has no weight");
  std::vector<Scalar> out;
  for (std::size_t k = 0; k + 1 < L.model().n(); ++k) {
    const Vector image = L.module().action[L.model().cartan_index(k)] * v;
    const Scalar c = image[pivot] / v[pivot];
    if (image != c * v) throw std::invalid_argument("vector is not a weight vector");
    out.push_back(c);
  }
  return out;
}

Vector highest_weight_vector(const SemidirectLeibniz& L) {
  const SlnModel& model = L.model();
  const std::size_t d = L.i_dim();
  const auto pos = model.positive_roots();
  Matrix stacked(pos.size() * d, d);
  for (std::size_t r = 0; r < pos.size(); ++r) {
    const Matrix& a = L.module().action[model.root_index(pos[r].first, pos[r].second)];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked(r * d + i, j) = a(i, j);
  }
  const Subspace k = kernel(stacked);
  if (k.dim() != 1) throw std::logic_error("highest weight space is not a line");
  Vector y = k.basis().front();
  std::size_t pivot = 0;
  while (y[pivot].is_zero()) ++pivot;
  const Scalar inv = y[pivot].inv();
  for (auto& c : y) c *= inv;
  return y;
}

std::optional<BlockMap> extend_automorphism(const SemidirectLeibniz& L, const CanonicalShape& phi_s,
                                            const Scalar& omega) {
  if (!shape_is_automorphism(phi_s)) throw std::invalid_argument("only automorphism shapes extend");
  const Matrix S = shape_map(L.model(), phi_s);
  auto phi_i = module_isomorphism(L.module(), twist_module(L.module(), S));
  if (!phi_i) return std::nullopt;
  Matrix si(L.i_dim(), L.s_dim());
  if (L.i_dim() == L.s_dim() && !omega.is_zero()) {
    if (auto theta = module_isomorphism(build_module_adjoint(L.model()), L.module())) si = omega * (*theta * S);
  }
  BlockMap out{S, std::move(si), *phi_i};
  if (!is_automorphism(L, out)) throw std::logic_error("extension failed the automorphism check");
  return out;
}

// ---------------------------------------------------------------------------

std::string certificate_name(const LeibnizCertificate& c) {
  static const char* names[] = {"RestrictionNotLocal", "NotInjective", "BracketSquare",     "SquareEigen",
                                "WeightSupport",       "AntiRestriction", "HomomorphismFailure"};
  return names[c.index()];
}

bool is_direct_certificate(const LeibnizCertificate& c) {
  return std::holds_alternative<leibniz_cert::BracketSquare>(c) || std::holds_alternative<leibniz_cert::SquareEigen>(c) ||
         std::holds_alternative<leibniz_cert::NotInjective>(c);
}

std::string to_string(LeibnizVerdictKind k) { return k == LeibnizVerdictKind::LocalAut ? "LocalAut" : "NotLocal"; }

std::optional<leibniz_cert::BracketSquare> bracket_square_obstruction(const SemidirectLeibniz& L,
                                                                      const BlockMap& delta, const Vector& z) {
  const StructureAlgebra& alg = L.algebra();
  if (!is_zero(alg.bracket(z, z))) return std::nullopt;
  const Vector dz = apply(L, delta, z);
  Vector sq = alg.bracket(dz, dz);
  if (is_zero(sq)) return std::nullopt;
  return leibniz_cert::BracketSquare{"", z, std::move(sq)};
}

std::optional<leibniz_cert::SquareEigen> square_eigen_obstruction(const SemidirectLeibniz& L, const BlockMap& delta,
                                                                  const Vector& z) {
  const StructureAlgebra& alg = L.algebra();
  const Vector s = alg.bracket(z, z);
  if (is_zero(s)) return std::nullopt;
  const Vector t = alg.bracket(s, z);
  std::size_t pivot = 0;
  while (s[pivot].is_zero()) ++pivot;
  const Scalar c = t[pivot] / s[pivot];
  if (t != c * s) return std::nullopt;
  const Vector dz = apply(L, delta, z);
  const Vector ds = alg.bracket(dz, dz);
  Vector defect = alg.bracket(ds, dz) - c * ds;
  if (is_zero(defect)) return std::nullopt;
  return leibniz_cert::SquareEigen{"", z, c, std::move(defect)};
}

namespace {

std::string root_label(std::size_t i, std::size_t j) { return "e" + std::to_string(i + 1) + std::to_string(j + 1); }

/// Bracket-word certificates in search order: e_a + y over positive roots,
/// the square-eigen relation at h0 + y, then e_a and h0 alone.
std::optional<LeibnizCertificate> direct_certificate(const SemidirectLeibniz& L, const BlockMap& delta) {
  const SlnModel& model = L.model();
  const Vector y = L.embed(Vector(L.s_dim()), highest_weight_vector(L));
  const Vector h0 = L.embed(strongly_regular_element(model), Vector(L.i_dim()));
  for (auto [i, j] : model.positive_roots()) {
    const Vector z = unit_vector(L.dim(), model.root_index(i, j)) + y;
    if (auto c = bracket_square_obstruction(L, delta, z)) {
      c->site = root_label(i, j) + "+y";
      return *c;
    }
  }
  if (auto c = square_eigen_obstruction(L, delta, h0 + y)) {
    c->site = "h0+y";
    return *c;
  }
  for (auto [i, j] : model.positive_roots()) {
    if (auto c = bracket_square_obstruction(L, delta, unit_vector(L.dim(), model.root_index(i, j)))) {
      c->site = root_label(i, j);
      return *c;
    }
  }
  if (auto c = bracket_square_obstruction(L, delta, h0)) {
    c->site = "h0";
    return *c;
  }
  return std::nullopt;
}

Subspace weight_space(const std::vector<WeightSpace>& spaces, const std::vector<Scalar>& weight, std::size_t d) {
  for (const auto& ws : spaces)
    if (ws.weight == weight) return ws.vectors;
  return Subspace(d);
}

/// Conditions any automorphism agreeing with the reduced map at h0 and at
/// h0 + y must satisfy; nullopt when they all hold.
std::optional<leibniz_cert::WeightSupport> weight_support_violation(const SemidirectLeibniz& L, const BlockMap& delta,
                                                                    const CanonicalShape& reduction) {
  const SlnModel& model = L.model();
  const std::size_t d = L.i_dim();
  auto inner = extend_automorphism(L, {1, Flavor::Identity, reduction.a});
  if (!inner) return std::nullopt;
  const BlockMap reduced = compose(delta, *inverse(*inner));

  const Vector h0 = strongly_regular_element(model);
  const Vector y = highest_weight_vector(L);
  const auto spaces = weight_decomposition(L);
  const std::vector<Scalar> zero(model.n() - 1, Scalar(0));
  const Subspace i0 = weight_space(spaces, zero, d);

  const Vector s_image = reduced.S * h0;
  int sign = 0;
  if (s_image == h0) sign = 1;
  if (s_image == Scalar(-1) * h0) sign = -1;
  if (sign == 0) return std::nullopt;

  const Vector si_image = reduced.SI * h0;
  if (!i0.contains(si_image)) {
    return leibniz_cert::WeightSupport{"reduced map sends h0 outside the zero weight space", reduction, si_image};
  }
  std::vector<Scalar> target = weight_of(L, y);
  if (sign < 0)
    for (auto& c : target) c = -c;
  const Subspace allowed = i0.join(weight_space(spaces, target, d));
  const Vector image = reduced.I * y;
  if (!allowed.contains(image) || i0.contains(image)) {
    return leibniz_cert::WeightSupport{sign > 0 ? "reduced image of y has no component of weight beta"
                                                : "reduced image of y has no component of weight -beta",
                                       reduction, image};
  }
  return std::nullopt;
}

LeibnizVerdict not_local(LeibnizVerdict v, LeibnizCertificate c) {
  v.kind = LeibnizVerdictKind::NotLocal;
  v.certificate = std::move(c);
  return v;
}

}  // namespace

LeibnizVerdict decide_local_aut_leibniz(const SemidirectLeibniz& L, const BlockMap& delta) {
  const Matrix full = delta.full();
  if (full.rows() != L.dim()) throw DimensionMismatch("map size does not match the algebra");
  LeibnizVerdict v;
  v.restriction = classify_sln(L.model(), delta.S);
  if (v.restriction->kind == VerdictKind::NotLocal) {
    return not_local(std::move(v), leibniz_cert::RestrictionNotLocal{*v.restriction->obstruction});
  }
  const Subspace ker = kernel(full);
  if (ker.dim() > 0) return not_local(std::move(v), leibniz_cert::NotInjective{ker.basis().front()});
  v.reduction = v.restriction->shape;

  if (v.restriction->kind == VerdictKind::AntiAutomorphism) {
    if (auto c = direct_certificate(L, delta)) return not_local(std::move(v), std::move(*c));
    if (auto c = weight_support_violation(L, delta, *v.reduction)) return not_local(std::move(v), std::move(*c));
    return not_local(std::move(v), leibniz_cert::AntiRestriction{*v.reduction});
  }

  if (is_automorphism(L, delta)) {
    v.kind = LeibnizVerdictKind::LocalAut;
    return v;
  }
  if (auto c = direct_certificate(L, delta)) return not_local(std::move(v), std::move(*c));
  return not_local(std::move(v), leibniz_cert::HomomorphismFailure{*find_homomorphism_failure(L.algebra(), full)});
}

bool reverify(const SemidirectLeibniz& L, const BlockMap& delta, const LeibnizCertificate& c) {
  const StructureAlgebra& alg = L.algebra();
  if (const auto* bs = std::get_if<leibniz_cert::BracketSquare>(&c)) {
    const Vector dz = apply(L, delta, bs->z);
    const Vector sq = alg.bracket(dz, dz);
    return is_zero(alg.bracket(bs->z, bs->z)) && sq == bs->square && !is_zero(sq);
  }
  if (const auto* se = std::get_if<leibniz_cert::SquareEigen>(&c)) {
    const Vector s = alg.bracket(se->z, se->z);
    if (is_zero(s) || alg.bracket(s, se->z) != se->c * s) return false;
    const Vector dz = apply(L, delta, se->z);
    const Vector ds = alg.bracket(dz, dz);
    const Vector defect = alg.bracket(ds, dz) - se->c * ds;
    return defect == se->defect && !is_zero(defect);
  }
  if (const auto* ni = std::get_if<leibniz_cert::NotInjective>(&c)) {
    return !is_zero(ni->kernel_vector) && is_zero(delta.full() * ni->kernel_vector);
  }
  if (const auto* r = std::get_if<leibniz_cert::RestrictionNotLocal>(&c)) {
    return reverify_obstruction(L.model(), delta.S, r->obstruction);
  }
  if (const auto* ws = std::get_if<leibniz_cert::WeightSupport>(&c)) {
    auto again = weight_support_violation(L, delta, ws->reduction);
    return again && again->image == ws->image && again->reason == ws->reason;
  }
  if (const auto* ar = std::get_if<leibniz_cert::AntiRestriction>(&c)) {
    return !shape_is_automorphism(ar->shape) && shape_map(L.model(), ar->shape) == delta.S;
  }
  const auto& hf = std::get<leibniz_cert::HomomorphismFailure>(c).failure;
  const Matrix full = delta.full();
  const Vector expected = full * alg.basis_bracket(hf.i, hf.j);
  const Vector actual = alg.bracket(full.column(hf.i), full.column(hf.j));
  return expected == hf.expected && actual == hf.actual && expected != actual;
}

// ---------------------------------------------------------------------------

DiagonalConjugatorResult diagonal_conjugator_check(const SlnModel& model, const CanonicalShape& phi, const Matrix& h0) {
  if (!shape_is_automorphism(phi)) return {std::nullopt, "shape is not an automorphism"};
  if (apply_shape(phi, h0) != -h0) return {std::nullopt, "Phi(h0) != -h0"};
  const Matrix map = shape_map(model, phi);
  const Subspace space = shape_fit_space(model, map, -1, Flavor::Transpose);
  if (space.dim() != 1) return {std::nullopt, "conjugator fit is not a line"};
  Matrix a = unflatten(space.basis().front(), model.n());
  if (!a.is_diagonal()) return {std::nullopt, "conjugator is not diagonal"};
  return {std::move(a), ""};
}

ScalingResult highest_weight_scaling_check(const SemidirectLeibniz& L, const BlockMap& phi, const Matrix& h0) {
  const Vector h = L.model().coords(h0);
  if (phi.S * h != h) return {std::nullopt, std::nullopt, "Phi_S(h0) != h0"};
  if (!is_automorphism(L, phi)) return {std::nullopt, std::nullopt, "map is not an automorphism"};
  const Vector y = highest_weight_vector(L);
  Vector image = phi.I * y;
  std::size_t pivot = 0;
  while (y[pivot].is_zero()) ++pivot;
  const Scalar lambda = image[pivot] / y[pivot];
  if (image != lambda * y) return {std::nullopt, std::move(image), "image of y is not a multiple of y"};
  return {lambda, std::move(image), ""};
}

}  // namespace locaut
