#include <random>
#include <sstream>

#include "locaut/cli.hpp"
#include "locaut/filiform.hpp"
#include "locaut/leibniz.hpp"
#include "locaut/localaut.hpp"

namespace locaut {

std::size_t SelfcheckReport::failures() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.passed ? 0 : 1;
  return k;
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Matrix invertible(std::size_t n) {
    while (true) {
      Matrix m = integer_matrix(n, n, 3);
      if (!determinant(m).is_zero()) return m;
    }
  }
  Matrix integer_matrix(std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(dist(rng_));
    return m;
  }
  Matrix traceless(std::size_t n) {
    Matrix m = integer_matrix(n, n, 5);
    m(n - 1, n - 1) -= m.trace();
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

struct Check {
  std::size_t passed = 0, total = 0;
  std::string first_problem;

  void expect(bool ok, const std::string& what) {
    ++total;
    if (ok) ++passed;
    else if (first_problem.empty()) first_problem = what;
  }
  SelfcheckEntry entry(std::string name) const {
    std::string detail = std::to_string(passed) + "/" + std::to_string(total);
    if (!first_problem.empty()) detail += "; first failure: " + first_problem;
    return {std::move(name), passed == total && total > 0, detail};
  }
};

bool scalar_multiple(const Matrix& a, const Matrix& b) {
  std::size_t k = 0;
  while (k < a.entries().size() && b.entries()[k].is_zero()) ++k;
  if (k == a.entries().size()) return false;
  return a == (a.entries()[k] / b.entries()[k]) * b;
}

std::string label(std::size_t n, int eps, Flavor sigma) {
  return "n=" + std::to_string(n) + " shape (" + std::to_string(eps) + ", " + to_string(sigma) + ")";
}

SelfcheckEntry check_shapes(Sampler& s) {
  Check c;
  for (std::size_t n : {2, 3}) {
    const SlnModel model(n);
    for (auto [eps, sigma] : kShapeOrder) {
      for (int trial = 0; trial < 5; ++trial) {
        const CanonicalShape shape{eps, sigma, s.invertible(n)};
        const Verdict v = classify_sln(model, shape_map(model, shape));
        bool found = false;
        for (const auto& alt : v.alternatives)
          found = found || (alt.epsilon == eps && alt.sigma == sigma && scalar_multiple(alt.a, shape.a));
        const bool right_kind = v.kind == (shape_is_automorphism(shape) ? VerdictKind::Automorphism
                                                                        : VerdictKind::AntiAutomorphism);
        c.expect(right_kind && found, label(n, eps, sigma));
      }
    }
  }
  return c.entry("sl_n: automorphism and anti-automorphism shapes are recognised with their conjugator");
}

SelfcheckEntry check_scalars() {
  Check c;
  for (std::size_t n = 2; n <= 4; ++n) {
    const SlnModel model(n);
    for (const char* text : {"2", "-3", "i", "1/2"}) {
      const Scalar lambda = Scalar::parse(text);
      const Matrix map = lambda * Matrix::identity(model.dim());
      const Verdict v = classify_sln(model, map);
      const auto* lam = v.obstruction ? std::get_if<obstruction::LambdaNotUnit>(&*v.obstruction) : nullptr;
      c.expect(lam && lam->probe == Polynomial::from_roots({lambda, -lambda}) * Polynomial::monomial(n - 2) &&
                   reverify_obstruction(model, map, *v.obstruction),
               "n=" + std::to_string(n) + " lambda=" + text);
    }
    for (int unit : {1, -1})
      c.expect(classify_sln(model, Scalar(unit) * Matrix::identity(model.dim())).kind != VerdictKind::NotLocal,
               "n=" + std::to_string(n) + " lambda=" + std::to_string(unit));
  }
  return c.entry("sl_n: scalar maps are local automorphisms only for lambda = +-1");
}

SelfcheckEntry check_anti_local(Sampler& s) {
  Check c;
  for (std::size_t n = 2; n <= 3; ++n) {
    const SlnModel model(n);
    for (const auto& map : {model.map_from([](const Matrix& x) { return x.transpose(); }),
                            Scalar(-1) * Matrix::identity(model.dim())}) {
      for (int trial = 0; trial < 10; ++trial) {
        const Matrix x = s.traceless(n);
        const auto w = pointwise_witness(model, map, x);
        c.expect(w && shape_is_automorphism(*w) && apply_shape(*w, x) == model.apply(map, x),
                 "n=" + std::to_string(n));
      }
    }
  }
  return c.entry("sl_n: anti-automorphisms agree with an automorphism at every sampled point");
}

SelfcheckEntry check_probe() {
  Check c;
  for (std::size_t n = 2; n <= 6; ++n) {
    const ProbeReport r = local_aut_probe(SlnModel(n), Matrix::identity(n * n - 1));
    c.expect(r.matches && r.charpoly == Polynomial::from_roots({Scalar(1), Scalar(-1)}) * Polynomial::monomial(n - 2),
             "n=" + std::to_string(n));
  }
  return c.entry("sl_n: charpoly of diag(1, -1, 0, ...) is (t - 1)(t + 1) t^(n-2)");
}

SelfcheckEntry check_sln_certificates(Sampler& s) {
  Check c;
  for (std::size_t n : {2, 3}) {
    const SlnModel model(n);
    std::vector<Matrix> maps;
    for (int trial = 0; trial < 4; ++trial) maps.push_back(s.integer_matrix(model.dim(), model.dim(), 2));
    Matrix singular = Matrix::identity(model.dim());
    singular(0, 0) = Scalar(0);
    maps.push_back(singular);
    maps.push_back(Scalar(3) * model.map_from([](const Matrix& x) { return x.transpose(); }));
    for (const auto& map : maps) {
      const Verdict v = classify_sln(model, map);
      if (v.kind != VerdictKind::NotLocal) continue;
      c.expect(reverify_obstruction(model, map, *v.obstruction), "n=" + std::to_string(n) + " " + obstruction_name(*v.obstruction));
    }
  }
  return c.entry("sl_n: every NotLocal obstruction re-verifies from the map alone");
}

std::vector<SemidirectLeibniz> leibniz_algebras() {
  std::vector<SemidirectLeibniz> out;
  for (std::size_t m = 1; m <= 3; ++m) out.emplace_back(SlnModel(2), build_module_sl2(m));
  const SlnModel sl3(3);
  out.emplace_back(sl3, build_module_natural(sl3));
  out.emplace_back(sl3, build_module_adjoint(sl3));
  return out;
}

SelfcheckEntry check_semidirect(const std::vector<SemidirectLeibniz>& algebras) {
  Check c;
  for (const auto& L : algebras) {
    const Quotient q = liezation(L.algebra());
    bool i_left_null = true;
    for (std::size_t a = 0; a < L.dim(); ++a)
      for (std::size_t k = L.s_dim(); k < L.dim(); ++k) i_left_null = i_left_null && is_zero(L.algebra().basis_bracket(a, k));
    c.expect(validate(L.algebra(), AlgebraKind::Leibniz).empty() && squares_ideal(L.algebra()) == L.module_subspace() &&
                 i_left_null && q.algebra.dim() == L.s_dim() && validate(q.algebra, AlgebraKind::Lie).empty() &&
                 is_simple_leibniz(L),
             L.module().name);
  }
  return c.entry("sl_n + I: Leibniz identity, squares ideal = I, [L, I] = 0, liezation = sl_n");
}

SelfcheckEntry check_extended(Sampler& s, const std::vector<SemidirectLeibniz>& algebras) {
  Check c;
  for (const auto& L : algebras) {
    for (int omega : {0, 1}) {
      const CanonicalShape inner{1, Flavor::Identity, s.invertible(L.model().n())};
      const auto phi = extend_automorphism(L, inner, Scalar(omega));
      const bool coupling_ok = !phi || L.s_dim() == L.i_dim() || phi->SI.is_zero();
      c.expect(phi && coupling_ok && decide_local_aut_leibniz(L, *phi).kind == LeibnizVerdictKind::LocalAut,
               L.module().name + " omega=" + std::to_string(omega));
    }
  }
  return c.entry("sl_n + I: extended automorphisms are judged local automorphisms");
}

SelfcheckEntry check_leibniz_rejections(const std::vector<SemidirectLeibniz>& algebras) {
  Check c;
  for (const auto& L : algebras) {
    const SlnModel& model = L.model();
    for (const auto& s : {model.map_from([](const Matrix& x) { return x.transpose(); }),
                          Scalar(-1) * Matrix::identity(model.dim())}) {
      const BlockMap delta{s, Matrix(L.i_dim(), L.s_dim()), Matrix::identity(L.i_dim())};
      const LeibnizVerdict v = decide_local_aut_leibniz(L, delta);
      c.expect(v.kind == LeibnizVerdictKind::NotLocal && v.certificate && is_direct_certificate(*v.certificate) &&
                   reverify(L, delta, *v.certificate),
               L.module().name);
    }
  }
  return c.entry("sl_n + I: anti-automorphic restrictions are rejected with re-verified bracket certificates");
}

SelfcheckEntry check_leibniz_agreement(Sampler& s, const std::vector<SemidirectLeibniz>& algebras) {
  Check c;
  for (const auto& L : algebras) {
    for (auto [eps, sigma] : kShapeOrder) {
      const BlockMap delta{shape_map(L.model(), {eps, sigma, s.invertible(L.model().n())}),
                           s.integer_matrix(L.i_dim(), L.s_dim(), 1), s.invertible(L.i_dim())};
      const LeibnizVerdict v = decide_local_aut_leibniz(L, delta);
      const bool aut = is_automorphism(L.algebra(), delta.full());
      c.expect((v.kind == LeibnizVerdictKind::LocalAut) == aut && (aut || reverify(L, delta, *v.certificate)),
               L.module().name + " " + label(L.model().n(), eps, sigma));
    }
  }
  return c.entry("sl_n + I: local automorphism verdict coincides with the automorphism check");
}

SelfcheckEntry check_phi_alpha() {
  Check c;
  for (std::size_t n = 3; n <= 8; ++n) {
    const FiliformAlgebra L = model_filiform(n);
    for (const char* text : {"0", "1", "2", "-1", "1/2"}) {
      const Scalar alpha = Scalar::parse(text);
      c.expect(phi_is_automorphism(L, alpha).automorphism == (alpha == Scalar(1)),
               "n=" + std::to_string(n) + " alpha=" + text);
    }
  }
  return c.entry("filiform: Phi_alpha is an automorphism exactly when alpha = 1");
}

SelfcheckEntry check_filiform_demo(std::uint64_t seed) {
  Check c;
  for (std::size_t n = 3; n <= 8; ++n) c.expect(filiform_demo(model_filiform(n), 50, seed).holds(), "n=" + std::to_string(n));
  return c.entry("filiform: Phi_0 is a local automorphism but not an automorphism");
}

SelfcheckEntry check_negative_control() {
  StructureAlgebra corrupted = SlnModel(2).algebra();
  // [h, e12] = 2 e12 becomes 3 e12.
  corrupted.set_constant(2, 0, 0, Scalar(3));
  corrupted.set_constant(0, 2, 0, Scalar(-3));
  const auto violations = validate(corrupted, AlgebraKind::Lie);
  if (violations.empty()) return {"negative control: corrupted sl_2 constant is caught", false, "no violation reported"};
  const auto& v = violations.front();
  std::ostringstream detail;
  detail << v.identity << " fails at basis triple (" << v.i << ", " << v.j << ", " << v.k << ")";
  return {"negative control: corrupted sl_2 constant is caught", v.identity == "jacobi", detail.str()};
}

}  // namespace

SelfcheckReport run_selfcheck(std::uint64_t seed) {
  SelfcheckReport r;
  r.seed = seed;
  Sampler s(seed);
  const auto algebras = leibniz_algebras();
  r.entries.push_back(check_shapes(s));
  r.entries.push_back(check_scalars());
  r.entries.push_back(check_anti_local(s));
  r.entries.push_back(check_probe());
  r.entries.push_back(check_sln_certificates(s));
  r.entries.push_back(check_semidirect(algebras));
  r.entries.push_back(check_extended(s, algebras));
  r.entries.push_back(check_leibniz_rejections(algebras));
  r.entries.push_back(check_leibniz_agreement(s, algebras));
  r.entries.push_back(check_phi_alpha());
  r.entries.push_back(check_filiform_demo(seed));
  r.entries.push_back(check_negative_control());
  return r;
}

}  // namespace locaut
