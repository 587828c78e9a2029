#include "locaut/localaut.hpp"

#include <stdexcept>

namespace locaut {

std::string obstruction_name(const Obstruction& o) {
  struct Namer {
    std::string operator()(const obstruction::NotInjective&) const { return "NotInjective"; }
    std::string operator()(const obstruction::LambdaNotUnit&) const { return "LambdaNotUnit"; }
    std::string operator()(const obstruction::NoShapeFits&) const { return "NoShapeFits"; }
    std::string operator()(const obstruction::SquareZeroBroken&) const { return "SquareZeroBroken"; }
  };
  return std::visit(Namer{}, o);
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Automorphism: return "Automorphism";
    case VerdictKind::AntiAutomorphism: return "AntiAutomorphism";
    case VerdictKind::NotLocal: return "NotLocal";
  }
  return "NotLocal";
}

namespace {

Matrix sigma_of(Flavor sigma, const Matrix& x) { return sigma == Flavor::Transpose ? x.transpose() : x; }

void require_square_map(const Matrix& map, std::size_t dim) {
  if (map.rows() != dim || map.cols() != dim) throw DimensionMismatch("map size does not match the algebra");
}

struct FitResult {
  std::vector<ShapeFitDim> dims;
  std::vector<CanonicalShape> fits;
};

FitResult fit_all_shapes(const SlnModel& model, const Matrix& map) {
  FitResult out;
  for (auto [eps, sigma] : kShapeOrder) {
    const Subspace space = shape_fit_space(model, map, eps, sigma);
    out.dims.push_back({eps, sigma, space.dim()});
    if (space.dim() == 0) continue;
    auto a = invertible_element(space, model.n());
    if (!a) continue;
    CanonicalShape s{eps, sigma, *a};
    if (shape_map(model, s) == map) out.fits.push_back(std::move(s));
  }
  return out;
}

Verdict verdict_from_fits(std::vector<CanonicalShape> fits) {
  Verdict v;
  v.shape = fits.front();
  v.kind = shape_is_automorphism(fits.front()) ? VerdictKind::Automorphism : VerdictKind::AntiAutomorphism;
  v.alternatives = std::move(fits);
  return v;
}

Verdict not_local(Obstruction o) {
  Verdict v;
  v.kind = VerdictKind::NotLocal;
  v.obstruction = std::move(o);
  return v;
}

}  // namespace

Subspace shape_fit_space(const SlnModel& model, const Matrix& map, int epsilon, Flavor sigma) {
  IntertwinerPairs pairs;
  for (std::size_t b = 0; b < model.dim(); ++b) {
    const Matrix& e = model.basis()[b];
    pairs.emplace_back(model.matrix(map.column(b)), Scalar(epsilon) * sigma_of(sigma, e));
  }
  return intertwiner_space(pairs, model.n());
}

ProbeReport local_aut_probe(const SlnModel& model, const Matrix& map) {
  const std::size_t n = model.n();
  ProbeReport r;
  r.probe = Matrix(n, n);
  r.probe(0, 0) = Scalar(1);
  r.probe(1, 1) = Scalar(-1);
  r.image = model.apply(map, r.probe);
  r.charpoly = charpoly(r.image);
  r.required = Polynomial::from_roots({Scalar(1), Scalar(-1)}) * Polynomial::monomial(n - 2);
  r.matches = r.charpoly == r.required;
  bool shaped = true;
  for (std::size_t k = 0; k < n; ++k)
    if (k != n - 2 && !r.charpoly.coefficient(k).is_zero()) shaped = false;
  if (shaped) {
    r.lambda_squared = -r.charpoly.coefficient(n - 2);
    r.lambda = r.lambda_squared->sqrt();
  }
  return r;
}

Verdict classify_sln(const SlnModel& model, const Matrix& map, const ClassifyOptions& options) {
  require_square_map(map, model.dim());
  const Subspace ker = kernel(map);
  if (ker.dim() > 0) return not_local(obstruction::NotInjective{ker.basis().front()});

  const SquareZeroReport sz = preserves_square_zero(model, map, options.square_zero_trials, options.seed);
  if (!sz.preserved) return not_local(obstruction::SquareZeroBroken{*sz.counterexample, *sz.image});

  FitResult fit = fit_all_shapes(model, map);
  if (!fit.fits.empty()) return verdict_from_fits(std::move(fit.fits));

  const ProbeReport probe = local_aut_probe(model, map);
  if (probe.lambda && !probe.lambda->is_zero()) {
    FitResult scaled = fit_all_shapes(model, map * probe.lambda->inv());
    if (!scaled.fits.empty()) {
      return not_local(obstruction::LambdaNotUnit{*probe.lambda, probe.charpoly, probe.required, scaled.fits.front()});
    }
  }
  return not_local(obstruction::NoShapeFits{std::move(fit.dims)});
}

Verdict classify_mn(std::size_t n, const Matrix& map) {
  if (n < 1) throw std::invalid_argument("M_n needs n >= 1");
  require_square_map(map, n * n);
  const Subspace ker = kernel(map);
  if (ker.dim() > 0) return not_local(obstruction::NotInjective{ker.basis().front()});

  std::vector<Matrix> basis, images;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(Matrix::unit(n, i, j));
      images.push_back(unflatten(map.column(i * n + j), n));
    }

  std::vector<ShapeFitDim> dims;
  std::vector<CanonicalShape> fits;
  for (Flavor sigma : {Flavor::Identity, Flavor::Transpose}) {
    IntertwinerPairs pairs;
    for (std::size_t b = 0; b < basis.size(); ++b) pairs.emplace_back(images[b], sigma_of(sigma, basis[b]));
    const Subspace space = intertwiner_space(pairs, n);
    dims.push_back({1, sigma, space.dim()});
    if (space.dim() == 0) continue;
    auto a = invertible_element(space, n);
    if (!a) continue;
    const Matrix a_inv = *inverse(*a);
    bool reproduces = true;
    for (std::size_t b = 0; b < basis.size() && reproduces; ++b)
      reproduces = *a * sigma_of(sigma, basis[b]) * a_inv == images[b];
    if (reproduces) fits.push_back({1, sigma, *a});
  }
  if (fits.empty()) return not_local(obstruction::NoShapeFits{std::move(dims)});
  Verdict v;
  v.shape = fits.front();
  v.kind = fits.front().sigma == Flavor::Identity ? VerdictKind::Automorphism : VerdictKind::AntiAutomorphism;
  v.alternatives = std::move(fits);
  return v;
}

std::optional<CanonicalShape> pointwise_witness(const SlnModel& model, const Matrix& map, const Matrix& x) {
  require_square_map(map, model.dim());
  const Matrix y = model.apply(map, x);
  if (auto a = similarity_witness(x, y)) return CanonicalShape{1, Flavor::Identity, *a};
  if (auto a = similarity_witness(-x.transpose(), y)) return CanonicalShape{-1, Flavor::Transpose, *a};
  return std::nullopt;
}

bool reverify_obstruction(const SlnModel& model, const Matrix& map, const Obstruction& o) {
  if (const auto* ni = std::get_if<obstruction::NotInjective>(&o)) {
    return !is_zero(ni->kernel_vector) && is_zero(map * ni->kernel_vector);
  }
  if (const auto* sz = std::get_if<obstruction::SquareZeroBroken>(&o)) {
    const Matrix image = model.apply(map, sz->x);
    return (sz->x * sz->x).is_zero() && image == sz->image && !(image * image).is_zero();
  }
  if (const auto* lam = std::get_if<obstruction::LambdaNotUnit>(&o)) {
    if (lam->lambda.is_zero() || lam->lambda == Scalar(1) || lam->lambda == Scalar(-1)) return false;
    const ProbeReport probe = local_aut_probe(model, map);
    return probe.charpoly == lam->probe && lam->probe != lam->required &&
           lam->probe == Polynomial::from_roots({lam->lambda, -lam->lambda}) * Polynomial::monomial(model.n() - 2) &&
           shape_map(model, lam->shape) * lam->lambda == map;
  }
  const auto& nf = std::get<obstruction::NoShapeFits>(o);
  if (nf.dims.size() != std::size(kShapeOrder)) return false;
  for (std::size_t k = 0; k < nf.dims.size(); ++k) {
    const auto [eps, sigma] = kShapeOrder[k];
    if (nf.dims[k].epsilon != eps || nf.dims[k].sigma != sigma) return false;
    const Subspace space = shape_fit_space(model, map, eps, sigma);
    if (space.dim() != nf.dims[k].dim) return false;
    // A fitting conjugator must lie in this space; a line has one candidate up to scale.
    if (space.dim() == 1) {
      const Matrix a = unflatten(space.basis().front(), model.n());
      if (!determinant(a).is_zero() && shape_map(model, {eps, sigma, a}) == map) return false;
    }
  }
  return true;
}

}  // namespace locaut
