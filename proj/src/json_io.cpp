#include "locaut/json_io.hpp"

namespace locaut {

Json encode(const Scalar& s) { return s.str(); }

Json encode(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(encode(c));
  return out;
}

Json encode(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(encode(m.row(i)));
  return out;
}

Json encode(const Polynomial& p) { return encode(p.coefficients()); }

Json encode(const StructureAlgebra& alg) {
  Json constants = Json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      for (std::size_t k = 0; k < alg.dim(); ++k)
        if (!alg.constant(i, j, k).is_zero()) constants.push_back({i, j, k, alg.constant(i, j, k).str()});
  return {{"dim", alg.dim()}, {"labels", alg.labels()}, {"kind", to_string(alg.kind())}, {"constants", constants}};
}

Json encode(const CanonicalShape& s) {
  return {{"epsilon", s.epsilon}, {"sigma", to_string(s.sigma)}, {"a", encode(s.a)}};
}

Json encode(const Obstruction& o) {
  Json out{{"kind", obstruction_name(o)}};
  if (const auto* ni = std::get_if<obstruction::NotInjective>(&o)) {
    out["kernel_vector"] = encode(ni->kernel_vector);
  } else if (const auto* lam = std::get_if<obstruction::LambdaNotUnit>(&o)) {
    out["lambda"] = encode(lam->lambda);
    out["probe"] = encode(lam->probe);
    out["required"] = encode(lam->required);
    out["shape"] = encode(lam->shape);
  } else if (const auto* nf = std::get_if<obstruction::NoShapeFits>(&o)) {
    Json dims = Json::array();
    for (const auto& d : nf->dims) dims.push_back({{"epsilon", d.epsilon}, {"sigma", to_string(d.sigma)}, {"dim", d.dim}});
    out["dims"] = dims;
  } else {
    const auto& sz = std::get<obstruction::SquareZeroBroken>(o);
    out["x"] = encode(sz.x);
    out["image"] = encode(sz.image);
  }
  return out;
}

Json encode(const Verdict& v) {
  Json alternatives = Json::array();
  for (const auto& s : v.alternatives) alternatives.push_back(encode(s));
  return {{"verdict", to_string(v.kind)},
          {"shape", v.shape ? encode(*v.shape) : Json()},
          {"alternatives", alternatives},
          {"obstruction", v.obstruction ? encode(*v.obstruction) : Json()}};
}

Json encode(const BracketFailure& f) {
  return {{"i", f.i}, {"j", f.j}, {"expected", encode(f.expected)}, {"actual", encode(f.actual)}};
}

Json encode(const BlockMap& m) { return {{"S", encode(m.S)}, {"SI", encode(m.SI)}, {"I", encode(m.I)}}; }

Json encode(const LeibnizCertificate& c) {
  Json out{{"kind", certificate_name(c)}};
  if (const auto* r = std::get_if<leibniz_cert::RestrictionNotLocal>(&c)) {
    out["obstruction"] = encode(r->obstruction);
  } else if (const auto* ni = std::get_if<leibniz_cert::NotInjective>(&c)) {
    out["kernel_vector"] = encode(ni->kernel_vector);
  } else if (const auto* bs = std::get_if<leibniz_cert::BracketSquare>(&c)) {
    out["site"] = bs->site;
    out["z"] = encode(bs->z);
    out["square"] = encode(bs->square);
  } else if (const auto* se = std::get_if<leibniz_cert::SquareEigen>(&c)) {
    out["site"] = se->site;
    out["z"] = encode(se->z);
    out["c"] = encode(se->c);
    out["defect"] = encode(se->defect);
  } else if (const auto* ws = std::get_if<leibniz_cert::WeightSupport>(&c)) {
    out["reason"] = ws->reason;
    out["reduction"] = encode(ws->reduction);
    out["image"] = encode(ws->image);
  } else if (const auto* ar = std::get_if<leibniz_cert::AntiRestriction>(&c)) {
    out["shape"] = encode(ar->shape);
  } else {
    out["failure"] = encode(std::get<leibniz_cert::HomomorphismFailure>(c).failure);
  }
  return out;
}

Json encode(const LeibnizVerdict& v) {
  return {{"verdict", to_string(v.kind)},
          {"restriction", v.restriction ? encode(*v.restriction) : Json()},
          {"reduction", v.reduction ? encode(*v.reduction) : Json()},
          {"certificate", v.certificate ? encode(*v.certificate) : Json()}};
}

Json encode(const FiliformDemoReport& r) {
  Json unwitnessed = Json::array();
  for (const auto& x : r.unwitnessed) unwitnessed.push_back(encode(x));
  return {{"n", r.n},
          {"delta", encode(r.delta)},
          {"delta_bijective", r.delta_bijective},
          {"not_automorphism", r.not_automorphism ? encode(*r.not_automorphism) : Json()},
          {"samples", r.samples.size()},
          {"phi_witnesses", r.phi_witnesses},
          {"psi_witnesses", r.psi_witnesses},
          {"unwitnessed", unwitnessed},
          {"holds", r.holds()}};
}

// ---------------------------------------------------------------------------

Scalar decode_scalar(const Json& j) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad scalar: ") + e.what());
  } catch (const DivisionByZero&) {
    throw InputError("bad scalar: zero denominator in " + j.dump());
  }
  throw InputError("scalar must be a string or an integer, got " + j.dump());
}

Vector decode_vector(const Json& j) {
  if (!j.is_array()) throw InputError("vector must be an array");
  Vector out;
  for (const auto& c : j) out.push_back(decode_scalar(c));
  return out;
}

Matrix decode_matrix(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(decode_vector(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Scalar> entries;
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("matrix rows have different lengths");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

namespace {

std::size_t decode_index(const Json& j, std::size_t dim) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<std::size_t>() >= dim) {
    throw InputError("structure constant index out of range: " + j.dump());
  }
  return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

StructureAlgebra decode_algebra(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) throw InputError("dim must be a positive integer");
  const auto dim = d.get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != dim) throw InputError("labels do not match dim");
  } else {
    for (std::size_t k = 0; k < dim; ++k) labels.push_back("e" + std::to_string(k + 1));
  }
  AlgebraKind kind = AlgebraKind::Unchecked;
  if (j.contains("kind")) {
    const auto k = j.at("kind").get<std::string>();
    if (k == "Lie") kind = AlgebraKind::Lie;
    else if (k == "Leibniz") kind = AlgebraKind::Leibniz;
    else if (k != "Unchecked") throw InputError("unknown algebra kind " + k);
  }
  StructureAlgebra alg(dim, labels, kind);
  for (const auto& entry : field(j, "constants")) {
    if (!entry.is_array() || entry.size() != 4) throw InputError("constants entries are [i, j, k, scalar]");
    alg.set_constant(decode_index(entry[0], dim), decode_index(entry[1], dim), decode_index(entry[2], dim),
                     decode_scalar(entry[3]));
  }
  return alg;
}

BlockMap decode_block_map(const Json& j) {
  BlockMap m{decode_matrix(field(j, "S")), decode_matrix(field(j, "SI")), decode_matrix(field(j, "I"))};
  try {
    (void)m.full();
  } catch (const DimensionMismatch& e) {
    throw InputError(e.what());
  }
  return m;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace locaut
