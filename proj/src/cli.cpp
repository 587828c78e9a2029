#include "locaut/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "locaut/json_io.hpp"

namespace locaut {

namespace {

struct Options {
  std::size_t n = 2;
  std::string map;
  std::string at;
  std::string module = "vm:2";
  std::string omega = "0";
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

/// Inline JSON when the text starts with '[' or '{', otherwise a file path.
Json load_json(const std::string& source) {
  if (!source.empty() && (source.front() == '[' || source.front() == '{')) return parse_json(source);
  std::ifstream in(source);
  if (!in) throw InputError("cannot open " + source);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

bool is_builtin(const std::string& text) { return text.rfind("builtin:", 0) == 0; }

/// identity | transpose | minus | minus-transpose | scale:<lambda>, as a map on n x n matrices.
std::function<Matrix(const Matrix&)> builtin_matrix_map(const std::string& text) {
  const std::string name = text.substr(std::string("builtin:").size());
  if (name == "identity") return [](const Matrix& x) { return x; };
  if (name == "transpose") return [](const Matrix& x) { return x.transpose(); };
  if (name == "minus") return [](const Matrix& x) { return Scalar(-1) * x; };
  if (name == "minus-transpose") return [](const Matrix& x) { return Scalar(-1) * x.transpose(); };
  if (name.rfind("scale:", 0) == 0) {
    const Scalar lambda = Scalar::parse(name.substr(6));
    return [lambda](const Matrix& x) { return lambda * x; };
  }
  throw InputError("unknown builtin map " + text);
}

Matrix require_shape(Matrix m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw InputError(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return m;
}

Matrix load_sln_map(const SlnModel& model, const std::string& text) {
  if (text.empty()) throw InputError("--map is required");
  if (is_builtin(text)) return model.map_from(builtin_matrix_map(text));
  return require_shape(decode_matrix(load_json(text)), model.dim(), model.dim(), "map");
}

Matrix load_mn_map(std::size_t n, const std::string& text) {
  if (text.empty()) throw InputError("--map is required");
  if (!is_builtin(text)) return require_shape(decode_matrix(load_json(text)), n * n, n * n, "map");
  const auto f = builtin_matrix_map(text);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols.push_back(flatten(f(Matrix::unit(n, i, j))));
  return Matrix::from_columns(cols, n * n);
}

RightModule load_module(const SlnModel& model, const std::string& text) {
  if (text == "natural") return build_module_natural(model);
  if (text == "adjoint") return build_module_adjoint(model);
  if (text.rfind("vm:", 0) == 0) {
    if (model.n() != 2) throw InputError("vm:<m> modules are sl_2 modules; use --n 2");
    std::size_t m = 0;
    try {
      m = std::stoul(text.substr(3));
    } catch (const std::exception&) {
      throw InputError("bad module " + text);
    }
    if (m < 1) throw InputError("vm:<m> needs m >= 1");
    return build_module_sl2(m);
  }
  throw InputError("unknown module " + text + " (expected vm:<m>, natural or adjoint)");
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> dist(-3, 3);
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(dist(rng));
    if (!determinant(m).is_zero()) return m;
  }
}

BlockMap load_block_map(const SemidirectLeibniz& L, const Options& o) {
  if (o.map.empty()) throw InputError("--map is required");
  if (o.map == "builtin:extended") {
    std::mt19937_64 rng(o.seed);
    auto phi = extend_automorphism(L, {1, Flavor::Identity, random_invertible(rng, L.model().n())},
                                   Scalar::parse(o.omega));
    if (!phi) throw std::logic_error("inner automorphism did not extend");
    return *phi;
  }
  if (is_builtin(o.map)) {
    return {load_sln_map(L.model(), o.map), Matrix(L.i_dim(), L.s_dim()), Matrix::identity(L.i_dim())};
  }
  BlockMap m = decode_block_map(load_json(o.map));
  require_shape(m.S, L.s_dim(), L.s_dim(), "S block");
  require_shape(m.I, L.i_dim(), L.i_dim(), "I block");
  return m;
}

SlnModel model_for(const Options& o) {
  if (o.n < 2) throw InputError("--n must be at least 2");
  return SlnModel(o.n);
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_classify_sln(const Options& o, std::ostream& out) {
  const SlnModel model = model_for(o);
  const Matrix map = load_sln_map(model, o.map);
  const Verdict v = classify_sln(model, map, {16, o.seed});
  Json j = encode(v);
  if (v.obstruction) j["reverified"] = reverify_obstruction(model, map, *v.obstruction);
  print(out, j);
  return 0;
}

int cmd_classify_mn(const Options& o, std::ostream& out) {
  if (o.n < 1) throw InputError("--n must be positive");
  print(out, encode(classify_mn(o.n, load_mn_map(o.n, o.map))));
  return 0;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const SlnModel model = model_for(o);
  const Matrix map = load_sln_map(model, o.map);
  if (o.at.empty()) throw InputError("--at is required");
  const Matrix x = require_shape(decode_matrix(load_json(o.at)), o.n, o.n, "point");
  if (!x.trace().is_zero()) throw InputError("point must be traceless");
  const Matrix image = model.apply(map, x);
  const auto w = pointwise_witness(model, map, x);
  Json j{{"x", encode(x)}, {"image", encode(image)}, {"witness", w ? encode(*w) : Json()}};
  if (w) j["verified"] = apply_shape(*w, x) == image;
  print(out, j);
  return 0;
}

Json weights_json(const SemidirectLeibniz& L) {
  Json out = Json::array();
  for (const auto& ws : weight_decomposition(L)) out.push_back({{"weight", encode(ws.weight)}, {"dim", ws.vectors.dim()}});
  return out;
}

int cmd_leibniz_build(const Options& o, std::ostream& out) {
  const SlnModel model = model_for(o);
  const SemidirectLeibniz L(model, load_module(model, o.module));
  const Subspace squares = squares_ideal(L.algebra());
  const Quotient q = liezation(L.algebra());
  print(out, {{"module", L.module().name},
              {"algebra", encode(L.algebra())},
              {"leibniz_valid", validate(L.algebra(), AlgebraKind::Leibniz).empty()},
              {"squares_ideal_is_module", squares == L.module_subspace()},
              {"liezation_dim", q.algebra.dim()},
              {"liezation_is_lie", validate(q.algebra, AlgebraKind::Lie).empty()},
              {"simple", is_simple_leibniz(L)},
              {"highest_weight_vector", encode(highest_weight_vector(L))},
              {"weights", weights_json(L)}});
  return 0;
}

int cmd_leibniz_decide(const Options& o, std::ostream& out) {
  const SlnModel model = model_for(o);
  const SemidirectLeibniz L(model, load_module(model, o.module));
  const BlockMap delta = load_block_map(L, o);
  const LeibnizVerdict v = decide_local_aut_leibniz(L, delta);
  Json j = encode(v);
  j["map"] = encode(delta);
  if (v.certificate) j["reverified"] = reverify(L, delta, *v.certificate);
  print(out, j);
  return 0;
}

int cmd_filiform_demo(const Options& o, std::ostream& out) {
  if (o.n < 3) throw InputError("--n must be at least 3");
  const FiliformDemoReport r = filiform_demo(model_filiform(o.n), o.samples, o.seed);
  if (o.json) {
    Json j = encode(r);
    j["seed"] = o.seed;
    print(out, j);
    return 0;
  }
  out << "model filiform algebra, n = " << r.n << ", seed = " << o.seed << "\n";
  out << "Delta = Phi_0: x -> x + x_3 e_n, bijective: " << (r.delta_bijective ? "yes" : "no") << "\n";
  if (r.not_automorphism) {
    out << "not an automorphism: Delta([e" << r.not_automorphism->i + 1 << ", e" << r.not_automorphism->j + 1
        << "]) = " << encode(r.not_automorphism->expected).dump() << " but [Delta e" << r.not_automorphism->i + 1
        << ", Delta e" << r.not_automorphism->j + 1 << "] = " << encode(r.not_automorphism->actual).dump() << "\n";
  } else {
    out << "Delta preserves every bracket\n";
  }
  out << "pointwise witnesses: " << r.phi_witnesses + r.psi_witnesses << "/" << r.samples.size() << " (Phi_1: "
      << r.phi_witnesses << ", Psi_beta: " << r.psi_witnesses << ")\n";
  out << (r.holds() ? "local automorphism that is not an automorphism: confirmed\n" : "claim NOT confirmed\n");
  return 0;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
  const SelfcheckReport r = run_selfcheck(o.seed);
  if (o.json) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back({{"check", e.check}, {"passed", e.passed}, {"detail", e.detail}});
    print(out, {{"seed", r.seed}, {"entries", entries}, {"failures", r.failures()}});
  } else {
    out << "selfcheck, seed = " << r.seed << "\n";
    for (const auto& e : r.entries) out << (e.passed ? "PASS  " : "FAIL  ") << e.check << "  " << e.detail << "\n";
    out << r.failures() << " failure(s)\n";
  }
  return r.failures() == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact local-automorphism checks for sl_n, sl_n + I and filiform algebras", "locaut"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed for sampled checks")->capture_default_str();
    sub->add_flag("--json", o.json, "Emit JSON");
  };
  auto* classify = app.add_subcommand("classify-sln", "Classify a linear map on sl_n");
  auto* classify_m = app.add_subcommand("classify-mn", "Classify a linear map on M_n");
  auto* witness = app.add_subcommand("witness", "Automorphism agreeing with a map at one point");
  auto* build = app.add_subcommand("leibniz-build", "Build sl_n + I and report its structure");
  auto* decide = app.add_subcommand("leibniz-decide", "Decide whether a block map on sl_n + I is a local automorphism");
  auto* demo = app.add_subcommand("filiform-demo", "Local automorphism of a filiform algebra that is not an automorphism");
  auto* self = app.add_subcommand("selfcheck", "Run the invariant suite");

  for (auto* sub : {classify, classify_m, witness, build, decide, demo}) sub->add_option("--n", o.n, "Matrix size or dimension")->required();
  for (auto* sub : {classify, classify_m, witness, decide})
    sub->add_option("--map", o.map, "JSON file, inline JSON or builtin:<identity|transpose|minus|minus-transpose|scale:l>")
        ->required();
  witness->add_option("--at", o.at, "Point as an n x n JSON matrix")->required();
  for (auto* sub : {build, decide}) sub->add_option("--module", o.module, "vm:<m>, natural or adjoint")->capture_default_str();
  decide->add_option("--omega", o.omega, "Coupling scalar for builtin:extended")->capture_default_str();
  demo->add_option("--samples", o.samples, "Number of sample points")->capture_default_str();
  for (auto* sub : {classify, classify_m, witness, build, decide, demo, self}) add_common(sub);

  std::vector<std::string> storage{"locaut"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*classify) return cmd_classify_sln(o, out);
    if (*classify_m) return cmd_classify_mn(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*build) return cmd_leibniz_build(o, out);
    if (*decide) return cmd_leibniz_decide(o, out);
    if (*demo) return cmd_filiform_demo(o, out);
    return cmd_selfcheck(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace locaut
