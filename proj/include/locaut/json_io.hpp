#pragma once

// JSON encoding of scalars, matrices, algebras, maps and verdicts.
// Scalars are strings such as "3/4" or "1/2+3/4*i"; matrices are arrays of
// rows; polynomials are coefficient arrays, lowest degree first; all
// indices are 0-based.

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "locaut/filiform.hpp"
#include "locaut/leibniz.hpp"
#include "locaut/localaut.hpp"

namespace locaut {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json encode(const Scalar& s);
Json encode(const Vector& v);
Json encode(const Matrix& m);
Json encode(const Polynomial& p);
Json encode(const StructureAlgebra& alg);
Json encode(const CanonicalShape& s);
Json encode(const Obstruction& o);
Json encode(const Verdict& v);
Json encode(const BracketFailure& f);
Json encode(const BlockMap& m);
Json encode(const LeibnizCertificate& c);
Json encode(const LeibnizVerdict& v);
Json encode(const FiliformDemoReport& r);

/// Accepts scalar strings and JSON integers.
Scalar decode_scalar(const Json& j);
Vector decode_vector(const Json& j);
Matrix decode_matrix(const Json& j);
/// {"dim", "labels"?, "kind"?, "constants": [[i, j, k, "s"], ...]}.
StructureAlgebra decode_algebra(const Json& j);
BlockMap decode_block_map(const Json& j);

/// Parses text, rethrowing syntax errors as InputError.
Json parse_json(const std::string& text);

}  // namespace locaut
