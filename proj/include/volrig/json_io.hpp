#ifndef VOLRIG_JSON_IO_HPP
#define VOLRIG_JSON_IO_HPP

#include <json.hpp>

#include "volrig/certify.hpp"
#include "volrig/simplicial_complex.hpp"

namespace volrig {

using json = nlohmann::json;

/*
 * Canonical JSON forms. Vertices and edges/facets are emitted sorted, so
 * serialize(parse(x)) is byte-stable. Rationals are "num" or "num/den"
 * strings; prime-field data carries the modulus.
 */

json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json to_json(const SimplicialComplex& s);
SimplicialComplex complex_from_json(const json& j);

json to_json(const Realisation<Rational>& p);
json to_json(const Realisation<Fp>& p);
// Dispatches on the presence of a "prime" key.
bool realisation_json_is_prime(const json& j);
Realisation<Rational> realisation_rational_from_json(const json& j);
Realisation<Fp> realisation_prime_from_json(const json& j);

json to_json(const Matrix<Rational>& m);
json to_json(const Matrix<Fp>& m);
bool matrix_json_is_prime(const json& j);
Matrix<Rational> matrix_rational_from_json(const json& j);
Matrix<Fp> matrix_prime_from_json(const json& j);

json to_json(const RankCertificate& c);
json to_json(const RigidityReport& r);
json to_json(const SplitCheckResult& r);
json to_json(const ConingCheckResult& r);
json to_json(const PaperInstance& i);
json to_json(const PaperCaseReport& r);

} // namespace volrig

#endif
