#pragma once

#include "qloop/adhm.hpp"
#include "qloop/cartan.hpp"
#include "qloop/fixedpoints.hpp"
#include "qloop/lweight.hpp"
#include "qloop/rank1.hpp"

#include <json.hpp>

#include <string>

namespace qloop {

using Json = nlohmann::json;

// All readers throw ValidationError on malformed input.

Json laurent_to_json(const LaurentQ& c);
LaurentQ laurent_from_json(const Json& j);

// {"nvars":N,"terms":[{"x":[e1,...,eN],"q":{"0":"1","2":"-1"}}]}
Json poly_to_json(const MultiLaurent& p);
MultiLaurent poly_from_json(const Json& j);

// {"N":2,"v":1,"poly":<polynomial>}
Json grass_to_json(const GrassElement& g);
GrassElement grass_from_json(const Json& j);

Json param_to_json(const SpectralParam& a);
SpectralParam param_from_json(const Json& j);

// {"Y":[{"k":"1","base":"a","epow":0,"exp":1}]}
Json monomial_to_json(const YMonomial& m);
YMonomial monomial_from_json(const Json& j);

// {"dimension":d,"terms":[{"mult":1,"Y":[...]}]}
Json qchar_to_json(const QCharacter& c);
QCharacter qchar_from_json(const Json& j);

// {"P":{"1":[{"base":"a","epow":0}]},"text":{"1":"(1 - u*a)"}}
Json drinfeld_to_json(const DrinfeldPoly& p);

// {"vertices":["1","2"],"edges":[{"out":"1","in":"2"}]}
Json graph_to_json(const QuiverGraph& g);
QuiverGraph graph_from_json(const Json& j);

Rational rational_from_string(const std::string& s);
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j, int rows, int cols);

// {"graph":..., "v":{"1":1}, "w":{"1":2},
//  "B":[{"out":"1","in":"2","index":1,"matrix":[["1"]]}],  (index numbers parallel edges from 1)
//  "i":{"1":[["1","0"]]}, "j":{"1":[["0"],["1"]]},
//  optional "grading":{"V":{"1":{"basis":[...],"labels":["a*e^1"]}},"W":{...}}}
// Missing matrices are zero.
Json adhm_to_json(const ADHMData& d);
ADHMData adhm_from_json(const Json& j);
bool adhm_has_grading(const Json& j);
void grading_from_json(const Json& j, const ADHMData& d, std::vector<GradedBasis>& vg, std::vector<GradedBasis>& wg);

// {"V":[{"k":"1","param":"a*e^1","dim":1}],"W":[...]}
Json graded_dims_to_json(const GradedDims& g);
GradedDims graded_dims_from_json(const Json& j);

// File helpers: IoError on read/write failure, ValidationError on bad JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace qloop
