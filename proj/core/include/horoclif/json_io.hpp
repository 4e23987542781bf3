#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "horoclif/errors.hpp"
#include "horoclif/hyperbolic.hpp"
#include "horoclif/lambda.hpp"
#include "horoclif/matrix.hpp"
#include "horoclif/minkowski.hpp"
#include "horoclif/multivector.hpp"
#include "horoclif/spinor.hpp"

namespace horoclif {

// All writers are deterministic: fixed key order, coefficients in ascending
// blade-mask order, every number printed with 17 significant digits.

// "" for the scalar blade, otherwise comma-joined ascending generator
// indices, e.g. "1,3" for the product of generators 1 and 3.
std::string blade_key(std::uint32_t mask);

std::string format_double(double x);

std::string json_coeffs(const Multivector& m);       // the bare coefficient map
std::string json_multivector(const Multivector& m);  // {"p","q","coeffs"}
std::string json_spinor(const Spinor& k);            // {"n","xi","eta"}
std::string json_matrix(const CliffordMatrix& m);    // {"n","a","b","c","d"}
std::string json_minkowski(const MinkowskiPoint& p); // {"T","Z","X"}
std::string json_multiflag(const Multiflag& mf);     // {"base","vectors"}
std::string json_horosphere(const DecoratedHorosphere& h);
std::string json_boundary_point(const ParavectorPoint& p);  // coeffs map or "inf"
std::string json_geodesic(const Geodesic& g);        // {"from","to"}
std::string json_lambda_matrix(const LambdaMatrix& lm);
std::string json_error(const Error& e);              // {"clause","residual"}
std::string json_relation_report(const std::string& relation, double residual,
                                 double conditioning, bool pass);

// Parsers throw DomainError on malformed input and propagate the domain
// validation errors of the types they build.
Multivector parse_multivector(const std::string& text);  // {"p","q","coeffs"}
Spinor parse_spinor(const std::string& text);
// Accepts a single spinor object, a bare array of them, or {"spinors":[...]}.
std::vector<Spinor> parse_spinors(const std::string& text);
CliffordMatrix parse_matrix(const std::string& text, MatrixFlavor flavor);

// Flattens a JSON document into deterministic "key,value" rows (header
// included), dotted paths for objects and numeric indices for arrays.
std::string json_to_csv(const std::string& json_text);

}  // namespace horoclif
