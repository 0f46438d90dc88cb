#pragma once

// JSON forms used by the command line tool.
//
//   rational        "a/b" or "a"
//   Q(q) element    {"num": [c0, c1, ...], "den": [...]}, coefficient strings
//   Q(zeta)         {"p": p, "M": M, "coords": [...]}
//   monomial        {"c": <scalar>, "e": [e1, e2]}; a polynomial is an array
//   ZPoly           [{"k": k, "coef": <polynomial>}, ...]
//   vector file     {"prime": p, "level": n, "values": [{"class": "[u:1]", "poly": [...]}]}
//                   or {"symbolic": "sph" | "phi_w"}

#include <string>

#include <json.hpp>

#include "toric/family.hpp"
#include "toric/groebner.hpp"
#include "toric/laurent.hpp"
#include "toric/period.hpp"

namespace toric::json {

using nlohmann::json;

json encode(const Scalar& s);
json encode(const LaurentA& a);
json encode(const ZPoly& z);
json encode_certificate(const MembershipCertificate& cert, bool verified);
json encode(const PeriodReport& r);
/// Table and symbolic leaf vectors only.
json encode_vector(const PSVector& f);

Scalar decode_scalar(const json& j, Field field);
LaurentA decode_laurent(const json& j, Field field);

/// The parsed vector and whether it is one of the named symbolic vectors.
struct VectorFile {
  PSVector vector;
  bool symbolic = false;
};

VectorFile decode_vector(const json& j);
/// Parses text; malformed JSON becomes ParseError with the byte offset.
VectorFile parse_vector_file(const std::string& text);

}  // namespace toric::json
