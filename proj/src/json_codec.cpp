#include "toric/json_codec.hpp"

#include <set>

#include "toric/errors.hpp"

namespace toric::json {

namespace {

json encode_upoly(const UPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Rational decode_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(where + ": expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

UPoly decode_upoly(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a coefficient array");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(decode_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return UPoly(std::move(c));
}

Scalar decode_scalar_at(const json& j, Field field, const std::string& where) {
  switch (field.kind) {
    case Field::Kind::Q: return decode_rational(j, where);
    case Field::Kind::Qq: {
      if (j.is_string() || j.is_number_integer()) return RationalFunction(decode_rational(j, where));
      if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError(where + ": expected {\"num\", \"den\"}");
      const UPoly den = decode_upoly(j["den"], where + ".den");
      if (den.is_zero()) throw ParseError(where + ": zero denominator");
      return RationalFunction(decode_upoly(j["num"], where + ".num"), den);
    }
    case Field::Kind::Cyclotomic: {
      if (!j.is_object() || !j.contains("coords")) throw ParseError(where + ": expected {\"coords\"}");
      return Cyclotomic(field.p, field.M, decode_upoly(j["coords"], where + ".coords"));
    }
  }
  throw ParseError(where + ": unknown field");
}

LaurentA decode_laurent_at(const json& j, Field field, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of monomials");
  LaurentA a(field);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& m = j[i];
    if (!m.is_object() || !m.contains("c") || !m.contains("e")) throw ParseError(at + ": expected {\"c\", \"e\"}");
    const json& e = m["e"];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError(at + ".e: expected [e1, e2]");
    a.add_term(decode_scalar_at(m["c"], field, at + ".c"), {e[0].get<int>(), e[1].get<int>()});
  }
  return a;
}

}  // namespace

json encode(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          return {{"num", encode_upoly(v.num())}, {"den", encode_upoly(v.den())}};
        } else {
          return {{"p", v.p()}, {"M", v.level()}, {"coords", encode_upoly(v.as_poly())}};
        }
      },
      s.repr());
}

json encode(const LaurentA& a) {
  json arr = json::array();
  for (const auto& [e, c] : a.terms()) arr.push_back({{"c", encode(c)}, {"e", {e.e1, e.e2}}});
  return arr;
}

json encode(const ZPoly& z) {
  json arr = json::array();
  for (const auto& [k, c] : z.coeffs()) arr.push_back({{"k", k}, {"coef", encode(c)}});
  return arr;
}

json encode_certificate(const MembershipCertificate& cert, bool verified) {
  json j = json::object();
  for (std::size_t i = 0; i < cert.cofactors.size(); ++i)
    j["u" + std::to_string(i + 1)] = encode(cert.cofactors[i]);
  j["verified"] = verified;
  return j;
}

json encode(const PeriodReport& r) {
  json j;
  j["input"] = r.descriptor;
  j["lA"] = encode(r.lA);
  j["lA_Y"] = r.lA.str();
  j["lA_display_X"] = r.lA_display_X;
  j["member"] = r.member;
  j["certificate"] = r.certificate ? encode_certificate(*r.certificate, true) : json(nullptr);
  j["rational"] = r.rational;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json encode_vector(const PSVector& f) {
  switch (f.kind()) {
    case PSVector::Kind::Sph: return {{"symbolic", "sph"}};
    case PSVector::Kind::IwahoriPhiW: return {{"symbolic", "phi_w"}};
    case PSVector::Kind::Table: {
      json values = json::array();
      for (const auto& [cls, v] : f.table_values()) values.push_back({{"class", cls.str()}, {"poly", encode(v)}});
      return {{"prime", f.table_prime()}, {"level", f.table_level()}, {"values", values}};
    }
    default: throw Error("only table and symbolic vectors have a file form");
  }
}

Scalar decode_scalar(const json& j, Field field) { return decode_scalar_at(j, field, "scalar"); }

LaurentA decode_laurent(const json& j, Field field) { return decode_laurent_at(j, field, "poly"); }

VectorFile decode_vector(const json& j) {
  if (!j.is_object()) throw ParseError("vector file: expected an object");
  if (j.contains("symbolic")) {
    const json& s = j["symbolic"];
    if (s == "sph") return {PSVector::sph(), true};
    if (s == "phi_w") return {PSVector::phi_w(), true};
    throw ParseError("symbolic: expected \"sph\" or \"phi_w\"");
  }
  for (const char* key : {"prime", "level"})
    if (!j.contains(key) || !j[key].is_number_integer()) throw ParseError(std::string(key) + ": expected an integer");
  if (!j.contains("values") || !j["values"].is_array()) throw ParseError("values: expected an array");
  const int p = j["prime"].get<int>();
  const int n = j["level"].get<int>();
  if (p != 2 && p != 3 && p != 5 && p != 7) throw ParseError("prime: " + std::to_string(p) + " not in {2,3,5,7}");
  if (n < 1 || n > 3) throw ParseError("level: " + std::to_string(n) + " not in {1,2,3}");
  const Field field = Field::rationals();
  PSVector::TableValues values;
  const json& arr = j["values"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = "values[" + std::to_string(i) + "]";
    const json& entry = arr[i];
    if (!entry.is_object() || !entry.contains("class") || !entry["class"].is_string())
      throw ParseError(at + ".class: expected a string");
    P1Class cls;
    try {
      cls = P1Class::parse(entry["class"].get<std::string>(), p, n);
    } catch (const ParseError& e) {
      throw ParseError(at + ": " + e.what());
    }
    if (!entry.contains("poly")) throw ParseError(at + ".poly: missing");
    LaurentA v = decode_laurent_at(entry["poly"], field, at + ".poly");
    if (!values.emplace(cls, std::move(v)).second) throw ClassCoverageError("duplicate class " + cls.str() + " at " + at);
  }
  return {PSVector::table(p, n, field, std::move(values)), false};
}

VectorFile parse_vector_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  return decode_vector(j);
}

}  // namespace toric::json
