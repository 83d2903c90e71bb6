// JSON helpers shared by the serialization surfaces.  Exact rationals travel
// as {"num": "...", "den": "..."} string pairs so no precision is lost.

#pragma once

#include "hats/rational.hpp"

#include "json.hpp"

namespace hats {

inline nlohmann::json rational_json(const Rational& r) {
  return {{"num", r.num_str()}, {"den", r.den_str()}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

}  // namespace hats
