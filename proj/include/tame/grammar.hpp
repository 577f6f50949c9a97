#pragma once

#include <string>

#include "tame/huber.hpp"
#include "tame/places.hpp"
#include "tame/poly.hpp"
#include "tame/value.hpp"

namespace tame {

/* Canonical renderings; parse(print(x)) == x and print(parse(s)) == s for
   canonical s. */
std::string field_str(const FqRef& F);
std::string poly_str(const Poly& f);
std::string ratfunc_str(const RatFunc& f);
std::string place_str(const PlaceValuation& v);
std::string pair_str(const HuberPairDesc& pair);

FqRef parse_field(const std::string& s);
Poly parse_poly(const std::string& s, const FqRef& F);
RatFunc parse_ratfunc(const std::string& s, const FqRef& F);
PlaceRef parse_place(const std::string& s, const FqRef& F);
Value parse_value(const std::string& s);
HuberPairDesc parse_pair(const std::string& s);

}  // namespace tame
