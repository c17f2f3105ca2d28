// Text formats.
//
//   monomial   product of factors x<k> or x<k>^<e> joined by '*', e.g. x1*x2^3;
//              "1" is the unit monomial.  Whitespace-insensitive.
//   ideal      header line "vars: n", then comma-separated monomials
//              (possibly over several lines); "0" or nothing means the zero
//              ideal.  parse . print = id.
//   poset      "elements: a,b,c" then one or more "covers: a<b, b<c" lines.
//   family     JSON {"n":5,"C":[[1,2],[2],[3],[4],[4,5]]}; an optional
//              "indices" array carries non-full-support families.
//   DOT        Hasse diagrams drawn bottom-to-top (rankdir=BT).

#pragma once

#include <iosfwd>
#include <string>

#include "suppos/monomial.hpp"
#include "suppos/poset.hpp"
#include "suppos/support_poset.hpp"

namespace suppos {

Monomial parse_monomial(const std::string& text, int vars);
MonomialIdeal parse_ideal(const std::string& text);
MonomialIdeal read_ideal_file(const std::string& path);
std::string print_ideal(const MonomialIdeal& ideal);

Poset parse_poset(const std::string& text);
Poset read_poset_file(const std::string& path);
std::string print_poset(const Poset& poset);

SupportFamily family_from_json(const std::string& text);
SupportFamily read_family_file(const std::string& path);
std::string family_to_json(const SupportFamily& family);

std::string poset_to_dot(const Poset& poset);

}  // namespace suppos
