// Canonical text forms used by scenario files and report certificates.
//
// Printing always emits the canonical form of the canonical representation,
// and parse(print(x)) == x exactly. Formats:
//   Rational          p/q
//   QuadExt           p/q + r/s*sqrt2
//   PLMap             pl[b1 b2 ... | s1,o1 s2,o2 ...]
//   IntervalUnionSet  {3/1 [0/1,1/1) (-inf,2/1]}
//   BlockSet          bs{pts[...] asc(start->limit r=... incl pat=bs{...})}

#pragma once

#include "dynideal/blockset.hpp"
#include "dynideal/iuset.hpp"
#include "dynideal/plmap.hpp"
#include "dynideal/quad.hpp"
#include "dynideal/rational.hpp"

#include <string>

namespace dynideal::text {

std::string print(const Rational& r);
std::string print(const QuadExt& q);
std::string print(const PLMap& f);
std::string print(const IntervalUnionSet& s);
std::string print(const BlockSet& s);

Rational parse_rational(const std::string& t);
QuadExt parse_quad(const std::string& t);
PLMap parse_plmap(const std::string& t);
IntervalUnionSet parse_iuset(const std::string& t);
BlockSet parse_blockset(const std::string& t);

}  // namespace dynideal::text
