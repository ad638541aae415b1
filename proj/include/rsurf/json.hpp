#pragma once

#include <json.hpp>

#include "rsurf/braid.hpp"
#include "rsurf/cremona.hpp"
#include "rsurf/smcg.hpp"
#include "rsurf/tables.hpp"

namespace rsurf {

// Keys keep insertion order so serialized output is stable.
using Json = nlohmann::ordered_json;

// Rationals are written as strings ("1/3") to stay exact.
Json to_json(const Rational& q);
Json to_json(const HomologyClass& x);
Json to_json(const SymplecticVector& w);
Json to_json(const Move& m);
Json to_json(const ReductionTrace& t);
Json to_json(const FormReductionTrace& t);
Json to_json(const FaceLabel& f);
Json to_json(const SMCGReport& r);
Json to_json(const UpperBoundCase& c);
Json to_json(const Table& t);
Json to_json(const braid::FinitePresentation& p);
Json to_json(const braid::IntegerMatrix& m);
Json to_json(const braid::SmithForm& s);
Json to_json(const braid::AbelianInvariants& a);

}  // namespace rsurf
