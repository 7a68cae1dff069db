#pragma once

#include "conemom/asymptotics.hpp"
#include "conemom/classify.hpp"
#include "conemom/potential.hpp"
#include "conemom/profile.hpp"
#include "conemom/rational_function.hpp"
#include "conemom/sasaki.hpp"
#include "conemom/toric.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace conemom {

// Insertion-ordered so identical inputs dump to identical bytes.
using json = nlohmann::ordered_json;

// %.17g — every double round-trips and formats identically everywhere.
std::string format_double(double x);

// Serializes with fixed key order and %.17g doubles; nlohmann's own dump()
// would pick the shortest representation instead, so we walk the tree
// ourselves.  No whitespace; objects/arrays in insertion order.
std::string dump_json(const json& j);

json to_json(const Rational& q);                // "num/den" (den omitted when 1)
json to_json(const Poly& p);                    // coefficients low-to-high
json to_json(const RationalFunction& f);        // {"num": [...], "den": [...]}
json to_json(const Profile& pr);
json to_json(const EndpointBehavior& eb);
json to_json(const ClassificationReport& rep);
json to_json(const SolveC0Result& res);
json to_json(const EtaEinsteinData& data);      // {"m","lambda","nu","kappa"}
json to_json(const PrimitiveMinimalReport& rep);
json to_json(const GoodnessCertificate& cert);
json to_json(const HeightResult& h);
json to_json(const ReebReport& rep);
json to_json(const AsymptoticReport& rep);
json to_json(const PotentialTable& table);

// header tau,t,F,G,s then one %.17g row per sample
void write_potential_csv(std::ostream& os, const PotentialTable& table);

// Diagram input {"lambda": [[int,...],...], "xi": ["num/den",...]} with xi
// optional.  The struct is filled directly (not via ToricDiagram::make) so
// invalid diagrams can still be diagnosed by the checks instead of thrown
// away at the door; structural problems (ragged rows, empty matrix, bad
// types) throw errc::invalid_argument.
struct DiagramInput {
    ToricDiagram diagram;
    std::optional<ReebVector> xi;
};

DiagramInput parse_diagram(const json& j);

}  // namespace conemom
