#pragma once

#include <nlohmann/json.hpp>

#include "percount/bern.hpp"
#include "percount/realis.hpp"
#include "percount/recur.hpp"
#include "percount/seqlab.hpp"

namespace percount::json_io {

using json = nlohmann::ordered_json;

// All big integers serialise as decimal strings; rationals as "num/den".
json int_str(const Int& x);
json rat_str(const Rat& q);

json to_json(const Sequence& u);
json to_json(const realis::MobiusTransform& t);
json to_json(const realis::RealisabilityVerdict& v);
json to_json(const realis::OrbitCertificate& c);
json to_json(const realis::EverywhereLocalReport& r);
json to_json(const IntMatrix& m);
json to_json(const seqlab::EulerFermatWitness& w);
json to_json(const seqlab::StarDivisibilityReport& r);
json to_json(const recur::ClassificationReport& r);
json to_json(const recur::DominantRootVerdict& v);
json to_json(const recur::PolyAnalysis& a);
json to_json(const bern::Theorem3Report& r);
json to_json(const std::vector<bern::ConjectureProbe>& probes);
json to_json(const bern::KummerInstance& k);

}  // namespace percount::json_io
