#include "percount/json_io.hpp"

namespace percount::json_io {

json int_str(const Int& x) { return x.get_str(); }

json rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

static json terms_array(const std::vector<Int>& terms) {
  json a = json::array();
  for (const Int& t : terms) a.push_back(t.get_str());
  return a;
}

json to_json(const Sequence& u) {
  return json{{"length", u.length()}, {"terms", terms_array(u.terms)}};
}

json to_json(const realis::MobiusTransform& t) {
  return json{{"length", t.length()}, {"star", terms_array(t.star)}};
}

json to_json(const realis::RealisabilityVerdict& v) {
  json failures = json::array();
  for (const realis::Failure& f : v.failures) {
    failures.push_back(json{
        {"n", f.n},
        {"kind", f.kind == realis::FailureKind::negative ? "negative" : "not_divisible"},
        {"star", f.star_value.get_str()},
    });
  }
  return json{{"realisable_up_to_n", v.realisable_up_to_n},
              {"checked_n", v.checked_n},
              {"failures", failures}};
}

json to_json(const realis::OrbitCertificate& c) {
  return json{{"counts", terms_array(c.counts)}};
}

json to_json(const realis::EverywhereLocalReport& r) {
  json by_prime = json::object();
  for (const auto& [p, v] : r.by_prime) by_prime[std::to_string(p)] = to_json(v);
  return json{{"checked_n", r.checked_n},
              {"all_primes_pass", r.all_primes_pass},
              {"reconstruction_ok", r.reconstruction_ok},
              {"by_prime", by_prime}};
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim; ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return json{{"dim", m.dim}, {"rows", rows}};
}

json to_json(const seqlab::EulerFermatWitness& w) {
  return json{{"holds", w.holds},
              {"p", w.p},
              {"r", w.r},
              {"modulus", w.modulus.get_str()},
              {"trace_high", w.trace_high.get_str()},
              {"trace_low", w.trace_low.get_str()}};
}

json to_json(const seqlab::StarDivisibilityReport& r) {
  json failures = json::array();
  for (const auto& [n, star] : r.failures)
    failures.push_back(json{{"n", n}, {"star", star.get_str()}});
  return json{{"all_divisible", r.all_divisible},
              {"checked_n", r.checked_n},
              {"failures", failures}};
}

static const char* case_name(recur::DiscCase c) {
  switch (c) {
    case recur::DiscCase::neg_disc:
      return "neg_disc";
    case recur::DiscCase::zero_disc:
      return "zero_disc";
    case recur::DiscCase::pos_square_disc:
      return "pos_square_disc";
    case recur::DiscCase::pos_nonsquare_disc:
      return "pos_nonsquare_disc";
  }
  return "?";
}

json to_json(const recur::ClassificationReport& r) {
  json generators = json::array();
  for (const recur::GeneratorSeq& g : r.generators) {
    generators.push_back(json{{"rule", g.rule}, {"prefix", terms_array(g.prefix.terms)}});
  }
  return json{{"case", case_name(r.disc_case)},
              {"discriminant", r.discriminant.get_str()},
              {"dimension", r.dimension},
              {"generators", generators},
              {"notes", r.notes}};
}

json to_json(const recur::DominantRootVerdict& v) {
  const char* kind = v.kind == recur::DominantRootKind::yes
                         ? "yes"
                         : (v.kind == recur::DominantRootKind::no ? "no" : "inconclusive");
  return json{{"verdict", kind},
              {"modulus_gap", v.modulus_gap},
              {"precision_bits", v.precision_bits},
              {"detail", v.detail}};
}

json to_json(const recur::PolyAnalysis& a) {
  return json{{"separable", a.separable},
              {"factor_count", a.factor_count},
              {"dominant_root", to_json(a.dominant)},
              {"bound_available", a.bound_available},
              {"bound", a.bound_available ? json(a.bound) : json(nullptr)},
              {"reason", a.reason}};
}

json to_json(const bern::Theorem3Report& r) {
  json locals = json::object();
  for (const auto& [p, v] : r.local_verdicts) locals[std::to_string(p)] = to_json(v);
  return json{{"checked_n", r.checked_n},
              {"global_pass", r.global_pass},
              {"local_values_match", r.local_values_match},
              {"all_local_pass", r.all_local_pass},
              {"local_verdicts", locals}};
}

json to_json(const std::vector<bern::ConjectureProbe>& probes) {
  json out = json::array();
  for (const bern::ConjectureProbe& probe : probes) {
    json locals = json::object();
    for (const auto& [p, res] : probe.locals) {
      locals[std::to_string(p)] =
          json{{"pass", res.pass}, {"first_failure_n", res.first_failure_n}};
    }
    out.push_back(json{{"sequence", probe.sequence_name},
                       {"global_pass", probe.global_pass},
                       {"locals", locals}});
  }
  return out;
}

json to_json(const bern::KummerInstance& k) {
  return json{{"p", k.p},
              {"r", k.r},
              {"n", k.n},
              {"n_prime", k.n_prime},
              {"lhs", rat_str(k.lhs)},
              {"rhs", rat_str(k.rhs)},
              {"valuation", k.difference_zero ? json("inf") : json(k.valuation)},
              {"pass", k.pass}};
}

}  // namespace percount::json_io
