#pragma once

#include <json.hpp>

#include "heckealg/modrep.hpp"

namespace heckealg {

// JSON forms used by the CLI and by serialized reports.  nlohmann's default
// object type keeps keys sorted, so dumps are byte-stable; array orders
// follow the documented enumeration orders of the underlying types.
using Json = nlohmann::json;

inline Json json_of(const LaurentPoly& a) {
  Json coeffs = Json::array();
  for (const Int& c : a.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"min_exp", a.min_exp()}, {"coeffs", coeffs}};
}

inline Json json_of(const RationalFunction& f) {
  return Json{{"num", json_of(f.num())}, {"den", json_of(f.den())}};
}

inline Json json_of(const RingSpec& spec) {
  switch (spec.tag) {
    case RingSpec::Tag::laurent:
      return Json{{"ring", "laurent"}};
    case RingSpec::Tag::rational_function:
      return Json{{"ring", "qv"}};
    case RingSpec::Tag::rationals_at_q:
      return Json{{"ring", "q_rat"}, {"v", rat_str(spec.v_value)}};
    case RingSpec::Tag::prime_field_at_q:
      return Json{{"ring", "gfp"}, {"p", spec.p}, {"v", spec.v_res}};
  }
  throw std::logic_error("json_of(RingSpec): bad tag");
}

// coefficient forms, dispatched on the ring context
inline Json coeff_json(const LaurentRing&, const LaurentPoly& c) { return json_of(c); }
inline Json coeff_json(const RationalFunctionField&, const RationalFunction& c) {
  return json_of(c);
}
inline Json coeff_json(const RationalAtQ&, const Rat& c) { return rat_str(c); }
inline Json coeff_json(const PrimeFieldAtQ&, const GFpElem& c) { return c.value(); }

inline Json json_of(const Permutation& w) {
  Json a = Json::array();
  for (int i : w.one_line()) a.push_back(i);
  return a;
}

inline Json json_of(const Composition& c) {
  Json a = Json::array();
  for (int p : c.parts()) a.push_back(p);
  return a;
}

inline Json json_of(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) {
    Json r = Json::array();
    for (int e : row) r.push_back(e);
    rows.push_back(r);
  }
  return rows;
}

// terms come out sorted by one-line form, the iteration order of the
// underlying map
template <class R>
Json json_of(const HeckeElt<R>& h, const RingSpec& spec) {
  Json terms = Json::array();
  for (const auto& [w, c] : h.terms())
    terms.push_back(Json{{"perm", json_of(w)}, {"coeff", coeff_json(h.ring(), c)}});
  return Json{{"n", h.n()}, {"ring", json_of(spec)}, {"terms", terms}};
}

template <class R>
Json json_of_matrix(const R& ring, const Matrix<typename R::Elem>& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(coeff_json(ring, m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json json_of(const AnnihilatorReport& r) {
  return Json{{"lambda", json_of(r.lambda)},   {"ring", json_of(r.ring)},
              {"closed_rank", r.closed_rank},  {"kernel_rank", r.kernel_rank},
              {"containment", r.containment},  {"equality", r.equality}};
}

inline Json json_of(const IntegralAnnihilatorReport& r) {
  Json specs = Json::array();
  for (const auto& chk : r.specializations)
    specs.push_back(Json{{"ring", json_of(chk.ring)},
                         {"semisimple", chk.verdict.semisimple},
                         {"reason", chk.verdict.reason},
                         {"report", json_of(chk.report)}});
  return Json{{"lambda", json_of(r.lambda)},
              {"ring", json_of(RingSpec::laurent())},
              {"containment_integral", r.containment_integral},
              {"generic", json_of(r.generic)},
              {"specializations", specs},
              {"certified", r.certified}};
}

inline Json json_of(const AnnihilatorTriple& t) {
  return Json{{"lambda", json_of(t.lambda)},
              {"ring", json_of(t.ring)},
              {"ideal_rank", t.ideal_rank},
              {"quotient_rank", t.quotient_rank},
              {"module_rank", t.module_rank},
              {"ideal_eq_quotient", t.ideal_eq_quotient},
              {"quotient_eq_module", t.quotient_eq_module},
              {"ideal_eq_module", t.ideal_eq_module},
              {"all_equal", t.all_equal}};
}

}  // namespace heckealg
