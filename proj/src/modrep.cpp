#include "heckealg/modrep.hpp"

namespace heckealg {

namespace {

long tableau_pair_sum(int n, const std::function<bool(const Partition&)>& pred) {
  long acc = 0;
  for (const Partition& mu : partitions_of(n)) {
    if (!pred(mu)) continue;
    long d = static_cast<long>(standard_tableau_count(mu));
    acc += d * d;
  }
  return acc;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

template <class F>
std::vector<std::vector<typename F::Elem>> coord_rows_f(int n, const F& field,
                                                        const std::vector<HeckeElt<F>>& elts) {
  auto m = coord_matrix(n, field, elts);
  std::vector<std::vector<typename F::Elem>> rows;
  rows.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

template <class F>
AnnihilatorReport verify_annihilator_field(const RingSpec& spec, const F& field,
                                           const Partition& la) {
  const int n = la.n();
  AnnihilatorReport rep;
  rep.lambda = la;
  rep.ring = spec;
  PermModule<F> mod(n, field, la);
  auto closed = annihilator_closed(n, field, la);
  rep.closed_rank = static_cast<long>(closed.elements.size());
  rep.containment = true;
  for (const auto& g : closed.elements)
    if (!annihilates_module(mod, g)) {
      rep.containment = false;
      break;
    }
  auto kern = annihilator_kernel(mod);
  rep.kernel_rank = static_cast<long>(kern.size());
  rep.equality = rep.containment && rep.kernel_rank == rep.closed_rank;
  if (rep.equality && !kern.empty()) {
    auto closed_rows = coord_rows_f(n, field, closed.elements);
    auto kern_rows = coord_rows_f(n, field, kern);
    for (const auto& v : kern_rows)
      if (!in_row_span(field, closed_rows, v)) {
        rep.equality = false;
        break;
      }
  }
  return rep;
}

}  // namespace

long annihilator_closed_rank(int n, const Partition& la) {
  Partition lat = la.transpose();
  return tableau_pair_sum(n, [&](const Partition& mu) { return !dominates(lat, mu); });
}

long quotient_cellular_rank(int n, const Partition& la) {
  Partition lat = la.transpose();
  long below = tableau_pair_sum(n, [&](const Partition& mu) { return dominates(lat, mu); });
  if (below != factorial(n) - annihilator_closed_rank(n, la))
    throw std::logic_error("quotient_cellular_rank: rank bookkeeping disagrees");
  return below;
}

std::vector<RingSpec> default_specializations() {
  return {RingSpec::rationals_at(Rat(1)), RingSpec::rationals_at(Rat(2)), RingSpec::prime_field(2, 1),
          RingSpec::prime_field(3, 1), RingSpec::prime_field(5, 1)};
}

AnnihilatorReport verify_annihilator(const RingSpec& spec, const Partition& la) {
  if (!spec.is_field())
    throw std::invalid_argument("verify_annihilator: field ring required (see the integral variant)");
  return with_field(spec, [&](auto field) { return verify_annihilator_field(spec, field, la); });
}

IntegralAnnihilatorReport verify_annihilator_integral(const Partition& la,
                                                      const std::vector<RingSpec>& specials) {
  const int n = la.n();
  IntegralAnnihilatorReport out;
  out.lambda = la;

  // exact containment over the Laurent ring itself
  LaurentRing A;
  PermModule<LaurentRing> mod(n, A, la);
  auto closed = annihilator_closed(n, A, la);
  out.containment_integral = true;
  for (const auto& g : closed.elements)
    if (!annihilates_module(mod, g)) {
      out.containment_integral = false;
      break;
    }

  out.generic = verify_annihilator(RingSpec::rational_function(), la);

  out.certified = out.containment_integral && out.generic.containment && out.generic.equality;
  for (const RingSpec& sp : specials) {
    SpecializationCheck chk;
    chk.ring = sp;
    chk.verdict = is_semisimple(sp, n);
    chk.report = verify_annihilator(sp, la);
    if (!chk.report.containment) out.certified = false;
    if (chk.verdict.semisimple && !chk.report.equality) out.certified = false;
    out.specializations.push_back(std::move(chk));
  }
  return out;
}

AnnihilatorTriple annihilator_equalities(const RingSpec& spec, const Partition& la) {
  if (!spec.is_field()) throw std::invalid_argument("annihilator_equalities: field ring required");
  return with_field(spec, [&](auto field) {
    using F = decltype(field);
    const int n = la.n();
    AnnihilatorTriple out;
    out.lambda = la;
    out.ring = spec;

    CellContext<F> ctx(n, field);
    const auto& mb = ctx.basis();

    // basis of the ideal spanned by cellular elements with shape >= la, and
    // the index set of the la-shaped pairs that span the quotient
    std::vector<HeckeElt<F>> ideal_basis;
    std::vector<size_t> ideal_idx, quot_idx;
    for (size_t j = 0; j < mb.index.size(); ++j) {
      if (!dominates(mb.index[j].shape, la)) continue;
      ideal_basis.push_back(mb.elements[j]);
      ideal_idx.push_back(j);
      if (mb.index[j].shape == la) quot_idx.push_back(j);
    }

    std::function<std::vector<typename F::Elem>(const HeckeElt<F>&)> full_coords =
        [&](const HeckeElt<F>& h) { return elt_coords(h, mb.perm_pos); };
    auto ideal_ann = annihilator_of(field, n, ideal_basis, full_coords);

    std::function<std::vector<typename F::Elem>(const HeckeElt<F>&)> quot_coords =
        [&](const HeckeElt<F>& h) {
          auto c = ctx.solver().coords(h);
          std::vector<typename F::Elem> out_c;
          out_c.reserve(quot_idx.size());
          for (size_t j : quot_idx) out_c.push_back(c[j]);
          return out_c;
        };
    std::vector<HeckeElt<F>> quot_basis;
    for (size_t j : quot_idx) quot_basis.push_back(mb.elements[j]);
    auto quot_ann = annihilator_of(field, n, quot_basis, quot_coords);

    PermModule<F> mod(n, field, la);
    auto mod_ann = annihilator_kernel(mod);

    out.ideal_rank = static_cast<long>(ideal_ann.size());
    out.quotient_rank = static_cast<long>(quot_ann.size());
    out.module_rank = static_cast<long>(mod_ann.size());

    auto ra = coord_rows_f(n, field, ideal_ann);
    auto rb = coord_rows_f(n, field, quot_ann);
    auto rc = coord_rows_f(n, field, mod_ann);
    out.ideal_eq_quotient = row_spans_equal(field, ra, rb);
    out.quotient_eq_module = row_spans_equal(field, rb, rc);
    out.ideal_eq_module = row_spans_equal(field, ra, rc);
    out.all_equal = out.ideal_eq_quotient && out.quotient_eq_module && out.ideal_eq_module;
    return out;
  });
}

}  // namespace heckealg
