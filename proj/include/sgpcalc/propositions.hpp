#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "classify.hpp"
#include "errors.hpp"
#include "ideal.hpp"
#include "invariants.hpp"
#include "semigroup.hpp"

namespace sgp {

// Identifiers of the built-in claim catalog, addressable from the CLI.
enum class PropId {
  P2_3g,
  L2_13,
  T2_20,
  C2_21,
  T3_5,
  C3_8a,
  P3_11,
  P3_14,
  C3_15,
  P3_18,
  P3_19,
  P3_21,
  P3_22,
  C3_24,
  P3_25,
  C3_26a,
  C3_26b,
  P3_27,
};

struct PropSpec {
  PropId id;
  const char* name;
  bool needs_i;
  bool needs_j;
  bool needs_k;
  bool needs_x;
  const char* summary;
};

inline const std::vector<PropSpec>& prop_catalog() {
  static const std::vector<PropSpec> table = {
      {PropId::P2_3g, "P2.3g", false, false, false, false,
       "symmetric rings: the Gorenstein index is at most the monomial Loewy "
       "length and at most the multiplicity"},
      {PropId::L2_13, "L2.13", false, false, false, false,
       "the principal ideal on the multiplicity element has colength equal "
       "to the multiplicity"},
      {PropId::T2_20, "T2.20", false, false, false, true,
       "symmetric rings: if adding x shifts orders injectively through the "
       "first index layers, the monomial Loewy length is at most index + "
       "ord(x) - 1 and the corresponding power fits in (x)"},
      {PropId::C2_21, "C2.21", false, false, false, true,
       "symmetric rings: an ord-regular x squeezes the monomial Loewy "
       "length between index and index + ord(x) - 1"},
      {PropId::T3_5, "T3.5", false, false, false, false,
       "Cohen-Macaulay associated graded ring: Elias index = monomial Loewy "
       "length = Ulrich index + 1"},
      {PropId::C3_8a, "C3.8a", false, false, false, false,
       "Cohen-Macaulay associated graded ring: the multiplicity element "
       "witnesses the Loewy length and its reduction number equals the "
       "Ulrich index"},
      {PropId::P3_11, "P3.11", true, false, false, true,
       "if x lands in m*((x):I) then I is Elias"},
      {PropId::P3_14, "P3.14", true, false, false, true,
       "for a minimal generator x of S inside I, the colon criterion holds "
       "iff I = (x)"},
      {PropId::C3_15, "C3.15", true, true, false, true,
       "if IJ fits in (x) and x lies in Jm then I is Elias"},
      {PropId::P3_18, "P3.18", true, false, false, false,
       "Ulrich + Elias implies Burch"},
      {PropId::P3_19, "P3.19", true, false, false, false,
       "Ulrich with I*I different from I*(I:m) implies Burch"},
      {PropId::P3_21, "P3.21", true, true, false, false,
       "if Jm is not inside Im then I + Jm is Burch"},
      {PropId::P3_22, "P3.22", true, true, false, true,
       "if IJ fits in (x) and Jm is not inside Im then I is Burch"},
      {PropId::C3_24, "C3.24", true, true, false, true,
       "if IJ fits in (x), I is not Burch and x lies in Jm, then I and J "
       "are both Elias"},
      {PropId::P3_25, "P3.25", true, true, false, true,
       "if IJ fits in (2x), x lies in I and in Jm, then I is not Burch"},
      {PropId::C3_26a, "C3.26a", true, true, false, true,
       "if IJ fits in (2x), x lies in I and in Jm, then I and J are Elias "
       "and I is not Ulrich"},
      {PropId::C3_26b, "C3.26b", true, true, false, true,
       "if IJ fits in (2x), x lies in J and in Im, then I and J are Elias "
       "and J is not Ulrich"},
      {PropId::P3_27, "P3.27", true, true, true, false,
       "if I = (K:J), J = (K:I) and Im = Jm then I and J are Burch "
       "together"},
  };
  return table;
}

inline const PropSpec& prop_spec(PropId id) {
  for (const auto& p : prop_catalog())
    if (p.id == id) return p;
  throw UnknownPropositionError("<internal>");
}

inline std::string prop_name(PropId id) { return prop_spec(id).name; }

inline PropId prop_from_string(const std::string& name) {
  for (const auto& p : prop_catalog())
    if (name == p.name) return p.id;
  throw UnknownPropositionError(name);
}

// A claim instance: the ring plus whichever ideals / member the claim
// quantifies over.
struct PropInstance {
  const NumericalSemigroup* s = nullptr;
  std::optional<FractionalIdeal> i;
  std::optional<FractionalIdeal> j;
  std::optional<FractionalIdeal> k;
  std::optional<Int> x;
};

using EvidenceValue = std::variant<bool, Int, FractionalIdeal, std::vector<Int>>;
using Evidence = std::vector<std::pair<std::string, EvidenceValue>>;

struct PropOutcome {
  PropId id = PropId::P2_3g;
  bool hypotheses_hold = false;
  // Conclusions are only evaluated when the hypotheses hold; a vacuous
  // instance passes.
  bool conclusion_holds = true;
  Evidence evidence;
  bool violation() const { return hypotheses_hold && !conclusion_holds; }
};

namespace detail {

inline const FractionalIdeal& req_ideal(const std::optional<FractionalIdeal>& e,
                                        const NumericalSemigroup& s,
                                        const char* name) {
  if (!e) throw PreconditionFailedError(std::string("claim needs ideal ") + name);
  require_same_parent(*e, FractionalIdeal::unit(s));
  if (!e->is_integral())
    throw PreconditionFailedError(std::string("ideal ") + name +
                                  " must be integral");
  return *e;
}

inline Int req_member(const std::optional<Int>& x, const NumericalSemigroup& s) {
  if (!x) throw PreconditionFailedError("claim needs a member --x");
  if (*x <= 0 || !s.contains(*x))
    throw PreconditionFailedError("x must be a nonzero member of the semigroup");
  return *x;
}

}  // namespace detail

inline PropOutcome check_proposition(PropId id, const PropInstance& inst) {
  if (inst.s == nullptr) throw PreconditionFailedError("claim needs a semigroup");
  const NumericalSemigroup& s = *inst.s;
  const PropSpec& spec = prop_spec(id);
  PropOutcome out;
  out.id = id;
  Evidence& ev = out.evidence;

  const FractionalIdeal m = FractionalIdeal::maximal(s);
  const FractionalIdeal* I = nullptr;
  const FractionalIdeal* J = nullptr;
  const FractionalIdeal* K = nullptr;
  Int x = 0;
  if (spec.needs_i) I = &detail::req_ideal(inst.i, s, "I");
  if (spec.needs_j) J = &detail::req_ideal(inst.j, s, "J");
  if (spec.needs_k) K = &detail::req_ideal(inst.k, s, "K");
  if (spec.needs_x) x = detail::req_member(inst.x, s);

  switch (id) {
    case PropId::P2_3g: {
      out.hypotheses_hold = s.symmetric();
      ev.emplace_back("symmetric", s.symmetric());
      if (out.hypotheses_hold) {
        const Int idx = elias_index(s);
        const GllResult g = gll_monomial(s);
        ev.emplace_back("index", idx);
        ev.emplace_back("gll", g.g);
        ev.emplace_back("e", s.multiplicity());
        out.conclusion_holds = idx <= g.g && idx <= s.multiplicity();
      }
      break;
    }
    case PropId::L2_13: {
      out.hypotheses_hold = true;
      const Int e = s.multiplicity();
      const Int len = FractionalIdeal::principal(s, e).colength();
      ev.emplace_back("e", e);
      ev.emplace_back("colength", len);
      out.conclusion_holds = (len == e);
      break;
    }
    case PropId::T2_20: {
      if (!s.symmetric()) {
        out.hypotheses_hold = false;
        ev.emplace_back("symmetric", false);
        break;
      }
      const Thm220Report rep = check_thm_2_20(s, x);
      out.hypotheses_hold = rep.injective_up_to_index;
      ev.emplace_back("symmetric", true);
      ev.emplace_back("t", rep.t);
      ev.emplace_back("index", rep.index);
      ev.emplace_back("injective", rep.injective_up_to_index);
      if (out.hypotheses_hold) {
        ev.emplace_back("gll_bound_holds", rep.gll_bound_holds);
        ev.emplace_back("containment_holds", rep.containment_holds);
        out.conclusion_holds = rep.gll_bound_holds && rep.containment_holds;
      }
      break;
    }
    case PropId::C2_21: {
      const bool sym = s.symmetric();
      const bool reg = sym && is_ord_regular(s, x);
      out.hypotheses_hold = sym && reg;
      ev.emplace_back("symmetric", sym);
      ev.emplace_back("ord_regular", reg);
      if (out.hypotheses_hold) {
        const Int idx = elias_index(s);
        const Int g = gll_monomial(s).g;
        const Int t = s.ord(x);
        ev.emplace_back("index", idx);
        ev.emplace_back("gll", g);
        ev.emplace_back("t", t);
        out.conclusion_holds = idx <= g && g <= idx + t - 1;
      }
      break;
    }
    case PropId::T3_5: {
      out.hypotheses_hold = gr_is_cm(s);
      ev.emplace_back("gr_cm", out.hypotheses_hold);
      if (out.hypotheses_hold) {
        const Int eli = elias_index(s);
        const Int ulr = ulrich_index(s);
        const Int g = gll_monomial(s).g;
        ev.emplace_back("eli", eli);
        ev.emplace_back("ulr", ulr);
        ev.emplace_back("gll", g);
        out.conclusion_holds = (eli == g) && (g == ulr + 1);
      }
      break;
    }
    case PropId::C3_8a: {
      out.hypotheses_hold = gr_is_cm(s);
      ev.emplace_back("gr_cm", out.hypotheses_hold);
      if (out.hypotheses_hold) {
        const Int e = s.multiplicity();
        const Int g = gll_monomial(s).g;
        const bool contained =
            subset(power_of_maximal(s, g), FractionalIdeal::principal(s, e));
        const Int red = reduction_number_of_m(s, e);
        const Int ulr = ulrich_index(s);
        ev.emplace_back("gll", g);
        ev.emplace_back("e", e);
        ev.emplace_back("power_in_principal_e", contained);
        ev.emplace_back("reduction_number", red);
        ev.emplace_back("ulr", ulr);
        out.conclusion_holds = contained && red == ulr;
      }
      break;
    }
    case PropId::P3_11: {
      const bool proper = I->is_proper();
      const FractionalIdeal q = colon_q(FractionalIdeal::principal(s, x), *I);
      const FractionalIdeal mq = product(m, q);
      const bool crit = mq.member(x);
      out.hypotheses_hold = proper && crit;
      ev.emplace_back("proper_I", proper);
      ev.emplace_back("colon_xR_I", q);
      ev.emplace_back("m_colon", mq);
      ev.emplace_back("criterion", crit);
      if (out.hypotheses_hold) {
        const bool elias = is_elias(*I);
        ev.emplace_back("elias_I", elias);
        out.conclusion_holds = elias;
      }
      break;
    }
    case PropId::P3_14: {
      const auto& mg = s.minimal_generators();
      if (!std::binary_search(mg.begin(), mg.end(), x))
        throw PreconditionFailedError(
            "x must be a minimal generator of the semigroup");
      if (!I->member(x))
        throw PreconditionFailedError("x must be a member of the ideal");
      out.hypotheses_hold = I->is_proper();
      ev.emplace_back("proper_I", out.hypotheses_hold);
      if (out.hypotheses_hold) {
        const bool crit = elias_colon_criterion(*I, x);
        const bool principal = (*I == FractionalIdeal::principal(s, x));
        ev.emplace_back("criterion", crit);
        ev.emplace_back("is_principal_x", principal);
        out.conclusion_holds = (crit == principal);
      }
      break;
    }
    case PropId::C3_15: {
      const bool proper = I->is_proper();
      const FractionalIdeal ij = product(*I, *J);
      const FractionalIdeal xr = FractionalIdeal::principal(s, x);
      const FractionalIdeal jm = product(*J, m);
      const bool contained = subset(ij, xr);
      const bool in_jm = jm.member(x);
      out.hypotheses_hold = proper && contained && in_jm;
      ev.emplace_back("proper_I", proper);
      ev.emplace_back("IJ", ij);
      ev.emplace_back("xR", xr);
      ev.emplace_back("Jm", jm);
      ev.emplace_back("IJ_in_xR", contained);
      ev.emplace_back("x_in_Jm", in_jm);
      if (out.hypotheses_hold) {
        const bool elias = is_elias(*I);
        ev.emplace_back("elias_I", elias);
        out.conclusion_holds = elias;
      }
      break;
    }
    case PropId::P3_18: {
      const bool proper = I->is_proper();
      const bool ulrich = proper && is_ulrich(*I);
      const bool elias = ulrich && is_elias(*I);
      out.hypotheses_hold = proper && ulrich && elias;
      ev.emplace_back("proper_I", proper);
      ev.emplace_back("ulrich_I", ulrich);
      ev.emplace_back("elias_I", elias);
      if (out.hypotheses_hold) {
        const bool burch = burch_raw(*I);
        ev.emplace_back("burch_I", burch);
        out.conclusion_holds = burch;
      }
      break;
    }
    case PropId::P3_19: {
      const bool proper = I->is_proper();
      const bool ulrich = proper && is_ulrich(*I);
      bool sep = false;
      if (ulrich) {
        const FractionalIdeal ii = product(*I, *I);
        const FractionalIdeal icolon = product(*I, colon_r(*I, m));
        sep = (ii != icolon);
        ev.emplace_back("II", ii);
        ev.emplace_back("I_colon_I_m", icolon);
      }
      out.hypotheses_hold = proper && ulrich && sep;
      ev.emplace_back("proper_I", proper);
      ev.emplace_back("ulrich_I", ulrich);
      ev.emplace_back("products_differ", sep);
      if (out.hypotheses_hold) {
        const bool burch = burch_raw(*I);
        ev.emplace_back("burch_I", burch);
        out.conclusion_holds = burch;
      }
      break;
    }
    case PropId::P3_21: {
      const FractionalIdeal jm = product(*J, m);
      const FractionalIdeal im = product(*I, m);
      const bool dominated = subset(jm, im);
      out.hypotheses_hold = !dominated;
      ev.emplace_back("Jm", jm);
      ev.emplace_back("Im", im);
      ev.emplace_back("Jm_in_Im", dominated);
      if (out.hypotheses_hold) {
        const FractionalIdeal target = sum(*I, jm);
        const bool burch = burch_raw(target);
        ev.emplace_back("I_plus_Jm", target);
        ev.emplace_back("burch_sum", burch);
        out.conclusion_holds = burch;
      }
      break;
    }
    case PropId::P3_22: {
      const FractionalIdeal ij = product(*I, *J);
      const FractionalIdeal xr = FractionalIdeal::principal(s, x);
      const FractionalIdeal jm = product(*J, m);
      const FractionalIdeal im = product(*I, m);
      const bool contained = subset(ij, xr);
      const bool dominated = subset(jm, im);
      out.hypotheses_hold = contained && !dominated;
      ev.emplace_back("IJ", ij);
      ev.emplace_back("xR", xr);
      ev.emplace_back("Jm", jm);
      ev.emplace_back("Im", im);
      ev.emplace_back("IJ_in_xR", contained);
      ev.emplace_back("Jm_in_Im", dominated);
      if (out.hypotheses_hold) {
        const FractionalIdeal colon = colon_r(*I, m);
        const FractionalIdeal mi = product(m, *I);
        const FractionalIdeal mcolon = product(m, colon);
        const bool burch = (mi != mcolon);
        ev.emplace_back("colon_I_m", colon);
        ev.emplace_back("m_I", mi);
        ev.emplace_back("m_colon_I_m", mcolon);
        ev.emplace_back("burch_I", burch);
        out.conclusion_holds = burch;
      }
      break;
    }
    case PropId::C3_24: {
      const bool proper_i = I->is_proper();
      const bool proper_j = J->is_proper();
      const FractionalIdeal ij = product(*I, *J);
      const FractionalIdeal xr = FractionalIdeal::principal(s, x);
      const FractionalIdeal jm = product(*J, m);
      const bool contained = subset(ij, xr);
      const bool not_burch = !burch_raw(*I);
      const bool in_jm = jm.member(x);
      out.hypotheses_hold = proper_i && proper_j && contained && not_burch && in_jm;
      ev.emplace_back("proper_I", proper_i);
      ev.emplace_back("proper_J", proper_j);
      ev.emplace_back("IJ", ij);
      ev.emplace_back("xR", xr);
      ev.emplace_back("Jm", jm);
      ev.emplace_back("IJ_in_xR", contained);
      ev.emplace_back("I_not_burch", not_burch);
      ev.emplace_back("x_in_Jm", in_jm);
      if (out.hypotheses_hold) {
        const bool elias_i = is_elias(*I);
        const bool elias_j = is_elias(*J);
        ev.emplace_back("elias_I", elias_i);
        ev.emplace_back("elias_J", elias_j);
        out.conclusion_holds = elias_i && elias_j;
      }
      break;
    }
    case PropId::P3_25:
    case PropId::C3_26a: {
      const FractionalIdeal ij = product(*I, *J);
      const FractionalIdeal x2r = FractionalIdeal::principal(s, 2 * x);
      const FractionalIdeal jm = product(*J, m);
      const bool contained = subset(ij, x2r);
      const bool in_i = I->member(x);
      const bool in_jm = jm.member(x);
      bool hyp = contained && in_i && in_jm;
      ev.emplace_back("IJ", ij);
      ev.emplace_back("xxR", x2r);
      ev.emplace_back("Jm", jm);
      ev.emplace_back("IJ_in_xxR", contained);
      ev.emplace_back("x_in_I", in_i);
      ev.emplace_back("x_in_Jm", in_jm);
      if (id == PropId::C3_26a) {
        const bool proper_i = I->is_proper();
        const bool proper_j = J->is_proper();
        ev.emplace_back("proper_I", proper_i);
        ev.emplace_back("proper_J", proper_j);
        hyp = hyp && proper_i && proper_j;
      }
      out.hypotheses_hold = hyp;
      if (out.hypotheses_hold) {
        if (id == PropId::P3_25) {
          const bool burch = burch_raw(*I);
          ev.emplace_back("burch_I", burch);
          out.conclusion_holds = !burch;
        } else {
          const bool elias_i = is_elias(*I);
          const bool elias_j = is_elias(*J);
          const bool ulrich_i = is_ulrich(*I);
          ev.emplace_back("elias_I", elias_i);
          ev.emplace_back("elias_J", elias_j);
          ev.emplace_back("ulrich_I", ulrich_i);
          out.conclusion_holds = elias_i && elias_j && !ulrich_i;
        }
      }
      break;
    }
    case PropId::C3_26b: {
      const FractionalIdeal ij = product(*I, *J);
      const FractionalIdeal x2r = FractionalIdeal::principal(s, 2 * x);
      const FractionalIdeal im = product(*I, m);
      const bool contained = subset(ij, x2r);
      const bool in_j = J->member(x);
      const bool in_im = im.member(x);
      const bool proper_i = I->is_proper();
      const bool proper_j = J->is_proper();
      out.hypotheses_hold =
          contained && in_j && in_im && proper_i && proper_j;
      ev.emplace_back("IJ", ij);
      ev.emplace_back("xxR", x2r);
      ev.emplace_back("Im", im);
      ev.emplace_back("IJ_in_xxR", contained);
      ev.emplace_back("x_in_J", in_j);
      ev.emplace_back("x_in_Im", in_im);
      ev.emplace_back("proper_I", proper_i);
      ev.emplace_back("proper_J", proper_j);
      if (out.hypotheses_hold) {
        const bool elias_i = is_elias(*I);
        const bool elias_j = is_elias(*J);
        const bool ulrich_j = is_ulrich(*J);
        ev.emplace_back("elias_I", elias_i);
        ev.emplace_back("elias_J", elias_j);
        ev.emplace_back("ulrich_J", ulrich_j);
        out.conclusion_holds = elias_i && elias_j && !ulrich_j;
      }
      break;
    }
    case PropId::P3_27: {
      const FractionalIdeal kj = colon_r(*K, *J);
      const FractionalIdeal ki = colon_r(*K, *I);
      const FractionalIdeal im = product(*I, m);
      const FractionalIdeal jm = product(*J, m);
      const bool eq_i = (*I == kj);
      const bool eq_j = (*J == ki);
      const bool eq_m = (im == jm);
      out.hypotheses_hold = eq_i && eq_j && eq_m;
      ev.emplace_back("colon_K_J", kj);
      ev.emplace_back("colon_K_I", ki);
      ev.emplace_back("Im", im);
      ev.emplace_back("Jm", jm);
      ev.emplace_back("I_is_colon_K_J", eq_i);
      ev.emplace_back("J_is_colon_K_I", eq_j);
      ev.emplace_back("Im_equals_Jm", eq_m);
      if (out.hypotheses_hold) {
        const bool burch_i = burch_raw(*I);
        const bool burch_j = burch_raw(*J);
        ev.emplace_back("burch_I", burch_i);
        ev.emplace_back("burch_J", burch_j);
        out.conclusion_holds = (burch_i == burch_j);
      }
      break;
    }
  }
  return out;
}

}  // namespace sgp
