#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "json_io.hpp"
#include "propositions.hpp"

namespace sgp {

struct SearchConfig {
  Int max_genus = 8;
  std::optional<Int> gen_bound;  // absent: conductor + 2e per semigroup
  Int max_gens = 4;
  std::vector<PropId> props;     // empty: the whole catalog
  Int jobs = 1;
};

namespace detail {

struct PropStats {
  long long checked = 0;
  long long held = 0;
  std::vector<json> violations;
};

// Emits every instance the sweep checks for one semigroup, in a fixed
// order.  The families are chosen so each claim sees instances whose
// hypotheses have a chance to hold without blowing up the instance count;
// hypothesis evaluation itself is always left to check_proposition.
template <typename Emit>
void generate_instances(const NumericalSemigroup& s,
                        const std::vector<FractionalIdeal>& ideals, Int bound,
                        const std::vector<PropId>& props, Emit&& emit) {
  const auto wants = [&props](PropId id) {
    for (PropId p : props)
      if (p == id) return true;
    return false;
  };
  const FractionalIdeal m = FractionalIdeal::maximal(s);
  const FractionalIdeal m2 = product(m, m);
  const auto& mg = s.minimal_generators();

  auto ring_only = [&](PropId id) {
    if (!wants(id)) return;
    PropInstance inst;
    inst.s = &s;
    emit(id, inst);
  };
  ring_only(PropId::P2_3g);
  ring_only(PropId::L2_13);
  ring_only(PropId::T3_5);
  ring_only(PropId::C3_8a);

  if (s.symmetric() && (wants(PropId::T2_20) || wants(PropId::C2_21))) {
    for (Int a = 1; a <= bound; ++a) {
      if (!s.contains(a)) continue;
      PropInstance inst;
      inst.s = &s;
      inst.x = a;
      if (wants(PropId::T2_20)) emit(PropId::T2_20, inst);
      if (wants(PropId::C2_21)) emit(PropId::C2_21, inst);
    }
  }

  // principal-on-principal instances where the containment hypotheses hold
  // by construction
  if (wants(PropId::C3_15)) {
    for (Int b : mg)
      for (Int d : mg) {
        PropInstance inst;
        inst.s = &s;
        inst.i = FractionalIdeal::principal(s, b);
        inst.j = FractionalIdeal::principal(s, d);
        inst.x = b + d;
        emit(PropId::C3_15, inst);
      }
  }

  std::vector<Int> m2m_gens;
  if (wants(PropId::C3_15) || wants(PropId::C3_24))
    m2m_gens = product(m2, m).minimal_generators();
  const std::vector<Int> mm_gens =
      (wants(PropId::C3_15) || wants(PropId::C3_24)) ? m2.minimal_generators()
                                                     : std::vector<Int>{};

  for (const FractionalIdeal& e : ideals) {
    const std::vector<Int> egens = e.minimal_generators();

    if (wants(PropId::P3_11)) {
      Int used = 0;
      for (Int a : egens) {
        if (++used > 4) break;
        PropInstance inst;
        inst.s = &s;
        inst.i = e;
        inst.x = a;
        emit(PropId::P3_11, inst);
      }
    }
    if (wants(PropId::P3_14)) {
      for (Int a : mg) {
        if (!e.member(a)) continue;
        PropInstance inst;
        inst.s = &s;
        inst.i = e;
        inst.x = a;
        emit(PropId::P3_14, inst);
      }
    }
    if (wants(PropId::C3_15)) {
      Int used = 0;
      for (Int x : mm_gens) {
        if (++used > 2) break;
        PropInstance inst;
        inst.s = &s;
        inst.i = e;
        inst.j = m;
        inst.x = x;
        emit(PropId::C3_15, inst);
      }
    }
    if (wants(PropId::P3_18)) {
      PropInstance inst;
      inst.s = &s;
      inst.i = e;
      emit(PropId::P3_18, inst);
    }
    if (wants(PropId::P3_19)) {
      PropInstance inst;
      inst.s = &s;
      inst.i = e;
      emit(PropId::P3_19, inst);
    }
    if (wants(PropId::P3_21)) {
      {
        PropInstance inst;
        inst.s = &s;
        inst.i = e;
        inst.j = m;
        emit(PropId::P3_21, inst);
      }
      for (Int b : mg) {
        PropInstance inst;
        inst.s = &s;
        inst.i = e;
        inst.j = FractionalIdeal::principal(s, b);
        emit(PropId::P3_21, inst);
      }
    }
    if (wants(PropId::P3_22)) {
      for (Int b : mg) {
        PropInstance inst;
        inst.s = &s;
        inst.i = e;
        inst.j = FractionalIdeal::principal(s, b);
        inst.x = b;
        emit(PropId::P3_22, inst);
      }
    }
    if (wants(PropId::C3_24)) {
      for (int which = 0; which < 2; ++which) {
        const FractionalIdeal& f = which == 0 ? m : m2;
        const std::vector<Int>& xs = which == 0 ? mm_gens : m2m_gens;
        Int used = 0;
        for (Int x : xs) {
          if (++used > 2) break;
          PropInstance inst;
          inst.s = &s;
          inst.i = e;
          inst.j = f;
          inst.x = x;
          emit(PropId::C3_24, inst);
        }
      }
    }
    if (wants(PropId::P3_25) || wants(PropId::C3_26a) ||
        wants(PropId::C3_26b)) {
      Int used = 0;
      for (Int a : egens) {
        if (a > bound) continue;
        if (++used > 2) break;
        const FractionalIdeal f =
            colon_r(FractionalIdeal::principal(s, 2 * a), e);
        PropInstance inst;
        inst.s = &s;
        inst.i = e;
        inst.j = f;
        inst.x = a;
        if (wants(PropId::P3_25)) emit(PropId::P3_25, inst);
        if (wants(PropId::C3_26a)) emit(PropId::C3_26a, inst);
        if (wants(PropId::C3_26b)) emit(PropId::C3_26b, inst);
      }
    }
    if (wants(PropId::P3_27)) {
      auto try_pair = [&](const FractionalIdeal& f) {
        PropInstance inst;
        inst.s = &s;
        inst.i = colon_r(e, f);
        inst.j = f;
        inst.k = e;
        emit(PropId::P3_27, inst);
      };
      try_pair(m);
      for (Int b : mg) try_pair(FractionalIdeal::principal(s, b));
    }
  }
}

}  // namespace detail

// Sweeps the whole corpus (genus 1..max_genus; the full semigroup is
// excluded from corpus duty) and returns the report.  The result is
// byte-identical for any worker count: each semigroup's results are
// computed independently and merged in enumeration order.
inline json run_search(const SearchConfig& config) {
  std::vector<PropId> props = config.props;
  if (props.empty())
    for (const auto& sp : prop_catalog()) props.push_back(sp.id);

  std::vector<NumericalSemigroup> corpus;
  for (NumericalSemigroup& s : enumerate_semigroups(config.max_genus))
    if (s.genus() > 0) corpus.push_back(std::move(s));

  const std::size_t nprops = prop_catalog().size();
  auto slot_of = [&](PropId id) {
    for (std::size_t i = 0; i < nprops; ++i)
      if (prop_catalog()[i].id == id) return i;
    return std::size_t{0};
  };

  struct PerSemigroup {
    std::vector<detail::PropStats> stats;
    long long ideal_count = 0;
  };
  std::vector<PerSemigroup> results(corpus.size());

  auto process = [&](std::size_t idx) {
    const NumericalSemigroup& s = corpus[idx];
    const Int bound = config.gen_bound ? *config.gen_bound
                                       : default_gen_bound(s);
    const std::vector<FractionalIdeal> ideals =
        enumerate_ideals(s, bound, config.max_gens);
    PerSemigroup& slot = results[idx];
    slot.stats.assign(nprops, {});
    slot.ideal_count = static_cast<long long>(ideals.size());
    detail::generate_instances(
        s, ideals, bound, props, [&](PropId id, const PropInstance& inst) {
          const PropOutcome out = check_proposition(id, inst);
          detail::PropStats& st = slot.stats[slot_of(id)];
          ++st.checked;
          if (out.hypotheses_hold) ++st.held;
          if (out.violation())
            st.violations.push_back(
                json{{"semigroup", s.minimal_generators()},
                     {"instance", json_instance(inst)},
                     {"evidence", json_evidence(out.evidence)}});
        });
  };

  const Int jobs = std::max<Int>(1, config.jobs);
  if (jobs == 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= corpus.size()) return;
        process(i);
      }
    };
    std::vector<std::thread> pool;
    for (Int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  json prop_blocks = json::object();
  for (std::size_t p = 0; p < nprops; ++p) {
    const PropId id = prop_catalog()[p].id;
    bool selected = false;
    for (PropId q : props) selected = selected || q == id;
    if (!selected) continue;
    long long checked = 0;
    long long held = 0;
    json violations = json::array();
    for (const PerSemigroup& r : results) {
      checked += r.stats[p].checked;
      held += r.stats[p].held;
      for (const json& v : r.stats[p].violations) violations.push_back(v);
    }
    prop_blocks[prop_name(id)] =
        json{{"instances_checked", checked},
             {"hypotheses_held", held},
             {"violation_count", violations.size()},
             {"violations", violations}};
  }

  long long ideal_count = 0;
  for (const PerSemigroup& r : results) ideal_count += r.ideal_count;

  json selected_names = json::array();
  for (const auto& sp : prop_catalog())
    for (PropId q : props)
      if (q == sp.id) selected_names.push_back(sp.name);

  return json{
      {"schema_version", kSchemaVersion},
      {"config",
       {{"max_genus", config.max_genus},
        {"gen_bound",
         config.gen_bound ? json(*config.gen_bound) : json(nullptr)},
        {"max_gens", config.max_gens},
        {"props", selected_names}}},
      {"corpus",
       {{"semigroup_count", corpus.size()}, {"ideal_count", ideal_count}}},
      {"propositions", prop_blocks}};
}

}  // namespace sgp
