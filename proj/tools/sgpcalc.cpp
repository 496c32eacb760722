// Command-line surface.  All commands speak one JSON schema (--json); the
// plain output is a flattened view of the same document.  Exit codes:
//   0 ok (claim violations are data, not failures)
//   1 usage
//   2 parse errors in semigroup/ideal literals
//   3 domain preconditions (non-coprime generators, non-integral ideal,
//     unknown claim id, index of a non-Gorenstein ring, ...)
//   4 window/bound overruns and I/O failures

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sgpcalc/sgpcalc.hpp>

namespace {

using sgp::Int;
using sgp::json;

void print_flat(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    if (j.empty()) {
      if (!prefix.empty()) os << prefix << ": {}\n";
      return;
    }
    for (const auto& [key, value] : j.items())
      print_flat(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array()) {
    bool scalar_only = true;
    for (const auto& v : j) scalar_only = scalar_only && !v.is_structured();
    if (scalar_only) {
      os << prefix << ": " << j.dump() << "\n";
      return;
    }
    std::size_t i = 0;
    for (const auto& v : j)
      print_flat(v, prefix + "[" + std::to_string(i++) + "]", os);
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const json& doc, bool as_json) {
  if (as_json)
    std::cout << sgp::json_text(doc);
  else
    print_flat(doc, "", std::cout);
}

// Commands that scan membership windows first run on the default window and
// rebuild with a larger hint if an operation reports it was too small.  The
// semigroup's own hard cap still applies, so this terminates.
template <typename F>
json with_window_retries(const std::vector<Int>& gens, F&& fn) {
  Int hint = 0;
  for (int attempt = 0;; ++attempt) {
    const sgp::NumericalSemigroup s(gens, hint);
    try {
      return fn(s);
    } catch (const sgp::OutOfWindowError& ex) {
      if (attempt >= 8) throw;
      hint = std::max(2 * s.window(), ex.need + 4 * s.multiplicity() + 2);
    }
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sgpcalc: exact invariants, ideal classification, and claim checking "
      "for numerical semigroup rings"};
  app.require_subcommand(1);

  std::string inv_s;
  bool inv_json = false;
  CLI::App* inv =
      app.add_subcommand("invariants", "ring invariants of a semigroup");
  inv->add_option("semigroup", inv_s, "semigroup literal, e.g. \"<4,6,7>\"")
      ->required();
  inv->add_flag("--json", inv_json, "emit JSON");

  std::string cls_s;
  std::string cls_i;
  std::vector<Int> cls_w;
  bool cls_json = false;
  CLI::App* cls = app.add_subcommand(
      "classify", "classify an integral ideal (Elias / Burch / Ulrich)");
  cls->add_option("semigroup", cls_s, "semigroup literal")->required();
  cls->add_option("ideal", cls_i, "ideal literal, e.g. \"(7,8)\"")->required();
  cls->add_option("--witness", cls_w,
                  "extra colon-criterion witness (repeatable)");
  cls->add_flag("--json", cls_json, "emit JSON");

  std::string chk_prop;
  std::string chk_s;
  std::string chk_i;
  std::string chk_j;
  std::string chk_k;
  Int chk_x = 0;
  bool chk_json = false;
  CLI::App* chk = app.add_subcommand(
      "check", "evaluate one claim from the built-in catalog on an instance");
  chk->add_option("prop", chk_prop, "claim id, e.g. P3.22")->required();
  chk->add_option("semigroup", chk_s, "semigroup literal")->required();
  CLI::Option* opt_i = chk->add_option("--I", chk_i, "ideal literal");
  CLI::Option* opt_j = chk->add_option("--J", chk_j, "ideal literal");
  CLI::Option* opt_k = chk->add_option("--K", chk_k, "ideal literal");
  CLI::Option* opt_x = chk->add_option("--x", chk_x, "member witness");
  chk->add_flag("--json", chk_json, "emit JSON");

  sgp::SearchConfig cfg;
  Int sr_gen_bound = 0;
  std::string sr_props;
  std::string sr_out = "search_report.json";
  bool sr_json = false;
  CLI::App* sr = app.add_subcommand(
      "search", "sweep the claim catalog over the enumerated corpus");
  sr->add_option("--max-genus", cfg.max_genus, "genus bound (default 8)");
  CLI::Option* opt_gb = sr->add_option(
      "--gen-bound", sr_gen_bound,
      "ideal generator bound (default: conductor + 2e per semigroup)");
  sr->add_option("--max-gens", cfg.max_gens,
                 "max generators per enumerated ideal (default 4)");
  sr->add_option("--props", sr_props,
                 "comma-separated claim ids (default: whole catalog)");
  sr->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
  sr->add_option("--out", sr_out, "report path (default search_report.json)");
  sr->add_flag("--json", sr_json, "print the full report to stdout");

  std::string hb_s;
  Int hb_upto = 0;
  bool hb_json = false;
  CLI::App* hb = app.add_subcommand(
      "hilbert", "lengths of R modulo powers of the maximal ideal");
  hb->add_option("semigroup", hb_s, "semigroup literal")->required();
  hb->add_option("--upto", hb_upto, "largest power n (lengths for 1..n)")
      ->required();
  hb->add_flag("--json", hb_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*inv) {
      const auto gens = sgp::detail::parse_int_list(inv_s, '<', '>');
      const json doc =
          with_window_retries(gens, [&](const sgp::NumericalSemigroup& s) {
            const sgp::InvariantReport r = sgp::make_invariant_report(s);
            return json{{"schema_version", sgp::kSchemaVersion},
                        {"semigroup", sgp::json_semigroup(s)},
                        {"invariants", sgp::json_invariants(r)}};
          });
      emit(doc, inv_json);
    } else if (*cls) {
      const auto gens = sgp::detail::parse_int_list(cls_s, '<', '>');
      const json doc =
          with_window_retries(gens, [&](const sgp::NumericalSemigroup& s) {
            const sgp::FractionalIdeal e = sgp::parse_ideal(s, cls_i);
            const sgp::ClassificationReport r = sgp::classify(e, cls_w);
            return json{{"schema_version", sgp::kSchemaVersion},
                        {"semigroup", sgp::json_semigroup(s)},
                        {"ideal", sgp::json_ideal(e)},
                        {"classification", sgp::json_classification(r)}};
          });
      emit(doc, cls_json);
    } else if (*chk) {
      const sgp::PropId id = sgp::prop_from_string(chk_prop);
      const auto gens = sgp::detail::parse_int_list(chk_s, '<', '>');
      const json doc =
          with_window_retries(gens, [&](const sgp::NumericalSemigroup& s) {
            sgp::PropInstance inst;
            inst.s = &s;
            if (opt_i->count()) inst.i = sgp::parse_ideal(s, chk_i);
            if (opt_j->count()) inst.j = sgp::parse_ideal(s, chk_j);
            if (opt_k->count()) inst.k = sgp::parse_ideal(s, chk_k);
            if (opt_x->count()) inst.x = chk_x;
            const sgp::PropOutcome out = sgp::check_proposition(id, inst);
            return json{{"schema_version", sgp::kSchemaVersion},
                        {"semigroup", sgp::json_semigroup(s)},
                        {"instance", sgp::json_instance(inst)},
                        {"outcomes", json::array({sgp::json_outcome(out)})}};
          });
      emit(doc, chk_json);
    } else if (*sr) {
      if (opt_gb->count()) cfg.gen_bound = sr_gen_bound;
      if (!sr_props.empty())
        for (const std::string& part : split_commas(sr_props))
          if (!part.empty()) cfg.props.push_back(sgp::prop_from_string(part));
      const json report = sgp::run_search(cfg);
      {
        std::ofstream os(sr_out, std::ios::binary);
        os << sgp::json_text_compact(report);
        os.close();
        if (!os) {
          std::cerr << "error: cannot write " << sr_out << "\n";
          return 4;
        }
      }
      if (sr_json) {
        std::cout << sgp::json_text_compact(report);
      } else {
        std::cout << "semigroups: " << report["corpus"]["semigroup_count"]
                  << "\n";
        std::cout << "ideals: " << report["corpus"]["ideal_count"] << "\n";
        for (const auto& [name, block] : report["propositions"].items())
          std::cout << name << ": checked " << block["instances_checked"]
                    << ", hypotheses held " << block["hypotheses_held"]
                    << ", violations " << block["violation_count"] << "\n";
        std::cout << "report written to " << sr_out << "\n";
      }
    } else if (*hb) {
      if (hb_upto < 0)
        throw sgp::PreconditionFailedError("--upto must be nonnegative");
      const auto gens = sgp::detail::parse_int_list(hb_s, '<', '>');
      const json doc =
          with_window_retries(gens, [&](const sgp::NumericalSemigroup& s) {
            std::vector<Int> lens;
            for (Int n = 1; n <= hb_upto; ++n)
              lens.push_back(sgp::samuel_length(s, n));
            return json{{"schema_version", sgp::kSchemaVersion},
                        {"semigroup", sgp::json_semigroup(s)},
                        {"samuel", lens}};
          });
      emit(doc, hb_json);
    }
    return 0;
  } catch (const sgp::ParseError& ex) {
    std::cerr << ex.what() << "\n";
    return 2;
  } catch (const sgp::OutOfWindowError& ex) {
    std::cerr << ex.what() << "\n";
    return 4;
  } catch (const sgp::BoundExceededError& ex) {
    std::cerr << ex.what() << "\n";
    return 4;
  } catch (const sgp::Error& ex) {
    std::cerr << ex.what() << "\n";
    return 3;
  }
}
