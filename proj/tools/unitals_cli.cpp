// Command-line surface for unital construction, verification, configuration
// search, translation groups, Wilbrink's conditions and classification.
//
// Exit codes: 0 expected result, 1 property failed or unexpected result,
// 2 usage, parse or I/O error. Reports are "key: value" lines on stdout with
// a final "RESULT: pass|fail"; progress noise goes to stderr only.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "unitals/automorphisms.hpp"
#include "unitals/classical.hpp"
#include "unitals/configurations.hpp"
#include "unitals/errors.hpp"
#include "unitals/field.hpp"
#include "unitals/unital.hpp"
#include "unitals/wilbrink.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

int finish(bool pass) {
  std::cout << "RESULT: " << (pass ? "pass" : "fail") << "\n";
  return pass ? kPass : kFail;
}

int input_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kError;
}

unitals::Unital load_verified(const std::string& path) {
  unitals::Unital u = unitals::load_unital(path);
  unitals::DesignReport rep = u.verify();
  if (!rep.pass)
    throw unitals::ParseError(
        0, "input fails design verification (" +
               rep.violations.front().describe() + "); run the verify command");
  return u;
}

int cmd_gen(int q, const std::string& out, bool verbose) {
  if (q > 16) return input_error("order exceeds the supported range (16)");
  unitals::FieldTables gf = unitals::FieldTables::build(q);
  unitals::Unital u = unitals::classical_unital(gf);
  unitals::save_unital(u, out);
  std::cout << "command: gen\n";
  std::cout << "q: " << q << "\n";
  if (verbose) {
    if (!gf.base_poly().empty())
      std::cout << "base-field: GF(" << q << ") = GF(" << gf.characteristic()
                << ")[u]/(" << gf.base_poly() << ")\n";
    std::cout << "field: GF(" << q * q << ") = GF(" << q << ")[t]/("
              << gf.extension_poly() << ")\n";
  }
  std::cout << "points: " << u.num_points() << "\n";
  std::cout << "blocks: " << u.num_blocks() << "\n";
  std::cout << "out: " << out << "\n";
  return finish(true);
}

int cmd_verify(const std::string& path) {
  unitals::RawUnitalFile raw = unitals::load_raw(path);
  long long expected_v =
      static_cast<long long>(raw.q) * raw.q * raw.q + 1;
  if (raw.declared_points != expected_v)
    throw unitals::ParseError(3, "points must equal order^3 + 1");
  unitals::DesignReport rep = unitals::verify_design(raw.blocks, raw.q);
  std::cout << "command: verify\n";
  std::cout << "file: " << path << "\n";
  std::cout << "order: " << raw.q << "\n";
  std::cout << "points: " << rep.v << "\n";
  std::cout << "blocks: " << rep.b << "\n";
  if (rep.pass) std::cout << "blocks-per-point: " << rep.r << "\n";
  std::cout << "violations: " << rep.violations.size() << "\n";
  for (const unitals::DesignViolation& viol : rep.violations)
    std::cout << "violation: " << viol.describe() << "\n";
  return finish(rep.pass);
}

int cmd_onan(const std::string& path, const std::string& expect,
             bool linear_space, int threads) {
  unitals::Unital u = unitals::load_unital(
      path, linear_space ? unitals::LoadMode::LinearSpace
                         : unitals::LoadMode::Strict);
  std::optional<unitals::ONanWitness> w = unitals::find_onan(u, threads);
  std::cout << "command: onan\n";
  std::cout << "file: " << path << "\n";
  if (w) {
    std::cout << "onan: blocks:";
    for (int blk : w->blocks) std::cout << " " << blk;
    std::cout << " / points:";
    for (int p : w->points) std::cout << " " << p;
    std::cout << "\n";
  } else {
    std::cout << "onan: none\n";
  }
  bool pass = true;
  if (!expect.empty()) {
    std::cout << "expect: " << expect << "\n";
    pass = (expect == "none") == !w.has_value();
  }
  return finish(pass);
}

int cmd_translations(const std::string& path, std::optional<int> center) {
  unitals::Unital u = load_verified(path);
  std::cout << "command: translations\n";
  std::cout << "file: " << path << "\n";
  std::cout << "order: " << u.order() << "\n";
  int lo = center.value_or(0), hi = center ? *center + 1 : u.num_points();
  if (lo < 0 || hi > u.num_points()) return input_error("center out of range");
  bool all = true;
  for (int c = lo; c < hi; ++c) {
    std::vector<unitals::PointPermutation> group =
        unitals::translations_with_center(u, c);
    std::cout << "center: " << c << "\n";
    std::cout << "size: " << group.size() << "\n";
    for (const unitals::PointPermutation& pi : group)
      std::cout << "perm: " << unitals::cycle_notation(pi) << "\n";
    if (static_cast<int>(group.size()) != u.order()) all = false;
  }
  if (!center) std::cout << "admits-all: " << (all ? "true" : "false") << "\n";
  return finish(true);
}

void print_condition(const unitals::ConditionReport& rep) {
  std::cout << "condition: " << unitals::to_string(rep.condition) << "\n";
  std::cout << "holds: " << (rep.holds ? "true" : "false") << "\n";
  if (rep.exhaustive) {
    std::cout << "coverage: exhaustive";
    if (rep.condition == unitals::WilbrinkCondition::III)
      std::cout << (rep.used_uniqueness_shortcut ? " (uniqueness shortcut)"
                                                 : " (full enumeration)");
    std::cout << "\n";
  } else {
    std::cout << "coverage: sampled n=" << rep.samples << " seed=" << rep.seed
              << "\n";
  }
  if (rep.condition != unitals::WilbrinkCondition::I) {
    std::cout << "instances: " << rep.instances_checked << "\n";
    if (rep.condition == unitals::WilbrinkCondition::II)
      std::cout << "trivial: " << rep.trivial_cases << "\n";
    else
      std::cout << "premise-hits: " << rep.premise_hits << "\n";
  }
  if (rep.onan_witness) {
    std::cout << "witness: blocks:";
    for (int blk : rep.onan_witness->blocks) std::cout << " " << blk;
    std::cout << " / points:";
    for (int p : rep.onan_witness->points) std::cout << " " << p;
    std::cout << "\n";
  }
  if (rep.ii_witness)
    std::cout << "witness: L=" << rep.ii_witness->block_l
              << " x=" << rep.ii_witness->x << " y=" << rep.ii_witness->y
              << "\n";
  if (rep.iii_witness) {
    const unitals::ConditionIIIWitness& w = *rep.iii_witness;
    std::cout << "witness: x=" << w.x << " M=" << w.m[0] << "," << w.m[1] << ","
              << w.m[2] << " y=" << w.y[0] << "," << w.y[1] << "," << w.y[2]
              << " z=" << w.z[0] << "," << w.z[1] << "," << w.z[2] << "\n";
  }
}

int cmd_wilbrink(const std::string& path, const std::string& condition,
                 std::optional<std::uint64_t> samples,
                 std::optional<std::uint64_t> seed, bool full_enumeration,
                 int threads) {
  unitals::Unital u = load_verified(path);
  unitals::SweepMode mode = unitals::SweepMode::full();
  if (samples) {
    if (!seed) return input_error("--samples requires --seed");
    mode = unitals::SweepMode::sampled(*samples, *seed);
  }
  std::cout << "command: wilbrink\n";
  std::cout << "file: " << path << "\n";
  std::cout << "interpretation: condition II reads the unbound symbol B as L; "
               "instances with y on L hold trivially and are tallied "
               "separately\n";
  bool all_hold = true;
  auto want = [&](const char* c) {
    return condition == "all" || condition == c;
  };
  if (want("I")) {
    unitals::ConditionReport rep = unitals::check_condition_i(u, threads);
    print_condition(rep);
    all_hold = all_hold && rep.holds;
  }
  if (want("II")) {
    unitals::ConditionReport rep = unitals::check_condition_ii(u, mode, threads);
    print_condition(rep);
    all_hold = all_hold && rep.holds;
  }
  if (want("III")) {
    unitals::ShortcutPolicy policy = full_enumeration
                                         ? unitals::ShortcutPolicy::Disable
                                         : unitals::ShortcutPolicy::Auto;
    unitals::ConditionReport rep =
        unitals::check_condition_iii(u, mode, policy, threads);
    print_condition(rep);
    all_hold = all_hold && rep.holds;
  }
  return finish(all_hold);
}

int cmd_classify(const std::string& path, std::uint64_t samples,
                 std::optional<std::uint64_t> seed, int threads) {
  unitals::Unital u = load_verified(path);
  unitals::ClassifyOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.threads = threads;
  unitals::ClassificationVerdict verdict = unitals::classify(u, opts);
  std::cout << "command: classify\n";
  std::cout << "file: " << path << "\n";
  std::cout << "order: " << u.order() << "\n";
  std::cout << "translations: " << (verdict.translations_ok ? "all" : "missing")
            << "\n";
  std::cout << "onan: " << (verdict.onan_free ? "none" : "found") << "\n";
  for (const unitals::ConditionReport& rep : verdict.conditions)
    if (rep.condition != unitals::WilbrinkCondition::I)
      std::cout << "condition-" << unitals::to_string(rep.condition) << ": "
                << (rep.holds ? "holds" : "fails")
                << (rep.exhaustive ? "" : " (sampled)") << "\n";
  std::cout << "isomorphism: " << (verdict.iso_witness ? "found" : "none")
            << "\n";
  if (verdict.iso_witness) {
    std::cout << "map:";
    for (int y : verdict.iso_witness->image) std::cout << " " << y;
    std::cout << "\n";
  }
  std::cout << "verdict: " << unitals::to_string(verdict.verdict) << "\n";
  if (!verdict.detail.empty()) std::cout << "detail: " << verdict.detail << "\n";
  if (!verdict.consistency_alert.empty())
    std::cout << "alert: " << verdict.consistency_alert << "\n";
  return finish(verdict.verdict == unitals::Verdict::Classical);
}

int cmd_iso(const std::string& path_a, const std::string& path_b) {
  unitals::Unital a = load_verified(path_a);
  unitals::Unital b = load_verified(path_b);
  unitals::IsomorphismResult res = unitals::find_isomorphism(a, b);
  std::cout << "command: iso\n";
  std::cout << "file-a: " << path_a << "\n";
  std::cout << "file-b: " << path_b << "\n";
  std::cout << "iso: " << (res.map ? "found" : "none") << "\n";
  if (res.map) {
    std::cout << "map:";
    for (int y : res.map->image) std::cout << " " << y;
    std::cout << "\n";
  }
  if (!res.reason.empty()) std::cout << "reason: " << res.reason << "\n";
  return finish(res.map.has_value());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian unitals: construction, O'Nan configurations, "
               "translations, Wilbrink's conditions"};
  app.require_subcommand(1);

  int gen_q = 0;
  std::string gen_out;
  bool gen_verbose = false;
  CLI::App* gen = app.add_subcommand("gen", "write the classical unital of order q");
  gen->add_option("--q", gen_q, "order (prime power)")->required();
  gen->add_option("--out,-o", gen_out, "output path")->required();
  gen->add_flag("--verbose,-v", gen_verbose, "print the field construction");

  std::string verify_file;
  CLI::App* verify = app.add_subcommand("verify", "check the design axioms");
  verify->add_option("file", verify_file)->required();

  std::string onan_file, onan_expect;
  bool onan_linear = false;
  int onan_threads = 1;
  CLI::App* onan = app.add_subcommand("onan", "search for an O'Nan configuration");
  onan->add_option("file", onan_file)->required();
  onan->add_option("--expect", onan_expect, "none or some")
      ->check(CLI::IsMember({"none", "some"}));
  onan->add_flag("--linear-space", onan_linear,
                 "relaxed loader for non-unital controls");
  onan->add_option("--threads", onan_threads, "worker threads (0 = hardware)");

  std::string tr_file;
  std::optional<int> tr_center;
  CLI::App* translations =
      app.add_subcommand("translations", "translation groups per center");
  translations->add_option("file", tr_file)->required();
  translations->add_option("--center", tr_center, "single center index");

  std::string wb_file, wb_condition = "all";
  std::optional<std::uint64_t> wb_samples, wb_seed;
  bool wb_full = false;
  int wb_threads = 1;
  CLI::App* wilbrink = app.add_subcommand("wilbrink", "check conditions I-III");
  wilbrink->add_option("file", wb_file)->required();
  wilbrink->add_option("--condition", wb_condition)
      ->check(CLI::IsMember({"I", "II", "III", "all"}));
  wilbrink->add_option("--samples", wb_samples, "sampled sweep size");
  wilbrink->add_option("--seed", wb_seed, "sampled sweep seed");
  wilbrink->add_flag("--full-enumeration", wb_full,
                     "disable the uniqueness shortcut for condition III");
  wilbrink->add_option("--threads", wb_threads, "worker threads (0 = hardware)");

  std::string cls_file;
  std::uint64_t cls_samples = 1'000'000;
  std::optional<std::uint64_t> cls_seed;
  int cls_threads = 1;
  CLI::App* classify = app.add_subcommand("classify", "full classification verdict");
  classify->add_option("file", cls_file)->required();
  classify->add_option("--samples", cls_samples, "sampled sweep size for q >= 4");
  classify->add_option("--seed", cls_seed, "sampled sweep seed, required for q >= 4");
  classify->add_option("--threads", cls_threads, "worker threads (0 = hardware)");

  std::string iso_a, iso_b;
  CLI::App* iso = app.add_subcommand("iso", "search for an isomorphism");
  iso->add_option("file-a", iso_a)->required();
  iso->add_option("file-b", iso_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_q, gen_out, gen_verbose);
    if (verify->parsed()) return cmd_verify(verify_file);
    if (onan->parsed())
      return cmd_onan(onan_file, onan_expect, onan_linear, onan_threads);
    if (translations->parsed()) return cmd_translations(tr_file, tr_center);
    if (wilbrink->parsed())
      return cmd_wilbrink(wb_file, wb_condition, wb_samples, wb_seed, wb_full,
                          wb_threads);
    if (classify->parsed())
      return cmd_classify(cls_file, cls_samples, cls_seed, cls_threads);
    if (iso->parsed()) return cmd_iso(iso_a, iso_b);
  } catch (const unitals::NotPrimePower& e) {
    return input_error(e.what());
  } catch (const unitals::VersionError& e) {
    return input_error(e.what());
  } catch (const unitals::ParseError& e) {
    return input_error(e.what());
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  return kError;
}
