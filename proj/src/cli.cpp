#include "repbasis/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "repbasis/coincide.hpp"
#include "repbasis/construct.hpp"
#include "repbasis/errors.hpp"
#include "repbasis/io.hpp"
#include "repbasis/linforms.hpp"
#include "repbasis/modular.hpp"
#include "repbasis/oracle.hpp"
#include "repbasis/repfn.hpp"
#include "repbasis/sidon.hpp"

namespace repbasis::cli {

namespace {

using io::json;

Window parse_window(const std::vector<std::string>& bounds) {
  return Window(parse_int(bounds.at(0)), parse_int(bounds.at(1)));
}

void emit_set(const FiniteIntSet& set, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    io::write_set(out, set);
  } else {
    io::write_set(path, set);
  }
}

void emit_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    io::write_json(path, j);
  }
}

std::string describe(const std::vector<Int>& multiset) {
  std::string s;
  for (const Int& a : multiset) s += (s.empty() ? "" : " + ") + a.str();
  return s;
}

// r <= 1 on the whole support, and the largest R with r = 1 on [-R, R].
json urb_oracle(const FiniteIntSet& set) {
  const RepSupport counts = oracle::enum_unordered_support(set, 2);
  const Int radius = represented_radius(counts.keys());
  return {{"max_count", io::int_to_json(counts.max_count())},
          {"unique_radius", io::int_to_json(radius)},
          {"verdict", counts.max_count() <= 1 ? "ok" : "fail"}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation functions and constructive additive bases"};
  app.require_subcommand(1);
  std::function<int()> action;

  // compute
  auto* compute = app.add_subcommand("compute", "Representation counts of a set on a window");
  std::string set_path, out_path, report_path, kind_text = "ordered";
  unsigned order = 2;
  std::vector<std::string> window_bounds;
  compute->add_option("--set", set_path, "Set file")->required();
  compute->add_option("--order", order, "Order h")->required()->check(CLI::PositiveNumber);
  compute->add_option("--kind", kind_text, "ordered, unordered or restricted");
  compute->add_option("--window", window_bounds, "lo hi")->expected(2)->required()->allow_extra_args(false);
  compute->add_option("--out", out_path, "Write JSON here instead of standard output");
  compute->callback([&] {
    action = [&] {
      const FiniteIntSet set = io::read_set(set_path);
      emit_json(io::to_json(repfn::table(set, order, parse_rep_kind(kind_text), parse_window(window_bounds))),
                out_path, out);
      return 0;
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Run a basis construction");
  construct->require_subcommand(1);
  std::size_t steps = 1;
  std::string phi_text, target_path;

  auto* urb = construct->add_subcommand("urb", "Unique representation basis for the integers");
  urb->add_option("--steps", steps, "Number of sets A_1..A_k")->required()->check(CLI::PositiveNumber);
  urb->add_option("--phi", phi_text, "Sparsity bound: log or poly:θ");
  urb->add_option("--out", out_path, "Set file");
  urb->add_option("--report", report_path, "JSON report");
  urb->callback([&] {
    action = [&] {
      UrbOptions options;
      if (!phi_text.empty()) options.sparsity = SparsityBound::parse(phi_text);
      const UrbState state = urb_build(steps, options);
      json trace = json::array();
      for (const UrbStepRecord& r : state.trace) {
        trace.push_back({{"k", r.k},
                         {"d", io::int_to_json(r.d)},
                         {"b", io::int_to_json(r.b)},
                         {"c", io::int_to_json(r.c)},
                         {"branch", r.positive_branch ? "positive" : "negative"}});
      }
      json report = {{"format", io::kFormat}, {"construction", "urb"}, {"steps", steps},
                     {"size", state.set.size()}, {"trace", trace}, {"oracle", urb_oracle(state.set)}};
      if (options.sparsity) {
        json cps = json::array();
        for (const SparsityCheckpoint& cp : sparsity_checkpoints(state, *options.sparsity)) {
          cps.push_back({{"x", io::int_to_json(cp.x)},
                         {"count", io::int_to_json(cp.count)},
                         {"phi", io::int_to_json(cp.bound)}});
        }
        report["phi"] = options.sparsity->name;
        report["checkpoints"] = cps;
      }
      if (!report_path.empty()) io::write_json(report_path, report);
      emit_set(state.set, out_path, out);
      if (report["oracle"]["verdict"] != "ok") throw InternalError("oracle found r > 1");
      return 0;
    };
  });

  auto* prescribed = construct->add_subcommand("prescribed", "Basis with a prescribed representation function");
  prescribed->add_option("--order", order, "Order h >= 2")->required();
  prescribed->add_option("--steps", steps, "Number of steps")->required()->check(CLI::PositiveNumber);
  prescribed->add_option("--target", target_path, "Target function JSON")->required();
  prescribed->add_option("--out", out_path, "Set file");
  prescribed->add_option("--report", report_path, "JSON report");
  prescribed->callback([&] {
    action = [&] {
      const TargetFn f = io::target_from_json(io::read_json(target_path));
      const FundRepState state = fundrep_build(f, order, steps);
      const RepSupport recount = oracle::enum_unordered_support(state.set, order);
      const std::optional<std::string> violation = check_target_conditions(recount, f, state.schedule);
      const bool agree = recount == state.counts;
      json trace = json::array();
      for (const FundRepStepRecord& r : state.trace) {
        trace.push_back({{"k", r.k},
                         {"u", io::int_to_json(r.u)},
                         {"d", io::int_to_json(r.d)},
                         {"c", io::int_to_json(r.c)},
                         {"added", io::to_json(r.added)}});
      }
      const bool ok = agree && !violation;
      json report = {{"format", io::kFormat},
                     {"construction", "prescribed"},
                     {"order", order},
                     {"steps", steps},
                     {"target", io::to_json(f)},
                     {"trace", trace},
                     {"oracle", {{"counts_agree", agree}, {"verdict", ok ? "ok" : "fail"}}}};
      if (violation) report["oracle"]["violation"] = *violation;
      if (!report_path.empty()) io::write_json(report_path, report);
      emit_set(state.set, out_path, out);
      if (!ok) throw InternalError(violation ? *violation : "oracle counts differ");
      return 0;
    };
  });

  auto* linform = construct->add_subcommand("linform", "Unique representation basis for a binary linear form");
  std::string u1_text, u2_text;
  linform->add_option("--u1", u1_text, "First coefficient")->required();
  linform->add_option("--u2", u2_text, "Second coefficient")->required();
  linform->add_option("--steps", steps, "Number of sets")->required()->check(CLI::PositiveNumber);
  linform->add_option("--out", out_path, "Set file");
  linform->add_option("--report", report_path, "JSON report");
  linform->callback([&] {
    action = [&] {
      const BinaryForm phi(parse_int(u1_text), parse_int(u2_text));
      const LinformBuild build = urb_form(phi, steps);
      const RepSupport recount = oracle::enum_linear_form(phi.u1(), phi.u2(), build.set, build.set);
      json trace = json::array();
      for (const LinformStep& s : build.steps) {
        trace.push_back({{"b", io::int_to_json(s.b)},
                         {"t", io::int_to_json(s.extension.t)},
                         {"x1", io::int_to_json(s.extension.x1)},
                         {"x2", io::int_to_json(s.extension.x2)}});
      }
      const bool ok = recount.max_count() <= 1;
      json report = {{"format", io::kFormat},
                     {"construction", "linform"},
                     {"u1", io::int_to_json(phi.u1())},
                     {"u2", io::int_to_json(phi.u2())},
                     {"v1", io::int_to_json(phi.v1())},
                     {"v2", io::int_to_json(phi.v2())},
                     {"steps", steps},
                     {"trace", trace},
                     {"certified_gap", io::int_to_json(build.certified_gap)},
                     {"oracle", {{"max_count", io::int_to_json(recount.max_count())}, {"verdict", ok ? "ok" : "fail"}}}};
      if (!report_path.empty()) io::write_json(report_path, report);
      emit_set(build.set, out_path, out);
      if (!ok) throw InternalError("oracle found R > 1");
      return 0;
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Certify a structural property");
  check->require_subcommand(1);
  bool generalized = false;
  auto* sidon = check->add_subcommand("sidon", "Sidon property of a set");
  sidon->add_option("--set", set_path, "Set file")->required();
  sidon->add_option("--order", order, "Order h")->required()->check(CLI::PositiveNumber);
  sidon->add_flag("--generalized", generalized, "Compare sums of up to h elements");
  sidon->callback([&] {
    action = [&] {
      const FiniteIntSet set = io::read_set(set_path);
      const auto collision = generalized ? find_generalized_collision(set, order) : find_sidon_collision(set, order);
      const std::string label = generalized ? "generalized sidon" : "sidon";
      if (!collision) {
        out << label << ": yes\n";
      } else {
        out << label << ": no (" << describe(collision->first) << " = " << describe(collision->second) << " = "
            << collision->sum << ")\n";
      }
      return 0;
    };
  });

  std::string pair_path, horizon_text, head_bits;
  std::size_t sandor_n = 1;
  auto* coincide = check->add_subcommand("coincide", "Ordered pair counts of A* ∪ C and B* ∪ C");
  coincide->add_option("--pair", pair_path, "Pair JSON")->required();
  coincide->add_option("--horizon", horizon_text, "Last n compared")->required();
  coincide->callback([&] {
    action = [&] {
      const CoincidencePair pair = io::pair_from_json(io::read_json(pair_path));
      out << "congruence: " << (check_congruence(pair) ? "yes" : "no") << "\n";
      const EventuallyPeriodicSet a(pair.n0, pair.m, pair.residues, pair.astar);
      const EventuallyPeriodicSet b(pair.n0, pair.m, pair.residues, pair.bstar);
      if (const auto d = verify_pair(a, b, parse_int(horizon_text))) {
        out << "coincide: no (n = " << d->n << ", R_A = " << d->a_count << ", R_B = " << d->b_count << ")\n";
      } else {
        out << "coincide: yes\n";
      }
      return 0;
    };
  });

  std::int64_t horizon = 0;
  auto add_sandor_flags = [&](CLI::App* sub) {
    sub->add_option("--N", sandor_n, "N")->required()->check(CLI::PositiveNumber);
    sub->add_option("--head", head_bits, "Membership bits on [0, 2N - 1]")->required();
    sub->add_option("--horizon", horizon, "Last n")->required()->check(CLI::NonNegativeNumber);
  };
  auto* sandor = check->add_subcommand("sandor", "Unordered pair counts of a partition of N_0");
  add_sandor_flags(sandor);
  sandor->callback([&] {
    action = [&] {
      if (const auto d = sandor_verify(sandor_n, head_bits, horizon)) {
        out << "coincide: no (n = " << d->n << ", r_A = " << d->a_count << ", r_B = " << d->b_count << ")\n";
      } else {
        out << "coincide: yes\n";
      }
      return 0;
    };
  });

  // generate
  auto* generate = app.add_subcommand("generate", "Generate sets");
  generate->require_subcommand(1);
  std::string out_b_path;
  auto* gen_sandor = generate->add_subcommand("sandor", "A ∩ [0, D] and its complement");
  add_sandor_flags(gen_sandor);
  gen_sandor->add_option("--out-a", out_path, "Set file for A");
  gen_sandor->add_option("--out-b", out_b_path, "Set file for B");
  gen_sandor->callback([&] {
    action = [&] {
      const SandorSets sets = sandor_generate(sandor_n, head_bits, horizon);
      emit_set(sets.a, out_path, out);
      if (!out_b_path.empty()) io::write_set(out_b_path, sets.b);
      return 0;
    };
  });

  // reconstruct
  auto* reconstruct = app.add_subcommand("reconstruct", "Recover A from a table of ordered counts");
  std::string table_path;
  reconstruct->add_option("--table", table_path, "RepTable JSON")->required();
  reconstruct->add_option("--order", order, "Order h")->required()->check(CLI::PositiveNumber);
  reconstruct->add_option("--out", out_path, "Set file");
  reconstruct->callback([&] {
    action = [&] {
      emit_set(repfn::reconstruct_ordered(io::table_from_json(io::read_json(table_path)), order), out_path, out);
      return 0;
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Search for small examples");
  search->require_subcommand(1);
  std::int64_t modulus = 1;
  std::uint64_t bound = 1;
  SearchOptions search_options;
  auto* modular = search->add_subcommand("modular", "Basis of Z/mZ with bounded counts");
  modular->add_option("--m", modulus, "Modulus")->required()->check(CLI::PositiveNumber);
  modular->add_option("--order", order, "Order h")->required()->check(CLI::PositiveNumber);
  modular->add_option("--bound", bound, "Largest allowed count")->required()->check(CLI::PositiveNumber);
  modular->add_option("--budget", search_options.budget, "Count evaluations")->capture_default_str();
  modular->add_option("--seed", search_options.seed, "Random seed")->capture_default_str();
  modular->add_option("--out", out_path, "JSON output");
  modular->callback([&] {
    action = [&] {
      const std::optional<ResidueSet> found = search_bounded_basis(modulus, order, bound, search_options);
      json result = found ? io::to_json(*found) : json{{"format", io::kFormat}, {"m", modulus}};
      result["found"] = found.has_value();
      if (!found) err << "no witness within the budget (not a proof of nonexistence)\n";
      emit_json(result, out_path, out);
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Compare fast counts with brute-force enumeration");
  verify->add_option("--set", set_path, "Set file")->required();
  verify->add_option("--order", order, "Order h")->required()->check(CLI::PositiveNumber);
  verify->add_option("--window", window_bounds, "lo hi")->expected(2)->required()->allow_extra_args(false);
  verify->callback([&] {
    action = [&] {
      const FiniteIntSet set = io::read_set(set_path);
      const Window window = parse_window(window_bounds);
      const oracle::EquivalenceReport report = oracle::equivalence_suite(set, order, window);
      const repfn::GfCheck gf = repfn::gf_check(set, order, window);
      if (report.mismatch) {
        const oracle::Mismatch& m = *report.mismatch;
        out << "verify: mismatch (" << m.mode << " at n = " << m.n << ": fast " << m.fast << ", enumeration "
            << m.expected << ")\n";
        return 1;
      }
      if (!gf.all()) {
        out << "verify: generating function identity failed\n";
        return 1;
      }
      out << "verify: clean\n";
      return 0;
    };
  });

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace repbasis::cli
