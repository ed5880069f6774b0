// Command-line front end: every subcommand reads JSON (file or stdin),
// writes JSON (file or stdout), and is byte-deterministic for identical
// inputs and seed. --pretty switches to a small human-readable table.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "haarlab/config.hpp"
#include "haarlab/enlargement.hpp"
#include "haarlab/error.hpp"
#include "haarlab/haar.hpp"
#include "haarlab/json_io.hpp"
#include "haarlab/symmetrization.hpp"
#include "haarlab/verification.hpp"

namespace {

using haarlab::Errc;
using haarlab::Error;
using haarlab::Rational;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSchema = 3;
constexpr int kExitDomain = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::schema, "cannot open input '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_input(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::schema, std::string("input is not JSON: ") + e.what());
  }
}

Rational flag_rational(const std::string& text, const char* name) {
  try {
    return haarlab::parse_rational(text);
  } catch (const Error&) {
    throw UsageError(std::string(name) + " expects a rational 'p/q', got '" +
                     text + "'");
  }
}

void pretty_print(std::ostream& out, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                value.front().is_structured())) {
        out << prefix << key << ":\n";
        pretty_print(out, value, prefix + "  ");
      } else {
        out << prefix << key << ": "
            << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_structured()) {
        out << prefix << "-\n";
        pretty_print(out, value, prefix + "  ");
      } else {
        out << prefix << "- "
            << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else {
    out << prefix << j.dump() << "\n";
  }
}

void emit(const json& payload, const std::string& path, bool pretty) {
  std::ostringstream body;
  if (pretty) {
    pretty_print(body, payload, "");
  } else {
    body << payload.dump(2) << "\n";
  }
  if (path == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(path);
    if (!out) throw Error(Errc::schema, "cannot open output '" + path + "'");
    out << body.str();
  }
}

struct CommonOpts {
  std::string input = "-";
  std::string output = "-";
  bool pretty = false;
};

void attach_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--input,-i", opts.input, "input path or '-' for stdin");
  cmd->add_option("--output,-o", opts.output, "output path or '-' for stdout");
  cmd->add_flag("--pretty", opts.pretty, "human-readable table output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Haar-basis toolbox for dyadic step functions"};
  app.require_subcommand(1);

  CommonOpts analyze_o, synth_o, norm_o, thresh_o, project_o, enlarge_o,
      construct_o, symmetrize_o, verify_o, example_o;

  auto* cmd_analyze =
      app.add_subcommand("analyze", "Haar coefficients of a step function");
  attach_common(cmd_analyze, analyze_o);

  auto* cmd_synth =
      app.add_subcommand("synthesize", "step function from Haar coefficients");
  attach_common(cmd_synth, synth_o);
  int synth_resolution = -1;
  cmd_synth->add_option("--resolution", synth_resolution, "target resolution")
      ->required();

  auto* cmd_norm = app.add_subcommand(
      "norm", "integral of |f|, optionally on one dyadic interval");
  attach_common(cmd_norm, norm_o);
  std::string norm_interval;
  cmd_norm->add_option("--interval", norm_interval,
                       "'root' or 'level/index' (default: all of [0,1])");

  auto* cmd_thresh =
      app.add_subcommand("threshold", "keep coefficients with |c| >= delta");
  attach_common(cmd_thresh, thresh_o);
  std::string thresh_delta;
  cmd_thresh->add_option("--delta", thresh_delta, "threshold, rational p/q")
      ->required();

  auto* cmd_project = app.add_subcommand(
      "project",
      "coordinate projection onto a set; input {\"f\": ..., \"S\": [...]}");
  attach_common(cmd_project, project_o);

  auto* cmd_enlarge = app.add_subcommand(
      "enlarge", "tolerance enlargement of a selection; input {\"f\": ..., "
                 "\"A\": [...]}; with --rho runs the certified single band");
  attach_common(cmd_enlarge, enlarge_o);
  std::string enlarge_eps, enlarge_rho;
  cmd_enlarge->add_option("--epsilon", enlarge_eps, "tolerance, rational p/q")
      ->required();
  cmd_enlarge->add_option("--rho", enlarge_rho,
                          "band scale; selects the certified band run");

  auto* cmd_construct = app.add_subcommand(
      "construct-e", "banded enlargement pipeline with a norm certificate; "
                     "input {\"f\": ..., \"A\": [...]}");
  attach_common(cmd_construct, construct_o);
  std::string construct_delta, construct_eps;
  cmd_construct->add_option("--delta", construct_delta, "coefficient floor")
      ->required();
  cmd_construct->add_option("--epsilon", construct_eps, "tolerance")
      ->required();

  auto* cmd_symmetrize = app.add_subcommand(
      "symmetrize",
      "iterated pair symmetrization; input {\"f\": ..., \"g\": ...}");
  attach_common(cmd_symmetrize, symmetrize_o);
  bool symmetrize_permissive = false;
  cmd_symmetrize->add_flag("--permissive", symmetrize_permissive,
                           "downgrade precondition failures");

  auto* cmd_verify = app.add_subcommand(
      "verify",
      "randomized exact check of one statement; exit 1 on any violation");
  attach_common(cmd_verify, verify_o);
  std::string verify_statement;
  long verify_trials = 1000;
  std::uint64_t verify_seed = 0;
  int verify_resolution = 8;
  std::string verify_alpha;
  bool verify_json = false;
  cmd_verify->add_option("statement", verify_statement, "statement id")
      ->required();
  cmd_verify->add_option("--trials", verify_trials, "number of trials");
  cmd_verify->add_option("--seed", verify_seed, "master seed");
  cmd_verify->add_option("--resolution", verify_resolution,
                         "maximum resolution for sampled functions");
  cmd_verify->add_option("--alpha", verify_alpha,
                         "pin the generator's coefficient floor (p/q in "
                         "(0,1]), where the statement has one");
  cmd_verify->add_flag("--json", verify_json,
                       "JSON output (the default; kept for scripts)");

  auto* cmd_example =
      app.add_subcommand("example", "the two explicit families");
  attach_common(cmd_example, example_o);
  std::string example_family;
  int example_n = 1;
  cmd_example->add_option("--family", example_family, "intro | distributed")
      ->required();
  cmd_example->add_option("--n", example_n, "family parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_analyze) {
      const auto f =
          haarlab::step_function_from_json(parse_input(analyze_o.input));
      emit(to_json(haarlab::analyze(f)), analyze_o.output, analyze_o.pretty);
    } else if (*cmd_synth) {
      const auto e = haarlab::expansion_from_json(parse_input(synth_o.input));
      emit(to_json(haarlab::synthesize(e, synth_resolution)), synth_o.output,
           synth_o.pretty);
    } else if (*cmd_norm) {
      const auto f =
          haarlab::step_function_from_json(parse_input(norm_o.input));
      const haarlab::DyadicInterval interval =
          norm_interval.empty() ? haarlab::DyadicInterval::root()
                                : haarlab::DyadicInterval::parse(norm_interval);
      emit(json{{"interval", interval.str()},
                {"norm", haarlab::to_string(haarlab::norm_on(f, interval))}},
           norm_o.output, norm_o.pretty);
    } else if (*cmd_thresh) {
      const Rational delta = flag_rational(thresh_delta, "--delta");
      const auto f =
          haarlab::step_function_from_json(parse_input(thresh_o.input));
      const auto r = haarlab::threshold(f, delta);
      emit(json{{"function", to_json(r.function)},
                {"selected", to_json(r.selected)}},
           thresh_o.output, thresh_o.pretty);
    } else if (*cmd_project) {
      const json in = parse_input(project_o.input);
      if (!in.is_object() || !in.contains("f") || !in.contains("S")) {
        throw Error(Errc::schema, "project expects {\"f\": ..., \"S\": [...]}");
      }
      const auto f = haarlab::step_function_from_json(in.at("f"));
      const auto s = haarlab::interval_set_from_json(in.at("S"));
      emit(to_json(haarlab::project(f, s)), project_o.output,
           project_o.pretty);
    } else if (*cmd_enlarge) {
      const Rational eps = flag_rational(enlarge_eps, "--epsilon");
      const json in = parse_input(enlarge_o.input);
      if (!in.is_object() || !in.contains("f") || !in.contains("A")) {
        throw Error(Errc::schema, "enlarge expects {\"f\": ..., \"A\": [...]}");
      }
      const auto f = haarlab::step_function_from_json(in.at("f"));
      const auto a = haarlab::interval_set_from_json(in.at("A"));
      if (enlarge_rho.empty()) {
        emit(json{{"E", to_json(haarlab::epsilon_enlargement(f, a, eps))},
                  {"certificate", nullptr}},
             enlarge_o.output, enlarge_o.pretty);
      } else {
        haarlab::EnlargeParams params;
        params.delta = 1;  // unused by the band run
        params.epsilon = eps;
        params.rho = flag_rational(enlarge_rho, "--rho");
        const auto r = haarlab::band_enlarge(f, a, params);
        emit(json{{"E", to_json(r.selected)},
                  {"certificate", to_json(r.certificate)}},
             enlarge_o.output, enlarge_o.pretty);
      }
    } else if (*cmd_construct) {
      const Rational delta = flag_rational(construct_delta, "--delta");
      const Rational eps = flag_rational(construct_eps, "--epsilon");
      const json in = parse_input(construct_o.input);
      if (!in.is_object() || !in.contains("f") || !in.contains("A")) {
        throw Error(Errc::schema,
                    "construct-e expects {\"f\": ..., \"A\": [...]}");
      }
      const auto f = haarlab::step_function_from_json(in.at("f"));
      const auto a = haarlab::interval_set_from_json(in.at("A"));
      haarlab::EnlargeParams params;
      params.delta = delta;
      params.epsilon = eps;
      const auto r = haarlab::construct_enlargement(f, a, params);
      emit(json{{"E", to_json(r.selected)},
                {"certificate", to_json(r.certificate)}},
           construct_o.output, construct_o.pretty);
    } else if (*cmd_symmetrize) {
      const json in = parse_input(symmetrize_o.input);
      if (!in.is_object() || !in.contains("f") || !in.contains("g")) {
        throw Error(Errc::schema, "symmetrize expects {\"f\": ..., \"g\": ...}");
      }
      const auto f = haarlab::step_function_from_json(in.at("f"));
      const auto g = haarlab::step_function_from_json(in.at("g"));
      const auto mode = symmetrize_permissive ? haarlab::Mode::permissive
                                              : haarlab::Mode::strict;
      const auto out = haarlab::full_symmetrize(f, g, mode);
      json payload = to_json(out);
      const Rational before_den = l1_norm(f + g);
      const Rational after_den = l1_norm(out.f_tilde + out.g_tilde);
      payload["ratio_before"] =
          before_den == 0
              ? json(nullptr)
              : json(haarlab::to_string(l1_norm(f) / before_den));
      payload["ratio_after"] =
          after_den == 0
              ? json(nullptr)
              : json(haarlab::to_string(l1_norm(out.f_tilde) / after_den));
      emit(payload, symmetrize_o.output, symmetrize_o.pretty);
    } else if (*cmd_verify) {
      (void)verify_json;
      haarlab::GenParams params;
      if (!verify_alpha.empty()) {
        params.alpha = flag_rational(verify_alpha, "--alpha");
      }
      const auto report = haarlab::check(verify_statement, verify_trials,
                                         verify_seed, verify_resolution,
                                         params);
      json payload = to_json(report);
      if (verify_o.pretty) {
        payload["elapsed_seconds"] = report.elapsed_seconds;
      }
      emit(payload, verify_o.output, verify_o.pretty);
      return report.violations > 0 ? kExitViolations : kExitOk;
    } else if (*cmd_example) {
      haarlab::ExampleResult r;
      if (example_family == "intro") {
        r = haarlab::left_branch_example(example_n);
      } else if (example_family == "distributed") {
        r = haarlab::distributed_example(example_n);
      } else {
        throw UsageError("--family must be 'intro' or 'distributed'");
      }
      json payload = to_json(r);
      payload["family"] = example_family;
      payload["n"] = example_n;
      emit(payload, example_o.output, example_o.pretty);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    const json err{{"error",
                    {{"code", haarlab::errc_name(e.code())},
                     {"message", e.what()},
                     {"detail", e.detail()}}}};
    std::cout << err.dump(2) << "\n";
    return e.code() == Errc::schema ? kExitSchema : kExitDomain;
  }
  return kExitOk;
}
