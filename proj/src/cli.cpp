#include "infobs/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include "infobs/errors.hpp"
#include "infobs/io.hpp"
#include "infobs/report.hpp"
#include "infobs/verification.hpp"
#include "infobs/witnesses.hpp"

namespace infobs {

namespace {

struct Options {
  std::string k_file;
  std::string m_file;
  std::string g_file;
  std::string output;
  std::string uncontrollable;
  bool report = false;

  std::string check_file;
  bool nfa = false;
  std::size_t budget = kDefaultSubsetBudget;

  std::string family;
  std::size_t n = 0;
  std::string mask_output;

  std::size_t n_min = 2;
  std::size_t n_max = 10;
  std::string csv;

  std::string campaign;
  CampaignOptions campaign_options;

  std::string dot_file;
};

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_file(path, contents);
  }
}

UncontrollableSet parse_events(const std::string& list, const Alphabet& sigma) {
  UncontrollableSet u;
  std::stringstream in(list);
  for (std::string e; std::getline(in, e, ',');) {
    if (e.empty()) continue;
    if (!sigma.contains(e)) throw InputError("uncontrollable event '" + e + "' is not in the alphabet");
    u.events.push_back(e);
  }
  std::sort(u.events.begin(), u.events.end());
  u.events.erase(std::unique(u.events.begin(), u.events.end()), u.events.end());
  return u;
}

int compute_inf_o(const Options& o, std::ostream& out, std::ostream& err) {
  const Dfa k = parse_dfa(read_file(o.k_file));
  const Mask mask = parse_mask(read_file(o.m_file), k.alphabet());
  const auto start = std::chrono::steady_clock::now();
  const InfOResult result = inf_o(k, mask);
  const auto stop = std::chrono::steady_clock::now();
  emit(o.output, serialize(result.dfa), out);
  ReportRow row;
  row.n = result.stats.input_states;
  row.stats = result.stats;
  row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  if (o.report) {
    std::ostream& table = o.output.empty() || o.output == "-" ? err : out;
    table << csv_header() << '\n' << csv_row(row) << '\n';
  }
  if (!row.within_upper_bound()) {
    err << "error: " << row.stats.final_states << " states exceed the bound " << row.upper_bound() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int compute_inf_c(const Options& o, std::ostream& out) {
  const Dfa k = parse_dfa(read_file(o.k_file));
  emit(o.output, serialize(inf_c(k, parse_events(o.uncontrollable, k.alphabet()))), out);
  return kExitOk;
}

int compute_inf_co(const Options& o, std::ostream& out) {
  const Dfa k = parse_dfa(read_file(o.k_file));
  const Dfa plant = parse_dfa(read_file(o.g_file));
  const Mask mask = parse_mask(read_file(o.m_file), k.alphabet());
  emit(o.output, serialize(inf_co(k, plant, parse_events(o.uncontrollable, k.alphabet()), mask)), out);
  return kExitOk;
}

int check_prefix_closed(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.check_file);
  const bool closed = o.nfa ? is_prefix_closed(parse_nfa(text), o.budget) : is_prefix_closed(parse_dfa(text));
  out << "prefix-closed: " << (closed ? "true" : "false") << '\n';
  return closed ? kExitOk : kExitVerificationFailed;
}

int generate(const Options& o, std::ostream& out) {
  std::string text;
  if (o.family == "lowerbound") {
    const Dfa k = gen_lower_bound(o.n);
    text = serialize(k);
    if (!o.mask_output.empty()) write_file(o.mask_output, serialize(make_projection(k.alphabet(), {"a", "b"})));
  } else if (o.family == "quotient") {
    text = serialize(gen_quotient_tight(o.n));
  } else if (o.family == "prime") {
    text = serialize(gen_prime_nfa(o.n));
  } else if (o.family == "fig3") {
    text = serialize(gen_fig3());
  } else {
    text = serialize(gen_fig4());
  }
  emit(o.output, text, out);
  return kExitOk;
}

int bench(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n_min < 2 || o.n_min > o.n_max) throw InputError("bench needs 2 <= n-min <= n-max");
  ComplexityReport report;
  for (std::size_t n = o.n_min; n <= o.n_max; ++n) {
    report.rows.push_back(run_lower_bound_instance(n));
    out << csv_row(report.rows.back()) << '\n' << std::flush;
  }
  if (!o.csv.empty()) write_file(o.csv, report.to_csv());
  for (const auto& row : report.rows) {
    if (!row.within_bounds()) {
      err << "error: n=" << row.n << " has " << row.stats.final_states << " states, outside [" << row.lower_bound()
          << ", " << row.upper_bound() << "]\n";
    }
  }
  return report.all_within_bounds() ? kExitOk : kExitVerificationFailed;
}

int verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Campaign campaign = o.campaign == "oracle"   ? Campaign::kOracle
                            : o.campaign == "lemma1" ? Campaign::kQuotientIdentity
                                                     : Campaign::kGhNfa;
  const CampaignResult result = run_campaign(campaign, o.campaign_options);
  for (const auto& f : result.failures) err << f << '\n';
  out << "verify " << o.campaign << ": " << result.passed << "/" << (result.passed + result.failed)
      << " instances passed (seed " << o.campaign_options.seed << ")\n";
  return result.ok() ? kExitOk : kExitVerificationFailed;
}

int export_dot_file(const Options& o, std::ostream& out) {
  emit(o.output, export_dot(parse_nfa(read_file(o.dot_file))), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Infimal observable superlanguages of regular languages", "infobs"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute an infimal superlanguage");
  compute->require_subcommand(1);
  auto* inf_o_cmd = compute->add_subcommand("inf-o", "Infimal prefix-closed observable superlanguage");
  inf_o_cmd->add_option("-k", o.k_file, "Specification DFA (.aut)")->required();
  inf_o_cmd->add_option("-m", o.m_file, "Mask (.map)")->required();
  inf_o_cmd->add_option("-o", o.output, "Output DFA (.aut); stdout when omitted");
  inf_o_cmd->add_flag("--report", o.report, "Print the state-count row");
  auto* inf_c_cmd = compute->add_subcommand("inf-c", "Infimal prefix-closed controllable superlanguage");
  inf_c_cmd->add_option("-k", o.k_file, "Specification DFA (.aut)")->required();
  inf_c_cmd->add_option("--uncontrollable", o.uncontrollable, "Comma-separated uncontrollable events");
  inf_c_cmd->add_option("-o", o.output, "Output DFA (.aut); stdout when omitted");
  auto* inf_co_cmd = compute->add_subcommand("inf-co", "Infimal prefix-closed controllable observable superlanguage");
  inf_co_cmd->add_option("-k", o.k_file, "Specification DFA (.aut)")->required();
  inf_co_cmd->add_option("-g", o.g_file, "Plant DFA (.aut); its generated language is used")->required();
  inf_co_cmd->add_option("-m", o.m_file, "Mask (.map)")->required();
  inf_co_cmd->add_option("--uncontrollable", o.uncontrollable, "Comma-separated uncontrollable events");
  inf_co_cmd->add_option("-o", o.output, "Output DFA (.aut); stdout when omitted");

  auto* check = app.add_subcommand("check", "Decide a language property");
  check->require_subcommand(1);
  auto* prefix_cmd = check->add_subcommand("prefix-closed", "Is the marked language prefix-closed");
  prefix_cmd->add_option("file", o.check_file, "Automaton (.aut)")->required();
  prefix_cmd->add_flag("--nfa", o.nfa, "Parse as an NFA and decide by determinization");
  prefix_cmd->add_option("--budget", o.budget, "Maximum subset states")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Write a witness automaton");
  gen->add_option("family", o.family, "Witness family")
      ->required()
      ->check(CLI::IsMember({"lowerbound", "quotient", "prime", "fig3", "fig4"}));
  gen->add_option("--n", o.n, "Size parameter");
  gen->add_option("-o", o.output, "Output file; stdout when omitted");
  gen->add_option("--mask", o.mask_output, "lowerbound only: also write the projection erasing c");

  auto* bench_cmd = app.add_subcommand("bench", "Measure inf-o on a witness family");
  bench_cmd->add_option("family", o.family, "Witness family")->required()->check(CLI::IsMember({"lowerbound"}));
  bench_cmd->add_option("--n-min", o.n_min, "Smallest n");
  bench_cmd->add_option("--n-max", o.n_max, "Largest n");
  bench_cmd->add_option("--csv", o.csv, "CSV output file");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check pipelines on random instances");
  verify_cmd->add_option("campaign", o.campaign, "Check to run")
      ->required()
      ->check(CLI::IsMember({"oracle", "lemma1", "lemma3"}));
  verify_cmd->add_option("--instances", o.campaign_options.instances, "Number of instances");
  verify_cmd->add_option("--max-states", o.campaign_options.max_states, "Maximum states per instance")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", o.campaign_options.seed, "Seed of the first instance");
  verify_cmd->add_option("--check-length", o.campaign_options.check_length, "Word length for bounded checks");

  auto* export_cmd = app.add_subcommand("export", "Convert an automaton");
  export_cmd->require_subcommand(1);
  auto* dot_cmd = export_cmd->add_subcommand("dot", "Graphviz output");
  dot_cmd->add_option("file", o.dot_file, "Automaton (.aut)")->required();
  dot_cmd->add_option("-o", o.output, "Output file; stdout when omitted");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (inf_o_cmd->parsed()) return compute_inf_o(o, out, err);
    if (inf_c_cmd->parsed()) return compute_inf_c(o, out);
    if (inf_co_cmd->parsed()) return compute_inf_co(o, out);
    if (prefix_cmd->parsed()) return check_prefix_closed(o, out);
    if (gen->parsed()) {
      if (o.family != "fig3" && o.family != "fig4" && gen->count("--n") == 0) throw InputError("gen needs --n");
      return generate(o, out);
    }
    if (bench_cmd->parsed()) return bench(o, out, err);
    if (verify_cmd->parsed()) return verify(o, out, err);
    if (dot_cmd->parsed()) return export_dot_file(o, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace infobs
