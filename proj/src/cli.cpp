#include "digroup/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "digroup/expression.hpp"
#include "digroup/finite_digroup.hpp"
#include "digroup/free_digroup.hpp"
#include "digroup/gsb_verifier.hpp"

namespace digroup {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerificationFailed = 2;

// A raw diword "[...]_m" is normalized by rewriting; anything else is read as
// an expression and evaluated in closed form.
NormalForm evaluate_input(const std::string& text, const Alphabet& alphabet, std::ostream* trace) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    DiWord w = parse_diword(text, alphabet);
    TraceSink sink;
    if (trace)
      sink = [&](const RewriteStep& step, const DiWord& before, const DiWord& after) {
        *trace << format_trace_line(step, before, after, alphabet) << '\n';
      };
    return NormalForm(normalize(w, RuleSet::standard(), sink));
  }
  return eval_expression(*parse_expression(text, alphabet));
}

void print_element(std::ostream& out, const NormalForm& w, const Alphabet& alphabet, bool as_json) {
  if (!as_json) {
    out << to_string(w.diword(), alphabet) << '\n';
    return;
  }
  nlohmann::ordered_json j;
  auto letters = nlohmann::ordered_json::array();
  for (Letter l : w.diword().word()) letters.push_back(alphabet.render(l));
  j["word"] = std::move(letters);
  j["center"] = w.diword().center();
  j["class"] = std::string(to_string(w.klass()));
  j["group_part"] = in_group_part(w);
  j["halo"] = in_halo(w);
  out << j.dump() << '\n';
}

struct ElementCommand {
  CLI::App* app;
  std::string gens;
  std::string input;
  bool json = false;
};

ElementCommand* add_element_command(CLI::App& root, std::vector<std::unique_ptr<ElementCommand>>& store,
                                    const std::string& name, const std::string& description) {
  auto cmd = std::make_unique<ElementCommand>();
  cmd->app = root.add_subcommand(name, description);
  cmd->app->add_option("--gens", cmd->gens, "Comma separated generator names")->required();
  cmd->app->add_option("input", cmd->input, "Expression or raw diword such as \"[x e]_2\"")->required();
  cmd->app->add_flag("--json", cmd->json, "Print a JSON object");
  store.push_back(std::move(cmd));
  return store.back().get();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free digroup toolkit", "dgk"};
  app.require_subcommand(1);

  std::vector<std::unique_ptr<ElementCommand>> element_commands;
  auto* normalize_cmd = add_element_command(app, element_commands, "normalize", "Normal form of an element");
  bool trace = false;
  normalize_cmd->app->add_flag("--trace", trace, "Print each rewrite step (raw diword input only)");
  auto* classify_cmd = add_element_command(app, element_commands, "classify", "Normal form class of an element");
  auto* dagger_cmd = add_element_command(app, element_commands, "dagger", "Dagger of an element");

  auto* table = app.add_subcommand("table", "Single generator operation tables");
  int range = 3;
  int ij_range = -1;
  std::string table_format = "text";
  table->add_option("--range", range, "Bound N on exponents n, m")->check(CLI::PositiveNumber);
  table->add_option("--ij-range", ij_range, "Bound on |i|, |j| (defaults to --range)");
  table->add_option("--out", table_format, "Output format")->check(CLI::IsMember({"csv", "text"}));

  auto* gsb = app.add_subcommand("gsb-check", "Check every composition of S and T reduces to zero");
  std::string gsb_gens = "a,b";
  std::size_t max_chain = 3;
  std::size_t max_pad = 3;
  std::size_t jobs = 1;
  bool gsb_json = false;
  std::string mutation;
  gsb->add_option("--gens", gsb_gens, "Comma separated generator names");
  gsb->add_option("--max-chain", max_chain, "Longest chain in T2 and T4 instances");
  gsb->add_option("--max-pad", max_pad, "Longest padding word in right multiplications");
  gsb->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  gsb->add_flag("--json", gsb_json, "Print a JSON report");
  gsb->add_option("--mutate", mutation, "Check a broken rule set instead")
      ->check(CLI::IsMember({"t3-reversed", "drop-t4"}));

  auto* axioms = app.add_subcommand("axioms", "Check G1-G6 on a finite digroup file");
  std::string axioms_file;
  axioms->add_option("file", axioms_file, "Digroup JSON file")->required();

  auto* homcount = app.add_subcommand("homcount", "Count homomorphisms from F(X) into a finite digroup");
  std::size_t gens_count = 1;
  std::string homcount_file;
  homcount->add_option("--gens-count", gens_count, "Number of generators")->required();
  homcount->add_option("file", homcount_file, "Digroup JSON file")->required();

  auto* halo = app.add_subcommand("halo", "List the bar-units of F(X) up to a length");
  std::string halo_gens;
  std::size_t max_len = 4;
  halo->add_option("--gens", halo_gens, "Comma separated generator names")->required();
  halo->add_option("--max-len", max_len, "Longest word length")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kUsage;
  }

  try {
    for (auto& cmd : element_commands) {
      if (!cmd->app->parsed()) continue;
      const Alphabet alphabet = Alphabet::parse(cmd->gens);
      const bool tracing = cmd.get() == normalize_cmd && trace;
      NormalForm w = evaluate_input(cmd->input, alphabet, tracing ? &out : nullptr);
      if (cmd.get() == dagger_cmd) w = dagger(w);
      if (cmd.get() == classify_cmd && !cmd->json) {
        out << to_string(w.diword(), alphabet) << ' ' << to_string(w.klass()) << '\n';
      } else {
        print_element(out, w, alphabet, cmd->json);
      }
      return kOk;
    }

    if (table->parsed()) {
      auto t = single_generator_table(range, ij_range < 0 ? range : ij_range);
      out << (table_format == "csv" ? table_to_csv(t) : table_to_text(t));
      return kOk;
    }

    if (gsb->parsed()) {
      CheckOptions options;
      options.jobs = jobs;
      if (mutation == "t3-reversed") options.rules = RuleSet::standard().replaced(mutations::t3_reversed());
      if (mutation == "drop-t4") options.rules = RuleSet::standard().without(RuleKind::T4);
      auto report = check_all(Alphabet::parse(gsb_gens), max_chain, max_pad, options);
      out << (gsb_json ? report_to_json(report) : report_to_text(report));
      return report.pass() ? kOk : kVerificationFailed;
    }

    if (axioms->parsed()) {
      auto d = load_digroup_file(axioms_file);
      auto report = check_axioms(d);
      out << report_to_text(report, d);
      return report.pass() ? kOk : kVerificationFailed;
    }

    if (homcount->parsed()) {
      auto d = load_digroup_file(homcount_file);
      auto report = check_axioms(d);
      if (!report.pass()) {
        err << "error: not a digroup\n" << report_to_text(report, d);
        return kVerificationFailed;
      }
      auto result = hom_count(gens_count, d);
      out << result.count << '\n';
      if (result.failed_assignments != 0) {
        err << "error: " << result.failed_assignments << " assignments violate a defining relation\n";
        return kVerificationFailed;
      }
      return kOk;
    }

    if (halo->parsed()) {
      const Alphabet alphabet = Alphabet::parse(halo_gens);
      for (const auto& w : enumerate_normal_forms(alphabet, max_len))
        if (in_halo(w)) out << to_string(w.diword(), alphabet) << '\n';
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DigroupLoadError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace digroup
