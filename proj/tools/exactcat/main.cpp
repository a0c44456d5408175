#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

exact::Integer parse_integer(const std::string& text, const char* what) {
  exact::Integer x;
  if (x.set_str(text, 10) != 0) throw exact::ParseError(std::string(what) + " '" + text + "' is not an integer");
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact categories of abelian groups: law checks and homological computations."};
  app.require_subcommand(1);
  bool json_output = false;
  app.add_flag("--json", json_output, "Print the JSON report instead of the table");

  exactcat::CheckOptions check;
  std::string functor;
  auto* check_cmd = app.add_subcommand("check", "Run law suites on generated instances");
  check_cmd->add_option("model", check.model, "Model descriptor, e.g. fgab, even-rank-split-completion")->required();
  check_cmd->add_option("--seed", check.seed, "Master seed")->envname("EXACTCAT_SEED");
  check_cmd->add_option("--iters", check.iterations, "Random instances per law");
  check_cmd->add_option("--max-gens", check.max_generators, "Largest number of generators of a generated object");
  check_cmd->add_option("--max-entry", check.max_entry, "Largest absolute value of a generated entry");
  check_cmd->add_option("--suite", check.suites, "Suite to run (repeatable); default all applicable");
  check_cmd->add_option("--functor", functor, "Also check exactness of tensor:N, hom-from:N or hom-into:N");

  std::string document, object, name, idempotent;
  std::size_t max_length = 8;
  auto* resolve_cmd = app.add_subcommand("resolve", "Projective resolution of a document object");
  resolve_cmd->add_option("document", document)->required();
  resolve_cmd->add_option("object", object)->required();
  resolve_cmd->add_option("--max-length", max_length, "Longest resolution built");

  std::string m_text, n_text;
  std::size_t degree = 0;
  auto* ext_cmd = app.add_subcommand("ext", "Ext^i(Z/m, Z/n); 0 stands for Z");
  auto* tor_cmd = app.add_subcommand("tor", "Tor_i(Z/m, Z/n); 0 stands for Z");
  for (auto* cmd : {ext_cmd, tor_cmd}) {
    cmd->add_option("m", m_text)->required();
    cmd->add_option("n", n_text)->required();
    cmd->add_option("i", degree)->required();
  }

  auto* homology_cmd = app.add_subcommand("homology", "Homology of a document complex in every window degree");
  homology_cmd->add_option("document", document)->required();
  homology_cmd->add_option("complex", name)->required();

  auto* snake_cmd = app.add_subcommand("snake", "Six-term sequence of a document ses-morphism");
  snake_cmd->add_option("document", document)->required();
  snake_cmd->add_option("ses_morphism", name)->required();

  auto* complete_cmd = app.add_subcommand("complete", "Split an idempotent in the idempotent completion");
  complete_cmd->add_option("document", document)->required();
  complete_cmd->add_option("object", object)->required();
  complete_cmd->add_option("idempotent", idempotent)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exactcat::kOk : exactcat::kParseError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  exactcat::CommandResult result;
  try {
    if (check_cmd->parsed()) {
      if (!functor.empty()) check.functor = exactcat::parse_functor(functor);
      result = exactcat::cmd_check(check);
    } else if (resolve_cmd->parsed()) {
      result = exactcat::cmd_resolve(exactcat::load_document(document), object, max_length);
    } else if (ext_cmd->parsed()) {
      result = exactcat::cmd_ext(parse_integer(m_text, "m"), parse_integer(n_text, "n"), degree);
    } else if (tor_cmd->parsed()) {
      result = exactcat::cmd_tor(parse_integer(m_text, "m"), parse_integer(n_text, "n"), degree);
    } else if (homology_cmd->parsed()) {
      result = exactcat::cmd_homology(exactcat::load_document(document), name);
    } else if (snake_cmd->parsed()) {
      result = exactcat::cmd_snake(exactcat::load_document(document), name);
    } else {
      result = exactcat::cmd_complete(exactcat::load_document(document), object, idempotent);
    }
  } catch (const std::exception& e) {
    result = exactcat::error_result(command, e);
  }

  if (json_output) {
    std::cout << result.report.dump(2) << "\n";
  } else if (result.report.contains("error")) {
    std::cerr << exactcat::render_human(result.report);
  } else {
    std::cout << exactcat::render_human(result.report);
  }
  return result.exit_code;
}
