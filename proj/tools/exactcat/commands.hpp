#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "exact/io/document.hpp"
#include "exact/resolutions/functors.hpp"

namespace exactcat {

enum ExitCode : int { kOk = 0, kLawFailure = 1, kParseError = 2, kPreconditionFailure = 3, kInternalError = 4 };

// Every command produces a JSON report; the human output is rendered from it.
struct CommandResult {
  nlohmann::json report;
  int exit_code = kOk;
};

struct CheckOptions {
  std::string model = "fgab";
  std::uint64_t seed = 1;
  std::size_t iterations = 100;
  std::size_t max_generators = 4;
  std::size_t max_entry = 9;
  // Empty: every suite whose preconditions the model meets.
  std::vector<std::string> suites;
  // Adds the functor exactness suite.
  std::optional<exact::FunctorSpec> functor;
};

// "tensor:N", "hom-from:N" or "hom-into:N" with parameter Z/N (Z for N = 0).
exact::FunctorSpec parse_functor(const std::string& text);

CommandResult cmd_check(const CheckOptions& options);
CommandResult cmd_resolve(const exact::Document& doc, const std::string& object, std::size_t max_length);
// Ext^i(Z/m, Z/n) and Tor_i(Z/m, Z/n); m or n equal to 0 stands for Z.
CommandResult cmd_ext(const exact::Integer& m, const exact::Integer& n, std::size_t i);
CommandResult cmd_tor(const exact::Integer& m, const exact::Integer& n, std::size_t i);
CommandResult cmd_homology(const exact::Document& doc, const std::string& complex);
CommandResult cmd_snake(const exact::Document& doc, const std::string& ses_morphism);
// Splits the idempotent endomorphism `idempotent` of `object` in the
// idempotent completion of the document's model (or in the model itself when
// it already is a completion).
CommandResult cmd_complete(const exact::Document& doc, const std::string& object, const std::string& idempotent);

// Reads and validates a document against its own model. Throws ParseError.
exact::Document load_document(const std::string& path);

// Error report for an exception raised by a command, with its exit code.
CommandResult error_result(const std::string& command, const std::exception& e);

std::string render_human(const nlohmann::json& report);

}  // namespace exactcat
