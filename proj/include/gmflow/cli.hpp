// Command-line front end: batch subcommands over the file-based grammars.
#ifndef GMFLOW_CLI_HPP
#define GMFLOW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace gmflow::cli {

/// Parsed job; round-trips through its JSON form and is embedded verbatim
/// in every report so results can be re-verified from the report alone.
struct JobSpec {
  std::string subcommand;
  std::size_t nvars = 0;
  std::string gens;      // comma-separated polynomials
  std::string gens2;     // second ideal for `chain`
  std::string weights;   // comma-separated integers
  std::string params;    // comma-separated rationals (distraction)
  std::string coords;    // semicolon-separated series literals (trajectory)
  long trunc = 20;       // series truncation order
  std::vector<std::string> at;  // rational rescaling exponents b to query
  std::string cert_path;
  int samples = 10;
  std::string max_c;     // monomialization search cap (integer)
  std::size_t rcut = 0;  // attractor cut
  std::string format = "text";  // "text" | "structured"
  std::string out_path;  // empty = stdout

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

nlohmann::json jobspec_to_json(const JobSpec& job);
JobSpec jobspec_from_json(const nlohmann::json& doc);

/// Executes a parsed job.  Exit code 0 on success/verified, 1 on failed
/// verification, 2 on input error.
int execute(const JobSpec& job, std::ostream& out, std::ostream& err);

/// argv-level entry point (argument list without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmflow::cli

#endif
