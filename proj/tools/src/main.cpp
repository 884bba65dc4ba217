#include <iostream>

#include "CLI11.hpp"
#include "thetalab/version.hpp"
#include "thetalab_cli/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact Theta pairing, residue and Chern-form checks for hypersurface singularities", "theta-lab"};
  app.set_version_flag("--version", thetalab::kVersion);
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "Execute a job file");
  std::string job_file;
  std::string format = "json";
  thetalab::cli::RunOptions options;
  run->add_option("job-file", job_file, "Job file (TOML)")->required();
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  run->add_flag("--oracle-check", options.oracle_check, "Re-verify lengths with the truncation oracle");
  run->add_option("--threads", options.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  thetalab::cli::JobSpec job;
  try {
    job = thetalab::cli::load_job(job_file);
  } catch (const thetalab::cli::InputError& e) {
    std::cerr << "theta-lab: " << e.what() << '\n';
    return 2;
  }

  const thetalab::cli::RunResult result = thetalab::cli::run_job(job, options);
  for (const std::string& d : result.diagnostics) std::cerr << "theta-lab: " << d << '\n';
  if (format == "table") {
    std::cout << thetalab::cli::render_table(result.report);
  } else {
    std::cout << result.report.dump(2) << '\n';
  }
  return result.exit_code;
}
