#include <CLI11.hpp>

#include "lexfan/cli.hpp"

int main(int argc, char** argv) {
  using lexfan::cli::Format;
  lexfan::cli::JobSpec job;
  std::string format = "text";
  std::optional<std::size_t> level;

  CLI::App app{"Lexicographic polyhedral complexes, admissible fans and their fibers"};
  app.add_option("command", job.command, "validate | recession | vertices | faces | star | fiber-report | weight | "
                                         "member | generators | cone-over | plot")
      ->required();
  app.add_option("input", job.input, "JSON document: polyhedron, complex or fan")->required();
  app.add_option("--level", level, "recession level i");
  app.add_option("--vertex", job.vertex, "vertex coordinates, e.g. \"0,1\"; rows separated by ';'");
  app.add_option("--u", job.u, "monomial exponent, e.g. \"1,0\"");
  app.add_option("--val", job.val, "coefficient valuation, e.g. \"0,1\"");
  app.add_option("--terms", job.terms, "JSON document with polynomial terms (weight)");
  app.add_option("-o,--output", job.output, "write the result here instead of stdout");
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  job.level = level;
  job.format = format == "machine" ? Format::Machine : Format::Text;
  return lexfan::cli::run(job);
}
