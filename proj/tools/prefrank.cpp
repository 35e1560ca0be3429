// prefrank: ratings and ranks of criteria from pairwise comparisons.
//
//   prefrank rate      [--input PATH|-] [--format text|json|csv] [--ascii]
//   prefrank analyze   [--input PATH|-] [--comparisons PATH] [--tables LIST]
//                      [--reference-rank R]... [--top-k K] [--std population|sample]
//   prefrank selfcheck

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace prefrank;

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RankVector parse_rank_arg(const std::string& text) {
  std::vector<int> ranks;
  std::string tok;
  std::istringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      ranks.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("--reference-rank", "cannot read '" + tok + "' as an integer");
    }
  }
  if (!is_permutation_of_1_to_n(ranks))
    throw ValidationError({"--reference-rank " + text + " is not a permutation of 1..n"});
  return {ranks, Tag::RR};
}

OutputFormat format_of(const std::string& s) { return parse_format(s).value_or(OutputFormat::text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ratings and ranks of criteria from pairwise comparison matrices"};
  app.require_subcommand(1);

  std::string input = "-", comparisons, format = "text", tables, std_flavor = "population", input_format;
  bool ascii = false, strict = true, meta = false;
  std::vector<std::string> references;
  std::size_t top_k = 5;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto* rate = app.add_subcommand("rate", "Rate one comparison matrix with every method");
  rate->add_option("--input", input, "Matrix file (text rows or JSON), '-' for stdin");
  rate->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  rate->add_flag("--ascii", ascii, "Use > and >= instead of Unicode preference symbols");
  rate->add_flag("--strict-scale,!--no-strict-scale", strict, "Require entries on the 1/5..5 comparison scale");

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a batch of survey respondents");
  analyze_cmd->add_option("--input", input, "respondents JSON or respondents.csv, '-' for stdin");
  analyze_cmd->add_option("--input-format", input_format, "json or csv (default: from the file extension)")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze_cmd->add_option("--comparisons", comparisons, "comparisons.csv (default: next to the respondents file)");
  analyze_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  analyze_cmd->add_option("--tables", tables,
                          "Comma-separated sections: respondents,match,corr-ranks,corr-ratings,means,groups,freq,distance");
  analyze_cmd->add_option("--reference-rank", references, "Reference rank vector for distance tables, e.g. 2,1,5,6,3,4");
  analyze_cmd->add_option("--top-k", top_k, "Entries per frequency table")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--std", std_flavor, "Standard deviation flavor")
      ->check(CLI::IsMember({"population", "sample"}));
  analyze_cmd->add_flag("--ascii", ascii, "Use ASCII preference symbols");
  analyze_cmd->add_flag("--strict-scale,!--no-strict-scale", strict, "Require survey values on the declared scales");
  analyze_cmd->add_flag("--meta", meta, "Append provenance after the data sections");

  auto* selfcheck = app.add_subcommand("selfcheck", "Recompute the built-in worked examples");

  CLI11_PARSE(app, argc, argv);

  if (rate->parsed()) {
    std::string text;
    if (int rc = cli::guarded(std::cerr, [&] { text = read_all(input); return 0; })) return rc;
    return cli::cmd_rate(text, {format_of(format), ascii, strict}, std::cout, std::cerr);
  }

  if (analyze_cmd->parsed()) {
    cli::AnalyzeOptions opts;
    opts.format = format_of(format);
    opts.ascii = ascii;
    opts.report.top_k = top_k;
    opts.report.flavor = std_flavor == "sample" ? stats::StdFlavor::sample : stats::StdFlavor::population;
    if (meta) opts.meta_input = input;
    std::string text, comp_text;
    bool csv = false;
    int rc = cli::guarded(std::cerr, [&] {
      if (!tables.empty()) {
        opts.report.sections.clear();
        std::istringstream ss(tables);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          auto sec = parse_section(tok);
          if (!sec) throw ParseError("--tables", "unknown section '" + tok + "'");
          opts.report.sections.insert(*sec);
        }
      }
      for (const auto& r : references) opts.report.references.push_back(parse_rank_arg(r));
      csv = input_format.empty() ? std::filesystem::path(input).extension() == ".csv" : input_format == "csv";
      text = read_all(input);
      if (csv) {
        std::string cpath = comparisons;
        if (cpath.empty()) {
          if (input == "-") throw ParseError("--comparisons", "required when respondents.csv comes from stdin");
          cpath = (std::filesystem::path(input).parent_path() / "comparisons.csv").string();
        }
        comp_text = read_all(cpath);
      }
      return 0;
    });
    if (rc) return rc;
    return cli::cmd_analyze_text(text, comp_text, csv, strict, opts, std::cout, std::cerr);
  }

  if (selfcheck->parsed())
    return cli::cmd_selfcheck(fixtures::hotel_batch(), fixtures::published_results(), std::cout, std::cerr);
  return 0;
}
