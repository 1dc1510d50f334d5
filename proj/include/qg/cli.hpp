#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qg/analysis.hpp"
#include "qg/construction.hpp"
#include "qg/errors.hpp"
#include "qg/subquasigroups.hpp"
#include "qg/table_io.hpp"

namespace qg::cli {

// Exit codes: 0 success, 1 domain error (invalid table, NoValidM, ...),
// 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<int> parse_csv_perm(const std::string& csv, int base) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      out.push_back(std::stoi(item) - base);
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad permutation entry '" + item + "'");
    }
  return out;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// Runs the tool against argv-style arguments (program name excluded).
/// All reports go to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"finite quasigroup construction and analysis"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand(
      "construct", "build a quasigroup of order p^r over GF(p^r)");
  int opt_p = 0, opt_r = 0;
  std::optional<long> opt_m, opt_c, opt_beta;
  std::string opt_modulus, construct_format = "json";
  construct->add_option("--p", opt_p, "prime characteristic")->required();
  construct->add_option("--r", opt_r, "extension degree")->required();
  construct->add_option("--m", opt_m, "left exponent (default: smallest valid)");
  construct->add_option("--c", opt_c, "constant tag (default: smallest suitable)");
  construct->add_option("--beta", opt_beta, "generator tag (default: canonical)");
  construct->add_option("--modulus", opt_modulus,
                        "modulus coefficients low-to-high, comma separated");
  construct->add_option("--format", construct_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // table-file commands
  std::string file_analyze, file_subq, file_genby, file_isotope;
  long genby_elem = 0;
  bool one_based = false;
  std::string pi_csv, pi1_csv, pi2_csv, isotope_format = "text";
  auto* analyze_cmd =
      app.add_subcommand("analyze", "full property report for a table file");
  analyze_cmd->add_option("file", file_analyze, "table file")->required();
  auto* subq_cmd =
      app.add_subcommand("subq", "list all proper subquasigroups");
  subq_cmd->add_option("file", file_subq, "table file")->required();
  auto* genby_cmd = app.add_subcommand(
      "genby", "subquasigroup generated by one element, with its chain");
  genby_cmd->add_option("file", file_genby, "table file")->required();
  genby_cmd->add_option("element", genby_elem, "generating element")->required();
  auto* isotope_cmd =
      app.add_subcommand("isotope", "apply an isotopy (pi, pi1, pi2)");
  isotope_cmd->add_option("file", file_isotope, "table file")->required();
  isotope_cmd->add_option("--pi", pi_csv, "outer permutation, comma separated");
  isotope_cmd->add_option("--pi1", pi1_csv, "row permutation");
  isotope_cmd->add_option("--pi2", pi2_csv, "column permutation");
  isotope_cmd->add_option("--format", isotope_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  for (auto* c : {analyze_cmd, subq_cmd, genby_cmd, isotope_cmd})
    c->add_flag("--one-based", one_based,
                "read and print indices 1-based (matches printed listings)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_usage;
  }

  const int base = one_based ? 1 : 0;
  try {
    if (construct->parsed()) {
      if (!detail::is_prime(opt_p)) {
        err << "p must be prime\n";
        return exit_usage;
      }
      std::optional<std::vector<int>> modulus;
      if (!opt_modulus.empty())
        modulus = detail::parse_csv_perm(opt_modulus, 0);
      Construction built =
          construct_suitable(opt_p, opt_r, opt_m, opt_c, opt_beta, modulus);
      if (construct_format == "text") {
        write_table_text(out, built.table);
        const Field& F = built.params.field;
        err << "q " << F.q() << "  m " << built.params.m << "  c "
            << F.tag(built.params.c) << "  beta " << F.tag(built.params.beta)
            << "  rank " << built.roots.circulant_rank << "  roots "
            << built.roots.count << '\n';
      } else {
        nlohmann::ordered_json doc;
        doc["params"] = params_to_json(built.params);
        doc["root_count"] = root_count_to_json(built.params.field, built.roots);
        doc["table"] = table_to_json(built.table);
        doc["analysis"] = report_to_json(analyze(built.table));
        out << doc.dump(2) << '\n';
      }
      return exit_ok;
    }
    if (analyze_cmd->parsed()) {
      const Table Q = parse_table(detail::read_file(file_analyze));
      out << report_to_json(analyze(Q), base).dump(2) << '\n';
      return exit_ok;
    }
    if (subq_cmd->parsed()) {
      const Table Q = parse_table(detail::read_file(file_subq));
      nlohmann::ordered_json doc;
      doc["subquasigroups"] = sets_to_json(find_all_subquasigroups(Q), base);
      out << doc.dump(2) << '\n';
      return exit_ok;
    }
    if (genby_cmd->parsed()) {
      const Table Q = parse_table(detail::read_file(file_genby));
      const int a = static_cast<int>(genby_elem) - base;
      const GenerationTrace trace = generated_by(Q, a);
      out << trace_to_json(trace, a, base).dump(2) << '\n';
      return exit_ok;
    }
    if (isotope_cmd->parsed()) {
      const Table Q = parse_table(detail::read_file(file_isotope));
      auto perm_or_id = [&](const std::string& csv) {
        return csv.empty() ? identity_perm(Q.n())
                           : detail::parse_csv_perm(csv, base);
      };
      const Table iso =
          isotope(Q, perm_or_id(pi_csv), perm_or_id(pi1_csv), perm_or_id(pi2_csv));
      if (isotope_format == "text")
        write_table_text(out, iso, base);
      else
        out << table_to_json(iso, base).dump(2) << '\n';
      return exit_ok;
    }
  } catch (const error& e) {
    err << e.what() << '\n';
    return exit_domain;
  }
  err << "no command\n";
  return exit_usage;
}

}  // namespace qg::cli
