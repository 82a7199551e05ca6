#pragma once

// Command line front end.  Every subcommand writes deterministic output
// (stable term order, no timestamps outside reports), so identical
// invocations produce identical bytes.
//
// Exit codes: 0 success, 2 usage error, 3 verification failure.

#include <climits>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtcat/bijections.hpp"
#include "qtcat/cfrac.hpp"
#include "qtcat/classes.hpp"
#include "qtcat/gamma.hpp"
#include "qtcat/mfs.hpp"
#include "qtcat/multipoly.hpp"
#include "qtcat/sequences.hpp"
#include "qtcat/series.hpp"
#include "qtcat/verify.hpp"

namespace qtcat {
namespace cli {

namespace detail {

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    auto j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

inline std::string orbit_text(const Perm& start, ActionKind kind, bool tsv) {
  std::vector<std::string> cols{"des"};
  if (kind == ActionKind::PhiPrimeZero) {
    cols.push_back("31-2");
    cols.push_back("2-13");
    cols.push_back("adi");
  } else if (kind == ActionKind::PhiPrimeNPlusOne) {
    cols.push_back("13-2");
    cols.push_back("2-31");
  } else {
    cols.push_back("fl");
  }
  std::set<Perm> orb = orbit(start, kind);
  Perm rep = representative(start, kind);
  std::ostringstream out;
  std::vector<std::string> tvar{"t"};
  MultiPoly sum(tvar);
  if (tsv) {
    out << "member";
    for (const auto& c : cols) out << '\t' << c;
    out << '\n';
  } else {
    out << "kind: " << action_kind_name(kind) << '\n';
    out << "representative: " << rep.str() << '\n';
    out << "size: " << orb.size() << '\n';
  }
  for (const Perm& m : orb) {
    sum = sum + MultiPoly::var(tvar, "t").pow(static_cast<int>(des(m)));
    if (tsv) {
      out << m.str();
      for (const auto& c : cols) out << '\t' << stat(m, c);
      out << '\n';
    } else {
      out << m.str();
      for (const auto& c : cols) out << "  " << c << '=' << stat(m, c);
      out << '\n';
    }
  }
  if (!tsv) out << "sum: " << sum.str() << '\n';
  return out.str();
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out_stream,
               std::ostream& err) {
  CLI::App app{"exact combinatorics of (q,t)-Catalan numbers"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  // poly
  std::string family;
  int poly_n = 0;
  CLI::App* poly = app.add_subcommand(
      "poly", "print a named polynomial family member in canonical form");
  poly->add_option("family", family,
                   "qt-catalan|carlitz|narayana|dyck-bp|cstar|chat|cbar")
      ->required();
  poly->add_option("n", poly_n, "index n >= 0")->required()->check(CLI::NonNegativeNumber);
  std::string poly_format = "text";
  poly->add_option("--format", poly_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // dist
  std::string class_text, weights_text;
  CLI::App* dist = app.add_subcommand(
      "dist", "distribution of statistics over a permutation class");
  dist->add_option("class", class_text, "class spec, e.g. av:231@n=6")->required();
  dist->add_option("weights", weights_text, "weights, e.g. t^des,q^13-2")->required();
  std::string dist_format = "text";
  dist->add_option("--format", dist_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // cf
  std::string cf_name;
  int cf_order = 0;
  CLI::App* cf = app.add_subcommand(
      "cf", "expand a named continued fraction as a power series");
  cf->add_option("name", cf_name, "qt-catalan|quint|ceks|u-series")->required();
  cf->add_option("--order", cf_order, "truncation order N >= 0")
      ->required()
      ->check(CLI::NonNegativeNumber);

  // gamma
  std::string gamma_poly, gamma_file, gamma_vars = "t", gamma_var = "t",
              gamma_kind = "1+t";
  int gamma_span = 0;
  CLI::App* gamma = app.add_subcommand(
      "gamma", "gamma expansion of a palindromic polynomial");
  gamma->add_option("poly", gamma_poly, "polynomial text, e.g. t^2+4*t+1");
  gamma->add_option("--file", gamma_file, "read the polynomial from a file");
  gamma->add_option("--span", gamma_span, "basis span N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gamma->add_option("--vars", gamma_vars, "comma-separated variables (default t)");
  gamma->add_option("--var", gamma_var, "expansion variable (default t)");
  gamma->add_option("--kind", gamma_kind, "basis kind: 1+t or 1+t/q")
      ->check(CLI::IsMember({"1+t", "1+t/q"}));

  // orbit
  std::string orbit_perm, orbit_kind;
  CLI::App* orb = app.add_subcommand(
      "orbit", "MFS-action orbit of a permutation with statistics");
  orb->add_option("perm", orbit_perm, "permutation, e.g. 28531746 or '2 8 5 3 1 7 4 6'")
      ->required();
  orb->add_option("kind", orbit_kind, "action kind: zero|np1|bar")->required();
  std::string orbit_format = "text";
  orb->add_option("--format", orbit_format, "text|tsv")
      ->check(CLI::IsMember({"text", "tsv"}));

  // seq
  std::string seq_name;
  int seq_count = 0;
  CLI::App* seq = app.add_subcommand("seq", "print a named integer sequence");
  seq->add_option("name", seq_name, "catalan|ballot|r|t|u|F|Gat1")->required();
  seq->add_option("count", seq_count, "number of terms (rows for ballot)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  std::string seq_format = "text";
  seq->add_option("--format", seq_format, "text|bfile")
      ->check(CLI::IsMember({"text", "bfile"}));
  int seq_offset = INT_MIN;
  seq->add_option("--offset", seq_offset, "first index for bfile output");
  bool seq_deep = false;
  seq->add_flag("--deep", seq_deep, "allow expensive terms (F beyond F_4)");

  // verify
  std::string suite_id;
  int verify_n = -1;
  bool verify_deep = false;
  CLI::App* ver = app.add_subcommand(
      "verify", "run a verification suite (or all), one JSON report per line");
  ver->add_option("suite", suite_id, "suite id or 'all'")->required();
  ver->add_option("--n-max", verify_n, "size bound override (trials for properties)");
  ver->add_flag("--deep", verify_deep, "extend the conjecture exploration");

  // conjecture
  int conj_n = 10;
  bool conj_deep = false;
  CLI::App* conj = app.add_subcommand(
      "conjecture", "explore the derangement 123-avoidance conjecture");
  conj->add_option("--n-max", conj_n, "largest n to explore")
      ->check(CLI::NonNegativeNumber);
  conj->add_flag("--deep", conj_deep, "extend the exploration to n = 12");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out_stream << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out_stream << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (poly->parsed()) {
      MultiPoly p = named_family(family, poly_n);
      buf << (poly_format == "json" ? p.json() : p.str()) << '\n';
    } else if (dist->parsed()) {
      MultiPoly p = distribution(class_text, weights_text);
      buf << (dist_format == "json" ? p.json() : p.str()) << '\n';
    } else if (cf->parsed()) {
      buf << cf_series(named_cf(cf_name), cf_order).str();
    } else if (gamma->parsed()) {
      if (gamma_poly.empty() == gamma_file.empty())
        throw Error("gamma needs exactly one of a polynomial argument or --file");
      std::string text = gamma_poly;
      if (!gamma_file.empty()) {
        std::ifstream in(gamma_file);
        if (!in) throw Error("cannot read " + gamma_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                                 text.back() == ' '))
          text.pop_back();
      }
      MultiPoly p = MultiPoly::parse(text, detail::split_commas(gamma_vars));
      GammaBasis basis{gamma_kind == "1+t" ? GammaKind::OnePlusT
                                           : GammaKind::OnePlusTOverQ,
                       gamma_span};
      GammaResult res = gamma_expand(p, basis, gamma_var);
      for (std::size_t k = 0; k < res.gammas.size(); ++k)
        buf << "gamma[" << k << "]: " << res.gammas[k].str() << '\n';
      buf << "status: " << (res.ok ? "success" : "failure") << '\n';
      if (!res.ok) buf << "remainder: " << res.remainder.str() << '\n';
    } else if (orb->parsed()) {
      buf << detail::orbit_text(Perm::parse(orbit_perm),
                                parse_action_kind(orbit_kind),
                                orbit_format == "tsv");
    } else if (seq->parsed()) {
      if (seq_name == "ballot") {
        if (seq_format == "bfile")
          throw Error("seq ballot is a triangle; bfile output is not defined");
        auto rows = ballot_rows_by_recurrence(seq_count - 1);
        for (int n = 0; n < seq_count; ++n) {
          for (int k = 0; k <= n; ++k) buf << (k ? " " : "") << rows[n][k].str();
          buf << '\n';
        }
      } else {
        if (seq_name == "F" && seq_count >= 5 && !seq_deep)
          throw Error("seq F beyond F_4 needs --deep");
        std::vector<Int> vals = sequence_values(seq_name, seq_count);
        int offset = seq_offset == INT_MIN ? sequence_offset(seq_name) : seq_offset;
        for (std::size_t i = 0; i < vals.size(); ++i) {
          if (seq_format == "bfile")
            buf << offset + static_cast<int>(i) << ' ' << vals[i].str() << '\n';
          else
            buf << vals[i].str() << '\n';
        }
      }
    } else if (ver->parsed()) {
      std::vector<Report> reports;
      if (suite_id == "all")
        reports = verify::run_all(verify_n, verify_deep);
      else
        reports.push_back(verify::run_suite(suite_id, verify_n, verify_deep));
      for (const Report& r : reports) {
        buf << r.json() << '\n';
        if (!r.pass) code = 3;
      }
    } else if (conj->parsed()) {
      int eff = conj_deep ? std::max(conj_n, 12) : conj_n;
      for (int n = 1; n <= eff; ++n) {
        MultiPoly g = conjecture_g(n);
        buf << "G[" << n << "]: " << g.str() << '\n';
        GammaResult res = gamma_expand(g, GammaBasis{GammaKind::OnePlusT, n});
        buf << "gamma[" << n << "]:";
        for (const MultiPoly& c : res.gammas) buf << ' ' << c.constant_value().str();
        buf << '\n';
      }
      Report r = verify::explore_conjecture(conj_n, conj_deep);
      buf << r.json() << '\n';
      if (!r.pass) code = 3;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << '\n';
      return 2;
    }
    f << buf.str();
  } else {
    out_stream << buf.str();
  }
  return code;
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> full;
  full.push_back("qtcat");
  for (const auto& a : args) full.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cli
}  // namespace qtcat
