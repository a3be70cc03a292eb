#include "regcoh/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "regcoh/engine.hpp"
#include "regcoh/problem_io.hpp"

namespace regcoh {

namespace {

using nlohmann::json;

std::string join(const RatVector& v, const std::string& sep) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v(i).str();
  }
  return out;
}

RatVector parse_weight_flag(const std::string& flag, const std::string& text,
                            int rank) {
  std::vector<Rat> entries;
  std::string item;
  std::istringstream in(text);
  try {
    while (std::getline(in, item, ',')) entries.push_back(parse_rat(item));
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(flag, e.what());
  }
  if (static_cast<int>(entries.size()) != rank)
    throw CLI::ValidationError(flag, "expected " + std::to_string(rank) +
                                         " comma-separated coordinates, got '" + text +
                                         "'");
  RatVector v(rank);
  for (int i = 0; i < rank; ++i) v(i) = entries[i];
  return v;
}

json report_json(const MultiplicityReport& r) {
  json terms = json::array();
  for (const auto& t : r.breakdown) terms.push_back({{"term", t.label}, {"value", t.value}});
  json out = {{"mu", join(r.mu, ",")},
              {"i", r.degree},
              {"m", r.m},
              {"in_h_plus_X", r.lattice_ok},
              {"terms", terms}};
  if (r.dim_endo) out["dim_endo"] = r.dim_endo->get_str();
  return out;
}

void print_report(std::ostream& os, const MultiplicityReport& r, const std::string& format) {
  if (format == "json") {
    os << report_json(r).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    os << "kind,label,value\n";
    os << "m,," << r.m << "\n";
    for (const auto& t : r.breakdown) os << "term," << t.label << "," << t.value << "\n";
    return;
  }
  os << "m^" << r.degree << "(mu = " << join(r.mu, ",") << ") = " << r.m << "\n";
  if (!r.lattice_ok) {
    os << "  (mu is not in h + X)\n";
    return;
  }
  for (const auto& t : r.breakdown)
    os << "  " << t.label
       << (t.label.size() < 8 ? std::string(8 - t.label.size(), ' ') : std::string(" "))
       << t.value << "\n";
}

struct CommonOptions {
  std::string file;
  std::string format = "text";
  std::string mu_text, lambda_text;
  int degree = std::numeric_limits<int>::min();
};

RatVector resolve_mu(const Problem& problem, const CommonOptions& opt) {
  if (!opt.mu_text.empty())
    return parse_weight_flag("--mu", opt.mu_text, problem.rd.rank);
  if (problem.default_mu) return *problem.default_mu;
  throw CLI::ValidationError("--mu", "required (no default in the problem file)");
}

int resolve_degree(const Problem& problem, const CommonOptions& opt) {
  if (opt.degree != std::numeric_limits<int>::min()) return opt.degree;
  if (problem.default_degree) return *problem.default_degree;
  throw CLI::ValidationError("--i", "required (no default in the problem file)");
}

DegreeRequirement parse_requirement(const std::string& text) {
  DegreeRequirement req;
  std::size_t pos;
  try {
    if ((pos = text.find(">=")) != std::string::npos) {
      req.op = DegreeRequirement::Op::Ge;
      req.degree = std::stoi(text.substr(0, pos));
      req.value = std::stol(text.substr(pos + 2));
    } else if ((pos = text.find('>')) != std::string::npos) {
      req.op = DegreeRequirement::Op::Gt;
      req.degree = std::stoi(text.substr(0, pos));
      req.value = std::stol(text.substr(pos + 1));
    } else if ((pos = text.find('=')) != std::string::npos) {
      req.op = DegreeRequirement::Op::Eq;
      req.degree = std::stoi(text.substr(0, pos));
      req.value = std::stol(text.substr(pos + 1));
    } else {
      throw std::invalid_argument("bad shape");
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--require",
                               "'" + text + "' must look like 5=3, 10>0 or 3>=1");
  }
  return req;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cohomology multiplicities of line bundles on group compactifications"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string series_text;
  int rank = 0, box = 3, table_mu_box = 4, oracle_mu_box = -1;
  int degree_max = -1, degree_min = 0, radius = 0;
  std::vector<std::string> require_text;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a problem file");
  validate->add_option("file", opt.file, "problem file")->required();

  CLI::App* mult = app.add_subcommand("mult", "multiplicity m^i_h(mu), general theorem");
  mult->add_option("file", opt.file, "problem file (regular or wonderful mode)")->required();
  mult->add_option("--mu", opt.mu_text, "dominant weight, comma-separated");
  mult->add_option("--i", opt.degree, "cohomological degree");
  add_format(mult);

  CLI::App* table = app.add_subcommand("table", "decomposition table over a mu box");
  table->add_option("file", opt.file, "problem file")->required();
  table->add_option("--i-min", degree_min, "lowest degree")->capture_default_str();
  table->add_option("--i-max", degree_max, "highest degree (default: dim X)");
  table->add_option("--mu-box", table_mu_box, "mu coordinate bound")
      ->capture_default_str();
  add_format(table);

  CLI::App* wonderful =
      app.add_subcommand("wonderful", "closed-form multiplicity on the wonderful "
                                      "compactification");
  wonderful->add_option("file", opt.file, "problem file in wonderful mode (optional)");
  wonderful->add_option("--type", series_text, "series A,B,C,D,F,G,A1xA1");
  wonderful->add_option("--rank", rank, "rank");
  wonderful->add_option("--lambda", opt.lambda_text, "line-bundle weight");
  wonderful->add_option("--mu", opt.mu_text, "dominant weight");
  wonderful->add_option("--i", opt.degree, "cohomological degree");
  add_format(wonderful);

  CLI::App* toric = app.add_subcommand("toric", "toric multiplicity on a complete fan");
  toric->add_option("file", opt.file, "problem file in toric mode")->required();
  toric->add_option("--mu", opt.mu_text, "character, comma-separated");
  toric->add_option("--i", opt.degree, "cohomological degree");
  add_format(toric);

  CLI::App* oracle = app.add_subcommand(
      "check-oracle", "general engine vs closed form on the trivial fan");
  oracle->add_option("--type", series_text, "series")->required();
  oracle->add_option("--rank", rank, "rank")->required();
  oracle->add_option("--box", box, "lambda box radius")->capture_default_str();
  oracle->add_option("--mu-box", oracle_mu_box, "mu box radius (default: --box)");
  oracle->add_option("--i-max", degree_max, "highest degree (default: dim X)");
  add_format(oracle);

  CLI::App* search = app.add_subcommand("search", "scan lambda box for target "
                                                  "wonderful multiplicities");
  search->add_option("--type", series_text, "series")->required();
  search->add_option("--rank", rank, "rank")->required();
  search->add_option("--mu", opt.mu_text, "dominant weight")->required();
  search->add_option("--box", radius, "lambda box radius")->required();
  search
      ->add_option("--require", require_text,
                   "degree requirement: 5=3, 10>0, 3>=1 (repeatable, all must hold)")
      ->required();
  add_format(search);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buffer;
  try {
    if (validate->parsed()) {
      const Problem problem = parse_problem(opt.file);
      buffer << "OK: mode="
             << (problem.mode == ProblemMode::Regular    ? "regular"
                 : problem.mode == ProblemMode::Wonderful ? "wonderful"
                                                          : "toric")
             << " type=" << series_name(problem.rd.series) << problem.rd.rank
             << " cones=" << problem.h.fan.max_cones.size()
             << " |W|=" << problem.rd.weyl_order() << "\n";
    } else if (mult->parsed()) {
      const Problem problem = parse_problem(opt.file);
      if (problem.mode == ProblemMode::Toric)
        throw ValidationError("mult expects a regular or wonderful problem (use toric)");
      MultiplicityReport r =
          multiplicity(problem.rd, problem.h, resolve_mu(problem, opt),
                       resolve_degree(problem, opt));
      r.dim_endo = weyl_dimension(problem.rd, r.mu);
      *r.dim_endo *= *r.dim_endo;
      print_report(buffer, r, opt.format);
    } else if (toric->parsed()) {
      const Problem problem = parse_problem(opt.file);
      if (problem.mode != ProblemMode::Toric)
        throw ValidationError("toric expects a toric-mode problem file");
      const MultiplicityReport r = toric_multiplicity(
          problem.rd, problem.h, resolve_mu(problem, opt), resolve_degree(problem, opt));
      print_report(buffer, r, opt.format);
    } else if (wonderful->parsed()) {
      RootDatum rd;
      RatVector lambda;
      std::optional<RatVector> file_mu;
      std::optional<int> file_degree;
      if (!opt.file.empty()) {
        const Problem problem = parse_problem(opt.file);
        if (problem.mode != ProblemMode::Wonderful)
          throw ValidationError("wonderful expects a wonderful-mode problem file");
        rd = problem.rd;
        lambda = problem.h.values[0];
        file_mu = problem.default_mu;
        file_degree = problem.default_degree;
      } else {
        if (series_text.empty() || rank == 0)
          throw CLI::ValidationError("--type/--rank", "required without a problem file");
        rd = build_root_datum(parse_series(series_text), rank, AdjointLattice{});
      }
      if (!opt.lambda_text.empty())
        lambda = parse_weight_flag("--lambda", opt.lambda_text, rd.rank);
      else if (opt.file.empty())
        throw CLI::ValidationError("--lambda", "required");
      RatVector mu(rd.rank);
      if (!opt.mu_text.empty()) mu = parse_weight_flag("--mu", opt.mu_text, rd.rank);
      else if (file_mu) mu = *file_mu;
      else throw CLI::ValidationError("--mu", "required");
      int degree = opt.degree;
      if (degree == std::numeric_limits<int>::min()) {
        if (!file_degree) throw CLI::ValidationError("--i", "required");
        degree = *file_degree;
      }
      MultiplicityReport r = wonderful_multiplicity(rd, lambda, mu, degree);
      r.dim_endo = weyl_dimension(rd, r.mu);
      *r.dim_endo *= *r.dim_endo;
      print_report(buffer, r, opt.format);
    } else if (table->parsed()) {
      const Problem problem = parse_problem(opt.file);
      if (degree_max < 0) degree_max = problem.rd.dim_compactification();
      const DecompositionTable t =
          decomposition_table(problem.rd, problem.h, degree_min, degree_max,
                              table_mu_box);
      if (opt.format == "json") {
        json rows = json::array();
        for (const auto& row : t.rows)
          rows.push_back({{"i", row.degree},
                          {"mu", join(row.mu, ",")},
                          {"m", row.m},
                          {"dim_endo", row.dim_endo.get_str()}});
        json totals = json::array();
        for (const auto& [i, total] : t.totals)
          totals.push_back({{"i", i}, {"total", total.get_str()}});
        buffer << json{{"rows", rows}, {"totals", totals}, {"box_truncated", true}}.dump(2)
               << "\n";
      } else if (opt.format == "csv") {
        buffer << "kind,i,mu,m,dim_endo,total\n";
        for (const auto& row : t.rows)
          buffer << "row," << row.degree << "," << join(row.mu, "|") << "," << row.m << ","
                 << row.dim_endo.get_str() << ",\n";
        for (const auto& [i, total] : t.totals)
          buffer << "total," << i << ",,,," << total.get_str() << "\n";
      } else {
        buffer << "i   mu              m   (dim L(mu))^2\n";
        for (const auto& row : t.rows) {
          std::string mu = join(row.mu, ",");
          mu.resize(std::max<std::size_t>(mu.size(), 15), ' ');
          buffer << row.degree << "   " << mu << " " << row.m << "   "
                 << row.dim_endo.get_str() << "\n";
        }
        for (const auto& [i, total] : t.totals)
          buffer << "total dim H^" << i << " (box-restricted) = " << total.get_str()
                 << "\n";
        buffer << "note: completeness outside the mu box is not guaranteed\n";
      }
    } else if (oracle->parsed()) {
      const RootDatum rd = build_root_datum(parse_series(series_text), rank, AdjointLattice{});
      if (degree_max < 0) degree_max = rd.dim_compactification();
      if (oracle_mu_box < 0) oracle_mu_box = box;
      const auto mismatches = check_wonderful_oracle(rd, box, oracle_mu_box, degree_max);
      if (opt.format == "json") {
        json rows = json::array();
        for (const auto& m : mismatches)
          rows.push_back({{"lambda", join(m.lambda, ",")},
                          {"mu", join(m.mu, ",")},
                          {"i", m.degree},
                          {"general", m.general},
                          {"closed_form", m.closed_form}});
        buffer << json{{"mismatches", rows}}.dump(2) << "\n";
      } else if (opt.format == "csv") {
        buffer << "lambda,mu,i,general,closed_form\n";
        for (const auto& m : mismatches)
          buffer << join(m.lambda, "|") << "," << join(m.mu, "|") << "," << m.degree << ","
                 << m.general << "," << m.closed_form << "\n";
      } else {
        for (const auto& m : mismatches)
          buffer << "mismatch: lambda=" << join(m.lambda, ",") << " mu=" << join(m.mu, ",")
                 << " i=" << m.degree << " general=" << m.general
                 << " closed=" << m.closed_form << "\n";
        buffer << mismatches.size() << " mismatches\n";
      }
      if (!mismatches.empty()) {
        out << buffer.str();
        return 1;
      }
    } else if (search->parsed()) {
      const RootDatum rd = build_root_datum(parse_series(series_text), rank, AdjointLattice{});
      std::vector<DegreeRequirement> reqs;
      for (const auto& text : require_text) reqs.push_back(parse_requirement(text));
      const auto matches =
          search_wonderful(rd, parse_weight_flag("--mu", opt.mu_text, rd.rank), reqs, radius);
      if (opt.format == "json") {
        json rows = json::array();
        for (const auto& l : matches) rows.push_back(join(l, ","));
        buffer << json{{"matches", rows}, {"box", radius}}.dump(2) << "\n";
      } else if (opt.format == "csv") {
        buffer << "lambda\n";
        for (const auto& l : matches) buffer << join(l, "|") << "\n";
      } else {
        for (const auto& l : matches) buffer << "lambda = " << join(l, ",") << "\n";
        buffer << matches.size() << " matches in box " << radius << "\n";
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << buffer.str();
  return 0;
}

}  // namespace regcoh
