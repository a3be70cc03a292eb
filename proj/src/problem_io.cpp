#include "regcoh/problem_io.hpp"

#include <fstream>
#include <json.hpp>

namespace regcoh {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError("problem file: " + path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

Rat parse_entry(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

RatVector parse_weight_row(const json& row, int rank, const std::string& path) {
  if (!row.is_array() || static_cast<int>(row.size()) != rank)
    fail(path, "expected an array of " + std::to_string(rank) + " entries");
  RatVector v(rank);
  for (int i = 0; i < rank; ++i)
    v(i) = parse_entry(row[i], path + "[" + std::to_string(i) + "]");
  return v;
}

RatVector parse_integer_row(const json& row, int rank, const std::string& path) {
  if (!row.is_array() || static_cast<int>(row.size()) != rank)
    fail(path, "expected an array of " + std::to_string(rank) + " integers");
  RatVector v(rank);
  for (int i = 0; i < rank; ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    if (!row[i].is_number_integer()) fail(at, "fan generators must be integers");
    v(i) = Rat(static_cast<long>(row[i].get<long long>()));
  }
  return v;
}

}  // namespace

Problem parse_problem_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("problem file: " + origin + ": " + e.what());
  }

  Problem problem;
  const std::string mode = field(doc, "$", "mode").get<std::string>();
  if (mode == "regular") problem.mode = ProblemMode::Regular;
  else if (mode == "wonderful") problem.mode = ProblemMode::Wonderful;
  else if (mode == "toric") problem.mode = ProblemMode::Toric;
  else fail("$.mode", "expected \"regular\", \"wonderful\" or \"toric\"");

  const json& rs = field(doc, "$", "root_system");
  const json& rank_field = field(rs, "$.root_system", "rank");
  if (!rank_field.is_number_integer()) fail("$.root_system.rank", "expected an integer");
  const int rank = rank_field.get<int>();

  if (problem.mode == ProblemMode::Toric) {
    problem.rd = torus_datum(rank);
  } else {
    const Series series =
        parse_series(field(rs, "$.root_system", "series").get<std::string>());
    LatticeChoice lattice = AdjointLattice{};
    if (rs.contains("lattice")) {
      const json& lat = rs["lattice"];
      if (lat.is_string()) {
        const std::string name = lat.get<std::string>();
        if (name == "adjoint") lattice = AdjointLattice{};
        else if (name == "simply_connected") lattice = SimplyConnectedLattice{};
        else fail("$.root_system.lattice",
                  "expected \"adjoint\", \"simply_connected\" or generator rows");
      } else if (lat.is_array()) {
        std::vector<std::vector<Rat>> rows;
        for (std::size_t i = 0; i < lat.size(); ++i) {
          const RatVector row = parse_weight_row(
              lat[i], rank, "$.root_system.lattice[" + std::to_string(i) + "]");
          rows.emplace_back(row.data(), row.data() + row.size());
        }
        lattice = rows;
      } else {
        fail("$.root_system.lattice", "expected a string or generator rows");
      }
    }
    problem.rd = build_root_datum(series, rank, lattice);
  }

  ChamberFan fan;
  if (problem.mode == ProblemMode::Wonderful) {
    if (doc.contains("fan")) fail("$.fan", "wonderful mode fixes the trivial fan");
    fan = wonderful_fan(problem.rd);
  } else {
    const json& fan_field = field(doc, "$", "fan");
    if (!fan_field.is_array() || fan_field.empty()) fail("$.fan", "expected maximal cones");
    std::vector<std::vector<RatVector>> cones;
    for (std::size_t c = 0; c < fan_field.size(); ++c) {
      const json& cone = fan_field[c];
      const std::string at = "$.fan[" + std::to_string(c) + "]";
      if (!cone.is_array() || cone.empty()) fail(at, "expected generator rows");
      std::vector<RatVector> gens;
      for (std::size_t g = 0; g < cone.size(); ++g)
        gens.push_back(
            parse_integer_row(cone[g], rank, at + "[" + std::to_string(g) + "]"));
      cones.push_back(std::move(gens));
    }
    try {
      fan = problem.mode == ProblemMode::Toric ? build_complete_fan(rank, cones)
                                               : build_chamber_fan(problem.rd, cones);
    } catch (const ValidationError& e) {
      fail("$.fan", e.what());
    }
  }

  const json& h_field = field(doc, "$", "h");
  if (!h_field.is_array()) fail("$.h", "expected weight rows");
  std::vector<RatVector> values;
  for (std::size_t i = 0; i < h_field.size(); ++i)
    values.push_back(
        parse_weight_row(h_field[i], rank, "$.h[" + std::to_string(i) + "]"));
  try {
    problem.h = build_pl_function(fan, values);
  } catch (const ValidationError& e) {
    fail("$.h", e.what());
  }

  if (doc.contains("query")) {
    const json& q = doc["query"];
    if (!q.is_object()) fail("$.query", "expected an object");
    if (q.contains("mu"))
      problem.default_mu = parse_weight_row(q["mu"], rank, "$.query.mu");
    if (q.contains("i")) {
      if (!q["i"].is_number_integer()) fail("$.query.i", "expected an integer");
      problem.default_degree = q["i"].get<int>();
    }
  }
  return problem;
}

Problem parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open problem file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_problem_text(text, path);
}

}  // namespace regcoh
