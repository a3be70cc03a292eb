#include "regcoh/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

#include "regcoh/linalg.hpp"

namespace regcoh {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned threads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("REGCOH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) threads = static_cast<unsigned>(v);
  }
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

namespace {

std::string vec_key(const RatVector& v) {
  std::string k;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    k += v(i).str();
    k += ',';
  }
  return k;
}

// Refinements depend on h and nu only through the per-cone slopes nu - h_sigma.
std::string slope_key(const PLFunction& h, const RatVector& nu) {
  std::string k;
  for (const auto& value : h.values) k += vec_key(nu - value) + "|";
  return k;
}

// Memo for pair and chamber dimensions, keyed on the per-cone slopes.
struct DimsCache {
  std::map<std::string, PairDims> pair;     // slopes + wall set
  std::map<std::string, PairDims> chamber;  // slopes
};

PairDims cached_pair_dims(const PLFunction& h, const RatVector& nu, std::uint32_t J,
                          int max_degree, DimsCache* cache) {
  const std::string key =
      cache ? slope_key(h, nu) + "#" + std::to_string(J) : std::string();
  if (cache) {
    auto it = cache->pair.find(key);
    if (it != cache->pair.end()) return it->second;
  }
  PairDims dims = pair_dims_V_W(graph_refinement(h, nu), J, max_degree);
  if (cache) cache->pair.emplace(key, dims);
  return dims;
}

PairDims cached_chamber_dims(const PLFunction& h, const RatVector& nu, int max_degree,
                             DimsCache* cache) {
  const std::string key = cache ? slope_key(h, nu) : std::string();
  if (cache) {
    auto it = cache->chamber.find(key);
    if (it != cache->chamber.end()) return it->second;
  }
  PairDims dims = chamber_rel_dims(graph_refinement(h, nu), max_degree);
  if (cache) cache->chamber.emplace(key, dims);
  return dims;
}

void validate_mu(const RootDatum& rd, const RatVector& mu) {
  if (mu.size() != rd.rank) throw ValidationError("weight has wrong length");
  if (!is_dominant(rd, mu) || !in_lattice(rd, mu, Lattice::P))
    throw ValidationError("mu must be a dominant integral weight");
}

// Weyl-sum and chamber contributions for every degree at once.
struct GeneralTerms {
  bool lattice_ok = true;
  std::vector<PairDims> per_t;  // aligned with rd.weyl, entry 0 unused
  PairDims chamber;
};

GeneralTerms general_terms(const RootDatum& rd, const PLFunction& h, const RatVector& mu,
                           DimsCache* cache) {
  validate_mu(rd, mu);
  if (h.fan.ambient == ChamberFan::Ambient::DominantChamber && rd.is_torus())
    throw ValidationError("dominant-chamber fan needs a semisimple root datum");
  if (h.fan.ambient == ChamberFan::Ambient::FullSpace && !rd.is_torus())
    throw ValidationError("complete fans go with a torus datum (toric mode)");
  GeneralTerms terms;
  if (!in_h_plus_X(rd, h, mu)) {
    terms.lattice_ok = false;
    return terms;
  }
  terms.per_t.resize(rd.weyl.size());
  for (std::size_t k = 1; k < rd.weyl.size(); ++k) {
    const WeylElement& t = rd.weyl[k];
    const RatVector nu = dot_action(rd, t, mu);
    terms.per_t[k] = cached_pair_dims(h, nu, t.descents, rd.rank - 1, cache);
  }
  terms.chamber = cached_chamber_dims(h, mu, rd.dim_compactification(), cache);
  return terms;
}

MultiplicityReport assemble(const RootDatum& rd, const GeneralTerms& terms,
                            const RatVector& mu, int degree) {
  MultiplicityReport report;
  report.mu = mu;
  report.degree = degree;
  report.lattice_ok = terms.lattice_ok;
  if (!terms.lattice_ok) return report;
  for (std::size_t k = 1; k < rd.weyl.size(); ++k) {
    const WeylElement& t = rd.weyl[k];
    const int j = degree - 2 * t.length - 1;  // H^{j<0} = 0
    long value = 0;
    if (j >= 0 && j < static_cast<int>(terms.per_t[k].size())) value = terms.per_t[k][j];
    if (value != 0) report.breakdown.push_back({t.name(), value});
    report.m += value;
  }
  long chamber = 0;
  if (degree >= 0 && degree < static_cast<int>(terms.chamber.size()))
    chamber = terms.chamber[degree];
  report.breakdown.push_back({"chamber", chamber});
  report.m += chamber;
  return report;
}

void iterate_box(int rank, long lo, long hi, const std::function<void(const RatVector&)>& fn) {
  RatVector v(rank);
  std::vector<long> odo(rank, lo);
  while (true) {
    for (int i = 0; i < rank; ++i) v(i) = Rat(odo[i]);
    fn(v);
    int i = rank - 1;
    while (i >= 0 && odo[i] == hi) { odo[i] = lo; --i; }
    if (i < 0) break;
    ++odo[i];
  }
}

}  // namespace

MultiplicityReport multiplicity(const RootDatum& rd, const PLFunction& h,
                                const RatVector& mu, int degree) {
  DimsCache cache;
  return assemble(rd, general_terms(rd, h, mu, &cache), mu, degree);
}

std::vector<MultiplicityReport> multiplicity_all_degrees(const RootDatum& rd,
                                                         const PLFunction& h,
                                                         const RatVector& mu) {
  DimsCache cache;
  const GeneralTerms terms = general_terms(rd, h, mu, &cache);
  std::vector<MultiplicityReport> out;
  for (int i = 0; i <= rd.dim_compactification(); ++i)
    out.push_back(assemble(rd, terms, mu, i));
  return out;
}

MultiplicityReport wonderful_multiplicity(const RootDatum& rd, const RatVector& lambda,
                                          const RatVector& mu, int degree) {
  if (rd.is_torus())
    throw ValidationError("wonderful counting needs a semisimple root datum");
  validate_mu(rd, mu);
  if (lambda.size() != rd.rank || !in_lattice(rd, lambda, Lattice::P))
    throw ValidationError("lambda must be an integral weight of the cover");
  MultiplicityReport report;
  report.mu = mu;
  report.degree = degree;
  for (const WeylElement& t : rd.weyl) {
    if (contribution_degree(t) != degree) continue;
    if (in_Qt(rd, dot_action(rd, t, mu) - lambda, t)) {
      report.breakdown.push_back({t.name(), 1});
      ++report.m;
    }
  }
  return report;
}

std::vector<long> wonderful_all_degrees(const RootDatum& rd, const RatVector& lambda,
                                        const RatVector& mu) {
  if (rd.is_torus())
    throw ValidationError("wonderful counting needs a semisimple root datum");
  validate_mu(rd, mu);
  std::vector<long> out(rd.dim_compactification() + 1, 0);
  for (const WeylElement& t : rd.weyl)
    if (in_Qt(rd, dot_action(rd, t, mu) - lambda, t)) ++out[contribution_degree(t)];
  return out;
}

MultiplicityReport toric_multiplicity(const RootDatum& rd, const PLFunction& h,
                                      const RatVector& mu, int degree) {
  if (!rd.is_torus() || h.fan.ambient != ChamberFan::Ambient::FullSpace)
    throw ValidationError("toric multiplicities need a torus datum and a complete fan");
  return multiplicity(rd, h, mu, degree);
}

bool m0_characterization(const RootDatum& rd, const PLFunction& h, const RatVector& mu) {
  validate_mu(rd, mu);
  if (!in_h_plus_X(rd, h, mu)) return false;
  for (std::size_t c = 0; c < h.fan.max_cones.size(); ++c)
    for (const auto& g : h.fan.max_cones[c].gens)
      if (h.fan.pair(mu - h.values[c], g) > Rat(0)) return false;
  return true;
}

DecompositionTable decomposition_table(const RootDatum& rd, const PLFunction& h,
                                       int degree_min, int degree_max, int mu_box) {
  DecompositionTable table;
  std::map<int, Int> totals;
  DimsCache cache;
  const long lo = rd.is_torus() ? -static_cast<long>(mu_box) : 0;
  iterate_box(rd.rank, lo, mu_box, [&](const RatVector& mu) {
    const GeneralTerms terms = general_terms(rd, h, mu, &cache);
    const Int dim = weyl_dimension(rd, mu);
    for (int i = std::max(degree_min, 0);
         i <= std::min(degree_max, rd.dim_compactification()); ++i) {
      const MultiplicityReport report = assemble(rd, terms, mu, i);
      if (report.m == 0) continue;
      table.rows.push_back({mu, i, report.m, dim * dim});
      totals[i] += report.m * dim * dim;
    }
  });
  for (const auto& [degree, total] : totals) table.totals.emplace_back(degree, total);
  return table;
}

std::vector<OracleMismatch> check_wonderful_oracle(const RootDatum& rd, int lambda_box,
                                                   int mu_box, int degree_max) {
  const PLFunction base = build_pl_function(
      wonderful_fan(rd), {RatVector(RatVector::Zero(rd.rank))});
  std::vector<OracleMismatch> mismatches;
  DimsCache cache;
  iterate_box(rd.rank, -lambda_box, lambda_box, [&](const RatVector& lambda) {
    PLFunction h = base;
    h.values[0] = lambda;
    iterate_box(rd.rank, 0, mu_box, [&](const RatVector& mu) {
      const GeneralTerms terms = general_terms(rd, h, mu, &cache);
      for (int i = 0; i <= degree_max; ++i) {
        const long general = assemble(rd, terms, mu, i).m;
        const long closed = wonderful_multiplicity(rd, lambda, mu, i).m;
        if (general != closed)
          mismatches.push_back({lambda, mu, i, general, closed});
      }
    });
  });
  return mismatches;
}

std::vector<RatVector> search_wonderful(const RootDatum& rd, const RatVector& mu,
                                        const std::vector<DegreeRequirement>& reqs,
                                        int radius) {
  if (rd.is_torus()) throw ValidationError("search needs a semisimple root datum");
  validate_mu(rd, mu);
  // candidates grouped by contribution degree, with root coordinates of t * mu
  struct Candidate {
    std::uint32_t descents;
    RatVector dot_coords;
  };
  std::map<int, std::vector<Candidate>> by_degree;
  for (const auto& r : reqs) by_degree[r.degree];  // pre-insert: read-only below
  for (const WeylElement& t : rd.weyl) {
    const int deg = contribution_degree(t);
    if (by_degree.count(deg))
      by_degree[deg].push_back({t.descents, rd.root_coords(dot_action(rd, t, mu))});
  }

  std::vector<RatVector> grid;
  iterate_box(rd.rank, -radius, radius, [&](const RatVector& l) { grid.push_back(l); });
  std::vector<char> match(grid.size(), 0);
  parallel_for(grid.size(), [&](std::size_t idx) {
    const RatVector lambda_coords = rd.root_coords(grid[idx]);
    for (const auto& req : reqs) {
      long count = 0;
      for (const auto& cand : by_degree.at(req.degree)) {
        bool ok = true;
        for (int i = 0; i < rd.rank && ok; ++i) {
          const Rat gamma = cand.dot_coords(i) - lambda_coords(i);
          if (!gamma.is_integer()) ok = false;
          else if ((gamma > Rat(0)) != ((cand.descents >> i) & 1u)) ok = false;
        }
        if (ok) ++count;
      }
      const bool pass = req.op == DegreeRequirement::Op::Eq   ? count == req.value
                        : req.op == DegreeRequirement::Op::Ge ? count >= req.value
                                                              : count > req.value;
      if (!pass) return;
    }
    match[idx] = 1;
  });
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (match[i]) out.push_back(grid[i]);
  return out;
}

std::vector<RatVector> wonderful_support(const RootDatum& rd, const RatVector& mu,
                                         const RatVector& lambda) {
  if (rd.is_torus()) throw ValidationError("support needs a semisimple root datum");
  validate_mu(rd, mu);
  std::vector<std::string> via_t, via_J;
  std::map<std::string, RatVector> values;
  for (const WeylElement& t : rd.weyl) {
    const RatVector nu = dot_action(rd, t, mu);
    if (in_Qt(rd, nu - lambda, t) && in_PJ(rd, nu, t.descents)) {
      via_t.push_back(vec_key(nu));
      values.emplace(via_t.back(), nu);
    }
    for (std::uint32_t J = 0; J < (1u << rd.rank); ++J)
      if (in_QJ(rd, nu - lambda, J) && in_PJ(rd, nu, J)) via_J.push_back(vec_key(nu));
  }
  std::sort(via_t.begin(), via_t.end());
  via_t.erase(std::unique(via_t.begin(), via_t.end()), via_t.end());
  std::sort(via_J.begin(), via_J.end());
  via_J.erase(std::unique(via_J.begin(), via_J.end()), via_J.end());
  if (via_t != via_J)
    throw std::logic_error("wonderful_support: the two characterizations disagree");
  std::vector<RatVector> out;
  for (const auto& key : via_t) out.push_back(values.at(key));
  return out;
}

}  // namespace regcoh
