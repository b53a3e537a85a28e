#include "tropreal/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

namespace tropreal {

namespace {

// Primitive ray directions of L^3_2 with entries bounded by d, lex sorted.
std::vector<LatticeVector> candidate_directions(long long d) {
  std::vector<LatticeVector> dirs;
  for (int i = 0; i < 4; ++i) {
    LatticeVector v(4, 0);
    v[i] = 1;
    dirs.push_back(v);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (long long p = 1; p <= d; ++p)
        for (long long q = 1; q <= d; ++q) {
          if (std::gcd(p, q) != 1) continue;
          LatticeVector v(4, 0);
          v[i] = p;
          v[j] = q;
          dirs.push_back(std::move(v));
        }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

struct Enumerator {
  long long d;
  std::vector<LatticeVector> dirs;
  std::vector<std::array<bool, 4>> suffix_touches;  // [idx][coord]
  std::vector<std::vector<int>> group = symmetric_group(4);
  std::set<std::vector<LatticeVector>> classes;
  std::vector<LatticeVector> chosen;

  explicit Enumerator(long long degree) : d(degree), dirs(candidate_directions(degree)) {
    // Descending order puts the coordinate-0 directions first, which makes
    // the residual of coordinate 0 a hard prune early on.
    std::reverse(dirs.begin(), dirs.end());
    suffix_touches.assign(dirs.size() + 1, {false, false, false, false});
    for (std::size_t idx = dirs.size(); idx-- > 0;) {
      suffix_touches[idx] = suffix_touches[idx + 1];
      for (int c = 0; c < 4; ++c)
        if (dirs[idx][c] > 0) suffix_touches[idx][c] = true;
    }
  }

  void run() {
    LatticeVector residual(4, d);
    descend(0, residual);
  }

  void descend(std::size_t idx, LatticeVector& residual) {
    bool done = residual[0] == 0 && residual[1] == 0 && residual[2] == 0 && residual[3] == 0;
    if (done) {
      if (!chosen.empty()) {
        TropicalCurve curve = TropicalCurve::from_vectors(chosen, 4);
        classes.insert(canonical_form(curve, group).vectors());
      }
      return;
    }
    if (idx == dirs.size()) return;
    for (int c = 0; c < 4; ++c)
      if (residual[c] > 0 && !suffix_touches[idx][c]) return;
    const LatticeVector& u = dirs[idx];
    long long tmax = d;
    for (int c = 0; c < 4; ++c)
      if (u[c] > 0) tmax = std::min(tmax, residual[c] / u[c]);
    descend(idx + 1, residual);  // multiplicity 0
    if (tmax == 0) return;
    std::size_t mark = chosen.size();
    chosen.push_back(u);
    for (long long t = 1; t <= tmax; ++t) {
      for (int c = 0; c < 4; ++c) {
        residual[c] -= u[c];
        chosen[mark][c] = t * u[c];
      }
      descend(idx + 1, residual);
    }
    for (int c = 0; c < 4; ++c) residual[c] += tmax * u[c];
    chosen.resize(mark);
  }
};

}  // namespace

std::vector<TropicalCurve> enumerate_curves(long long d) {
  if (d < 1 || d > 5)
    throw TropError(ErrorKind::BadDimensions, "census enumeration supports 1 <= d <= 5");
  Enumerator e(d);
  e.run();
  std::vector<TropicalCurve> out;
  for (const auto& vs : e.classes) out.push_back(TropicalCurve::from_vectors(vs, 4));
  return out;
}

CensusReport run_census(long long degree, long long characteristic,
                        const CensusOptions& options) {
  PlaneIdeal plane = PlaneIdeal::from_forms({{1, 1, 1, 1}}, characteristic);
  std::vector<TropicalCurve> classes = enumerate_curves(degree);
  CensusReport report;
  report.degree = degree;
  report.characteristic = characteristic;
  report.total_classes = classes.size();
  report.entries.reserve(classes.size());
  for (const auto& c : classes)
    report.entries.push_back(CensusEntry{c, -1, std::nullopt, ObstructionReport{}});

  unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned worker_id) {
    try {
      DimCache cache;  // per-thread; results are deterministic either way
      for (std::size_t i = worker_id; i < classes.size(); i += jobs) {
        CensusEntry& entry = report.entries[i];
        entry.dim = realization_dim(plane, classes[i]);
        entry.obstructions = run_all(classes[i], characteristic);
        if (options.with_irr)
          entry.irr_dim = irr_realization_dim(plane, classes[i], &cache);
      }
    } catch (...) {
      errors[worker_id] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (const auto& entry : report.entries) {
    if (entry.dim < 0) {
      ++report.non_realizable;
      if (entry.obstructions.intprod.verdict != Verdict::Fires)
        ++report.intprod_unflagged_nonrealizable;
    }
    if (entry.obstructions.any_fires() && entry.dim >= 0)
      throw TropError(ErrorKind::InvariantViolation,
                      "obstruction fired on a realizable class");
  }
  return report;
}

namespace {

nlohmann::ordered_json criterion_json(const CriterionResult& r) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::Fires) {
    j["labeling"] = r.labeling;
    j["numbers"] = r.numbers;
    if (r.normal) j["normal"] = *r.normal;
  }
  return j;
}

}  // namespace

std::string census_to_json(const CensusReport& report) {
  nlohmann::ordered_json j;
  j["degree"] = report.degree;
  j["characteristic"] = report.characteristic;
  j["total_classes"] = report.total_classes;
  j["non_realizable"] = report.non_realizable;
  j["intprod_unflagged_nonrealizable"] = report.intprod_unflagged_nonrealizable;
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& entry : report.entries) {
    nlohmann::ordered_json e;
    e["curve"] = entry.curve.vectors();
    e["dim"] = entry.dim;
    if (entry.irr_dim) e["irr_dim"] = *entry.irr_dim;
    nlohmann::ordered_json obs;
    obs["intprod"] = criterion_json(entry.obstructions.intprod);
    obs["newton_margin"] = criterion_json(entry.obstructions.newton_margin);
    obs["commonray"] = criterion_json(entry.obstructions.commonray);
    obs["oppositefaces"] = criterion_json(entry.obstructions.oppositefaces);
    obs["oneside"] = criterion_json(entry.obstructions.oneside);
    obs["lattice"] = criterion_json(entry.obstructions.lattice);
    obs["bogartkatz"] = criterion_json(entry.obstructions.bogartkatz);
    e["obstructions"] = std::move(obs);
    j["classes"].push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace tropreal
