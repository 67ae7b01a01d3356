#include "sroman/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "sroman/constructions.hpp"
#include "sroman/errors.hpp"
#include "sroman/generators.hpp"
#include "sroman/graph_io.hpp"

namespace sroman {

namespace {

std::string instance_name(const std::string& base, std::size_t t) {
  return "S(" + base + "," + std::to_string(t) + ")";
}

class RowBuilder {
 public:
  RowBuilder(VerifyRow& row, const VerifyOptions& options) : row_(row), options_(options) {}

  // Solves when the instance is small enough; false when the solver timed out.
  bool solve(const Graph& g, Problem kind) {
    if (g.order() > options_.max_solver_order) {
      note("solver skipped (" + std::to_string(g.order()) + " vertices)");
      return true;
    }
    try {
      auto c = kind == Problem::roman ? gamma_r_exact(g, options_.solver) : gamma_exact(g, options_.solver);
      row_.solver_value = c.value;
      return true;
    } catch (const TimeoutError&) {
      row_.status = "timeout";
      note("solver timed out");
      return false;
    }
  }

  void require(bool ok, const std::string& what) {
    if (!ok) {
      failed_ = true;
      note(what);
    }
  }

  void note(const std::string& text) { row_.detail += (row_.detail.empty() ? "" : "; ") + text; }

  void close() {
    if (failed_) {
      row_.status = "fail";
    } else if (row_.status.empty()) {
      row_.status = "pass";
    }
  }

 private:
  VerifyRow& row_;
  const VerifyOptions& options_;
  bool failed_ = false;
};

void check_construction(RowBuilder& b, VerifyRow& row, const ConstructionReport& r) {
  row.construction_weight = r.actual_weight;
  b.require(r.valid, "construction is not Roman dominating");
  b.require(BigInt(r.actual_weight) <= r.predicted_weight, "construction heavier than its guarantee");
  for (const auto& n : r.notes) b.note(n);
}

VerifyRow path_row(std::size_t n, std::size_t t, const VerifyOptions& options) {
  VerifyRow row{"path", instance_name("P_" + std::to_string(n), t), n, t, {}, {}, {}, {}, {}};
  RowBuilder b(row, options);
  const BigInt value = gamma_r_sierpinski_path(n, t);
  row.formula = ValueOrBounds::of(value);
  const Graph base = path_graph(n);
  auto s = SierpinskiGraph::build(base, t);
  if (b.solve(s.graph(), Problem::roman) && row.solver_value)
    b.require(BigInt(*row.solver_value) == value, "solver disagrees with the formula");

  ConstructionReport r = (n >= 5 && n % 3 == 2) ? path_construction(n, t)
                                                 : theorem_upper_bound_construction(base, gamma_r_exact(base, options.solver), t);
  check_construction(b, row, r);
  b.require(BigInt(r.actual_weight) >= value, "construction lighter than gamma_R");
  if (n >= 3) b.require(BigInt(r.actual_weight) == value, "construction weight differs from the formula");
  b.close();
  return row;
}

VerifyRow cycle_row(std::size_t n, std::size_t t, const VerifyOptions& options) {
  VerifyRow row{"cycle", instance_name("C_" + std::to_string(n), t), n, t, {}, {}, {}, {}, {}};
  RowBuilder b(row, options);
  row.formula = gamma_r_sierpinski_cycle(n, t);
  auto s = SierpinskiGraph::build(cycle_graph(n), t);
  if (b.solve(s.graph(), Problem::roman) && row.solver_value)
    b.require(row.formula.admits(*row.solver_value), "solver value outside the stated value/bounds");
  auto r = cycle_construction(n, t);
  check_construction(b, row, r);
  b.require(BigInt(r.actual_weight) == r.predicted_weight, "construction weight differs from the formula");
  b.require(row.formula.admits(r.actual_weight), "construction weight outside the stated value/bounds");
  b.close();
  return row;
}

std::vector<VerifyRow> complete_rows(std::size_t n, std::size_t t, const VerifyOptions& options) {
  const std::string name = instance_name("K_" + std::to_string(n), t);
  auto s = SierpinskiGraph::build(complete_graph(n), t);

  VerifyRow dom{"knt-gamma", name, n, t, {}, {}, {}, {}, {}};
  {
    RowBuilder b(dom, options);
    const BigInt value = gamma_knt(n, t);
    dom.formula = ValueOrBounds::of(value);
    if (b.solve(s.graph(), Problem::domination) && dom.solver_value)
      b.require(BigInt(*dom.solver_value) == value, "solver disagrees with the formula");
    auto code = perfect_code_knt(n, t);
    dom.construction_weight = code.size();
    b.require(is_perfect_code(s.graph(), code), "perfect code fails the exact-cover check");
    b.require(BigInt(code.size()) == value, "perfect code size differs from the formula");
    b.close();
  }

  VerifyRow rom{"knt-gamma-r", name, n, t, {}, {}, {}, {}, {}};
  {
    RowBuilder b(rom, options);
    const BigInt upper = gamma_r_knt_upper(n, t);
    rom.formula = ValueOrBounds::between(gamma_knt(n, t), upper);
    if (b.solve(s.graph(), Problem::roman) && rom.solver_value)
      b.require(BigInt(*rom.solver_value) <= upper, "solver value above the upper bound");
    auto r = complete_graph_construction(n, t);
    check_construction(b, rom, r);
    b.require(BigInt(r.actual_weight) == upper, "construction weight differs from the bound");
    b.close();
  }
  return {dom, rom};
}

std::vector<VerifyRow> universal_rows(std::size_t n, std::size_t t, const VerifyOptions& options) {
  std::vector<std::pair<std::string, Graph>> bases;
  bases.emplace_back("star_" + std::to_string(n), star_graph(n));
  auto edges = star_graph(n).edges();
  edges.emplace_back(1, 2);
  bases.emplace_back("star_" + std::to_string(n) + "+e", Graph::from_edge_list(n, edges));

  std::vector<VerifyRow> rows;
  const BigInt value = universal_vertex_value(n, t);
  for (const auto& [label, base] : bases) {
    VerifyRow row{"universal", instance_name(label, t), n, t, ValueOrBounds::of(value), {}, {}, {}, {}};
    RowBuilder b(row, options);
    auto s = SierpinskiGraph::build(base, t);
    if (b.solve(s.graph(), Problem::roman) && row.solver_value)
      b.require(BigInt(*row.solver_value) == value, "solver disagrees with the formula");
    auto r = theorem_upper_bound_construction(base, gamma_r_exact(base, options.solver), t);
    check_construction(b, row, r);
    b.require(BigInt(r.actual_weight) == value, "construction weight differs from the formula");
    b.close();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t family_min(const std::string& family) {
  if (family == "paths") return 3;
  if (family == "cycles") return 4;
  if (family == "universal") return 4;
  return 2;
}

bool fits_budget(std::size_t n, std::size_t t) { return big_pow(n, t) <= vertex_budget(); }

}  // namespace

std::vector<VerifyRow> verify(const VerifyOptions& options) {
  for (const auto& f : options.families)
    if (std::find(kVerifyFamilies.begin(), kVerifyFamilies.end(), f) == kVerifyFamilies.end())
      throw InputError("unknown verify family '" + f + "'");

  std::vector<VerifyRow> rows;
  for (const auto& family : kVerifyFamilies) {
    if (std::find(options.families.begin(), options.families.end(), family) == options.families.end()) continue;
    const std::size_t lo = std::max(options.n_min.value_or(0), family_min(family));
    for (std::size_t n = lo; n <= options.n_max; ++n) {
      for (std::size_t t = std::max<std::size_t>(options.t_min, family == "complete" ? 1 : 2); t <= options.t_max; ++t) {
        if (!fits_budget(n, t)) continue;
        if (family == "paths") rows.push_back(path_row(n, t, options));
        if (family == "cycles") rows.push_back(cycle_row(n, t, options));
        if (family == "complete")
          for (auto& r : complete_rows(n, t, options)) rows.push_back(std::move(r));
        if (family == "universal")
          for (auto& r : universal_rows(n, t, options)) rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

std::vector<SweepRow> sweep(const SweepOptions& options) {
  if (options.n_min < 2 || options.n_min > options.n_max) throw InputError("sweep needs 2 <= n_min <= n_max");
  if (options.t < 2) throw InputError("sweep needs t >= 2");
  if (options.edge_probability < 0 || options.edge_probability > 1)
    throw InputError("edge probability must lie in [0,1]");
  if (!fits_budget(options.n_max, options.t)) throw ResourceError("n_max^t exceeds the vertex budget");

  std::map<std::size_t, KntLowerBound> knt_cache;
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < options.count; ++i) {
    SweepRow row;
    row.index = i;
    row.seed = options.seed;
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(options.n_min, options.n_max)(rng);
    row.base = random_connected_graph(n, options.edge_probability, rng);
    Graph sub = row.base;
    if (row.base.size() > 0) {
      const auto e = std::uniform_int_distribution<std::size_t>(0, row.base.size() - 1)(rng);
      row.removed = row.base.edges()[e];
      sub = remove_edge(row.base, e);
    }

    try {
      const auto& so = options.solver;
      row.gamma = gamma_exact(row.base, so).value;
      auto base_opt = gamma_r_exact(row.base, so);
      row.gamma_r = base_opt.value;
      row.gamma_r_sub = gamma_r_exact(sub, so).value;
      auto s = SierpinskiGraph::build(row.base, options.t);
      auto s_sub = SierpinskiGraph::build(sub, options.t);
      row.s_gamma = gamma_exact(s.graph(), so).value;
      row.s_gamma_r = gamma_r_exact(s.graph(), so).value;
      row.s_gamma_r_sub = gamma_r_exact(s_sub.graph(), so).value;
      row.bound = bound_value(base_opt.function, row.base, options.t);
      auto r = theorem_upper_bound_construction(row.base, base_opt, options.t);
      row.construction_weight = r.actual_weight;
      auto cached = knt_cache.find(n);
      if (cached == knt_cache.end()) cached = knt_cache.emplace(n, knt_lower_bound_for_any_graph(n, options.t, so)).first;
      row.knt = cached->second;

      auto& c = row.checks;
      c.emplace_back("sandwich_base", row.gamma <= row.gamma_r && row.gamma_r <= 2 * row.gamma);
      c.emplace_back("strict_base", row.base.size() == 0 || row.gamma < row.gamma_r);
      c.emplace_back("sandwich_sierpinski", row.s_gamma <= row.s_gamma_r && row.s_gamma_r <= 2 * row.s_gamma);
      c.emplace_back("monotone_base", row.gamma_r <= row.gamma_r_sub);
      c.emplace_back("monotone_sierpinski", row.s_gamma_r <= row.s_gamma_r_sub);
      c.emplace_back("theorem_bound", BigInt(row.s_gamma_r) <= row.bound);
      c.emplace_back("construction", r.valid && BigInt(r.actual_weight) <= r.predicted_weight &&
                                         row.s_gamma_r <= r.actual_weight);
      c.emplace_back("knt_lower_bound", row.knt.value <= row.s_gamma_r);
      const bool ok = std::all_of(c.begin(), c.end(), [](const auto& x) { return x.second; });
      row.status = ok ? "pass" : "fail";
      for (const auto& [name, passed] : c)
        if (!passed) row.detail += (row.detail.empty() ? "" : ", ") + name;
    } catch (const TimeoutError&) {
      row.status = "timeout";
      row.detail = "solver timed out";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json row_to_json(const VerifyRow& row) {
  Json j;
  j["theorem"] = row.theorem;
  j["instance"] = row.instance;
  j["n"] = row.n;
  j["t"] = row.t;
  j["formula"] = value_or_bounds_to_json(row.formula);
  j["solver"] = row.solver_value ? Json(*row.solver_value) : Json(nullptr);
  j["construction"] = row.construction_weight ? Json(*row.construction_weight) : Json(nullptr);
  j["status"] = row.status;
  j["detail"] = row.detail;
  return j;
}

Json row_to_json(const SweepRow& row) {
  Json j;
  j["index"] = row.index;
  j["seed"] = row.seed;
  j["n"] = row.base.order();
  j["edges"] = Json::array();
  for (auto [u, v] : row.base.edges()) j["edges"].push_back({u, v});
  j["removed_edge"] = row.removed ? Json::array({row.removed->first, row.removed->second}) : Json(nullptr);
  j["gamma"] = row.gamma;
  j["gamma_r"] = row.gamma_r;
  j["gamma_r_subgraph"] = row.gamma_r_sub;
  j["sierpinski_gamma"] = row.s_gamma;
  j["sierpinski_gamma_r"] = row.s_gamma_r;
  j["sierpinski_gamma_r_subgraph"] = row.s_gamma_r_sub;
  j["theorem_bound"] = big_to_json(row.bound);
  j["construction_weight"] = row.construction_weight;
  j["knt_lower_bound"] = {{"value", big_to_json(row.knt.value)}, {"method", row.knt.method}};
  Json checks = Json::object();
  for (const auto& [name, ok] : row.checks) checks[name] = ok;
  j["checks"] = std::move(checks);
  j["status"] = row.status;
  j["detail"] = row.detail;
  return j;
}

}  // namespace sroman
