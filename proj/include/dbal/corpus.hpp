#pragma once

// Corpus runner: sweeps instance families through the verifiers and reduces
// the results deterministically. Work is split into units whose boundaries
// do not depend on the worker count; results are merged in unit order, so a
// report is identical for any --jobs value.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dbal/enumerate.hpp"
#include "dbal/verify.hpp"

namespace dbal {

struct OrderRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

struct SweepSpec {
  std::optional<OrderRange> connected;         ///< connected:... single-graph stream
  std::optional<OrderRange> first;             ///< G:... connected first factors
  std::optional<OrderRange> second;            ///< H:... all second factors
  bool second_connected_only = false;          ///< Hc:... instead of H:...
  std::optional<OrderRange> complete;          ///< K:... orders of K_n
};

namespace detail {

inline std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end || s.empty())
    throw GraphError("malformed size range '" + std::string(whole) + "'");
  return v;
}

}  // namespace detail

/// "n<=K", "n=K" or "A<=n<=B".
inline OrderRange parse_order_range(std::string_view text) {
  OrderRange r;
  if (text.starts_with("n<=")) {
    r.lo = 1;
    r.hi = detail::parse_size(text.substr(3), text);
  } else if (text.starts_with("n=")) {
    r.lo = r.hi = detail::parse_size(text.substr(2), text);
  } else if (auto pos = text.find("<=n<="); pos != std::string_view::npos) {
    r.lo = detail::parse_size(text.substr(0, pos), text);
    r.hi = detail::parse_size(text.substr(pos + 5), text);
  } else {
    throw GraphError("malformed size range '" + std::string(text) + "'");
  }
  if (r.lo < 1 || r.lo > r.hi) throw GraphError("empty size range '" + std::string(text) + "'");
  return r;
}

/// Comma-separated terms: connected:<range>, G:<range>, H:<range>,
/// Hc:<range>, K:<range>.
inline SweepSpec parse_sweep(std::string_view text) {
  SweepSpec s;
  if (text.empty()) throw GraphError("empty sweep spec");
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto term = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = term.find(':');
    if (colon == std::string_view::npos)
      throw GraphError("malformed sweep term '" + std::string(term) + "'");
    const auto key = term.substr(0, colon);
    const auto range = parse_order_range(term.substr(colon + 1));
    if (key == "connected") {
      s.connected = range;
    } else if (key == "G") {
      s.first = range;
    } else if (key == "H" || key == "Hc") {
      s.second = range;
      s.second_connected_only = key == "Hc";
    } else if (key == "K") {
      s.complete = range;
    } else {
      throw GraphError("unknown sweep key '" + std::string(key) + "'");
    }
  }
  for (const auto& r : {s.connected, s.first, s.second})
    if (r && r->hi > kMaxEnumerationOrder)
      throw GraphError("sweep orders are limited to n <= " + std::to_string(kMaxEnumerationOrder));
  return s;
}

/// What to run the checks over.
///   singles  : single-graph checks (cor-4.2, claim-4.4, claim-4.4-sym, prop-6.1, cor-6.2)
///   firsts x seconds : lexicographic and corona checks
///   complete_orders x seconds : K_n [] H checks
/// A single-graph sweep range is enumerated lazily instead of materialized.
struct CorpusSource {
  std::optional<OrderRange> single_sweep;
  std::vector<Graph> singles;
  std::vector<Graph> firsts;
  std::vector<Graph> seconds;
  std::vector<std::size_t> complete_orders;

  static CorpusSource from_sweep(const SweepSpec& spec) {
    CorpusSource src;
    src.single_sweep = spec.connected;
    if (spec.first) src.firsts = collect_graphs(spec.first->lo, spec.first->hi, true);
    if (spec.second)
      src.seconds = collect_graphs(spec.second->lo, spec.second->hi, spec.second_connected_only);
    if (spec.complete)
      for (std::size_t n = spec.complete->lo; n <= spec.complete->hi; ++n)
        src.complete_orders.push_back(n);
    return src;
  }
};

struct Budget {
  std::size_t max_vertices = 60;  ///< largest product built
  std::optional<std::chrono::milliseconds> time_limit;
};

struct RunOptions {
  CheckSet checks = CheckSet::all();
  unsigned jobs = 1;
  Budget budget;
  bool keep_all_instances = false;
  std::optional<std::size_t> fixed_l;
  std::optional<Vertex> fixed_vertex;  ///< restricts cor-4.2 to one vertex
};

struct CheckTally {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
};

struct VerificationReport {
  /// Disagreements only, unless RunOptions::keep_all_instances.
  std::vector<InstanceResult> instances;
  std::array<CheckTally, kCheckCount> by_check{};
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  /// FNV-1a over every instance record in order, kept or not.
  std::uint64_t digest = 0xcbf29ce484222325ULL;
  bool budget_exceeded = false;
  std::size_t over_budget = 0;  ///< products not built because of max_vertices
  double wall_time_ms = 0;

  int exit_status() const { return failed == 0 ? 0 : 1; }
};

namespace detail {

inline void fnv_mix(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h ^= 0xff;
  h *= 0x100000001b3ULL;
}

inline std::string instance_record(const InstanceResult& r) {
  std::string s(check_name(r.check));
  for (const auto& [k, v] : r.inputs) s += "|" + k + "=" + v;
  for (const auto& [k, v] : r.params) s += "|" + k + "=" + std::to_string(v);
  auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "1" : "0") : "-"; };
  s += r.skipped ? "|skip" : "|run";
  s += std::string("|") + tri(r.predicted) + tri(r.observed) + (r.agree ? "a" : "d");
  return s;
}

struct UnitResult {
  std::vector<InstanceResult> kept;
  std::array<CheckTally, kCheckCount> by_check{};
  std::uint64_t digest = 0xcbf29ce484222325ULL;
  std::size_t over_budget = 0;
  bool ran = false;

  void add(InstanceResult r, bool keep_all) {
    auto& t = by_check[static_cast<std::size_t>(r.check)];
    if (r.skipped) {
      ++t.skipped;
    } else {
      ++t.checked;
      if (!r.agree) ++t.failed;
    }
    fnv_mix(digest, instance_record(r));
    if (keep_all || !r.agree) kept.push_back(std::move(r));
  }
  void add(std::vector<InstanceResult> rs, bool keep_all) {
    for (auto& r : rs) add(std::move(r), keep_all);
  }
};

inline std::vector<std::size_t> l_range(std::size_t lo, std::size_t hi,
                                        const std::optional<std::size_t>& fixed) {
  std::vector<std::size_t> out;
  if (fixed) {
    out.push_back(*fixed);
  } else {
    for (std::size_t l = lo; l <= hi; ++l) out.push_back(l);
  }
  return out;
}

inline void run_single(const Graph& g, const RunOptions& opt, UnitResult& out) {
  const auto& checks = opt.checks;
  const bool keep = opt.keep_all_instances;
  if (checks.contains(Check::cor_4_2)) {
    if (opt.fixed_vertex) {
      out.add(verify_universal_vertex(g, *opt.fixed_vertex), keep);
    } else {
      for (Vertex v = 0; v < g.order(); ++v)
        if (is_universal(g, v)) out.add(verify_universal_vertex(g, v), keep);
    }
  }
  if (checks.contains(Check::claim_4_4)) out.add(verify_claim(g), keep);
  if (checks.contains(Check::claim_4_4_sym)) out.add(verify_claim_symmetric(g), keep);
  if (checks.any_of({Check::prop_6_1, Check::cor_6_2})) {
    const auto d = all_pairs_distances(g);
    const std::size_t diam = d.connected() ? d.diameter() : 1;
    for (std::size_t l : l_range(1, diam, opt.fixed_l)) out.add(verify_char(g, l, checks), keep);
  }
}

inline void run_pair(const Graph& g, const std::vector<Graph>& seconds, const RunOptions& opt,
                     UnitResult& out) {
  const auto& checks = opt.checks;
  const bool keep = opt.keep_all_instances;
  const bool lex = checks.any_of({Check::lex_3_2, Check::lemma_3_1, Check::eq_2});
  const bool cor = checks.any_of({Check::prop_4_1, Check::lemma_4_3, Check::thm_4_4i,
                                  Check::thm_4_4ii, Check::corona_distance});
  if (!lex && !cor) return;
  const auto dg = all_pairs_distances(g);
  const std::size_t diam = dg.connected() ? dg.diameter() : 0;
  for (const auto& h : seconds) {
    if (lex) {
      if (g.order() * h.order() > opt.budget.max_vertices) {
        ++out.over_budget;
      } else {
        if (checks.contains(Check::eq_2))
          out.add(verify_distance_formula(lexicographic(g, h)), keep);
        for (std::size_t l : l_range(3, std::max<std::size_t>(3, diam + 1), opt.fixed_l))
          out.add(verify_lex(g, h, l, checks), keep);
      }
    }
    if (cor) {
      if (g.order() * (h.order() + 1) > opt.budget.max_vertices) {
        ++out.over_budget;
      } else {
        if (checks.contains(Check::corona_distance))
          out.add(verify_distance_formula(corona(g, h)), keep);
        if (checks.contains(Check::prop_4_1) && (!opt.fixed_l || *opt.fixed_l == 2))
          out.add(verify_corona_2db(g, h), keep);
        if (checks.any_of({Check::lemma_4_3, Check::thm_4_4i, Check::thm_4_4ii}))
          for (std::size_t l : l_range(3, diam + 2, opt.fixed_l))
            out.add(verify_corona_l(g, h, l, checks), keep);
      }
    }
  }
}

inline void run_cart(const Graph& h, const std::vector<std::size_t>& orders,
                     const RunOptions& opt, UnitResult& out) {
  const auto& checks = opt.checks;
  const bool keep = opt.keep_all_instances;
  const auto dh = all_pairs_distances(h);
  const std::size_t diam = dh.connected() ? dh.diameter() : 2;
  for (std::size_t n : orders) {
    if (n * h.order() > opt.budget.max_vertices) {
      ++out.over_budget;
      continue;
    }
    if (checks.contains(Check::eq_1))
      out.add(verify_distance_formula(cartesian(complete_graph(n), h)), keep);
    if (checks.contains(Check::lemma_5_1)) out.add(verify_cart_membership(n, h), keep);
    if (checks.any_of({Check::thm_5_2, Check::prop_5_3, Check::cor_5_4}))
      for (std::size_t l : l_range(2, diam, opt.fixed_l)) out.add(verify_cart(n, h, l, checks), keep);
  }
}

}  // namespace detail

inline VerificationReport run_corpus(const CorpusSource& src, const RunOptions& opt) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const auto& checks = opt.checks;

  const bool single_checks =
      checks.any_of({Check::cor_4_2, Check::claim_4_4, Check::claim_4_4_sym,
                     Check::prop_6_1, Check::cor_6_2});
  const bool pair_checks =
      checks.any_of({Check::lex_3_2, Check::lemma_3_1, Check::eq_2, Check::prop_4_1,
                     Check::lemma_4_3, Check::thm_4_4i, Check::thm_4_4ii, Check::corona_distance});
  const bool cart_checks = checks.any_of(
      {Check::thm_5_2, Check::prop_5_3, Check::cor_5_4, Check::lemma_5_1, Check::eq_1});

  const std::vector<Graph>& singles = src.singles.empty() ? src.firsts : src.singles;
  std::vector<std::size_t> orders = src.complete_orders;
  if (orders.empty()) orders = {2, 3};

  // A unit is a contiguous slice of one work list.
  struct Unit {
    enum Kind { sweep, single, pair, cart } kind;
    std::size_t n = 0;  // order, for sweep units
    std::uint64_t begin = 0, end = 0;
  };
  constexpr std::uint64_t kMasksPerUnit = 1U << 14;
  constexpr std::uint64_t kGraphsPerUnit = 64;
  std::vector<Unit> units;
  if (single_checks) {
    if (src.single_sweep) {
      for (std::size_t n = src.single_sweep->lo; n <= src.single_sweep->hi; ++n)
        for (std::uint64_t b = 0; b < mask_limit(n); b += kMasksPerUnit)
          units.push_back({Unit::sweep, n, b, std::min(b + kMasksPerUnit, mask_limit(n))});
    } else {
      for (std::uint64_t b = 0; b < singles.size(); b += kGraphsPerUnit)
        units.push_back({Unit::single, 0, b, std::min<std::uint64_t>(b + kGraphsPerUnit, singles.size())});
    }
  }
  if (pair_checks)
    for (std::uint64_t i = 0; i < src.firsts.size(); ++i) units.push_back({Unit::pair, 0, i, i + 1});
  if (cart_checks)
    for (std::uint64_t i = 0; i < src.seconds.size(); ++i) units.push_back({Unit::cart, 0, i, i + 1});

  std::vector<detail::UnitResult> results(units.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= units.size()) return;
      if (opt.budget.time_limit && clock::now() - start > *opt.budget.time_limit) {
        out_of_time = true;
        continue;
      }
      const Unit& u = units[i];
      auto& res = results[i];
      switch (u.kind) {
        case Unit::sweep:
          for (std::uint64_t m = u.begin; m < u.end; ++m) {
            const auto mask = static_cast<EdgeMask>(m);
            if (edge_mask_connected(u.n, mask))
              detail::run_single(graph_from_edge_mask(u.n, mask), opt, res);
          }
          break;
        case Unit::single:
          for (std::uint64_t k = u.begin; k < u.end; ++k) detail::run_single(singles[k], opt, res);
          break;
        case Unit::pair:
          detail::run_pair(src.firsts[u.begin], src.seconds, opt, res);
          break;
        case Unit::cart:
          detail::run_cart(src.seconds[u.begin], orders, opt, res);
          break;
      }
      res.ran = true;
    }
  };
  const unsigned jobs = std::max(1U, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  VerificationReport rep;
  rep.budget_exceeded = out_of_time;
  for (auto& r : results) {
    if (!r.ran) continue;
    for (std::size_t c = 0; c < kCheckCount; ++c) {
      rep.by_check[c].checked += r.by_check[c].checked;
      rep.by_check[c].skipped += r.by_check[c].skipped;
      rep.by_check[c].failed += r.by_check[c].failed;
    }
    detail::fnv_mix(rep.digest, std::to_string(r.digest));
    rep.over_budget += r.over_budget;
    for (auto& inst : r.kept) rep.instances.push_back(std::move(inst));
  }
  for (const auto& t : rep.by_check) {
    rep.checked += t.checked;
    rep.skipped += t.skipped;
    rep.failed += t.failed;
  }
  if (rep.over_budget > 0) rep.budget_exceeded = true;
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return rep;
}

}  // namespace dbal
