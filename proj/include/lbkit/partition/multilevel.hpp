#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <span>
#include <vector>

#include "lbkit/error.hpp"
#include "lbkit/hypergraph.hpp"
#include "lbkit/partition/assignment.hpp"

namespace lbkit {

/// Cut metric and net source: `graph` uses the pairwise edges (edge cut),
/// `hypergraph` the hyperedges (connectivity - 1).
enum class MultilevelMode { graph, hypergraph };

namespace detail {

/// Hypergraph in compressed form with vertex-to-net incidence. Nets have at
/// least two distinct pins.
struct NetList {
  std::vector<double> vw;
  std::vector<std::size_t> net_off{0};
  std::vector<std::uint32_t> pins;
  std::vector<double> net_w;
  std::vector<std::size_t> vtx_off;
  std::vector<std::uint32_t> vtx_nets;

  std::size_t nv() const { return vw.size(); }
  std::size_t nn() const { return net_w.size(); }
  std::span<const std::uint32_t> net(std::size_t e) const {
    return {pins.data() + net_off[e], pins.data() + net_off[e + 1]};
  }
  std::span<const std::uint32_t> nets_of(std::size_t v) const {
    return {vtx_nets.data() + vtx_off[v], vtx_nets.data() + vtx_off[v + 1]};
  }

  /// Appends a net; `p` must be sorted and duplicate-free.
  void add_net(std::span<const std::uint32_t> p, double w) {
    if (p.size() < 2) return;
    pins.insert(pins.end(), p.begin(), p.end());
    net_off.push_back(pins.size());
    net_w.push_back(w);
  }

  void build_incidence() {
    vtx_off.assign(nv() + 1, 0);
    for (std::uint32_t p : pins) ++vtx_off[p + 1];
    for (std::size_t v = 0; v < nv(); ++v) vtx_off[v + 1] += vtx_off[v];
    vtx_nets.assign(pins.size(), 0);
    std::vector<std::size_t> fill(vtx_off.begin(), vtx_off.end() - 1);
    for (std::size_t e = 0; e < nn(); ++e)
      for (std::uint32_t p : net(e)) vtx_nets[fill[p]++] = std::uint32_t(e);
  }

  double total_weight() const {
    double w = 0.0;
    for (double x : vw) w += x;
    return w;
  }

  double max_weight() const {
    double w = 0.0;
    for (double x : vw) w = std::max(w, x);
    return w;
  }
};

inline NetList net_list(const Hypergraph& hg, MultilevelMode mode) {
  NetList g;
  g.vw.assign(hg.vertex_weights().begin(), hg.vertex_weights().end());
  std::vector<std::uint32_t> buf;
  if (mode == MultilevelMode::graph) {
    for (const Edge& e : hg.edges()) {
      const std::uint32_t p[2] = {std::min(e.u, e.v), std::max(e.u, e.v)};
      g.add_net(p, e.weight);
    }
  } else {
    for (std::size_t e = 0; e < hg.num_hyperedges(); ++e) {
      buf.assign(hg.pins(e).begin(), hg.pins(e).end());
      std::sort(buf.begin(), buf.end());
      buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
      g.add_net(buf, hg.hyperedge_weight(e));
    }
  }
  g.build_incidence();
  return g;
}

/// Unbiased-enough bounded draw that does not depend on the standard library's
/// distribution implementations.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

/// Contracts `g` along `cmap` (fine vertex -> coarse vertex), merging parallel nets.
inline NetList contract(const NetList& g, const std::vector<std::uint32_t>& cmap, std::size_t n_coarse) {
  NetList c;
  c.vw.assign(n_coarse, 0.0);
  for (std::size_t v = 0; v < g.nv(); ++v) c.vw[cmap[v]] += g.vw[v];
  std::vector<std::uint32_t> all;
  std::vector<std::size_t> off{0};
  std::vector<double> w;
  std::vector<std::uint32_t> buf;
  for (std::size_t e = 0; e < g.nn(); ++e) {
    buf.clear();
    for (std::uint32_t p : g.net(e)) buf.push_back(cmap[p]);
    std::sort(buf.begin(), buf.end());
    buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
    if (buf.size() < 2) continue;
    all.insert(all.end(), buf.begin(), buf.end());
    off.push_back(all.size());
    w.push_back(g.net_w[e]);
  }
  std::vector<std::uint32_t> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0u);
  auto span_of = [&](std::uint32_t i) {
    return std::span<const std::uint32_t>(all.data() + off[i], all.data() + off[i + 1]);
  };
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto x = span_of(a), y = span_of(b);
    if (x.size() != y.size()) return x.size() < y.size();
    if (std::ranges::equal(x, y)) return a < b;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  for (std::size_t i = 0; i < idx.size();) {
    const auto x = span_of(idx[i]);
    double sum = 0.0;
    std::size_t j = i;
    while (j < idx.size() && std::ranges::equal(span_of(idx[j]), x)) sum += w[idx[j++]];
    c.add_net(x, sum);
    i = j;
  }
  c.build_incidence();
  return c;
}

/// Matches each vertex (in seeded random order) with the unmatched neighbour
/// sharing the most nets, unweighted; ties go to the lowest index. Returns the
/// coarse vertex count.
inline std::size_t match_vertices(const NetList& g, double weight_cap, std::mt19937_64& rng,
                                  std::vector<std::uint32_t>& cmap) {
  const std::size_t n = g.nv();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);
  constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();
  cmap.assign(n, kFree);
  std::vector<std::uint32_t> shared(n, 0);
  std::vector<std::uint32_t> touched;
  std::uint32_t next = 0;
  for (std::uint32_t u : order) {
    if (cmap[u] != kFree) continue;
    touched.clear();
    for (std::uint32_t e : g.nets_of(u))
      for (std::uint32_t v : g.net(e)) {
        if (v == u || cmap[v] != kFree || g.vw[u] + g.vw[v] > weight_cap) continue;
        if (shared[v]++ == 0) touched.push_back(v);
      }
    std::uint32_t best = kFree, best_count = 0;
    for (std::uint32_t v : touched) {
      if (shared[v] > best_count || (shared[v] == best_count && v < best)) {
        best = v;
        best_count = shared[v];
      }
      shared[v] = 0;
    }
    cmap[u] = next;
    if (best != kFree) cmap[best] = next;
    ++next;
  }
  return next;
}

/// Two-way partition state over a NetList with incremental cut bookkeeping.
class Bipartition {
 public:
  Bipartition(const NetList& g, std::vector<std::uint8_t> side) : g_(g), side_(std::move(side)) {
    count_.assign(g.nn(), {0, 0});
    for (std::size_t e = 0; e < g.nn(); ++e)
      for (std::uint32_t p : g.net(e)) ++count_[e][side_[p]];
    for (std::size_t v = 0; v < g.nv(); ++v) load_[side_[v]] += g.vw[v];
    for (std::size_t e = 0; e < g.nn(); ++e) {
      if (count_[e][0] && count_[e][1]) cut_ += g.net_w[e];
    }
  }

  const std::vector<std::uint8_t>& sides() const { return side_; }
  double cut() const { return cut_; }
  double load(int s) const { return load_[s]; }
  std::uint8_t side(std::size_t v) const { return side_[v]; }
  const std::array<std::uint32_t, 2>& count(std::size_t e) const { return count_[e]; }

  double gain(std::size_t v) const {
    const int s = side_[v];
    double gain = 0.0;
    for (std::uint32_t e : g_.nets_of(v)) {
      if (count_[e][s] == 1) gain += g_.net_w[e];
      if (count_[e][1 - s] == 0) gain -= g_.net_w[e];
    }
    return gain;
  }

  /// Moves v and calls `touch(u, delta)` for every other pin whose gain changed.
  template <class Touch>
  void move(std::uint32_t v, Touch&& touch) {
    const int from = side_[v], to = 1 - from;
    for (std::uint32_t e : g_.nets_of(v)) {
      const double w = g_.net_w[e];
      auto& c = count_[e];
      if (c[to] == 0) {
        for (std::uint32_t u : g_.net(e))
          if (u != v) touch(u, +w);
      } else if (c[to] == 1) {
        for (std::uint32_t u : g_.net(e))
          if (u != v && side_[u] == to) touch(u, -w);
      }
      const bool was_cut = c[0] && c[1];
      --c[from];
      ++c[to];
      const bool is_cut = c[0] && c[1];
      if (was_cut && !is_cut) cut_ -= w;
      if (!was_cut && is_cut) cut_ += w;
      if (c[from] == 0) {
        for (std::uint32_t u : g_.net(e))
          if (u != v) touch(u, -w);
      } else if (c[from] == 1) {
        for (std::uint32_t u : g_.net(e))
          if (u != v && side_[u] == from) touch(u, +w);
      }
    }
    side_[v] = std::uint8_t(to);
    load_[from] -= g_.vw[v];
    load_[to] += g_.vw[v];
  }

  void move(std::uint32_t v) {
    move(v, [](std::uint32_t, double) {});
  }

 private:
  const NetList& g_;
  std::vector<std::uint8_t> side_;
  std::vector<std::array<std::uint32_t, 2>> count_;
  std::array<double, 2> load_{0.0, 0.0};
  double cut_ = 0.0;
};

struct BalanceLimits {
  std::array<double, 2> target{};
  std::array<double, 2> limit{};

  double excess(double w0, double w1) const {
    return std::max(0.0, w0 - limit[0]) + std::max(0.0, w1 - limit[1]);
  }

  /// Relative overload of the heavier side, for tie-breaking.
  double skew(double w0, double w1) const {
    auto rel = [](double w, double t) { return t > 0.0 ? w / t : (w > 0.0 ? HUGE_VAL : 0.0); };
    return std::max(rel(w0, target[0]), rel(w1, target[1]));
  }
};

/// Side weights may reach max((1 + delta) * T_s, T_s + w_max / 2).
inline BalanceLimits balance_limits(double total, double frac0, double delta, double w_max) {
  BalanceLimits b;
  b.target = {total * frac0, total - total * frac0};
  for (int s = 0; s < 2; ++s) {
    b.limit[s] = std::max((1.0 + delta) * b.target[s], b.target[s] + 0.5 * w_max);
  }
  return b;
}

struct Quality {
  double excess, cut, skew;

  bool better_than(const Quality& o) const {
    const double tol = 1e-12 * (1.0 + std::abs(o.cut));
    if (excess < o.excess - 1e-12 * (1.0 + o.excess)) return true;
    if (excess > o.excess + 1e-12 * (1.0 + o.excess)) return false;
    if (cut < o.cut - tol) return true;
    if (cut > o.cut + tol) return false;
    return skew < o.skew - 1e-12;
  }
};

inline Quality quality(const Bipartition& p, const BalanceLimits& b) {
  return {b.excess(p.load(0), p.load(1)), p.cut(), b.skew(p.load(0), p.load(1))};
}

/// One Fiduccia-Mattheyses pass: single-vertex moves by best gain, each vertex
/// at most once, then rollback to the best prefix. Returns true if the
/// partition improved.
inline bool fm_pass(const NetList& g, Bipartition& part, const BalanceLimits& bal) {
  const std::size_t n = g.nv();
  struct Item {
    double gain;
    std::uint32_t v;
    std::uint32_t stamp;
    bool operator<(const Item& o) const { return gain < o.gain || (gain == o.gain && v > o.v); }
  };
  std::vector<double> gain(n);
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<char> locked(n, 0);
  std::array<std::priority_queue<Item>, 2> heap;
  for (std::uint32_t v = 0; v < n; ++v) {
    gain[v] = part.gain(v);
    heap[part.side(v)].push({gain[v], v, 0});
  }
  const Quality start = quality(part, bal);
  Quality best = start;
  std::vector<std::uint32_t> moves;
  std::size_t best_len = 0;
  const std::size_t patience = std::max<std::size_t>(100, n / 50);
  const double slack = g.max_weight();
  auto touch = [&](std::uint32_t u, double d) {
    if (locked[u]) return;
    gain[u] += d;
    heap[part.side(u)].push({gain[u], u, ++stamp[u]});
  };
  while (true) {
    const double ex = bal.excess(part.load(0), part.load(1));
    std::array<bool, 2> ok{false, false};
    for (int s = 0; s < 2; ++s) {
      auto& h = heap[s];
      while (!h.empty() && (locked[h.top().v] || h.top().stamp != stamp[h.top().v] ||
                            part.side(h.top().v) != s)) {
        h.pop();
      }
      if (h.empty()) continue;
      const std::uint32_t v = h.top().v;
      std::array<double, 2> w{part.load(0), part.load(1)};
      w[s] -= g.vw[v];
      w[1 - s] += g.vw[v];
      // A move may overshoot the receiving limit by one heaviest vertex; the
      // rollback below never keeps a prefix with more excess than the start.
      ok[s] = bal.excess(w[0], w[1]) <= ex + 1e-12 * (1.0 + ex) ||
              w[1 - s] <= bal.limit[1 - s] + slack;
    }
    int s = -1;
    if (ok[0] && ok[1]) {
      const double g0 = heap[0].top().gain, g1 = heap[1].top().gain;
      if (g0 != g1) {
        s = g0 > g1 ? 0 : 1;
      } else {
        s = part.load(1) - bal.limit[1] > part.load(0) - bal.limit[0] ? 1 : 0;
      }
    } else if (ok[0]) {
      s = 0;
    } else if (ok[1]) {
      s = 1;
    }
    if (s < 0) break;
    const std::uint32_t v = heap[s].top().v;
    heap[s].pop();
    locked[v] = 1;
    part.move(v, touch);
    moves.push_back(v);
    const Quality q = quality(part, bal);
    if (q.better_than(best)) {
      best = q;
      best_len = moves.size();
    } else if (moves.size() - best_len > patience) {
      break;
    }
  }
  while (moves.size() > best_len) {
    part.move(moves.back());
    moves.pop_back();
  }
  return best_len > 0;
}

inline void fm_refine_net(const NetList& g, Bipartition& part, const BalanceLimits& bal,
                          int pass_limit) {
  for (int pass = 0; pass < pass_limit; ++pass) {
    if (!fm_pass(g, part, bal)) break;
  }
}

/// Moves vertices off an overloaded side, cheapest cut increase first, until
/// the limits hold or no single move helps.
inline void rebalance(const NetList& g, Bipartition& part, const BalanceLimits& bal) {
  while (bal.excess(part.load(0), part.load(1)) > 0.0) {
    const int s = part.load(0) - bal.limit[0] > part.load(1) - bal.limit[1] ? 0 : 1;
    const double ex = bal.excess(part.load(0), part.load(1));
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    double best_gain = -HUGE_VAL;
    for (std::uint32_t v = 0; v < g.nv(); ++v) {
      if (part.side(v) != s) continue;
      std::array<double, 2> w{part.load(0), part.load(1)};
      w[s] -= g.vw[v];
      w[1 - s] += g.vw[v];
      if (bal.excess(w[0], w[1]) >= ex) continue;
      const double gv = part.gain(v);
      if (gv > best_gain) {
        best_gain = gv;
        best = v;
      }
    }
    if (best == std::numeric_limits<std::uint32_t>::max()) break;
    part.move(best);
  }
}

/// Best split of a small NetList by full enumeration (Gray-code order).
inline std::vector<std::uint8_t> exhaustive_split(const NetList& g, const BalanceLimits& bal) {
  const std::size_t n = g.nv();
  Bipartition part(g, std::vector<std::uint8_t>(n, 1));
  std::vector<std::uint8_t> best = part.sides();
  Quality best_q = quality(part, bal);
  const std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    part.move(std::uint32_t(std::countr_zero(i)));
    const Quality q = quality(part, bal);
    if (q.better_than(best_q)) {
      best_q = q;
      best = part.sides();
    }
  }
  return best;
}

/// Breadth-first growth of side 0 from a seed vertex until it reaches its target.
inline std::vector<std::uint8_t> grow_split(const NetList& g, const BalanceLimits& bal,
                                            std::uint32_t seed) {
  const std::size_t n = g.nv();
  std::vector<std::uint8_t> side(n, 1);
  std::vector<char> queued(n, 0);
  std::vector<std::uint32_t> queue{seed};
  queued[seed] = 1;
  double w0 = 0.0;
  std::uint32_t scan = 0;
  for (std::size_t head = 0;; ++head) {
    if (head == queue.size()) {
      while (scan < n && queued[scan]) ++scan;
      if (scan == n) break;
      queue.push_back(scan);
      queued[scan] = 1;
    }
    const std::uint32_t v = queue[head];
    if (w0 + g.vw[v] > bal.target[0] &&
        std::abs(w0 + g.vw[v] - bal.target[0]) >= std::abs(w0 - bal.target[0])) {
      break;
    }
    side[v] = 0;
    w0 += g.vw[v];
    for (std::uint32_t e : g.nets_of(v))
      for (std::uint32_t u : g.net(e)) {
        if (!queued[u]) {
          queued[u] = 1;
          queue.push_back(u);
        }
      }
  }
  return side;
}

struct MultilevelSettings {
  double delta;
  std::size_t stop_size;
  int pass_limit;
};

/// Coarsen, split the coarsest level, then project back with FM at each level.
inline std::vector<std::uint8_t> multilevel_split(const NetList& fine, double frac0,
                                                  const MultilevelSettings& s,
                                                  std::mt19937_64& rng) {
  constexpr std::size_t kExhaustive = 20;
  const double total = fine.total_weight();
  const double cap = std::max(fine.max_weight(), 2.0 * total / double(s.stop_size));
  std::vector<NetList> levels;
  std::vector<std::vector<std::uint32_t>> maps;
  const NetList* cur = &fine;
  while (cur->nv() > s.stop_size) {
    std::vector<std::uint32_t> cmap;
    const std::size_t nc = match_vertices(*cur, cap, rng, cmap);
    if (double(nc) > 0.95 * double(cur->nv())) break;
    levels.push_back(contract(*cur, cmap, nc));
    maps.push_back(std::move(cmap));
    cur = &levels.back();
  }

  auto limits_for = [&](const NetList& g) {
    return balance_limits(total, frac0, s.delta, g.max_weight());
  };

  const BalanceLimits coarse_bal = limits_for(*cur);
  std::vector<std::uint8_t> side;
  if (cur->nv() <= kExhaustive) {
    side = exhaustive_split(*cur, coarse_bal);
  } else {
    Quality best_q{HUGE_VAL, HUGE_VAL, HUGE_VAL};
    for (int t = 0; t < 4; ++t) {
      const auto seed = std::uint32_t(draw(rng, cur->nv()));
      Bipartition trial(*cur, grow_split(*cur, coarse_bal, seed));
      fm_refine_net(*cur, trial, coarse_bal, s.pass_limit);
      const Quality q = quality(trial, coarse_bal);
      if (q.better_than(best_q)) {
        best_q = q;
        side = trial.sides();
      }
    }
  }
  {
    Bipartition p(*cur, side);
    fm_refine_net(*cur, p, coarse_bal, s.pass_limit);
    side = p.sides();
  }
  for (std::size_t l = levels.size(); l-- > 0;) {
    const NetList& g = l == 0 ? fine : levels[l - 1];
    std::vector<std::uint8_t> projected(g.nv());
    for (std::size_t v = 0; v < g.nv(); ++v) projected[v] = side[maps[l][v]];
    Bipartition p(g, std::move(projected));
    const BalanceLimits bal = limits_for(g);
    fm_refine_net(g, p, bal, s.pass_limit);
    if (l == 0) rebalance(g, p, bal);
    side = p.sides();
  }
  if (levels.empty()) {
    Bipartition p(fine, side);
    rebalance(fine, p, limits_for(fine));
    side = p.sides();
  }
  return side;
}

/// Vertices `keep` of g with nets restricted to them (nets left with one pin vanish).
inline NetList induced(const NetList& g, const std::vector<std::uint32_t>& keep) {
  constexpr std::uint32_t kOut = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> local(g.nv(), kOut);
  NetList s;
  for (std::uint32_t i = 0; i < keep.size(); ++i) {
    local[keep[i]] = i;
    s.vw.push_back(g.vw[keep[i]]);
  }
  std::vector<std::uint32_t> buf;
  for (std::size_t e = 0; e < g.nn(); ++e) {
    buf.clear();
    for (std::uint32_t p : g.net(e))
      if (local[p] != kOut) buf.push_back(local[p]);
    s.add_net(buf, g.net_w[e]);  // pins stay sorted: keep is ascending
  }
  s.build_incidence();
  return s;
}

inline void recursive_multilevel(const NetList& g, const std::vector<std::uint32_t>& ids,
                                 std::uint32_t n, std::uint32_t first_part,
                                 const MultilevelSettings& s, std::mt19937_64& rng,
                                 PartitionAssignment& out) {
  if (n == 1 || g.nv() == 0) {
    for (std::uint32_t id : ids) out.part[id] = first_part;
    return;
  }
  if (g.nv() <= n) {
    for (std::size_t i = 0; i < ids.size(); ++i) out.part[ids[i]] = first_part + std::uint32_t(i);
    return;
  }
  const std::uint32_t nl = (n + 1) / 2, nr = n / 2;
  const auto side = multilevel_split(g, double(nl) / double(n), s, rng);
  std::array<std::vector<std::uint32_t>, 2> local, global;
  for (std::uint32_t v = 0; v < g.nv(); ++v) {
    local[side[v]].push_back(v);
    global[side[v]].push_back(ids[v]);
  }
  for (int k = 0; k < 2; ++k) {
    const NetList sub = induced(g, local[k]);
    recursive_multilevel(sub, global[k], k == 0 ? nl : nr, k == 0 ? first_part : first_part + nl, s,
                         rng, out);
  }
}

}  // namespace detail

/// Recursive multilevel bisection into n parts with proportional targets.
/// Each bisection uses the per-level tolerance (1 + delta)^(1/ceil(log2 n)) - 1
/// so that the final imbalance stays near delta.
inline PartitionAssignment multilevel_bisection(const Hypergraph& hg, int n,
                                                const PartitionerParams& params,
                                                MultilevelMode mode) {
  params.validate();
  if (n < 1) throw InvalidArgument("number of parts must be >= 1");
  if (std::size_t(n) > hg.num_vertices()) {
    throw InvalidArgument("cannot split " + std::to_string(hg.num_vertices()) + " vertices into " +
                          std::to_string(n) + " parts");
  }
  const detail::NetList g = detail::net_list(hg, mode);
  const int depth = std::max(1, int(std::bit_width(unsigned(n) - 1)));
  const detail::MultilevelSettings s{std::pow(1.0 + params.delta, 1.0 / depth) - 1.0,
                                     params.stop_size, params.pass_limit};
  std::mt19937_64 rng(params.seed);
  PartitionAssignment out{std::uint32_t(n), std::vector<std::uint32_t>(hg.num_vertices(), 0)};
  std::vector<std::uint32_t> ids(hg.num_vertices());
  std::iota(ids.begin(), ids.end(), 0u);
  detail::recursive_multilevel(g, ids, std::uint32_t(n), 0, s, rng, out);
  return out;
}

/// FM refinement of a two-part assignment. Side weights may grow up to
/// max(current heaviest side, (1 + delta) W / 2); the result is returned only
/// if it has a lower cut, or the same cut with a lighter heaviest side.
inline PartitionAssignment fm_refine(const Hypergraph& hg, const PartitionAssignment& input,
                                     const PartitionerParams& params, MultilevelMode mode) {
  params.validate();
  input.validate(hg.num_vertices());
  if (input.n_parts == 1) return input;
  if (input.n_parts != 2) throw InvalidArgument("fm_refine works on two-part assignments");
  const detail::NetList g = detail::net_list(hg, mode);
  std::vector<std::uint8_t> side(input.part.begin(), input.part.end());
  detail::Bipartition part(g, side);
  const double total = g.total_weight();
  const double heavy = std::max(part.load(0), part.load(1));
  detail::BalanceLimits bal;
  bal.target = {total / 2, total / 2};
  bal.limit.fill(std::max(heavy, (1.0 + params.delta) * total / 2));
  const double cut0 = part.cut();
  detail::fm_refine_net(g, part, bal, params.pass_limit);
  const double heavy1 = std::max(part.load(0), part.load(1));
  const double tol = 1e-12 * (1.0 + std::abs(cut0));
  const bool better = part.cut() < cut0 - tol || (std::abs(part.cut() - cut0) <= tol && heavy1 < heavy);
  if (!better) return input;
  PartitionAssignment out{2, std::vector<std::uint32_t>(part.sides().begin(), part.sides().end())};
  return out;
}

}  // namespace lbkit
