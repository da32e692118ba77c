#pragma once

// Bounds on the largest Laplacian eigenvalue of a signed graph.
//
// Each bound is a BoundResult carrying a stable identifier, its direction and
// the matrix whose spectral radius it bounds. A bound whose hypothesis fails
// is returned inapplicable with a reason instead of a value.
//
// Formulas are evaluated from exact integer statistics wherever possible;
// square roots of tiny negative rounding residue are clamped to zero, anything
// more negative is a logic error (BoundInconsistency).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sglap/balance.hpp"
#include "sglap/degree.hpp"
#include "sglap/eigen.hpp"
#include "sglap/moments.hpp"
#include "sglap/signed_graph.hpp"

namespace sglap {

enum class Direction { Lower, Upper };

// Which spectral radius a bound refers to: the signed Laplacian L(S), the
// Laplacian of the underlying graph L(G,+1), or its signless Laplacian L(G,-1).
enum class Target { Signed, Laplacian, Signless };

constexpr std::string_view to_string(Direction d) noexcept {
  return d == Direction::Lower ? "lower" : "upper";
}

constexpr std::string_view to_string(Target t) noexcept {
  switch (t) {
    case Target::Signed:
      return "L(S)";
    case Target::Laplacian:
      return "L(G,+1)";
    default:
      return "L(G,-1)";
  }
}

namespace ids {
inline constexpr std::string_view kLbNet1 = "LB-NET-1";
inline constexpr std::string_view kLbNet2 = "LB-NET-2";
inline constexpr std::string_view kLbNet3 = "LB-NET-3";
inline constexpr std::string_view kUbRank = "UB-RANK";
inline constexpr std::string_view kLbTr1 = "LB-TR-1";
inline constexpr std::string_view kLbTr2 = "LB-TR-2";
inline constexpr std::string_view kLbTr3 = "LB-TR-3";
inline constexpr std::string_view kUbWangEdge = "UB-WANG-EDGE";
inline constexpr std::string_view kUbWangGlobal = "UB-WANG-GLOBAL";
inline constexpr std::string_view kUbAllNeg = "UB-ALLNEG";
inline constexpr std::string_view kLbInterlace = "LB-INTERLACE";
inline constexpr std::string_view kKb1 = "KB-1";
inline constexpr std::string_view kKb2 = "KB-2";
inline constexpr std::string_view kKb3 = "KB-3";
inline constexpr std::string_view kKb4 = "KB-4";
inline constexpr std::string_view kKb5 = "KB-5";
inline constexpr std::string_view kNeqSlb1 = "NEQ-SLB-1";
inline constexpr std::string_view kNeqSlb2 = "NEQ-SLB-2";
inline constexpr std::string_view kNeqSlb3 = "NEQ-SLB-3";
inline constexpr std::string_view kUbL = "UB-L";
inline constexpr std::string_view kUbSl = "UB-SL";
inline constexpr std::string_view kLbTrL1 = "LB-TR-L-1";
inline constexpr std::string_view kLbTrL2 = "LB-TR-L-2";
inline constexpr std::string_view kLbTrL3 = "LB-TR-L-3";
inline constexpr std::string_view kLbTrSl1 = "LB-TR-SL-1";
inline constexpr std::string_view kLbTrSl2 = "LB-TR-SL-2";
inline constexpr std::string_view kLbTrSl3 = "LB-TR-SL-3";
}  // namespace ids

namespace reasons {
inline constexpr std::string_view kNotConnected = "graph not connected";
inline constexpr std::string_view kNoEdge = "requires at least one edge";
inline constexpr std::string_view kOrderTooSmall = "requires order n > 2";
inline constexpr std::string_view kRankBelow2 = "b > n-2";
inline constexpr std::string_view kRankBelow3 = "b > n-3";
inline constexpr std::string_view kComponentsBelow2 = "c > n-2";
inline constexpr std::string_view kComponentsBelow3 = "c > n-3";
inline constexpr std::string_view kBipartiteBelow2 = "c_bip > n-2";
inline constexpr std::string_view kBipartiteBelow3 = "c_bip > n-3";
}  // namespace reasons

struct BoundResult {
  std::string id;
  Direction direction = Direction::Lower;
  Target target = Target::Signed;
  std::optional<double> value;  // present iff applicable
  std::string guard_reason;     // non-empty iff inapplicable

  bool applicable() const noexcept { return value.has_value(); }

  static BoundResult ok(std::string_view id, Direction d, Target t, double v) {
    return {std::string(id), d, t, v, {}};
  }
  static BoundResult skip(std::string_view id, Direction d, Target t, std::string_view why) {
    return {std::string(id), d, t, std::nullopt, std::string(why)};
  }
};

struct BoundCatalogEntry {
  std::string_view id;
  Direction direction;
  Target target;
  std::string_view description;
  std::string_view hypothesis;
};

// Catalog order is the column order of reports. The first sixteen entries are
// the signed-graph bounds; the rest are their unsigned specialisations.
inline constexpr std::array<BoundCatalogEntry, 27> kBoundCatalog{{
    {ids::kLbNet1, Direction::Lower, Target::Signed, "(2/n) sum of negative degrees",
     "connected"},
    {ids::kLbNet2, Direction::Lower, Target::Signed,
     "sqrt((4/n) sum of squared negative degrees)", "connected"},
    {ids::kLbNet3, Direction::Lower, Target::Signed, "cube root of j^T L^3 j / n", "connected"},
    {ids::kUbRank, Direction::Upper, Target::Signed, "trace/rank bound with r = n - b",
     "at least one edge"},
    {ids::kLbTr1, Direction::Lower, Target::Signed, "second elementary symmetric trace bound",
     "r = n - b >= 2"},
    {ids::kLbTr2, Direction::Lower, Target::Signed,
     "third elementary symmetric trace bound (signed triangles)", "r = n - b >= 3"},
    {ids::kLbTr3, Direction::Lower, Target::Signed,
     "tr(L) tr(L^2) - tr(L^3) trace bound (signed triangles)",
     "r = n - b >= 2, the validity condition of the trace inequality (not b >= n-2)"},
    {ids::kUbWangEdge, Direction::Upper, Target::Signed, "edge-maximum average 2-degree bound",
     "connected, at least one edge"},
    {ids::kUbWangGlobal, Direction::Upper, Target::Signed, "edge-degree extremes bound",
     "connected, n > 2"},
    {ids::kUbAllNeg, Direction::Upper, Target::Signed, "spectral radius of L(G,-1)", "connected"},
    {ids::kLbInterlace, Direction::Lower, Target::Signed,
     "max spectral radius of the positive and negative edge subgraphs", "none"},
    {ids::kKb1, Direction::Upper, Target::Signed,
     "max over edges (d_i(d_i+m_i) + d_j(d_j+m_j)) / (d_i+d_j)", "connected, at least one edge"},
    {ids::kKb2, Direction::Upper, Target::Signed,
     "max over edges 2 + sqrt(d_i(d_i+m_i-4) + d_j(d_j+m_j-4) + 4)",
     "connected, at least one edge"},
    {ids::kKb3, Direction::Upper, Target::Signed, "max over vertices d_i + sqrt(d_i m_i)",
     "connected, at least one edge"},
    {ids::kKb4, Direction::Upper, Target::Signed,
     "max over edges (d_i+d_j + sqrt((d_i-d_j)^2 + 4 sqrt(d_i d_j m_i m_j))) / 2",
     "connected, at least one edge"},
    {ids::kKb5, Direction::Lower, Target::Signed, "maximum degree plus one",
     "connected, at least one edge"},
    {ids::kNeqSlb1, Direction::Lower, Target::Signless, "4m/n", "none"},
    {ids::kNeqSlb2, Direction::Lower, Target::Signless, "sqrt(4 s2 / n)", "none"},
    {ids::kNeqSlb3, Direction::Lower, Target::Signless,
     "cube root of (4 s3 + 8 sum over edges d_i d_j) / n", "none"},
    {ids::kUbL, Direction::Upper, Target::Laplacian, "trace/rank bound with r = n - c",
     "at least one edge"},
    {ids::kUbSl, Direction::Upper, Target::Signless, "trace/rank bound with r = n - c_bip",
     "at least one edge"},
    {ids::kLbTrL1, Direction::Lower, Target::Laplacian, "LB-TR-1 on (G,+1)", "c <= n-2"},
    {ids::kLbTrL2, Direction::Lower, Target::Laplacian, "LB-TR-2 on (G,+1), t± = t",
     "c <= n-3"},
    {ids::kLbTrL3, Direction::Lower, Target::Laplacian, "LB-TR-3 on (G,+1), t± = t",
     "c <= n-2"},
    {ids::kLbTrSl1, Direction::Lower, Target::Signless, "LB-TR-1 on (G,-1)", "c_bip <= n-2"},
    {ids::kLbTrSl2, Direction::Lower, Target::Signless, "LB-TR-2 on (G,-1), t± = -t",
     "c_bip <= n-3"},
    {ids::kLbTrSl3, Direction::Lower, Target::Signless, "LB-TR-3 on (G,-1), t± = -t",
     "c_bip <= n-2"},
}};

inline constexpr std::size_t kSignedBoundCount = 16;

inline const BoundCatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : kBoundCatalog) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("unknown bound id " + std::string(id));
}

class BoundInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Everything the bounds need about one graph, computed once.
class GraphFacts {
 public:
  explicit GraphFacts(SignedGraph g)
      : graph_(std::move(g)),
        degrees_(degree_profile(graph_)),
        triangles_(triangle_stats(graph_)),
        balance_(balance_info(graph_)) {}

  const SignedGraph& graph() const noexcept { return graph_; }
  const DegreeProfile& degrees() const noexcept { return degrees_; }
  const TriangleStats& triangles() const noexcept { return triangles_; }
  const BalanceInfo& balance() const noexcept { return balance_; }

  std::int64_t order() const noexcept { return static_cast<std::int64_t>(graph_.order()); }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(graph_.size()); }
  bool connected() const noexcept { return graph_.order() > 0 && balance_.component_count == 1; }
  // r = n - b(S) = rank L(S)
  std::int64_t rank() const noexcept {
    return order() - static_cast<std::int64_t>(balance_.balanced_count);
  }

 private:
  SignedGraph graph_;
  DegreeProfile degrees_;
  TriangleStats triangles_;
  BalanceInfo balance_;
};

namespace formula {

inline constexpr double kRadicandSlack = 1e-12;

inline double checked_sqrt(double x, std::string_view what) {
  if (x < -kRadicandSlack) {
    throw BoundInconsistency(std::string(what) + ": negative radicand " + std::to_string(x));
  }
  return std::sqrt(std::max(x, 0.0));
}

inline double to_d(std::int64_t x) { return static_cast<double>(x); }

inline double net_mean(const GraphFacts& f) {
  return to_d(rayleigh_moment(f.graph(), f.degrees(), 1)) / to_d(f.order());
}

inline double net_sq(const GraphFacts& f) {
  return std::sqrt(to_d(rayleigh_moment(f.graph(), f.degrees(), 2)) / to_d(f.order()));
}

inline double net_cubic(const GraphFacts& f) {
  const std::int64_t n3 = rayleigh_moment(f.graph(), f.degrees(), 3);
  if (n3 < 0) throw BoundInconsistency("j^T L^3 j is negative: " + std::to_string(n3));
  return std::cbrt(to_d(n3) / to_d(f.order()));
}

// s1/r + sqrt((s1+s2) - (s1+s2+s1^2)/r + (s1/r)^2). The radicand times r^2
// is the integer (r-1)(r(s1+s2) - s1^2), non-negative because tr(L)^2 <= r tr(L^2).
inline double rank_trace(std::int64_t s1, std::int64_t s2, std::int64_t r) {
  const std::int64_t scaled = (r - 1) * (r * (s1 + s2) - s1 * s1);
  if (scaled < 0) throw BoundInconsistency("trace/rank radicand is negative");
  return to_d(s1) / to_d(r) + std::sqrt(to_d(scaled)) / to_d(r);
}

// Numerators are taken in absolute value.
inline double trace_sq(std::int64_t s1, std::int64_t s2, std::int64_t r) {
  const std::int64_t num = std::llabs(s1 * s1 - s2 - s1);
  return std::sqrt(to_d(num) / to_d(r * (r - 1)));
}

inline double trace_cubic_a(std::int64_t s1, std::int64_t s2, std::int64_t s3, std::int64_t tnet,
                            std::int64_t r) {
  const std::int64_t num =
      std::llabs(2 * s3 + 6 * s2 - 3 * s2 * s1 + s1 * s1 * s1 - 3 * s1 * s1 - 12 * tnet);
  return std::cbrt(to_d(num) / to_d(r * (r - 1) * (r - 2)));
}

inline double trace_cubic_b(std::int64_t s1, std::int64_t s2, std::int64_t s3, std::int64_t tnet,
                            std::int64_t r) {
  const std::int64_t num = std::llabs(s1 * s1 - 3 * s2 + s1 * s2 - s3 + 6 * tnet);
  return std::cbrt(to_d(num) / to_d(r * (r - 1)));
}

inline double wang_edge(const GraphFacts& f) {
  const auto& p = f.degrees();
  double best = 0.0;
  for (const auto& e : f.graph().edges()) {
    const std::int64_t di = p.d[e.u], dj = p.d[e.v];
    // d_i^2 m_i = d_i * (sum of neighbour degrees of i)
    const std::int64_t num =
        (di + dj - 2) * (di * p.nbr_deg_sum[e.u] + dj * p.nbr_deg_sum[e.v] - 2 * di * dj);
    best = std::max(best, checked_sqrt(to_d(num) / to_d(di * dj), ids::kUbWangEdge));
  }
  return 2.0 + best;
}

inline double wang_global(const GraphFacts& f) {
  const auto& p = f.degrees();
  const std::int64_t m = f.size();
  const std::int64_t lo = p.edge_deg_min.value_or(0);
  const std::int64_t hi = p.edge_deg_max.value_or(0);
  const std::int64_t rad = p.s2 - 2 * m - (m - 1) * lo + (lo - 1) * hi;
  return 2.0 + checked_sqrt(to_d(rad), ids::kUbWangGlobal);
}

inline double known_edge_average(const GraphFacts& f) {
  const auto& p = f.degrees();
  double best = 0.0;
  for (const auto& e : f.graph().edges()) {
    const std::int64_t di = p.d[e.u], dj = p.d[e.v];
    const std::int64_t num = di * di + p.nbr_deg_sum[e.u] + dj * dj + p.nbr_deg_sum[e.v];
    best = std::max(best, to_d(num) / to_d(di + dj));
  }
  return best;
}

inline double known_edge_sqrt(const GraphFacts& f) {
  const auto& p = f.degrees();
  double best = 0.0;
  for (const auto& e : f.graph().edges()) {
    const std::int64_t di = p.d[e.u], dj = p.d[e.v];
    const std::int64_t rad =
        di * di + p.nbr_deg_sum[e.u] - 4 * di + dj * dj + p.nbr_deg_sum[e.v] - 4 * dj + 4;
    best = std::max(best, 2.0 + checked_sqrt(to_d(rad), ids::kKb2));
  }
  return best;
}

inline double known_vertex(const GraphFacts& f) {
  const auto& p = f.degrees();
  double best = 0.0;
  for (std::size_t i = 0; i < p.order(); ++i) {
    best = std::max(best, to_d(p.d[i]) + std::sqrt(to_d(p.nbr_deg_sum[i])));
  }
  return best;
}

inline double known_edge_mixed(const GraphFacts& f) {
  const auto& p = f.degrees();
  double best = 0.0;
  for (const auto& e : f.graph().edges()) {
    const std::int64_t di = p.d[e.u], dj = p.d[e.v];
    const double inner = std::sqrt(to_d(p.nbr_deg_sum[e.u]) * to_d(p.nbr_deg_sum[e.v]));
    const double value = (to_d(di + dj) + std::sqrt(to_d((di - dj) * (di - dj)) + 4.0 * inner)) / 2.0;
    best = std::max(best, value);
  }
  return best;
}

}  // namespace formula

// ---------------------------------------------------------------------------
// Sign-dependent lower bounds from N_k = j^T L^k j. Rayleigh quotient with
// the all-ones vector gives N_k / n <= lambda_max^k.

inline BoundResult lb_net_mean(const GraphFacts& f) {
  constexpr auto d = Direction::Lower;
  if (!f.connected()) return BoundResult::skip(ids::kLbNet1, d, Target::Signed, reasons::kNotConnected);
  return BoundResult::ok(ids::kLbNet1, d, Target::Signed, formula::net_mean(f));
}

inline BoundResult lb_net_sq(const GraphFacts& f) {
  constexpr auto d = Direction::Lower;
  if (!f.connected()) return BoundResult::skip(ids::kLbNet2, d, Target::Signed, reasons::kNotConnected);
  return BoundResult::ok(ids::kLbNet2, d, Target::Signed, formula::net_sq(f));
}

inline BoundResult lb_net_cubic(const GraphFacts& f) {
  constexpr auto d = Direction::Lower;
  if (!f.connected()) return BoundResult::skip(ids::kLbNet3, d, Target::Signed, reasons::kNotConnected);
  return BoundResult::ok(ids::kLbNet3, d, Target::Signed, formula::net_cubic(f));
}

// ---------------------------------------------------------------------------
// Trace/rank bounds, r = n - b(S).

inline BoundResult ub_rank_trace(const GraphFacts& f) {
  constexpr auto d = Direction::Upper;
  if (f.size() == 0) return BoundResult::skip(ids::kUbRank, d, Target::Signed, reasons::kNoEdge);
  const auto& p = f.degrees();
  return BoundResult::ok(ids::kUbRank, d, Target::Signed, formula::rank_trace(p.s1, p.s2, f.rank()));
}

inline BoundResult lb_trace_sq(const GraphFacts& f) {
  constexpr auto d = Direction::Lower;
  if (f.rank() < 2) return BoundResult::skip(ids::kLbTr1, d, Target::Signed, reasons::kRankBelow2);
  const auto& p = f.degrees();
  return BoundResult::ok(ids::kLbTr1, d, Target::Signed, formula::trace_sq(p.s1, p.s2, f.rank()));
}

inline BoundResult lb_trace_cubic_a(const GraphFacts& f) {
  constexpr auto d = Direction::Lower;
  if (f.rank() < 3) return BoundResult::skip(ids::kLbTr2, d, Target::Signed, reasons::kRankBelow3);
  const auto& p = f.degrees();
  return BoundResult::ok(ids::kLbTr2, d, Target::Signed,
                         formula::trace_cubic_a(p.s1, p.s2, p.s3, f.triangles().net(), f.rank()));
}

inline BoundResult lb_trace_cubic_b(const GraphFacts& f) {
  constexpr auto d = Direction::Lower;
  if (f.rank() < 2) return BoundResult::skip(ids::kLbTr3, d, Target::Signed, reasons::kRankBelow2);
  const auto& p = f.degrees();
  return BoundResult::ok(ids::kLbTr3, d, Target::Signed,
                         formula::trace_cubic_b(p.s1, p.s2, p.s3, f.triangles().net(), f.rank()));
}

// ---------------------------------------------------------------------------
// Sign-blind upper bounds, valid because lambda_max(L(S)) <= lambda_max(L(G,-1)).

inline BoundResult ub_wang_edge(const GraphFacts& f) {
  constexpr auto d = Direction::Upper;
  if (!f.connected()) return BoundResult::skip(ids::kUbWangEdge, d, Target::Signed, reasons::kNotConnected);
  if (f.size() == 0) return BoundResult::skip(ids::kUbWangEdge, d, Target::Signed, reasons::kNoEdge);
  return BoundResult::ok(ids::kUbWangEdge, d, Target::Signed, formula::wang_edge(f));
}

inline BoundResult ub_wang_global(const GraphFacts& f) {
  constexpr auto d = Direction::Upper;
  if (!f.connected()) return BoundResult::skip(ids::kUbWangGlobal, d, Target::Signed, reasons::kNotConnected);
  if (f.order() <= 2) return BoundResult::skip(ids::kUbWangGlobal, d, Target::Signed, reasons::kOrderTooSmall);
  return BoundResult::ok(ids::kUbWangGlobal, d, Target::Signed, formula::wang_global(f));
}

inline BoundResult ub_all_negative(const GraphFacts& f) {
  constexpr auto d = Direction::Upper;
  if (!f.connected()) return BoundResult::skip(ids::kUbAllNeg, d, Target::Signed, reasons::kNotConnected);
  return BoundResult::ok(ids::kUbAllNeg, d, Target::Signed,
                         spectral_radius_laplacian(sign_all(f.graph(), Sign::Negative)));
}

inline BoundResult lb_interlacing(const GraphFacts& f) {
  const double pos = spectral_radius_laplacian(induced_sign_subgraph(f.graph(), Sign::Positive));
  const double neg = spectral_radius_laplacian(induced_sign_subgraph(f.graph(), Sign::Negative));
  return BoundResult::ok(ids::kLbInterlace, Direction::Lower, Target::Signed, std::max(pos, neg));
}

// ---------------------------------------------------------------------------
// Previously known bounds: four sign-blind upper bounds and Delta + 1.

inline std::vector<BoundResult> classic_bounds(const GraphFacts& f) {
  struct Item {
    std::string_view id;
    Direction dir;
    double (*eval)(const GraphFacts&);
  };
  static constexpr std::array<Item, 5> items{{
      {ids::kKb1, Direction::Upper, formula::known_edge_average},
      {ids::kKb2, Direction::Upper, formula::known_edge_sqrt},
      {ids::kKb3, Direction::Upper, formula::known_vertex},
      {ids::kKb4, Direction::Upper, formula::known_edge_mixed},
      {ids::kKb5, Direction::Lower,
       [](const GraphFacts& g) { return static_cast<double>(g.degrees().max_deg + 1); }},
  }};
  std::vector<BoundResult> out;
  for (const auto& item : items) {
    if (!f.connected()) {
      out.push_back(BoundResult::skip(item.id, item.dir, Target::Signed, reasons::kNotConnected));
    } else if (f.size() == 0) {
      out.push_back(BoundResult::skip(item.id, item.dir, Target::Signed, reasons::kNoEdge));
    } else {
      out.push_back(BoundResult::ok(item.id, item.dir, Target::Signed, item.eval(f)));
    }
  }
  return out;
}

// Convenience overloads for a single bound on a bare graph.
inline BoundResult lb_net_mean(const SignedGraph& g) { return lb_net_mean(GraphFacts(g)); }
inline BoundResult lb_net_sq(const SignedGraph& g) { return lb_net_sq(GraphFacts(g)); }
inline BoundResult lb_net_cubic(const SignedGraph& g) { return lb_net_cubic(GraphFacts(g)); }
inline BoundResult ub_rank_trace(const SignedGraph& g) { return ub_rank_trace(GraphFacts(g)); }
inline BoundResult lb_trace_sq(const SignedGraph& g) { return lb_trace_sq(GraphFacts(g)); }
inline BoundResult lb_trace_cubic_a(const SignedGraph& g) { return lb_trace_cubic_a(GraphFacts(g)); }
inline BoundResult lb_trace_cubic_b(const SignedGraph& g) { return lb_trace_cubic_b(GraphFacts(g)); }
inline BoundResult ub_wang_edge(const SignedGraph& g) { return ub_wang_edge(GraphFacts(g)); }
inline BoundResult ub_wang_global(const SignedGraph& g) { return ub_wang_global(GraphFacts(g)); }
inline BoundResult ub_all_negative(const SignedGraph& g) { return ub_all_negative(GraphFacts(g)); }
inline BoundResult lb_interlacing(const SignedGraph& g) { return lb_interlacing(GraphFacts(g)); }
inline std::vector<BoundResult> classic_bounds(const SignedGraph& g) { return classic_bounds(GraphFacts(g)); }

// The sixteen signed-graph bounds in catalog order.
inline std::vector<BoundResult> signed_bounds(const GraphFacts& f) {
  std::vector<BoundResult> out{
      lb_net_mean(f),      lb_net_sq(f),        lb_net_cubic(f),   ub_rank_trace(f),
      lb_trace_sq(f),      lb_trace_cubic_a(f), lb_trace_cubic_b(f), ub_wang_edge(f),
      ub_wang_global(f),   ub_all_negative(f),  lb_interlacing(f),
  };
  for (auto& r : classic_bounds(f)) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------
// Unsigned specialisations. unsigned_corollaries() delegates to the signed
// formulas on (G,+1) and (G,-1), taking ranks from balance detection;
// unsigned_corollaries_direct() evaluates the closed forms in s_p, t(G),
// c(G) and c_bip(G). The two must agree.

inline std::vector<BoundResult> unsigned_corollaries(const SignedGraph& g) {
  const GraphFacts plus(sign_all(g, Sign::Positive));
  const GraphFacts minus(sign_all(g, Sign::Negative));
  const auto& p = plus.degrees();
  const auto lo = Direction::Lower;
  const auto up = Direction::Upper;
  const auto lap = Target::Laplacian;
  const auto sl = Target::Signless;

  std::vector<BoundResult> out;
  out.push_back(BoundResult::ok(ids::kNeqSlb1, lo, sl, formula::net_mean(minus)));
  out.push_back(BoundResult::ok(ids::kNeqSlb2, lo, sl, formula::net_sq(minus)));
  out.push_back(BoundResult::ok(ids::kNeqSlb3, lo, sl, formula::net_cubic(minus)));

  auto rank_trace = [&](std::string_view id, Target t, const GraphFacts& f) {
    if (f.size() == 0) return BoundResult::skip(id, up, t, reasons::kNoEdge);
    return BoundResult::ok(id, up, t, formula::rank_trace(p.s1, p.s2, f.rank()));
  };
  out.push_back(rank_trace(ids::kUbL, lap, plus));
  out.push_back(rank_trace(ids::kUbSl, sl, minus));

  auto trace_family = [&](const GraphFacts& f, Target t, std::array<std::string_view, 3> idv,
                          std::string_view below2, std::string_view below3) {
    const std::int64_t r = f.rank();
    const std::int64_t tnet = f.triangles().net();
    out.push_back(r < 2 ? BoundResult::skip(idv[0], lo, t, below2)
                        : BoundResult::ok(idv[0], lo, t, formula::trace_sq(p.s1, p.s2, r)));
    out.push_back(r < 3 ? BoundResult::skip(idv[1], lo, t, below3)
                        : BoundResult::ok(idv[1], lo, t,
                                          formula::trace_cubic_a(p.s1, p.s2, p.s3, tnet, r)));
    out.push_back(r < 2 ? BoundResult::skip(idv[2], lo, t, below2)
                        : BoundResult::ok(idv[2], lo, t,
                                          formula::trace_cubic_b(p.s1, p.s2, p.s3, tnet, r)));
  };
  trace_family(plus, lap, {ids::kLbTrL1, ids::kLbTrL2, ids::kLbTrL3},
               reasons::kComponentsBelow2, reasons::kComponentsBelow3);
  trace_family(minus, sl, {ids::kLbTrSl1, ids::kLbTrSl2, ids::kLbTrSl3},
               reasons::kBipartiteBelow2, reasons::kBipartiteBelow3);
  return out;
}

inline std::vector<BoundResult> unsigned_corollaries_direct(const SignedGraph& g) {
  const DegreeProfile p = degree_profile(g);
  const double n = static_cast<double>(g.order());
  const double s1 = static_cast<double>(p.s1);
  const double s2 = static_cast<double>(p.s2);
  const double s3 = static_cast<double>(p.s3);
  const double t = static_cast<double>(triangle_stats(g).total);
  const double c = static_cast<double>(connected_components(g).count);
  const double cb = static_cast<double>(bipartite_component_count(g));
  const auto lo = Direction::Lower;
  const auto up = Direction::Upper;
  const auto lap = Target::Laplacian;
  const auto sl = Target::Signless;

  double edge_products = 0.0;
  for (const auto& e : g.edges()) {
    edge_products += static_cast<double>(p.d[e.u]) * static_cast<double>(p.d[e.v]);
  }

  std::vector<BoundResult> out;
  out.push_back(BoundResult::ok(ids::kNeqSlb1, lo, sl, 2.0 * s1 / n));
  out.push_back(BoundResult::ok(ids::kNeqSlb2, lo, sl, std::sqrt(4.0 * s2 / n)));
  out.push_back(BoundResult::ok(ids::kNeqSlb3, lo, sl, std::cbrt((4.0 * s3 + 8.0 * edge_products) / n)));

  auto rank_trace = [&](std::string_view id, Target tg, double k) {
    if (g.size() == 0) return BoundResult::skip(id, up, tg, reasons::kNoEdge);
    const double r = n - k;
    const double rad = (s1 + s2) - (s1 + s2 + s1 * s1) / r + (s1 / r) * (s1 / r);
    return BoundResult::ok(id, up, tg, s1 / r + formula::checked_sqrt(rad, id));
  };
  out.push_back(rank_trace(ids::kUbL, lap, c));
  out.push_back(rank_trace(ids::kUbSl, sl, cb));

  auto trace_family = [&](double k, double tri, Target tg, std::array<std::string_view, 3> idv,
                          std::string_view below2, std::string_view below3) {
    const double r = n - k;
    if (k <= n - 2) {
      out.push_back(BoundResult::ok(idv[0], lo, tg,
                                    std::sqrt(std::abs(s1 * s1 - s2 - s1) / (r * (r - 1)))));
    } else {
      out.push_back(BoundResult::skip(idv[0], lo, tg, below2));
    }
    if (k <= n - 3) {
      const double num = 2 * s3 + 6 * s2 - 3 * s2 * s1 + s1 * s1 * s1 - 3 * s1 * s1 - 12 * tri;
      out.push_back(BoundResult::ok(idv[1], lo, tg, std::cbrt(std::abs(num) / (r * (r - 1) * (r - 2)))));
    } else {
      out.push_back(BoundResult::skip(idv[1], lo, tg, below3));
    }
    if (k <= n - 2) {
      const double num = s1 * s1 - 3 * s2 + s1 * s2 - s3 + 6 * tri;
      out.push_back(BoundResult::ok(idv[2], lo, tg, std::cbrt(std::abs(num) / (r * (r - 1)))));
    } else {
      out.push_back(BoundResult::skip(idv[2], lo, tg, below2));
    }
  };
  // All-positive triangles count +t, all-negative ones -t.
  trace_family(c, t, lap, {ids::kLbTrL1, ids::kLbTrL2, ids::kLbTrL3}, reasons::kComponentsBelow2,
               reasons::kComponentsBelow3);
  trace_family(cb, -t, sl, {ids::kLbTrSl1, ids::kLbTrSl2, ids::kLbTrSl3},
               reasons::kBipartiteBelow2, reasons::kBipartiteBelow3);
  return out;
}

// ---------------------------------------------------------------------------
// Whole-catalog evaluation.

struct Evaluation {
  double lambda_max = 0.0;            // L(S)
  double lambda_max_laplacian = 0.0;  // L(G,+1)
  double lambda_max_signless = 0.0;   // L(G,-1)
  std::vector<BoundResult> bounds;    // catalog order

  double reference(Target t) const noexcept {
    switch (t) {
      case Target::Signed:
        return lambda_max;
      case Target::Laplacian:
        return lambda_max_laplacian;
      default:
        return lambda_max_signless;
    }
  }

  const BoundResult& find(std::string_view id) const {
    for (const auto& b : bounds) {
      if (b.id == id) return b;
    }
    throw std::out_of_range("bound " + std::string(id) + " not evaluated");
  }
};

inline Evaluation evaluate_all(const SignedGraph& g) {
  Evaluation ev;
  ev.lambda_max = spectral_radius_laplacian(g);
  ev.lambda_max_laplacian = spectral_radius_laplacian(sign_all(g, Sign::Positive));
  ev.lambda_max_signless = spectral_radius_laplacian(sign_all(g, Sign::Negative));
  ev.bounds = signed_bounds(GraphFacts(g));
  for (auto& r : unsigned_corollaries(g)) ev.bounds.push_back(std::move(r));
  return ev;
}

struct SandwichViolation {
  std::string id;
  double value = 0.0;
  double lambda_max = 0.0;
  double magnitude = 0.0;  // how far past lambda_max + tol
};

// Applicable lower bounds must not exceed, and upper bounds must not fall
// below, the spectral radius they refer to (up to `tol`).
inline std::vector<SandwichViolation> sandwich_violations(const Evaluation& ev, double tol) {
  std::vector<SandwichViolation> out;
  for (const auto& b : ev.bounds) {
    if (!b.applicable()) continue;
    const double ref = ev.reference(b.target);
    const double excess = b.direction == Direction::Lower ? *b.value - ref : ref - *b.value;
    if (excess > tol) out.push_back({b.id, *b.value, ref, excess - tol});
  }
  return out;
}

}  // namespace sglap
