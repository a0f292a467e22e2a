#include "lappoly/matchings.hpp"

#include <bit>
#include <bitset>
#include <cstdint>
#include <unordered_map>

#include "lappoly/error.hpp"

namespace lappoly {

namespace {

using Counts = std::vector<mpz_class>;

void add_into(Counts& acc, const Counts& rhs, int shift) {
  if (acc.size() < rhs.size() + shift) acc.resize(rhs.size() + shift);
  for (std::size_t r = 0; r < rhs.size(); ++r) acc[r + shift] += rhs[r];
}

// Vertex sets are either a single machine word or a fixed wide bitset.
struct Narrow {
  using Mask = std::uint64_t;
  static constexpr int kCapacity = 64;
  static Mask bit(int v) { return Mask{1} << v; }
  static bool test(const Mask& m, int v) { return (m >> v) & 1; }
  static bool none(const Mask& m) { return m == 0; }
  static int count(const Mask& m) { return std::popcount(m); }
};

struct Wide {
  using Mask = std::bitset<512>;
  static constexpr int kCapacity = 512;
  static Mask bit(int v) { Mask m; m.set(v); return m; }
  static bool test(const Mask& m, int v) { return m.test(v); }
  static bool none(const Mask& m) { return m.none(); }
  static int count(const Mask& m) { return static_cast<int>(m.count()); }
};

template <typename Traits>
class MatchCounter {
 public:
  using Mask = typename Traits::Mask;

  explicit MatchCounter(const Graph& g) : n_(g.order()), adj_(g.order()) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Traits::bit(e.v);
      adj_[e.v] |= Traits::bit(e.u);
    }
  }

  Counts run() {
    Mask all{};
    for (int v = 0; v < n_; ++v) all |= Traits::bit(v);
    return count(all);
  }

 private:
  Counts count(Mask mask) {
    // Drop isolated vertices and pick the vertex of least positive degree.
    int pick = -1;
    int best = 0;
    for (int v = 0; v < n_; ++v) {
      if (!Traits::test(mask, v)) continue;
      const int d = Traits::count(adj_[v] & mask);
      if (d == 0) {
        mask &= ~Traits::bit(v);
      } else if (pick < 0 || d < best) {
        pick = v;
        best = d;
      }
    }
    if (pick < 0) return Counts{mpz_class(1)};

    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;

    const Mask rest = mask & ~Traits::bit(pick);
    Counts result = count(rest);
    const Mask nbrs = adj_[pick] & mask;
    for (int u = 0; u < n_; ++u) {
      if (Traits::test(nbrs, u)) add_into(result, count(rest & ~Traits::bit(u)), 1);
    }
    memo_.emplace(mask, result);
    return result;
  }

  int n_;
  std::vector<Mask> adj_;
  std::unordered_map<Mask, Counts> memo_;
};

struct BetaSummation {
  const Graph& g;
  const VertexSet& h;
  std::vector<int> slot;  // vertex of G -> position in h, or -1
  std::vector<bool> matched;
  IntPoly total;

  BetaSummation(const Graph& graph, const VertexSet& vertices)
      : g(graph), h(vertices), slot(graph.order(), -1), matched(vertices.size(), false) {
    for (std::size_t i = 0; i < h.size(); ++i) slot[h[i]] = static_cast<int>(i);
  }

  // Walks h in order; each vertex is either left unmatched (contributing
  // x - d_G(v) to the carried product) or matched to a later free neighbour
  // inside h (flipping the sign). Each leaf is one matching.
  void run(std::size_t i, const IntPoly& carry, bool negative) {
    while (i < h.size() && matched[i]) ++i;
    if (i == h.size()) {
      if (negative) total -= carry;
      else total += carry;
      return;
    }
    const Vertex v = h[i];
    IntPoly next = carry;
    next.multiply_linear(g.degree(v));
    run(i + 1, next, negative);
    for (Vertex u : g.neighbors(v)) {
      const int j = slot[u];
      if (j <= static_cast<int>(i) || matched[j]) continue;
      matched[j] = true;
      run(i + 1, carry, !negative);
      matched[j] = false;
    }
  }
};

// The same walk with machine-word coefficients and one scratch buffer per
// depth. Sets overflow and stops as soon as any coefficient leaves int64.
struct SmallBetaSummation {
  using Word = long long;

  const Graph& g;
  const VertexSet& h;
  std::vector<int> slot;
  std::vector<bool> matched;
  std::vector<std::vector<Word>> scratch;  // scratch[d] holds the carry built at depth d
  std::vector<Word> total;
  bool overflow = false;

  SmallBetaSummation(const Graph& graph, const VertexSet& vertices)
      : g(graph),
        h(vertices),
        slot(graph.order(), -1),
        matched(vertices.size(), false),
        scratch(vertices.size() + 1, std::vector<Word>(vertices.size() + 1)),
        total(vertices.size() + 1, 0) {
    for (std::size_t i = 0; i < h.size(); ++i) slot[h[i]] = static_cast<int>(i);
  }

  // carry has `len` coefficients (degree len - 1).
  void run(std::size_t i, std::size_t depth, const Word* carry, std::size_t len, bool negative) {
    if (overflow) return;
    while (i < h.size() && matched[i]) ++i;
    if (i == h.size()) {
      for (std::size_t k = 0; k < len; ++k) {
        if (negative ? __builtin_sub_overflow(total[k], carry[k], &total[k])
                     : __builtin_add_overflow(total[k], carry[k], &total[k])) {
          overflow = true;
          return;
        }
      }
      return;
    }
    const Word d = g.degree(h[i]);
    Word* next = scratch[depth].data();
    // (x - d) * carry
    next[len] = carry[len - 1];
    for (std::size_t k = len - 1; k > 0; --k) {
      Word prod;
      if (__builtin_mul_overflow(d, carry[k], &prod) || __builtin_sub_overflow(carry[k - 1], prod, &next[k])) {
        overflow = true;
        return;
      }
    }
    if (__builtin_mul_overflow(-d, carry[0], &next[0])) {
      overflow = true;
      return;
    }
    run(i + 1, depth + 1, next, len + 1, negative);
    for (Vertex u : g.neighbors(h[i])) {
      const int j = slot[u];
      if (j <= static_cast<int>(i) || matched[j]) continue;
      matched[j] = true;
      run(i + 1, depth + 1, carry, len, !negative);
      matched[j] = false;
    }
  }
};

VertexSet normalized(const Graph& g, VertexSet h) {
  for (Vertex v : h) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
  }
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return h;
}

}  // namespace

mpz_class MatchCounts::at(int r) const {
  if (r < 0 || r >= static_cast<int>(counts.size())) return 0;
  return counts[r];
}

MatchCounts match_counts(const Graph& g) {
  Counts counts;
  if (g.order() <= Narrow::kCapacity) {
    counts = MatchCounter<Narrow>(g).run();
  } else if (g.order() <= Wide::kCapacity) {
    counts = MatchCounter<Wide>(g).run();
  } else {
    throw Error(ErrorCode::BadParameter, "match_counts supports at most 512 vertices");
  }
  counts.resize(static_cast<std::size_t>(g.order() / 2) + 1);
  return MatchCounts{std::move(counts)};
}

IntPoly matching_polynomial(const Graph& g) {
  const MatchCounts mc = match_counts(g);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(g.order()) + 1);
  for (std::size_t r = 0; r < mc.counts.size(); ++r) {
    coeffs[g.order() - 2 * r] = r % 2 == 0 ? mpz_class(mc.counts[r]) : mpz_class(-mc.counts[r]);
  }
  return IntPoly(std::move(coeffs));
}

IntPoly principal_beta(const Graph& g, const VertexSet& h) {
  const VertexSet vertices = normalized(g, h);
  SmallBetaSummation fast(g, vertices);
  const SmallBetaSummation::Word one = 1;
  fast.run(0, 0, &one, 1, false);
  if (!fast.overflow) {
    std::vector<mpz_class> coeffs;
    coeffs.reserve(fast.total.size());
    for (auto c : fast.total) coeffs.emplace_back(static_cast<long>(c));
    return IntPoly(std::move(coeffs));
  }
  BetaSummation sum(g, vertices);
  sum.run(0, IntPoly{1}, false);
  return sum.total;
}

IntPoly laplacian_matching_polynomial(const Graph& g) { return principal_beta(g, g.vertices()); }

IntPoly beta_via_subdivision(const Graph& g, const VertexSet& w) {
  const VertexSet removed = normalized(g, w);
  const SubdivisionGraph s = subdivision(g);
  const InducedSubgraph rest = induced_delete(s.graph, removed);
  const IntPoly alpha = matching_polynomial(rest.graph);
  const int shift = g.size() - g.order() + static_cast<int>(removed.size());
  const IntPoly stripped = shift >= 0 ? divide_by_power(alpha, shift) : alpha.shifted(-shift);
  return even_part_unsquare(stripped);
}

std::vector<mpz_class> alternating_coefficients(const IntPoly& p, int n) {
  std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    a[r] = r % 2 == 0 ? p.coeff(n - r) : mpz_class(-p.coeff(n - r));
  }
  return a;
}

CoefficientReport coefficients_check(const Graph& g) {
  CoefficientReport report;
  report.beta = laplacian_matching_polynomial(g);
  const std::vector<mpz_class> a = alternating_coefficients(report.beta, g.order());
  const MatchCounts sub = match_counts(subdivision(g).graph);
  const int top = std::max(g.order(), static_cast<int>(sub.counts.size()) - 1);
  report.pass = true;
  for (int r = 0; r <= top; ++r) {
    CoefficientRow row;
    row.r = r;
    row.beta_coefficient = r <= g.order() ? a[r] : mpz_class(0);
    row.subdivision_matchings = sub.at(r);
    row.pass = row.beta_coefficient == row.subdivision_matchings;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace lappoly
