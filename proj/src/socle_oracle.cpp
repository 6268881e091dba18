#include "edgepow/socle_oracle.hpp"

#include "edgepow/error.hpp"

namespace edgepow {

namespace {

constexpr std::uint64_t kDenseMemoLimit = std::uint64_t{1} << 25;

// Scans a ∈ [0, bound]^n in lexicographic order. Matching numbers of every
// a and a + e_i are memoized in a dense table over [0, bound + 1]^n.
class Scanner {
 public:
  Scanner(const Graph& g, int t, const OracleOptions& options)
      : g_(g), t_(t), n_(g.n()), bound_(options.widen ? t : t - 1), radix_(bound_ + 2) {
    if (t < 1) throw PreconditionError("the power t must be at least 1");
    std::uint64_t visits = 1, cells = 1;
    for (int i = 0; i < n_; ++i) {
      visits *= static_cast<std::uint64_t>(bound_ + 1);
      if (visits > options.guard_ops)
        throw ResourceError("socle scan needs more than " + std::to_string(options.guard_ops) +
                            " exponent vectors (raise --guard-ops)");
      if (cells <= kDenseMemoLimit) cells *= static_cast<std::uint64_t>(radix_);
    }
    if (cells <= kDenseMemoLimit) memo_.assign(cells, -1);
  }

  // Calls visit(a) for each witness in order; stops when visit returns false.
  template <class Visit>
  void scan(const Visit& visit) {
    std::vector<int> a(n_, 0);
    int total = 0;
    for (;;) {
      if (total >= 2 * t_ - 1 && is_witness(a)) {
        if (!visit(a)) return;
      }
      int i = n_ - 1;
      while (i >= 0 && a[i] == bound_) {
        total -= a[i];
        a[i] = 0;
        --i;
      }
      if (i < 0) return;
      ++a[i];
      ++total;
    }
  }

  bool is_witness(std::vector<int>& a) {
    if (nu(a) != t_ - 1) return false;  // ν can rise by at most one per added unit
    for (int i = 0; i < n_; ++i) {
      ++a[i];
      const bool ok = nu(a) >= t_;
      --a[i];
      if (!ok) return false;
    }
    return true;
  }

 private:
  int nu(const std::vector<int>& a) {
    if (memo_.empty()) return matching_number(g_, a);
    std::uint64_t key = 0;
    for (int x : a) key = key * static_cast<std::uint64_t>(radix_) + static_cast<std::uint64_t>(x);
    if (memo_[key] < 0) memo_[key] = static_cast<std::int8_t>(matching_number(g_, a));
    return memo_[key];
  }

  const Graph& g_;
  int t_;
  int n_;
  int bound_;
  int radix_;
  std::vector<std::int8_t> memo_;
};

}  // namespace

bool is_socle_monomial(const Graph& g, const WeightVector& a, int t) {
  if (a.size() != g.n()) throw PreconditionError("weight vector length differs from the vertex count");
  std::vector<int> w = a.values();
  if (matching_number(g, w) >= t) return false;
  for (int i = 0; i < g.n(); ++i) {
    ++w[i];
    const bool ok = matching_number(g, w) >= t;
    --w[i];
    if (!ok) return false;
  }
  return true;
}

std::optional<SocleWitness> oracle_max_ideal_in_ass(const Graph& g, int t, const OracleOptions& options) {
  std::optional<SocleWitness> out;
  Scanner(g, t, options).scan([&](const std::vector<int>& a) {
    out = SocleWitness{WeightVector(a), t};
    return false;
  });
  return out;
}

std::vector<SocleWitness> oracle_all_witnesses(const Graph& g, int t, const OracleOptions& options) {
  std::vector<SocleWitness> out;
  Scanner(g, t, options).scan([&](const std::vector<int>& a) {
    out.push_back(SocleWitness{WeightVector(a), t});
    return true;
  });
  return out;
}

bool oracle_prime_in_ass(const Graph& g, VertexSet f, int t, const OracleOptions& options) {
  require_subset(g, f, "cover");
  if (!is_cover(g, f)) throw PreconditionError("oracle_prime_in_ass(): " + to_string(f) + " is not a cover");
  if (is_minimal_cover(g, f)) return true;
  const Graph h = induced_subgraph(g, core(g, f)).graph;
  for (int s = 1; s <= t; ++s)
    if (oracle_max_ideal_in_ass(h, s, options)) return true;
  return false;
}

bool verify_socle_conditions(const Graph& g, const SocleWitness& w) {
  const int t = w.t;
  if (t < 2 || w.weights.size() != g.n()) return false;
  const WeightedGraph wg(g, w.weights);
  if (!is_dominating(g, w.weights.support())) return false;
  if (wg.has_isolated_vertex()) return false;
  const int nu = matching_number(wg);
  if (nu != t - 1) return false;
  bool all_keep = true;
  bool some_lower_witness = false;
  for (int i : w.weights.support().members()) {
    const WeightVector lower = w.weights.minus_unit(i);
    if (matching_number(g, lower.values()) != t - 1) all_keep = false;
    if (is_socle_monomial(g, lower, t - 1)) some_lower_witness = true;
  }
  return all_keep || some_lower_witness;
}

}  // namespace edgepow
