#include "pscore/chain.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace pscore {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Groups are nodes [0, T), venues [T, T + V). `linked(w, j)` says whether
// the edge exists.
template <typename Linked>
std::vector<Component> components_of(std::size_t t, std::size_t v,
                                     Linked linked) {
  DisjointSets sets(t + v);
  for (std::size_t w = 0; w < t; ++w)
    for (std::size_t j = 0; j < v; ++j)
      if (linked(w, j)) sets.unite(w, t + j);

  std::map<std::size_t, Component> by_root;
  for (std::size_t w = 0; w < t; ++w) by_root[sets.find(w)].groups.push_back(w);
  for (std::size_t j = 0; j < v; ++j) {
    auto it = by_root.find(sets.find(t + j));
    // A venue with no group edge cannot occur for valid counts.
    if (it != by_root.end()) it->second.venues.push_back(j);
  }
  // Roots are the smallest member, and every component holds a group, so
  // map order is order of smallest group index.
  std::vector<Component> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  return out;
}

void check_rows(const Matrix& m, const char* what) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double sum = 0.0;
    for (double x : m.row(r)) {
      if (!(x >= 0.0))
        throw InternalError(std::string(what) + " has a negative entry in row " +
                            std::to_string(r));
      sum += x;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
      throw InternalError(std::string(what) + " row " + std::to_string(r) +
                          " sums to " + std::to_string(sum));
  }
}

}  // namespace

Matrix build_alpha(const CountsTable& counts) {
  const std::size_t t = counts.group_count();
  const std::size_t v = counts.venue_count();
  Matrix alpha(v, t);
  for (std::size_t j = 0; j < v; ++j) {
    const double total = static_cast<double>(counts.n_venue[j]);
    for (std::size_t w = 0; w < t; ++w)
      alpha(j, w) = static_cast<double>(counts.at(w, j)) / total;
  }
  return alpha;
}

std::vector<double> build_breadth(const CountsTable& counts) {
  long long total = 0;
  for (long long d : counts.d_venue) total += d;
  std::vector<double> breadth(counts.venue_count());
  for (std::size_t j = 0; j < breadth.size(); ++j)
    breadth[j] = static_cast<double>(counts.d_venue[j]) / static_cast<double>(total);
  return breadth;
}

Matrix build_beta(const CountsTable& counts, double d) {
  if (!(d >= 0.0 && d <= 1.0))
    throw ParameterError("d must lie in [0, 1], got " + std::to_string(d));
  const std::size_t t = counts.group_count();
  const std::size_t v = counts.venue_count();
  const std::vector<double> breadth = build_breadth(counts);
  Matrix beta(t, v);
  for (std::size_t w = 0; w < t; ++w) {
    const double total = static_cast<double>(counts.n_group[w]);
    for (std::size_t j = 0; j < v; ++j) {
      const double volume = static_cast<double>(counts.at(w, j)) / total;
      beta(w, j) = d * volume + (1.0 - d) * breadth[j];
    }
  }
  return beta;
}

ReputationChain build_chain(const CountsTable& counts, double d) {
  ReputationChain chain;
  chain.group_names = counts.group_names;
  chain.venue_names = counts.venue_names;
  chain.alpha = build_alpha(counts);
  chain.beta = build_beta(counts, d);
  chain.d = d;
  chain.breadth = build_breadth(counts);
  check_rows(chain.alpha, "alpha");
  check_rows(chain.beta, "beta");
  return chain;
}

Matrix build_reduced(const ReputationChain& chain) {
  const Matrix& beta = chain.beta;
  const Matrix& alpha = chain.alpha;
  if (beta.cols() != alpha.rows() || beta.rows() != alpha.cols())
    throw InternalError("alpha and beta dimensions disagree");
  const std::size_t t = beta.rows();
  Matrix reduced(t, t);
  for (std::size_t w = 0; w < t; ++w) {
    auto out = reduced.row(w);
    for (std::size_t j = 0; j < beta.cols(); ++j) {
      const double b = beta(w, j);
      if (b == 0.0) continue;
      auto a = alpha.row(j);
      for (std::size_t u = 0; u < t; ++u) out[u] += b * a[u];
    }
  }
  check_rows(reduced, "reduced chain");
  return reduced;
}

Connectivity check_irreducible(const ReputationChain& chain) {
  Connectivity result;
  if (chain.d < 1.0) return result;
  const std::size_t t = chain.beta.rows();
  const std::size_t v = chain.beta.cols();
  auto comps = components_of(t, v, [&](std::size_t w, std::size_t j) {
    return chain.beta(w, j) > 0.0;
  });
  if (comps.size() <= 1) return result;
  result.irreducible = false;
  for (auto& c : comps) result.components.push_back(std::move(c.groups));
  return result;
}

std::vector<Component> bipartite_components(const CountsTable& counts) {
  return components_of(counts.group_count(), counts.venue_count(),
                       [&](std::size_t w, std::size_t j) {
                         return counts.at(w, j) > 0;
                       });
}

}  // namespace pscore
