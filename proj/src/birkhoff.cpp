#include "qchan/birkhoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "qchan/rng.hpp"

namespace qchan {

Permutation::Permutation(std::vector<int> m) : n(static_cast<int>(m.size())), map(std::move(m)) {
  std::vector<char> seen(n, 0);
  for (int v : map) {
    if (v < 0 || v >= n || seen[v]) throw Error("permutation is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return Permutation(std::move(m));
}

ComplexMatrix perm_matrix(const Permutation& p) {
  ComplexMatrix m(p.n, p.n);
  for (int j = 0; j < p.n; ++j) m(j, p.map[j]) = cplx(1.0, 0.0);
  return m;
}

bool is_doubly_stochastic(const ComplexMatrix& m, double tol) {
  if (!m.square()) throw NotSquare("doubly stochastic test needs a square matrix");
  const int n = m.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cplx v = m(i, j);
      if (std::abs(v.imag()) > tol) return false;
      if (v.real() < -tol) return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    double rs = 0.0, cs = 0.0;
    for (int j = 0; j < n; ++j) {
      rs += m(i, j).real();
      cs += m(j, i).real();
    }
    if (std::abs(rs - 1.0) > tol || std::abs(cs - 1.0) > tol) return false;
  }
  return true;
}

DoublyStochasticMatrix::DoublyStochasticMatrix(ComplexMatrix m, double tol)
    : mat(std::move(m)) {
  if (!mat.is_finite()) throw Error("matrix has non-finite entries");
  if (!is_doubly_stochastic(mat, tol)) {
    throw Error("matrix is not doubly stochastic at the given tolerance");
  }
  n = mat.rows();
}

namespace {

// Hopcroft-Karp maximum matching on the bipartite support graph.  Adjacency
// lists are in ascending column order and vertices are scanned in index
// order, so ties break lowest-index-first deterministically.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(std::vector<std::vector<int>> adj, int n)
      : adj_(std::move(adj)), n_(n), match_l_(n, -1), match_r_(n, -1),
        dist_(n, 0) {}

  // Returns true iff a perfect matching exists; match[j] = matched column.
  bool perfect(std::vector<int>* match) {
    int matched = 0;
    while (bfs()) {
      for (int u = 0; u < n_; ++u) {
        if (match_l_[u] == -1 && dfs(u)) ++matched;
      }
    }
    if (matched != n_) return false;
    *match = match_l_;
    return true;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < n_; ++u) {
      if (match_l_[u] == -1) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        const int w = match_r_[v];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj_[u]) {
      const int w = match_r_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_l_[u] = v;
        match_r_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::vector<std::vector<int>> adj_;
  int n_;
  std::vector<int> match_l_, match_r_;
  std::vector<int> dist_;
};

}  // namespace

ComplexMatrix BirkhoffDecomposition::reconstruct(int n) const {
  ComplexMatrix sum(n, n);
  for (const auto& [w, p] : terms) {
    if (p.n != n) throw DimensionMismatch("permutation size mismatch");
    for (int j = 0; j < n; ++j) sum(j, p.map[j]) += cplx(w, 0.0);
  }
  return sum;
}

BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& d,
                                         double tol) {
  const int n = d.n;
  std::vector<double> residual(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) residual[i * n + j] = d.mat(i, j).real();
  }
  BirkhoffDecomposition out;
  out.tol = tol;
  const int max_terms = (n - 1) * (n - 1) + 1;
  for (int iter = 0; iter <= max_terms; ++iter) {
    double maxent = 0.0;
    for (double x : residual) maxent = std::max(maxent, x);
    if (maxent <= tol) break;
    if (iter == max_terms) {
      throw NoPerfectMatching("residual persists after the maximal term count");
    }
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (residual[i * n + j] > tol) adj[i].push_back(j);
      }
    }
    std::vector<int> match;
    if (!HopcroftKarp(std::move(adj), n).perfect(&match)) {
      throw NoPerfectMatching(
          "support graph has no perfect matching; input is not doubly "
          "stochastic at this tolerance");
    }
    double w = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) w = std::min(w, residual[j * n + match[j]]);
    for (int j = 0; j < n; ++j) residual[j * n + match[j]] -= w;
    out.terms.emplace_back(w, Permutation(std::move(match)));
  }
  if (out.terms.empty()) {
    // Input within tol of the zero matrix can only be n = 0; guard anyway.
    throw NoPerfectMatching("nothing to decompose");
  }
  double total = 0.0;
  for (const auto& [w, p] : out.terms) total += w;
  for (auto& [w, p] : out.terms) w /= total;
  out.reconstruction_error = max_abs_diff(d.mat, out.reconstruct(n));
  return out;
}

DoublyStochasticMatrix random_doubly_stochastic(int n, int k,
                                                std::uint64_t seed) {
  if (n < 1 || k < 1) throw Error("random_doubly_stochastic: n, k must be >= 1");
  Rng rng(seed);
  const std::vector<double> w = rng.dirichlet(k);
  ComplexMatrix m(n, n);
  for (int t = 0; t < k; ++t) {
    const std::vector<int> p = rng.permutation(n);
    for (int j = 0; j < n; ++j) m(j, p[j]) += cplx(w[t], 0.0);
  }
  return DoublyStochasticMatrix(std::move(m));
}

}  // namespace qchan
