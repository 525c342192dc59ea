#include "simspec/linalg/charpoly.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "simspec/error.hpp"

namespace simspec::linalg {

namespace {

void require_square(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::NonSquare, "characteristic polynomial of a non-square matrix");
}

// Berkowitz on the principal submatrix indexed by idx. Coefficients come out
// highest degree first.
std::vector<Raw> berkowitz(const Matrix& m, const std::vector<std::size_t>& idx) {
  const Field f = m.field();
  const std::size_t n = idx.size();
  auto at = [&](std::size_t i, std::size_t j) { return m(idx[i], idx[j]); };
  std::vector<Raw> v = {1, f.neg(at(0, 0))};
  std::vector<Raw> w, nw, t;
  for (std::size_t r = 1; r < n; ++r) {
    t.assign(r + 2, 0);
    t[0] = 1;
    t[1] = f.neg(at(r, r));
    w.resize(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Raw dot = 0;
      for (std::size_t i = 0; i < r; ++i) {
        Raw a = at(r, i);
        if (a && w[i]) dot = f.add(dot, f.mul(a, w[i]));
      }
      t[k + 2] = f.neg(dot);
      if (k + 1 == r) break;
      nw.assign(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        Raw acc = 0;
        for (std::size_t j = 0; j < r; ++j) {
          Raw a = at(i, j);
          if (a && w[j]) acc = f.add(acc, f.mul(a, w[j]));
        }
        nw[i] = acc;
      }
      std::swap(w, nw);
    }
    std::vector<Raw> out(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      Raw acc = 0;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (t[i - j] && v[j]) acc = f.add(acc, f.mul(t[i - j], v[j]));
      }
      out[i] = acc;
    }
    v = std::move(out);
  }
  return v;
}

Polynomial from_high_first(Field f, std::vector<Raw> c) {
  std::reverse(c.begin(), c.end());
  return Polynomial(f, std::move(c));
}

// Tarjan's algorithm on the nonzero pattern (edge i -> j when m(i, j) != 0).
std::vector<std::vector<std::size_t>> strongly_connected(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m(i, j)) adj[i].push_back(j);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return comps;
}

// A strongly connected block in which every row has a single off-diagonal
// entry and no diagonal is one weighted cycle: det(xI - A) = x^l - prod.
std::optional<Polynomial> cycle_charpoly(const Matrix& m, const std::vector<std::size_t>& comp) {
  const Field f = m.field();
  const std::size_t l = comp.size();
  if (l < 2) return std::nullopt;
  Raw prod = 1;
  for (std::size_t i : comp) {
    if (m(i, i)) return std::nullopt;
    int count = 0;
    for (std::size_t j : comp) {
      if (m(i, j)) {
        ++count;
        prod = f.mul(prod, m(i, j));
      }
    }
    if (count != 1) return std::nullopt;
  }
  return Polynomial::binomial(static_cast<unsigned>(l), FieldElement(f, prod));
}

}  // namespace

Polynomial charpoly_berkowitz(const Matrix& m) {
  require_square(m);
  if (m.rows() == 0) return Polynomial::constant(m.field().one());
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return from_high_first(m.field(), berkowitz(m, idx));
}

std::vector<Polynomial> charpoly_factors(const Matrix& m) {
  require_square(m);
  std::vector<Polynomial> out;
  for (const auto& comp : strongly_connected(m)) {
    if (comp.size() == 1) {
      std::size_t i = comp[0];
      out.push_back(Polynomial(m.field(), std::vector<Raw>{m.field().neg(m(i, i)), 1}));
    } else if (auto c = cycle_charpoly(m, comp)) {
      out.push_back(*c);
    } else {
      out.push_back(from_high_first(m.field(), berkowitz(m, comp)));
    }
  }
  return out;
}

Polynomial charpoly(const Matrix& m) {
  Polynomial result = Polynomial::constant(m.field().one());
  for (const auto& p : charpoly_factors(m)) result = result * p;
  return result;
}

bool has_simple_spectrum(const Matrix& m) { return galois::is_squarefree(charpoly(m)); }

BlockCycleReport block_cycle_multiplicity_check(std::size_t block_dim, const Matrix& cycle_map) {
  require_square(cycle_map);
  const std::size_t n = cycle_map.rows();
  if (block_dim == 0 || n % block_dim != 0) fail(ErrorKind::NotACycle, "dimension is not a multiple of the block size");
  const std::size_t d = block_dim, l = n / d;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cycle_map(i, j) && i / d != (j / d + 1) % l) fail(ErrorKind::NotACycle, "map does not send block k to block k+1");
    }
  }
  Matrix power = cycle_map.pow(l);
  Matrix first = power.block(0, 0, d, d);
  Raw c = first(0, 0);
  if (first != Matrix::identity(cycle_map.field(), d).scaled(c)) fail(ErrorKind::NotACycle, "l-th power is not scalar on the first block");
  const Field f = cycle_map.field();
  BlockCycleReport rep;
  rep.block_dim = d;
  rep.cycle_length = l;
  rep.scalar = FieldElement(f, c);
  rep.charpoly = charpoly(cycle_map);
  Polynomial expected = Polynomial::binomial(static_cast<unsigned>(l), rep.scalar).pow(static_cast<unsigned>(d));
  if (rep.charpoly != expected) fail(ErrorKind::NotACycle, "characteristic polynomial is not (x^l - c)^d");
  Polynomial rad = galois::radical(Polynomial::binomial(static_cast<unsigned>(l), rep.scalar));
  rep.multiplicity = d * l / static_cast<std::size_t>(rad.degree());
  return rep;
}

}  // namespace simspec::linalg
