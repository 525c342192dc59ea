#include "simspec/roots/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "simspec/error.hpp"

namespace simspec::roots {

namespace {

// Solves A x = b over Q for invertible A.
QVec solve(std::vector<QVec> a, QVec b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) fail(ErrorKind::Singular, "singular rational system");
    std::swap(a[sel], a[col]);
    std::swap(b[sel], b[col]);
    Q inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Q f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

std::vector<QVec> gram_matrix(char type, unsigned n) {
  std::vector<QVec> g(n, QVec(n, 0));
  auto link = [&](unsigned i, unsigned j, Q v) { g[i][j] = g[j][i] = v; };
  switch (type) {
    case 'A':
    case 'D':
    case 'E':
      for (unsigned i = 0; i < n; ++i) g[i][i] = 2;
      break;
    case 'B':
      for (unsigned i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 2 : 1;
      break;
    case 'C':
      for (unsigned i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 1 : 2;
      break;
    case 'F':
      g[0][0] = g[1][1] = 2;
      g[2][2] = g[3][3] = 1;
      break;
    case 'G':
      g[0][0] = Q(2, 3);
      g[1][1] = 2;
      break;
  }
  switch (type) {
    case 'A':
    case 'B':
      for (unsigned i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':
      for (unsigned i = 0; i + 2 < n; ++i) link(i, i + 1, Q(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case 'D':
      for (unsigned i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      // 1-3-4-5-6-7-8 with 2 attached to 4
      link(0, 2, -1);
      link(1, 3, -1);
      for (unsigned i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, Q(-1, 2));
      break;
    case 'G':
      link(0, 1, -1);
      break;
  }
  return g;
}

std::optional<std::vector<QVec>> epsilon_coords(char type, unsigned n, Q& norm) {
  if (type != 'A' && type != 'B' && type != 'C' && type != 'D') return std::nullopt;
  const unsigned dim = type == 'A' ? n + 1 : n;
  std::vector<QVec> e(n, QVec(dim, 0));
  for (unsigned i = 0; i + 1 < n; ++i) {
    e[i][i] = 1;
    e[i][i + 1] = -1;
  }
  norm = 1;
  switch (type) {
    case 'A':
      e[n - 1][n - 1] = 1;
      e[n - 1][n] = -1;
      break;
    case 'B':
      e[n - 1][n - 1] = 1;
      break;
    case 'C':
      e[n - 1][n - 1] = 2;
      norm = Q(1, 2);
      break;
    case 'D':
      e[n - 1][n - 2] = 1;
      e[n - 1][n - 1] = 1;
      break;
  }
  return e;
}

bool valid_type(char type, unsigned n) {
  switch (type) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

void generate_positive_roots(RootSystem& rs) {
  const unsigned n = rs.rank;
  std::set<IVec> all;
  std::vector<IVec> layer;
  for (unsigned i = 0; i < n; ++i) {
    IVec a(n, 0);
    a[i] = 1;
    layer.push_back(a);
    all.insert(a);
  }
  std::vector<IVec> ordered = layer;
  while (!layer.empty()) {
    std::set<IVec> next;
    for (const auto& beta : layer) {
      IVec lab = rs.labels_of(beta);
      for (unsigned i = 0; i < n; ++i) {
        // alpha_i-string through beta: r steps down, r - <beta, alpha_i^vee> up.
        int r = 0;
        IVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!all.count(down)) break;
          ++r;
        }
        if (r - lab[i] > 0) {
          IVec up = beta;
          up[i] += 1;
          if (!all.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& b : layer) {
      all.insert(b);
      ordered.push_back(b);
    }
  }
  rs.positive_roots = std::move(ordered);
}

}  // namespace

IVec RootSystem::labels_of(const IVec& c) const {
  IVec out(rank, 0);
  for (unsigned i = 0; i < rank; ++i)
    for (unsigned j = 0; j < rank; ++j) out[i] += cartan[i][j] * c[j];
  return out;
}

Q RootSystem::inner(const QVec& a, const QVec& b) const {
  Q s = 0;
  for (unsigned i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < rank; ++j) s += a[i] * gram[i][j] * b[j];
  }
  return s;
}

int RootSystem::positive_index(const IVec& c) const {
  auto it = std::find(positive_roots.begin(), positive_roots.end(), c);
  return it == positive_roots.end() ? -1 : static_cast<int>(it - positive_roots.begin());
}

RootSystemPtr build_root_system(char type, unsigned rank) {
  if (!valid_type(type, rank)) fail(ErrorKind::InvalidType, std::string(1, type) + std::to_string(rank) + " is not a finite type");
  static std::mutex mu;
  static std::map<std::pair<char, unsigned>, RootSystemPtr> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({type, rank});
    if (it != cache.end()) return it->second;
  }
  auto rs = std::make_shared<RootSystem>();
  rs->type = type;
  rs->rank = rank;
  rs->gram = gram_matrix(type, rank);
  rs->cartan.assign(rank, IVec(rank, 0));
  for (unsigned i = 0; i < rank; ++i)
    for (unsigned j = 0; j < rank; ++j) {
      Q c = 2 * rs->gram[i][j] / rs->gram[i][i];
      if (c.denominator() != 1) fail(ErrorKind::InvalidType, "non-integral Cartan entry");
      rs->cartan[i][j] = static_cast<int>(c.numerator());
    }
  std::vector<QVec> cq(rank, QVec(rank));
  for (unsigned i = 0; i < rank; ++i)
    for (unsigned j = 0; j < rank; ++j) cq[i][j] = rs->cartan[i][j];
  for (unsigned i = 0; i < rank; ++i) {
    QVec e(rank, 0);
    e[i] = 1;
    rs->fundamental_weights.push_back(solve(cq, e));
  }
  rs->epsilon = epsilon_coords(type, rank, rs->epsilon_norm);
  generate_positive_roots(*rs);
  rs->weyl_vector.assign(rank, 0);
  for (const auto& r : rs->positive_roots)
    for (unsigned i = 0; i < rank; ++i) rs->weyl_vector[i] += Q(r[i], 2);
  std::lock_guard lock(mu);
  return cache.try_emplace({type, rank}, rs).first->second;
}

Weight::Weight(RootSystemPtr sys, QVec labels) : sys_(std::move(sys)), labels_(std::move(labels)) {
  if (labels_.size() != sys_->rank) fail(ErrorKind::DimensionMismatch, "label count differs from rank");
}

Weight Weight::from_coords(RootSystemPtr sys, const QVec& coords, Basis basis) {
  const unsigned n = sys->rank;
  switch (basis) {
    case Basis::Fundamental:
      return Weight(sys, coords);
    case Basis::SimpleRoot: {
      if (coords.size() != n) fail(ErrorKind::DimensionMismatch, "simple-root coordinate count differs from rank");
      QVec lab(n, 0);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) lab[i] += Q(sys->cartan[i][j]) * coords[j];
      return Weight(sys, lab);
    }
    case Basis::Epsilon: {
      if (!sys->epsilon) fail(ErrorKind::InvalidType, "no epsilon coordinates for " + sys->name());
      const auto& eps = *sys->epsilon;
      if (coords.size() != eps[0].size()) fail(ErrorKind::DimensionMismatch, "epsilon coordinate count");
      QVec lab(n, 0);
      for (unsigned i = 0; i < n; ++i) {
        Q ip = 0;
        for (std::size_t k = 0; k < coords.size(); ++k) ip += coords[k] * eps[i][k];
        lab[i] = 2 * ip * sys->epsilon_norm / sys->gram[i][i];
      }
      return Weight(sys, lab);
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown basis");
}

Weight Weight::fundamental(RootSystemPtr sys, unsigned i) {
  if (i < 1 || i > sys->rank) fail(ErrorKind::InvalidArgument, "fundamental weight index out of range");
  QVec lab(sys->rank, 0);
  lab[i - 1] = 1;
  return Weight(std::move(sys), lab);
}

Weight Weight::zero(RootSystemPtr sys) {
  QVec lab(sys->rank, 0);
  return Weight(std::move(sys), lab);
}

Weight Weight::root(RootSystemPtr sys, const IVec& c) {
  IVec lab = sys->labels_of(c);
  return Weight(std::move(sys), QVec(lab.begin(), lab.end()));
}

QVec Weight::coords(Basis basis) const {
  const unsigned n = sys_->rank;
  switch (basis) {
    case Basis::Fundamental:
      return labels_;
    case Basis::SimpleRoot: {
      QVec c(n, 0);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) c[j] += labels_[i] * sys_->fundamental_weights[i][j];
      return c;
    }
    case Basis::Epsilon: {
      if (!sys_->epsilon) fail(ErrorKind::InvalidType, "no epsilon coordinates for " + sys_->name());
      QVec c = coords(Basis::SimpleRoot);
      const auto& eps = *sys_->epsilon;
      QVec out(eps[0].size(), 0);
      for (unsigned i = 0; i < n; ++i)
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += c[i] * eps[i][k];
      return out;
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown basis");
}

bool Weight::is_dominant() const {
  for (const Q& x : labels_)
    if (x < 0) return false;
  return true;
}

bool Weight::is_integral() const {
  for (const Q& x : labels_)
    if (x.denominator() != 1) return false;
  return true;
}

Weight Weight::reflect(unsigned i) const {
  QVec lab = labels_;
  const Q li = labels_[i];
  for (unsigned j = 0; j < sys_->rank; ++j) lab[j] -= li * sys_->cartan[j][i];
  return Weight(sys_, lab);
}

Weight Weight::dominant_conjugate() const {
  Weight w = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned i = 0; i < sys_->rank; ++i) {
      if (w.labels_[i] < 0) {
        w = w.reflect(i);
        changed = true;
      }
    }
  }
  return w;
}

Weight operator+(const Weight& a, const Weight& b) {
  QVec l = a.labels_;
  for (std::size_t i = 0; i < l.size(); ++i) l[i] += b.labels_[i];
  return Weight(a.sys_, l);
}

Weight operator-(const Weight& a, const Weight& b) {
  QVec l = a.labels_;
  for (std::size_t i = 0; i < l.size(); ++i) l[i] -= b.labels_[i];
  return Weight(a.sys_, l);
}

Weight operator*(long long k, const Weight& a) {
  QVec l = a.labels_;
  for (auto& x : l) x *= k;
  return Weight(a.sys_, l);
}

std::string Weight::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    Q c = labels_[i];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (c != 1) os << c.numerator() << (c.denominator() != 1 ? "/" + std::to_string(c.denominator()) : "");
    os << 'w' << i + 1;
  }
  return first ? "0" : os.str();
}

Q inner(const Weight& a, const Weight& b) {
  return a.system()->inner(a.coords(Basis::SimpleRoot), b.coords(Basis::SimpleRoot));
}

std::vector<Weight> weyl_orbit(const Weight& w) {
  std::set<QVec> seen{w.labels()};
  std::deque<Weight> queue{w};
  std::vector<Weight> out;
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (unsigned i = 0; i < w.system()->rank; ++i) {
      if (cur.labels()[i] == 0) continue;
      Weight nxt = cur.reflect(i);
      if (seen.insert(nxt.labels()).second) queue.push_back(nxt);
    }
  }
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    if (a.is_dominant() != b.is_dominant()) return a.is_dominant();
    return b.labels() < a.labels();
  });
  return out;
}

Weight DiagramAutomorphism::apply(const Weight& w) const {
  QVec lab(w.labels().size());
  for (std::size_t i = 0; i < perm.size(); ++i) lab[perm[i]] = w.labels()[i];
  return Weight(w.system(), lab);
}

IVec DiagramAutomorphism::apply_root(const IVec& c) const {
  IVec out(c.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = c[i];
  return out;
}

DiagramAutomorphism diagram_automorphism(RootSystemPtr sys, unsigned order) {
  const unsigned n = sys->rank;
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i;
  const char t = sys->type;
  if (t == 'A' && n >= 2 && order == 2) {
    for (unsigned i = 0; i < n; ++i) perm[i] = n - 1 - i;
  } else if (t == 'D' && order == 2) {
    std::swap(perm[n - 2], perm[n - 1]);
  } else if (t == 'D' && n == 4 && order == 3) {
    // alpha1 -> alpha4, alpha3 -> alpha1, alpha4 -> alpha3
    perm = {3, 1, 0, 2};
  } else if (t == 'E' && n == 6 && order == 2) {
    perm = {5, 1, 4, 3, 2, 0};
  } else {
    fail(ErrorKind::NoSuchAutomorphism, sys->name() + " has no graph automorphism of order " + std::to_string(order));
  }
  return {std::move(sys), perm, order};
}

}  // namespace simspec::roots
