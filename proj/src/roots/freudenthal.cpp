#include "simspec/roots/freudenthal.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

#include "simspec/error.hpp"

namespace simspec::roots {

namespace {

struct Key {
  std::string system;
  QVec highest;
  bool operator<(const Key& o) const { return std::tie(system, highest) < std::tie(o.system, o.highest); }
};

std::mutex memo_mu;
std::map<Key, std::map<QVec, long long>> memo;

void check_deadline(const Deadline& d) {
  if (d && std::chrono::steady_clock::now() > *d) fail(ErrorKind::BudgetExceeded, "Freudenthal recursion exceeded its time budget");
}

Q height_below(const Weight& highest, const Weight& mu) {
  Q h = 0;
  for (const Q& c : (highest - mu).coords(Basis::SimpleRoot)) h += c;
  return h;
}

std::map<QVec, long long> compute(const Weight& highest, const Deadline& deadline) {
  const RootSystem& rs = *highest.system();
  std::vector<Weight> roots;
  for (const auto& r : rs.positive_roots) roots.push_back(Weight::root(highest.system(), r));

  // Dominant weights below the highest: chains of dominant weights that
  // differ by positive roots reach all of them.
  std::set<QVec> seen{highest.labels()};
  std::deque<Weight> queue{highest};
  std::vector<Weight> dom;
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    dom.push_back(mu);
    for (const auto& a : roots) {
      Weight nu = mu - a;
      if (nu.is_dominant() && seen.insert(nu.labels()).second) queue.push_back(nu);
    }
  }
  std::stable_sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) { return height_below(highest, a) < height_below(highest, b); });

  const Weight rho(highest.system(), QVec(rs.rank, 1));
  const Q top = inner(highest + rho, highest + rho);
  std::map<QVec, long long> mult;
  mult[highest.labels()] = 1;
  for (std::size_t idx = 1; idx < dom.size(); ++idx) {
    check_deadline(deadline);
    const Weight& mu = dom[idx];
    Q sum = 0;
    for (const auto& a : roots) {
      Weight nu = mu + a;
      while (true) {
        auto it = mult.find(nu.dominant_conjugate().labels());
        if (it == mult.end()) break;
        sum += Q(it->second) * inner(nu, a);
        nu = nu + a;
      }
    }
    Q denom = top - inner(mu + rho, mu + rho);
    Q m = 2 * sum / denom;
    if (m.denominator() != 1) fail(ErrorKind::InvalidArgument, "non-integral Freudenthal multiplicity");
    mult[mu.labels()] = m.numerator();
  }
  return mult;
}

std::size_t orbit_size(const Weight& w) {
  std::set<QVec> seen{w.labels()};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (unsigned i = 0; i < w.system()->rank; ++i) {
      if (cur.labels()[i] == 0) continue;
      Weight nxt = cur.reflect(i);
      if (seen.insert(nxt.labels()).second) queue.push_back(nxt);
    }
  }
  return seen.size();
}

}  // namespace

const std::map<QVec, long long>& dominant_multiplicities(const Weight& highest, Deadline deadline) {
  if (!highest.is_dominant() || !highest.is_integral()) fail(ErrorKind::NotDominant, highest.to_string() + " is not dominant integral");
  Key key{highest.system()->name(), highest.labels()};
  {
    std::lock_guard lock(memo_mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto table = compute(highest, deadline);
  std::lock_guard lock(memo_mu);
  return memo.try_emplace(key, std::move(table)).first->second;
}

long long freudenthal_multiplicity(const Weight& highest, const Weight& mu, Deadline deadline) {
  const auto& table = dominant_multiplicities(highest, deadline);
  auto it = table.find(mu.dominant_conjugate().labels());
  return it == table.end() ? 0 : it->second;
}

long long weyl_dimension(const Weight& highest) {
  const RootSystem& rs = *highest.system();
  const Weight rho(highest.system(), QVec(rs.rank, 1));
  Q d = 1;
  for (const auto& r : rs.positive_roots) {
    Weight a = Weight::root(highest.system(), r);
    d *= inner(highest + rho, a) / inner(rho, a);
  }
  if (d.denominator() != 1) fail(ErrorKind::InvalidArgument, "non-integral Weyl dimension");
  return d.numerator();
}

long long multiplicity_sum(const Weight& highest, Deadline deadline) {
  long long total = 0;
  for (const auto& [labels, m] : dominant_multiplicities(highest, deadline)) {
    total += m * static_cast<long long>(orbit_size(Weight(highest.system(), labels)));
  }
  return total;
}

}  // namespace simspec::roots
