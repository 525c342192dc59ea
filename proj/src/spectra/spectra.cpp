#include "simspec/spectra/spectra.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

#include "simspec/error.hpp"
#include "simspec/galois/serialize.hpp"
#include "simspec/linalg/charpoly.hpp"
#include "simspec/galois/number_theory.hpp"

namespace simspec::spectra {

namespace {

using Kind = PredictedFactor::Kind;

PredictedFactor linear(const FieldElement& c, const std::string& sector = "root") { return {Kind::Linear, 1, c, 1, sector}; }
PredictedFactor binomial(unsigned k, const FieldElement& c) { return {Kind::Binomial, k, c, 1, "root"}; }
PredictedFactor cyclotomic3(Field f) { return {Kind::Cyclotomic3, 2, f.one(), 1, "zero"}; }

bool is_a_type(const ExplicitRep& rep) { return rep.system->type == 'A'; }

std::vector<FieldElement> nonzero_elements(Field f) {
  std::vector<FieldElement> out;
  for (std::uint64_t r = 1; r < f.size(); ++r) out.push_back(f.element_at_rank(r));
  return out;
}

std::vector<std::size_t> weyl_part(const ExplicitRep& rep, Family family) {
  std::vector<std::size_t> out;
  if (family != Family::SigmaWeylT) return {0};
  // canonical form: w != 1 for A types; every Weyl element for D4
  for (std::size_t i = is_a_type(rep) ? 1 : 0; i < rep.weyl.size(); ++i) out.push_back(i);
  return out;
}

std::uint64_t torus_count(const ExplicitRep& rep, std::uint64_t q, Family family) {
  if (family == Family::TwistedSigmaT) return (q * q * q - 1) * (q - 1);
  const std::uint64_t free = rep.label == "d4-w2-char2" ? 3 : rep.torus_rank;
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < free; ++i) n *= q - 1;
  return n;
}

void check_search_field(const ExplicitRep& rep, std::uint64_t q, Family family) {
  if (family == Family::TwistedSigmaT) {
    if (rep.label != "d4-w2-char2") fail(ErrorKind::CaseMismatch, "the twisted family exists for d4-w2-char2 only");
    if (rep.field.size() != q * q * q) fail(ErrorKind::FieldMismatch, "twisted search needs the representation over GF(q^3)");
  } else if (rep.field.size() != q) {
    fail(ErrorKind::FieldMismatch, "family search needs the representation over GF(q)");
  }
}

std::string scope_text(const ExplicitRep& rep, std::uint64_t q, Family family) {
  const std::string qs = std::to_string(q);
  switch (family) {
    case Family::InnerT:
      return "inner torus elements t over GF(" + qs + ")";
    case Family::SigmaT:
      return "coset elements sigma*t, t over GF(" + qs + "); not all of H(" + qs + ")";
    case Family::SigmaWeylT:
      return std::string("coset elements sigma*n_w*t, n_w over ") + (is_a_type(rep) ? "the non-identity representatives" : "all 192 Weyl elements") +
             ", t over GF(" + qs + "); not all of H(" + qs + ")";
    case Family::TwistedSigmaT:
      return "coset elements sigma*t with t in the twisted torus a_i = a_sigma(i)^q over GF(" + std::to_string(q * q * q) + "); not all of H(" + qs + ")";
  }
  return {};
}

}  // namespace

Matrix realize(const ElementSpec& e, const ExplicitRep& rep) {
  if (e.case_label != rep.label) fail(ErrorKind::CaseMismatch, "element is for '" + e.case_label + "', representation is '" + rep.label + "'");
  if (e.sigma_power > 1) fail(ErrorKind::InvalidArgument, "sigma_power must be 0 or 1");
  for (const auto& c : e.torus)
    if (c.field() != rep.field && rep.field.size() % c.field().size() != 0)
      fail(ErrorKind::FieldMismatch, "torus coordinate in " + c.field().name() + " does not embed in " + rep.field.name());
  Matrix m = rep.weyl_eval(e.weyl_id) * rep.torus_eval(e.torus);
  return e.sigma_power ? rep.sigma * m : m;
}

Polynomial PredictedFactor::expand(Field f) const {
  FieldElement cc = c.field() == f ? c : galois::embed(c, f);
  switch (kind) {
    case Kind::Linear:
      return Polynomial::linear_root(cc);
    case Kind::Binomial:
      return Polynomial::binomial(k, cc);
    case Kind::Cyclotomic3:
      return Polynomial(f, std::vector<galois::Raw>{1, 1, 1});
  }
  return {};
}

std::string PredictedFactor::describe() const {
  std::string s;
  switch (kind) {
    case Kind::Linear:
      s = "x - (" + c.to_string() + ")";
      break;
    case Kind::Binomial:
      s = "x^" + std::to_string(k) + " - (" + c.to_string() + ")";
      break;
    case Kind::Cyclotomic3:
      s = "x^2 + x + 1";
      break;
  }
  return count > 1 ? "(" + s + ")^" + std::to_string(count) : s;
}

unsigned PredictedCharpoly::degree() const {
  unsigned d = 0;
  for (const auto& f : factors) d += (f.kind == Kind::Linear ? 1 : f.kind == Kind::Cyclotomic3 ? 2 : f.k) * f.count;
  return d;
}

Polynomial PredictedCharpoly::expand() const {
  Polynomial p = Polynomial::constant(field.one());
  for (const auto& f : factors) p = p * f.expand(field).pow(f.count);
  return p;
}

Polynomial PredictedCharpoly::expand_sector(const std::string& sector) const {
  Polynomial p = Polynomial::constant(field.one());
  for (const auto& f : factors)
    if (f.sector == sector) p = p * f.expand(field).pow(f.count);
  return p;
}

PredictedCharpoly predicted_charpoly_a2(const FieldElement& t1, const FieldElement& t2) {
  Field f = t1.field();
  const auto p = f.characteristic();
  if (p == 2 || p == 3) fail(ErrorKind::BadCharacteristic, "A2 prediction needs characteristic outside {2, 3}");
  if (t1.is_zero() || t2.is_zero()) fail(ErrorKind::ZeroElement, "torus coordinates must be nonzero");
  const FieldElement s = t1 / t2;
  return {f,
          {linear(f.one(), "zero"), linear(-f.one(), "zero"), linear(-s), linear(-s.inverse()), binomial(2, s), binomial(2, s.inverse())}};
}

PredictedCharpoly predicted_charpoly_d4(const std::vector<FieldElement>& t) {
  if (t.size() < 3) fail(ErrorKind::DimensionMismatch, "need (t1, t2, t3)");
  Field f = t[0].field();
  if (f.characteristic() != 2) fail(ErrorKind::BadCharacteristic, "D4 prediction is for characteristic 2");
  for (std::size_t i = 0; i < 3; ++i)
    if (t[i].is_zero()) fail(ErrorKind::ZeroElement, "torus coordinates must be nonzero");
  const auto &t1 = t[0], &t2 = t[1], &t3 = t[2];
  PredictedCharpoly p{f, {cyclotomic3(f)}};
  for (const auto& c : {t2 / t3, t1 * t3, t1 * t2}) {
    p.factors.push_back(linear(c));
    p.factors.push_back(linear(c.inverse()));
  }
  for (const auto& c : {t1 / t2 * t3 * t3, t1 * t2 * t2 / t3, t1 * t1 * t2 * t3}) {
    p.factors.push_back(binomial(3, c));
    p.factors.push_back(binomial(3, c.inverse()));
  }
  return p;
}

PredictedCharpoly predicted_charpoly_3d4(std::uint64_t q, const FieldElement& y, const FieldElement& u, Branch branch) {
  Field f = y.field();
  if (q % 2) fail(ErrorKind::BadCharacteristic, "twisted D4 prediction needs q even");
  const bool divides = (q - 1) % 3 == 0;
  if (divides != (branch == Branch::Divides)) fail(ErrorKind::BranchMismatch, "branch does not match 3 | q - 1");
  if (branch == Branch::Divides ? y.pow(2) != u : y.pow(3) != u) fail(ErrorKind::BranchMismatch, "y and u do not satisfy the branch relation");
  PredictedCharpoly p{f, {cyclotomic3(f)}};
  const std::vector<int> lin = branch == Branch::Divides ? std::vector<int>{2, 4, 6} : std::vector<int>{2, 5, 7};
  const std::vector<int> cub = branch == Branch::Divides ? std::vector<int>{8, 10, 2} : std::vector<int>{3, 9, 12};
  for (int e : lin) {
    p.factors.push_back(linear(y.pow(e)));
    p.factors.push_back(linear(y.pow(-e)));
  }
  for (int e : cub) {
    p.factors.push_back(binomial(3, y.pow(e)));
    p.factors.push_back(binomial(3, y.pow(-e)));
  }
  return p;
}

M1M2Verdict m1_m2_condition(const FieldElement& t1, const FieldElement& t2, const FieldElement& t3, std::uint64_t q) {
  auto key = [](const FieldElement& x) { return x.raw(); };
  std::set<galois::Raw> m1, m2;
  for (const auto& c : {t2 / t3, t1 * t3, t1 * t2}) {
    m1.insert(key(c));
    m1.insert(key(c.inverse()));
  }
  for (const auto& c : {t1 / t2 * t3 * t3, t1 * t2 * t2 / t3, t1 * t1 * t2 * t3}) {
    m2.insert(key(c));
    m2.insert(key(c.inverse()));
  }
  M1M2Verdict v;
  v.m1 = m1.size();
  v.m2 = m2.size();
  v.three_divides = (q - 1) % 3 == 0;
  if (!v.three_divides) {
    bool ok = true;
    for (auto s : m1)
      if (m2.count(t1.field().pow(s, 3))) ok = false;
    v.cube_avoidance = ok;
  }
  v.sufficient = v.m1 == 6 && v.m2 == 6 && (v.three_divides || *v.cube_avoidance);
  return v;
}

SpectrumReport verify_element(const ElementSpec& e, const ExplicitRep& rep, const std::optional<PredictedCharpoly>& predicted) {
  SpectrumReport r;
  r.element = e;
  r.field = rep.field;
  r.dim = rep.dim;
  const Matrix h = realize(e, rep);
  r.charpoly = linalg::charpoly(h);
  r.gcd_with_derivative = galois::gcd(r.charpoly, r.charpoly.derivative());
  r.squarefree = r.gcd_with_derivative.degree() == 0;

  // sector split when both weight sectors are h-invariant
  const auto zero = rep.zero_weight_basis();
  const auto nonzero = rep.nonzero_weight_basis();
  auto sub = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    Matrix m(rep.field, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = h(rows[i], cols[j]);
    return m;
  };
  const bool split = !zero.empty() && sub(zero, nonzero).is_zero() && sub(nonzero, zero).is_zero();

  if (predicted) {
    r.predicted = predicted;
    const Polynomial expected = predicted->expand();
    r.prediction_match = expected == r.charpoly;
    Polynomial rem = r.charpoly;
    for (const auto& f : predicted->factors) {
      FactorEvidence ev{f.describe(), f.sector, f.count, false, 0};
      Polynomial g = f.expand(rep.field);
      ev.gcd_degree = galois::gcd(g, r.charpoly).degree();
      Polynomial gp = g.pow(f.count);
      if (galois::divides(gp, rem)) {
        rem = galois::exact_div(rem, gp);
        ev.matched = true;
      }
      r.evidence.push_back(ev);
    }
    r.residual = rem;
    if (split) {
      for (const auto& [name, idx] : {std::pair{std::string("root"), nonzero}, std::pair{std::string("zero"), zero}}) {
        SectorEvidence s{name, linalg::charpoly(sub(idx, idx)), predicted->expand_sector(name), false};
        s.match = s.computed == s.predicted;
        r.sectors.push_back(s);
      }
    }
  }
  return r;
}

Family parse_family(const std::string& s) {
  if (s == "sigma_t") return Family::SigmaT;
  if (s == "sigma_weyl_t") return Family::SigmaWeylT;
  if (s == "inner_t") return Family::InnerT;
  if (s == "twisted_sigma_t") return Family::TwistedSigmaT;
  fail(ErrorKind::InvalidArgument, "unknown family '" + s + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::SigmaT: return "sigma_t";
    case Family::SigmaWeylT: return "sigma_weyl_t";
    case Family::InnerT: return "inner_t";
    case Family::TwistedSigmaT: return "twisted_sigma_t";
  }
  return {};
}

std::uint64_t family_size(const ExplicitRep& rep, std::uint64_t q, Family family) {
  return weyl_part(rep, family).size() * torus_count(rep, q, family);
}

std::pair<std::size_t, std::vector<FieldElement>> family_candidate(const ExplicitRep& rep, std::uint64_t q, Family family, std::uint64_t index) {
  const auto weyl = weyl_part(rep, family);
  const std::uint64_t per = torus_count(rep, q, family);
  const std::size_t w = weyl.at(index / per);
  std::uint64_t r = index % per;
  const Field f = rep.field;
  if (family == Family::TwistedSigmaT) {
    Field small = galois::field_of_size(q);
    const FieldElement b = f.element_at_rank(1 + r / (q - 1));
    const FieldElement c = galois::embed(small.element_at_rank(1 + r % (q - 1)), f);
    return {w, {b, c, galois::frobenius_power(b, q), galois::frobenius_power(b, q * q)}};
  }
  const bool d4 = rep.label == "d4-w2-char2";
  const std::size_t free = d4 ? 3 : rep.torus_rank;
  std::vector<FieldElement> t(free);
  for (std::size_t i = free; i-- > 0;) {
    t[i] = f.element_at_rank(1 + r % (q - 1));
    r /= q - 1;
  }
  if (d4) {
    t.push_back(f.one());
    return {w, rep::d4_root_values(t)};
  }
  return {w, t};
}

unsigned search_threads(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPECTRA_THREADS")) {
      int cap = std::atoi(env);
      if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
  }
  return std::max(1u, n);
}

SearchReport family_search(const ExplicitRep& rep, std::uint64_t q, Family family, const SearchOptions& opt) {
  check_search_field(rep, q, family);
  SearchReport rep_out;
  rep_out.case_label = rep.label;
  rep_out.q = q;
  rep_out.family = family;
  rep_out.family_size = family_size(rep, q, family);
  rep_out.scope = scope_text(rep, q, family);
  rep_out.exploratory = rep.label == "d4-w2-char2" && (q == 4 || q == 8);
  std::uint64_t total = rep_out.family_size;
  if (opt.budget && total > opt.budget) {
    total = opt.budget;
    rep_out.budget_exceeded = true;
  }
  const unsigned sigma_power = family == Family::InnerT ? 0 : 1;
  // sigma^a * n_w for every Weyl index in use
  std::vector<Matrix> prefix(rep.weyl.size());
  for (auto w : weyl_part(rep, family)) prefix[w] = sigma_power ? rep.sigma * rep.weyl[w].matrix : rep.weyl[w].matrix;

  struct Partial {
    std::uint64_t hits = 0;
    std::vector<std::uint64_t> first;
  };
  const unsigned nthreads = static_cast<unsigned>(std::min<std::uint64_t>(search_threads(opt.threads), std::max<std::uint64_t>(total, 1)));
  std::vector<Partial> parts(nthreads);
  std::vector<std::exception_ptr> errors(nthreads);
  auto work = [&](unsigned id) {
    try {
      const std::uint64_t lo = total * id / nthreads, hi = total * (id + 1) / nthreads;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        auto [w, t] = family_candidate(rep, q, family, idx);
        const auto d = rep.torus_diagonal(t);
        Matrix m = prefix[w];
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j)) m.at(i, j) = rep.field.mul(m(i, j), d[j]);
        if (galois::is_squarefree(linalg::charpoly(m))) {
          ++parts[id].hits;
          if (parts[id].first.size() < opt.max_hits) parts[id].first.push_back(idx);
        }
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& p : parts) {
    rep_out.hit_count += p.hits;
    for (auto idx : p.first) {
      if (rep_out.hits.size() >= opt.max_hits) break;
      auto [w, t] = family_candidate(rep, q, family, idx);
      rep_out.hits.push_back({rep.label, sigma_power, rep.weyl[w].id, t, q});
    }
  }
  rep_out.candidates_tested = total;
  rep_out.exhaustive = !rep_out.budget_exceeded;
  return rep_out;
}

InducedReport induced_equivalence_check(const ExplicitRep& induced, std::uint64_t q) {
  if (induced.label != "a3-induced") fail(ErrorKind::CaseMismatch, "induced check needs the a3-induced representation");
  if (q % 2 == 0 || q <= 3) fail(ErrorKind::InvalidArgument, "induced check needs q odd and q > 3");
  check_search_field(induced, q, Family::SigmaWeylT);
  InducedReport r;
  r.q = q;
  // block-1 basis positions of eps1+eps2 and eps3+eps4 (reduced: (1,1,0) and (-1,-1,-1))
  std::size_t b12 = 0, b34 = 0;
  for (const auto& e : induced.ledger)
    for (auto b : e.basis) {
      if (b >= 10) continue;
      if (e.character == std::vector<int>{1, 1, 0}) b12 = b;
      if (e.character == std::vector<int>{-1, -1, 0}) b34 = b;
    }
  const std::uint64_t n = family_size(induced, q, Family::SigmaWeylT);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    auto [w, t] = family_candidate(induced, q, Family::SigmaWeylT, idx);
    ElementSpec e{induced.label, 1, induced.weyl[w].id, t, q};
    Matrix h = realize(e, induced);
    Matrix h2 = h * h;
    const bool lhs = galois::is_squarefree(linalg::charpoly(h));
    Polynomial c1 = linalg::charpoly(h2.block(0, 0, 10, 10));
    Polynomial c2 = linalg::charpoly(h2.block(10, 10, 10, 10));
    const bool rhs = galois::is_squarefree(c1) && galois::is_squarefree(c2) && c1 == c2;
    ++r.candidates;
    if (lhs) ++r.simple_count;
    if (lhs == rhs) ++r.biconditional_holds;
    if (c1 == c2) ++r.block_charpolys_equal;
    if (h2(b12, b12) == h2(b34, b34) && h2.block(0, 0, 10, 10).is_diagonal()) ++r.omega2_collisions;
  }
  r.negative_claim_holds = r.simple_count == 0;
  return r;
}

Gu1Report gu1_property_check(const ExplicitRep& rep, unsigned sigma_order) {
  Gu1Report r;
  r.sigma_order = sigma_order;
  for (const auto& e : rep.ledger) {
    if (e.weight == roots::Weight::zero(rep.system)) {
      r.zero_multiplicity = e.multiplicity;
    } else if (e.multiplicity != 1) {
      r.nonzero_multiplicity_one = false;
    }
  }
  r.passes = r.nonzero_multiplicity_one && r.zero_multiplicity <= sigma_order;
  return r;
}

Ty2Report ty2_check(const Matrix& h, unsigned l) {
  Ty2Report r;
  r.l = l;
  r.simple = linalg::has_simple_spectrum(h);
  Polynomial c = linalg::charpoly(h.pow(l));
  for (const auto& [e, g] : galois::squarefree_factorization(c)) r.max_multiplicity = std::max(r.max_multiplicity, e);
  r.radical_degree = galois::radical(c).degree();
  const auto dim = static_cast<int>(h.rows());
  r.bound_holds = !r.simple || (r.max_multiplicity <= l && r.radical_degree * static_cast<int>(l) >= dim);
  return r;
}

nlohmann::json to_json(const PredictedCharpoly& p) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : p.factors) {
    const char* kind = f.kind == Kind::Linear ? "linear" : f.kind == Kind::Binomial ? "binomial" : "cyclotomic3";
    factors.push_back({{"kind", kind}, {"k", f.k}, {"c", galois::element_to_json(f.c)}, {"count", f.count}, {"sector", f.sector}, {"text", f.describe()}});
  }
  return {{"factors", factors}, {"degree", p.degree()}, {"expanded", galois::polynomial_to_json(p.expand())}};
}

nlohmann::json to_json(const SpectrumReport& r) {
  nlohmann::json torus = nlohmann::json::array();
  for (const auto& x : r.element.torus) torus.push_back(galois::element_to_json(x));
  nlohmann::json j = {{"case", r.element.case_label},
                      {"q", r.element.q},
                      {"field", galois::field_to_json(r.field)},
                      {"dim", r.dim},
                      {"element", {{"sigma_power", r.element.sigma_power}, {"weyl_id", r.element.weyl_id}, {"torus", torus}}},
                      {"charpoly", galois::polynomial_to_json(r.charpoly)},
                      {"squarefree", r.squarefree},
                      {"gcd_with_derivative", galois::polynomial_to_json(r.gcd_with_derivative)},
                      {"family_scope", r.family_scope},
                      {"exhaustive", r.exhaustive},
                      {"candidates_tested", r.candidates_tested}};
  j["predicted"] = r.predicted ? to_json(*r.predicted) : nlohmann::json(nullptr);
  j["prediction_match"] = r.prediction_match ? nlohmann::json(*r.prediction_match) : nlohmann::json(nullptr);
  if (r.predicted) {
    nlohmann::json ev = nlohmann::json::array();
    for (const auto& e : r.evidence)
      ev.push_back({{"factor", e.factor}, {"sector", e.sector}, {"count", e.expected}, {"matched", e.matched}, {"gcd_degree", e.gcd_degree}});
    j["evidence"] = ev;
    j["residual"] = galois::polynomial_to_json(r.residual);
    nlohmann::json sec = nlohmann::json::array();
    for (const auto& s : r.sectors)
      sec.push_back({{"sector", s.sector},
                     {"computed", galois::polynomial_to_json(s.computed)},
                     {"predicted", galois::polynomial_to_json(s.predicted)},
                     {"match", s.match}});
    j["sectors"] = sec;
  }
  return j;
}

nlohmann::json to_json(const SearchReport& r) {
  nlohmann::json hits = nlohmann::json::array();
  for (const auto& h : r.hits) hits.push_back(rep::to_json(h));
  return {{"case", r.case_label},
          {"q", r.q},
          {"family", to_string(r.family)},
          {"family_scope", r.scope},
          {"family_size", r.family_size},
          {"candidates_tested", r.candidates_tested},
          {"hit_count", r.hit_count},
          {"hits", hits},
          {"exhaustive", r.exhaustive},
          {"budget_exceeded", r.budget_exceeded},
          {"exploratory", r.exploratory}};
}

nlohmann::json to_json(const InducedReport& r) {
  return {{"q", r.q},
          {"candidates", r.candidates},
          {"simple_count", r.simple_count},
          {"biconditional_holds", r.biconditional_holds},
          {"block_charpolys_equal", r.block_charpolys_equal},
          {"omega2_collisions", r.omega2_collisions},
          {"negative_claim_holds", r.negative_claim_holds},
          {"family_scope", "sigma*n_w*t, n_w in {nw1, nw2}, t over GF(" + std::to_string(r.q) + ")"}};
}

nlohmann::json to_json(const M1M2Verdict& v) {
  nlohmann::json j = {{"m1", v.m1}, {"m2", v.m2}, {"three_divides_q_minus_1", v.three_divides}, {"sufficient", v.sufficient}};
  j["cube_avoidance"] = v.cube_avoidance ? nlohmann::json(*v.cube_avoidance) : nlohmann::json(nullptr);
  return j;
}

}  // namespace simspec::spectra
