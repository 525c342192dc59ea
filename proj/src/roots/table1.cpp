#include "simspec/roots/table1.hpp"

#include <numeric>
#include <regex>
#include <sstream>

#include "simspec/error.hpp"
#include "simspec/roots/freudenthal.hpp"
#include "simspec/table1_data.hpp"

namespace simspec::roots {

namespace {

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return out;
}

// a*n + b for expressions like "n", "n+1", "2n+1", "7"
long long linear(const std::string& e, unsigned n) {
  static const std::regex re(R"(^(\d*)(n)?([+-]\d+)?$)");
  std::smatch m;
  if (!std::regex_match(e, m, re)) fail(ErrorKind::ParseError, "bad expression '" + e + "'");
  if (!m[2].matched) return std::stoll(e);
  long long a = m[1].length() ? std::stoll(m[1]) : 1;
  long long b = m[3].matched ? std::stoll(m[3]) : 0;
  return a * n + b;
}

bool atom_holds(const std::string& atom, unsigned n, std::uint64_t p) {
  static const std::regex cmp(R"(^p(!=|=|>)(\d+)$)");
  static const std::regex div(R"(^p(!?)\|(.+)$)");
  static const std::regex pair(R"(^\(n,p\)!=\((\d+),(\d+)\)$)");
  std::smatch m;
  const long long pp = static_cast<long long>(p);
  if (std::regex_match(atom, m, cmp)) {
    long long k = std::stoll(m[2]);
    if (p == 0) return m[1] != "=";
    if (m[1] == "!=") return pp != k;
    if (m[1] == "=") return pp == k;
    return pp > k;
  }
  if (std::regex_match(atom, m, div)) {
    bool divides = p != 0 && linear(m[2], n) % pp == 0;
    return m[1].length() ? !divides : divides;
  }
  if (std::regex_match(atom, m, pair)) {
    if (p == 0) return true;
    return !(static_cast<long long>(n) == std::stoll(m[1]) && pp == std::stoll(m[2]));
  }
  fail(ErrorKind::ParseError, "bad condition atom '" + atom + "'");
}

std::vector<Table1Row> parse() {
  auto j = nlohmann::json::parse(detail::kTable1Json);
  std::vector<Table1Row> rows;
  for (const auto& r : j.at("rows")) {
    Table1Row row;
    row.index = rows.size() + 1;
    row.type = r.at("type").get<std::string>().at(0);
    const auto& rank = r.at("rank");
    if (rank.contains("eq")) {
      row.rank_eq = rank.at("eq").get<unsigned>();
      row.rank_min = *row.rank_eq;
    } else {
      row.rank_min = rank.at("min").get<unsigned>();
    }
    row.printed = r.at("printed").get<std::string>();
    row.condition = r.at("condition").get<std::string>();
    for (const auto& t : r.at("highest_weight")) row.highest_weight.emplace_back(t.at(0).get<int>(), t.at(1).get<std::string>());
    row.multiplicity = r.at("multiplicity").get<std::string>();
    row.inherited = r.value("inherited", "");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

bool Table1Row::applies_to_rank(unsigned n) const { return rank_eq ? n == *rank_eq : n >= rank_min; }

bool Table1Row::condition_holds(unsigned n, std::uint64_t p) const {
  if (condition.empty()) return true;
  for (const auto& atom : split(condition, " & "))
    if (!atom_holds(atom, n, p)) return false;
  return true;
}

long long Table1Row::multiplicity_at(unsigned n) const {
  if (multiplicity == "n-(2,n)") return n - std::gcd(2u, n);
  return linear(multiplicity, n);
}

Weight Table1Row::highest_weight_in(const RootSystemPtr& sys) const {
  QVec lab(sys->rank, 0);
  for (const auto& [c, idx] : highest_weight) {
    unsigned i = idx == "n" ? sys->rank : static_cast<unsigned>(std::stoul(idx));
    lab.at(i - 1) += c;
  }
  return Weight(sys, lab);
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = parse();
  return rows;
}

std::vector<FilterVerdict> theorem_case_filter(const RootSystemPtr& sys, std::uint64_t p, unsigned sigma_order) {
  std::optional<DiagramAutomorphism> sigma;
  try {
    sigma = diagram_automorphism(sys, sigma_order);
  } catch (const Error&) {
  }
  const unsigned n = sys->rank;
  std::vector<FilterVerdict> out;
  for (const auto& row : table1()) {
    if (row.type != sys->type || !row.applies_to_rank(n)) continue;
    FilterVerdict v;
    v.row = row;
    if (!row.inherited.empty()) v.flags.push_back("inherits " + row.inherited + " from the row above");
    Weight hw = row.highest_weight_in(sys);
    long long mult = row.multiplicity_at(n);
    if (!row.condition_holds(n, p)) {
      v.verdict = "discarded: characteristic condition '" + row.condition + "' fails";
    } else if (p == sigma_order) {
      v.verdict = "discarded: p = |sigma|, reduces to case (1)";
    } else if (!sigma) {
      v.verdict = "discarded: no graph automorphism of order " + std::to_string(sigma_order);
    } else if (!(sigma->apply(hw) == hw)) {
      v.verdict = "discarded: highest weight " + hw.to_string() + " is not sigma-invariant";
    } else if (mult > static_cast<long long>(sigma_order)) {
      v.verdict = "discarded: zero-weight multiplicity " + std::to_string(mult) + " exceeds |sigma| = " + std::to_string(sigma_order);
    } else {
      v.survives = true;
      const std::string w = hw.to_string();
      if (sys->type == 'A' && n == 2 && w == "w1+w2") {
        v.lemma_case = 2;
        v.verdict = "case (2)";
      } else if (sys->type == 'D' && n == 4 && w == "w2" && p == 2 && sigma_order == 3) {
        v.lemma_case = 3;
        v.verdict = "case (3)";
      } else if (sys->type == 'A' && n == 3 && w == "2w2") {
        v.lemma_case = 4;
        v.verdict = "case (4)";
        v.flags.push_back("eliminated by Lemma ne1");
      } else {
        v.verdict = "survives, unclassified";
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

Table1Report verify_table1_char0(unsigned max_rank, double e_budget_seconds) {
  Table1Report rep;
  for (const auto& row : table1()) {
    std::vector<unsigned> ranks;
    if (row.type == 'E') {
      ranks.push_back(*row.rank_eq);
    } else {
      for (unsigned n = row.rank_min; n <= max_rank; ++n)
        if (row.applies_to_rank(n)) ranks.push_back(n);
    }
    for (unsigned n : ranks) {
      if (!row.condition_holds(n, 0)) continue;
      auto sys = build_root_system(row.type, n);
      Weight hw = row.highest_weight_in(sys);
      Table1Check c;
      c.row_index = row.index;
      c.system = sys->name();
      c.highest = hw.to_string();
      c.table_value = row.multiplicity_at(n);
      Deadline deadline;
      if (row.type == 'E') {
        deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(e_budget_seconds));
      }
      try {
        c.computed = freudenthal_multiplicity(hw, Weight::zero(sys), deadline);
        c.weyl_dim = weyl_dimension(hw);
        c.multiplicity_sum = multiplicity_sum(hw, deadline);
        if (*c.weyl_dim != *c.multiplicity_sum) rep.dimensions_consistent = false;
        c.status = *c.computed == c.table_value ? "match" : "mismatch";
        if (!row.inherited.empty()) c.note = "row inherits " + row.inherited + " from the row above";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        c.status = "skipped";
        c.note = "time budget exceeded";
      }
      if (c.status == "match") ++rep.matches;
      if (c.status == "mismatch") ++rep.mismatches;
      if (c.status == "skipped") ++rep.skipped;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

nlohmann::json to_json(const Table1Report& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j = {{"row", c.row_index}, {"system", c.system}, {"highest_weight", c.highest}, {"table", c.table_value}, {"status", c.status}};
    j["computed"] = c.computed ? nlohmann::json(*c.computed) : nlohmann::json(nullptr);
    j["weyl_dimension"] = c.weyl_dim ? nlohmann::json(*c.weyl_dim) : nlohmann::json(nullptr);
    j["multiplicity_sum"] = c.multiplicity_sum ? nlohmann::json(*c.multiplicity_sum) : nlohmann::json(nullptr);
    if (!c.note.empty()) j["note"] = c.note;
    rows.push_back(j);
  }
  return {{"checks", rows}, {"matches", r.matches}, {"mismatches", r.mismatches}, {"skipped", r.skipped}, {"dimensions_consistent", r.dimensions_consistent}};
}

nlohmann::json to_json(const std::vector<FilterVerdict>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : v) {
    nlohmann::json j = {{"row", f.row.index}, {"printed", f.row.printed}, {"condition", f.row.condition}, {"multiplicity", f.row.multiplicity}, {"survives", f.survives}, {"verdict", f.verdict}, {"flags", f.flags}};
    j["case"] = f.lemma_case ? nlohmann::json(*f.lemma_case) : nlohmann::json(nullptr);
    out.push_back(j);
  }
  return out;
}

}  // namespace simspec::roots
