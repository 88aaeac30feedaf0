#include "inse/nrdm/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace inse::nrdm {

int Domain::index_of(const std::string& m) const {
  auto it = std::find(members.begin(), members.end(), m);
  return it == members.end() ? -1 : static_cast<int>(it - members.begin());
}

Scheme::Scheme(std::vector<Attribute> a) : attrs(std::move(a)) {
  std::set<std::string> seen;
  for (const auto& attr : attrs) {
    if (!attr.domain || attr.domain->members.empty())
      throw error("attribute '" + attr.name + "' needs a nonempty domain");
    if (!seen.insert(attr.name).second)
      throw error("duplicate attribute name '" + attr.name + "'");
  }
}

int Scheme::index_of(const std::string& attr) const {
  for (std::size_t k = 0; k < attrs.size(); ++k)
    if (attrs[k].name == attr) return static_cast<int>(k);
  return -1;
}

std::size_t Scheme::tuple_count() const {
  std::size_t n = 1;
  for (const auto& a : attrs) n *= a.domain->members.size();
  return n;
}

bool Scheme::compatible_with(const Scheme& o) const {
  if (attrs.size() != o.attrs.size()) return false;
  for (std::size_t k = 0; k < attrs.size(); ++k)
    if (attrs[k].name != o.attrs[k].name || attrs[k].domain->name != o.attrs[k].domain->name)
      return false;
  return true;
}

std::size_t tuple_rank(const Scheme& s, const Tuple& t) {
  std::size_t rank = 0;
  for (std::size_t k = 0; k < s.attrs.size(); ++k)
    rank = rank * s.attrs[k].domain->members.size() + static_cast<std::size_t>(t[k]);
  return rank;
}

Tuple tuple_at(const Scheme& s, std::size_t rank) {
  Tuple t(s.attrs.size(), 0);
  for (std::size_t k = s.attrs.size(); k-- > 0;) {
    std::size_t n = s.attrs[k].domain->members.size();
    t[k] = static_cast<int>(rank % n);
    rank /= n;
  }
  return t;
}

std::string tuple_text(const Scheme& s, const Tuple& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += s.attrs[k].domain->members[static_cast<std::size_t>(t[k])];
  }
  return out + ")";
}

Tuple parse_tuple(const Scheme& s, const std::vector<std::string>& members) {
  if (members.size() != s.attrs.size()) throw error("tuple arity mismatch");
  Tuple t(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    int idx = s.attrs[k].domain->index_of(members[k]);
    if (idx < 0)
      throw error("'" + members[k] + "' is not a member of domain '" +
                  s.attrs[k].domain->name + "'");
    t[k] = idx;
  }
  return t;
}

ConfidencePair::ConfidencePair(double b, double d) : belief(b), doubt(d) {
  if (!std::isfinite(b) || !std::isfinite(d) || b < 0 || b > 1 || d < 0 || d > 1)
    throw error("belief and doubt factors must lie in [0,1]");
}

ConfidencePair NeutroRelation::at(const Tuple& t) const {
  auto it = rows_.find(t);
  return it == rows_.end() ? ConfidencePair{} : it->second;
}

void NeutroRelation::set(const Tuple& t, const ConfidencePair& p) {
  if (t.size() != scheme_.arity()) throw error("tuple arity mismatch");
  if (p.belief == 0.0 && p.doubt == 0.0) {
    rows_.erase(t);
    return;
  }
  rows_[t] = p;
}

bool NeutroRelation::operator==(const NeutroRelation& o) const {
  return scheme_.compatible_with(o.scheme_) && rows_ == o.rows_;
}

void MultiRelation::add(const Tuple& t, const ConfidencePair& p) {
  if (t.size() != scheme_.arity()) throw error("tuple arity mismatch");
  rows_[t].push_back(p);
}

std::vector<ConfidencePair> MultiRelation::at(const Tuple& t) const {
  auto it = rows_.find(t);
  if (it == rows_.end()) return {ConfidencePair{}};
  return it->second;
}

namespace {

constexpr double kSumTol = 1e-9;

template <typename RowFn>
ClassifyFlags classify_rows(RowFn for_each_row) {
  ClassifyFlags f;
  f.consistent = true;
  f.complete = true;
  f.total = true;
  bool any = false;
  for_each_row([&](const ConfidencePair& p) {
    any = true;
    const double sum = p.belief + p.doubt;
    if (sum > 1.0 + kSumTol) {
      f.consistent = false;
      f.inconsistent = true;
    }
    if (sum < 1.0 - kSumTol) f.complete = false;
  });
  f.total = any && f.consistent && f.complete;
  if (!any) {
    f.complete = false;
    f.total = false;
  }
  return f;
}

} // namespace

ClassifyFlags classify(const NeutroRelation& r) {
  return classify_rows([&](auto visit) {
    for (const auto& [t, p] : r.rows()) visit(p);
  });
}

ClassifyFlags classify(const MultiRelation& r) {
  ClassifyFlags f = classify_rows([&](auto visit) {
    for (const auto& [t, ps] : r.rows())
      for (const auto& p : ps) visit(p);
  });
  // Pseudo-consistent: some tuple's maxima exceed 1 while each of its rows
  // sums to exactly 1.
  for (const auto& [t, ps] : r.rows()) {
    double maxb = 0, maxd = 0;
    bool all_unit = true;
    for (const auto& p : ps) {
      maxb = std::max(maxb, p.belief);
      maxd = std::max(maxd, p.doubt);
      if (std::fabs(p.belief + p.doubt - 1.0) > kSumTol) all_unit = false;
    }
    if (maxb + maxd > 1.0 + kSumTol) {
      if (!all_unit) {
        f.pseudo_consistent = false;
        return f;
      }
      f.pseudo_consistent = true;
    }
  }
  return f;
}

std::string to_string(const ClassifyFlags& f) {
  std::string out;
  auto tag = [&](bool v, const char* name) {
    if (v) {
      if (!out.empty()) out += " ";
      out += name;
    }
  };
  tag(f.consistent, "consistent");
  tag(f.complete, "complete");
  tag(f.total, "total");
  tag(f.pseudo_consistent, "pseudo-consistent");
  tag(f.inconsistent, "inconsistent");
  return out.empty() ? "(none)" : out;
}

MultiRelation split(const NeutroRelation& r) {
  MultiRelation out(r.scheme());
  for (const auto& [t, p] : r.rows()) {
    if (!sum_exceeds_one(p)) {
      out.add(t, p);
    } else {
      out.add(t, ConfidencePair(p.belief, 1.0 - p.belief));
      out.add(t, ConfidencePair(1.0 - p.doubt, p.doubt));
    }
  }
  return out;
}

NeutroRelation combine(const MultiRelation& r) {
  NeutroRelation out(r.scheme());
  for (const auto& [t, ps] : r.rows()) {
    double maxb = 0, maxd = 0;
    for (const auto& p : ps) {
      maxb = std::max(maxb, p.belief);
      maxd = std::max(maxd, p.doubt);
    }
    out.set(t, ConfidencePair(maxb, maxd));
  }
  return out;
}

FuzzyRelation to_fuzzy(const NeutroRelation& r) {
  FuzzyRelation out(r.scheme());
  for (const auto& [t, p] : r.rows()) out.grades[tuple_rank(r.scheme(), t)] = p.belief;
  return out;
}

} // namespace inse::nrdm
