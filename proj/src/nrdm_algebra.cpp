#include "inse/nrdm/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace inse::nrdm {

GuardPtr guard_cmp(CmpOp op, GuardOperand l, GuardOperand r) {
  GuardExpr g{GuardExpr::Kind::Cmp};
  g.op = op;
  g.lhs_op = std::move(l);
  g.rhs_op = std::move(r);
  return std::make_shared<GuardExpr>(std::move(g));
}
GuardPtr guard_not(GuardPtr inner) {
  GuardExpr g{GuardExpr::Kind::Not};
  g.lhs = std::move(inner);
  return std::make_shared<GuardExpr>(std::move(g));
}
GuardPtr guard_and(GuardPtr a, GuardPtr b) {
  GuardExpr g{GuardExpr::Kind::And};
  g.lhs = std::move(a);
  g.rhs = std::move(b);
  return std::make_shared<GuardExpr>(std::move(g));
}
GuardPtr guard_or(GuardPtr a, GuardPtr b) {
  GuardExpr g{GuardExpr::Kind::Or};
  g.lhs = std::move(a);
  g.rhs = std::move(b);
  return std::make_shared<GuardExpr>(std::move(g));
}
GuardPtr guard_true() {
  return guard_cmp(CmpOp::Eq, GuardOperand::constant("1"), GuardOperand::constant("1"));
}

bool compare_values(CmpOp op, const std::string& a, const std::string& b) {
  // Numeric comparison when both sides parse as numbers, else lexicographic.
  auto as_number = [](const std::string& s, double& out) {
    if (s.empty()) return false;
    std::size_t consumed = 0;
    try {
      out = std::stod(s, &consumed);
    } catch (const std::exception&) {
      return false;
    }
    return consumed == s.size();
  };
  double x, y;
  int cmp;
  if (as_number(a, x) && as_number(b, y))
    cmp = x < y ? -1 : (x > y ? 1 : 0);
  else
    cmp = a.compare(b) < 0 ? -1 : (a.compare(b) > 0 ? 1 : 0);
  switch (op) {
    case CmpOp::Eq: return cmp == 0;
    case CmpOp::Ne: return cmp != 0;
    case CmpOp::Lt: return cmp < 0;
    case CmpOp::Le: return cmp <= 0;
    case CmpOp::Gt: return cmp > 0;
    case CmpOp::Ge: return cmp >= 0;
  }
  throw error("unknown comparator");
}

namespace {

std::string operand_value(const GuardOperand& o, const Scheme& s, const Tuple& t) {
  if (!o.is_attr) return o.text;
  int idx = s.index_of(o.text);
  if (idx < 0) throw error("guard references unknown attribute '" + o.text + "'");
  return s.attrs[static_cast<std::size_t>(idx)]
      .domain->members[static_cast<std::size_t>(t[static_cast<std::size_t>(idx)])];
}

void check_operand(const GuardOperand& o, const Scheme& s, const GuardOperand& other) {
  if (o.is_attr) {
    int idx = s.index_of(o.text);
    if (idx < 0) throw error("guard references unknown attribute '" + o.text + "'");
    if (!other.is_attr) {
      const auto& dom = s.attrs[static_cast<std::size_t>(idx)].domain;
      double ignored;
      std::size_t consumed = 0;
      bool numeric = false;
      try {
        ignored = std::stod(other.text, &consumed);
        (void)ignored;
        numeric = consumed == other.text.size();
      } catch (const std::exception&) {
      }
      if (!numeric && dom->index_of(other.text) < 0)
        throw error("constant '" + other.text + "' is not a member of domain '" + dom->name +
                    "'");
    }
  }
}

} // namespace

void guard_check(const GuardPtr& g, const Scheme& s) {
  switch (g->kind) {
    case GuardExpr::Kind::Cmp: {
      check_operand(g->lhs_op, s, g->rhs_op);
      check_operand(g->rhs_op, s, g->lhs_op);
      if (g->lhs_op.is_attr && g->rhs_op.is_attr) {
        int li = s.index_of(g->lhs_op.text), ri = s.index_of(g->rhs_op.text);
        if (s.attrs[static_cast<std::size_t>(li)].domain->name !=
            s.attrs[static_cast<std::size_t>(ri)].domain->name)
          throw error("guard compares attributes over different domains");
      }
      return;
    }
    case GuardExpr::Kind::Not: guard_check(g->lhs, s); return;
    case GuardExpr::Kind::And:
    case GuardExpr::Kind::Or:
      guard_check(g->lhs, s);
      guard_check(g->rhs, s);
      return;
  }
}

bool guard_eval(const GuardPtr& g, const Scheme& s, const Tuple& t) {
  switch (g->kind) {
    case GuardExpr::Kind::Cmp:
      return compare_values(g->op, operand_value(g->lhs_op, s, t), operand_value(g->rhs_op, s, t));
    case GuardExpr::Kind::Not: return !guard_eval(g->lhs, s, t);
    case GuardExpr::Kind::And: return guard_eval(g->lhs, s, t) && guard_eval(g->rhs, s, t);
    case GuardExpr::Kind::Or: return guard_eval(g->lhs, s, t) || guard_eval(g->rhs, s, t);
  }
  throw error("malformed guard");
}

namespace {

void require_same_scheme(const Scheme& a, const Scheme& b) {
  if (!a.compatible_with(b)) throw error("scheme mismatch between relations");
}

void require_not_inconsistent(const NeutroRelation& r) {
  for (const auto& [t, p] : r.rows())
    if (sum_exceeds_one(p))
      throw error("operator requires consistent input; split inconsistent relations first");
}

// The set-theoretic operators and the guarded selection act per tuple with
// max/min formulas that coincide with the split/operate/combine protocol on
// arbitrary input, so they accept inconsistent rows directly. Join and
// projection do not commute with the protocol on inconsistent rows and
// insist on split first.
template <typename F>
NeutroRelation zip_set_op(const NeutroRelation& r, const NeutroRelation& s, F f) {
  require_same_scheme(r.scheme(), s.scheme());
  NeutroRelation out(r.scheme());
  std::set<Tuple> support;
  for (const auto& [t, p] : r.rows()) support.insert(t);
  for (const auto& [t, p] : s.rows()) support.insert(t);
  for (const auto& t : support) out.set(t, f(r.at(t), s.at(t)));
  return out;
}

ConfidencePair pair_union(const ConfidencePair& a, const ConfidencePair& b) {
  return {std::max(a.belief, b.belief), std::min(a.doubt, b.doubt)};
}
ConfidencePair pair_intersect(const ConfidencePair& a, const ConfidencePair& b) {
  return {std::min(a.belief, b.belief), std::max(a.doubt, b.doubt)};
}
ConfidencePair pair_difference(const ConfidencePair& a, const ConfidencePair& b) {
  return {std::min(a.belief, b.doubt), std::max(a.doubt, b.belief)};
}

} // namespace

NeutroRelation n_union(const NeutroRelation& r, const NeutroRelation& s) {
  return zip_set_op(r, s, pair_union);
}
NeutroRelation n_intersect(const NeutroRelation& r, const NeutroRelation& s) {
  return zip_set_op(r, s, pair_intersect);
}
NeutroRelation n_difference(const NeutroRelation& r, const NeutroRelation& s) {
  return zip_set_op(r, s, pair_difference);
}

NeutroRelation n_complement(const NeutroRelation& r) {
  NeutroRelation out(r.scheme());
  for (const auto& [t, p] : r.rows()) out.set(t, ConfidencePair(p.doubt, p.belief));
  return out;
}

Scheme join_scheme(const Scheme& a, const Scheme& b) {
  std::vector<Attribute> attrs = a.attrs;
  for (const auto& attr : b.attrs) {
    int idx = a.index_of(attr.name);
    if (idx < 0) {
      attrs.push_back(attr);
    } else if (a.attrs[static_cast<std::size_t>(idx)].domain->name != attr.domain->name) {
      throw error("shared attribute '" + attr.name + "' has conflicting domains");
    }
  }
  return Scheme(std::move(attrs));
}

Scheme project_scheme(const Scheme& s, const std::vector<std::string>& attrs) {
  std::vector<Attribute> out;
  for (const auto& name : attrs) {
    int idx = s.index_of(name);
    if (idx < 0) throw error("projection onto unknown attribute '" + name + "'");
    out.push_back(s.attrs[static_cast<std::size_t>(idx)]);
  }
  return Scheme(std::move(out));
}

namespace {

// Index maps from a joined scheme back into the argument schemes.
std::vector<int> positions_of(const Scheme& big, const Scheme& part) {
  std::vector<int> pos;
  pos.reserve(part.attrs.size());
  for (const auto& a : part.attrs) pos.push_back(big.index_of(a.name));
  return pos;
}

Tuple project_tuple(const Tuple& t, const std::vector<int>& pos) {
  Tuple out(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) out[k] = t[static_cast<std::size_t>(pos[k])];
  return out;
}

// Candidate tuples of a join: every tuple of the merged space whose
// projection onto at least one argument is stored. Enumerated by extending
// each stored row over the other side's private attributes.
std::set<Tuple> join_candidates(const Scheme& joined, const NeutroRelation& r,
                                const NeutroRelation& s) {
  std::set<Tuple> out;
  auto extend = [&](const Scheme& own, const std::map<Tuple, ConfidencePair>& rows) {
    std::vector<int> own_pos = positions_of(joined, own);
    std::vector<std::size_t> free_idx;
    for (std::size_t k = 0; k < joined.attrs.size(); ++k) {
      bool owned = false;
      for (int p : own_pos)
        if (static_cast<std::size_t>(p) == k) owned = true;
      if (!owned) free_idx.push_back(k);
    }
    for (const auto& [t, p] : rows) {
      Tuple base(joined.attrs.size(), 0);
      for (std::size_t k = 0; k < own_pos.size(); ++k)
        base[static_cast<std::size_t>(own_pos[k])] = t[k];
      // Enumerate every assignment of the free attributes.
      std::vector<std::size_t> counter(free_idx.size(), 0);
      while (true) {
        Tuple full = base;
        for (std::size_t k = 0; k < free_idx.size(); ++k)
          full[free_idx[k]] = static_cast<int>(counter[k]);
        out.insert(full);
        std::size_t k = 0;
        while (k < free_idx.size() &&
               ++counter[k] == joined.attrs[free_idx[k]].domain->members.size())
          counter[k++] = 0;
        if (k == free_idx.size()) break;
      }
    }
  };
  extend(r.scheme(), r.rows());
  extend(s.scheme(), s.rows());
  return out;
}

} // namespace

NeutroRelation n_join(const NeutroRelation& r, const NeutroRelation& s) {
  require_not_inconsistent(r);
  require_not_inconsistent(s);
  Scheme joined = join_scheme(r.scheme(), s.scheme());
  std::vector<int> rpos = positions_of(joined, r.scheme());
  std::vector<int> spos = positions_of(joined, s.scheme());
  NeutroRelation out(joined);
  for (const auto& t : join_candidates(joined, r, s)) {
    ConfidencePair a = r.at(project_tuple(t, rpos));
    ConfidencePair b = s.at(project_tuple(t, spos));
    out.set(t, pair_intersect(a, b));
  }
  return out;
}

namespace {

// Enumerates the extensions of t over the dropped attributes and folds the
// visitor over them.
template <typename Visit>
void for_each_extension(const Scheme& s, const std::vector<int>& kept_pos, const Tuple& t,
                        Visit visit) {
  std::vector<std::size_t> free_idx;
  for (std::size_t k = 0; k < s.attrs.size(); ++k) {
    bool kept = false;
    for (int p : kept_pos)
      if (static_cast<std::size_t>(p) == k) kept = true;
    if (!kept) free_idx.push_back(k);
  }
  Tuple full(s.attrs.size(), 0);
  for (std::size_t k = 0; k < kept_pos.size(); ++k)
    full[static_cast<std::size_t>(kept_pos[k])] = t[k];
  std::vector<std::size_t> counter(free_idx.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < free_idx.size(); ++k)
      full[free_idx[k]] = static_cast<int>(counter[k]);
    visit(full);
    std::size_t k = 0;
    while (k < free_idx.size() && ++counter[k] == s.attrs[free_idx[k]].domain->members.size())
      counter[k++] = 0;
    if (k == free_idx.size()) break;
  }
}

} // namespace

NeutroRelation n_project(const NeutroRelation& r, const std::vector<std::string>& attrs,
                         ExtensionRange range) {
  require_not_inconsistent(r);
  Scheme target = project_scheme(r.scheme(), attrs);
  std::vector<int> kept = positions_of(r.scheme(), target);
  NeutroRelation out(target);
  if (range == ExtensionRange::stored) {
    std::map<Tuple, ConfidencePair> acc;
    for (const auto& [t, p] : r.rows()) {
      Tuple key = project_tuple(t, kept);
      auto it = acc.find(key);
      if (it == acc.end())
        acc[key] = p;
      else
        it->second = ConfidencePair(std::max(it->second.belief, p.belief),
                                    std::min(it->second.doubt, p.doubt));
    }
    for (const auto& [t, p] : acc) out.set(t, p);
    return out;
  }
  // Declared range: projected tuples are those with at least one stored
  // extension; absent extensions contribute <0,0>.
  std::set<Tuple> keys;
  for (const auto& [t, p] : r.rows()) keys.insert(project_tuple(t, kept));
  for (const auto& key : keys) {
    double maxb = 0.0, mind = 1.0;
    for_each_extension(r.scheme(), kept, key, [&](const Tuple& u) {
      ConfidencePair p = r.at(u);
      maxb = std::max(maxb, p.belief);
      mind = std::min(mind, p.doubt);
    });
    out.set(key, ConfidencePair(maxb, mind));
  }
  return out;
}

NeutroRelation n_select_guard(const NeutroRelation& r, const GuardPtr& guard) {
  guard_check(guard, r.scheme());
  NeutroRelation out(r.scheme());
  const std::size_t n = r.scheme().tuple_count();
  for (std::size_t rank = 0; rank < n; ++rank) {
    Tuple t = tuple_at(r.scheme(), rank);
    if (guard_eval(guard, r.scheme(), t))
      out.set(t, r.at(t));
    else
      out.set(t, ConfidencePair(0.0, 1.0));
  }
  return out;
}

namespace {

template <typename F>
MultiRelation zip_multi(const MultiRelation& r, const MultiRelation& s, F f) {
  require_same_scheme(r.scheme(), s.scheme());
  MultiRelation out(r.scheme());
  std::set<Tuple> support;
  for (const auto& [t, ps] : r.rows()) support.insert(t);
  for (const auto& [t, ps] : s.rows()) support.insert(t);
  for (const auto& t : support)
    for (const auto& a : r.at(t))
      for (const auto& b : s.at(t)) out.add(t, f(a, b));
  return out;
}

} // namespace

MultiRelation m_union(const MultiRelation& r, const MultiRelation& s) {
  return zip_multi(r, s, pair_union);
}
MultiRelation m_intersect(const MultiRelation& r, const MultiRelation& s) {
  return zip_multi(r, s, pair_intersect);
}
MultiRelation m_difference(const MultiRelation& r, const MultiRelation& s) {
  return zip_multi(r, s, pair_difference);
}

MultiRelation m_complement(const MultiRelation& r) {
  MultiRelation out(r.scheme());
  for (const auto& [t, ps] : r.rows())
    for (const auto& p : ps) out.add(t, ConfidencePair(p.doubt, p.belief));
  return out;
}

MultiRelation m_join(const MultiRelation& r, const MultiRelation& s) {
  Scheme joined = join_scheme(r.scheme(), s.scheme());
  std::vector<int> rpos = positions_of(joined, r.scheme());
  std::vector<int> spos = positions_of(joined, s.scheme());

  std::set<Tuple> candidates;
  {
    // Same candidate rule as the canonical join, driven by stored rows.
    NeutroRelation rc(r.scheme()), sc(s.scheme());
    for (const auto& [t, ps] : r.rows()) rc.set(t, ConfidencePair(1.0, 0.0));
    for (const auto& [t, ps] : s.rows()) sc.set(t, ConfidencePair(1.0, 0.0));
    candidates = join_candidates(joined, rc, sc);
  }
  MultiRelation out(joined);
  for (const auto& t : candidates)
    for (const auto& a : r.at(project_tuple(t, rpos)))
      for (const auto& b : s.at(project_tuple(t, spos))) out.add(t, pair_intersect(a, b));
  return out;
}

NeutroRelation m_project(const MultiRelation& r, const std::vector<std::string>& attrs,
                         ExtensionRange range) {
  // All rows of all extensions collapse into one pair: max of beliefs, min of
  // doubts. Applying combine afterwards is then the identity.
  Scheme target = project_scheme(r.scheme(), attrs);
  std::vector<int> kept = positions_of(r.scheme(), target);
  NeutroRelation out(target);
  std::set<Tuple> keys;
  for (const auto& [t, ps] : r.rows()) keys.insert(project_tuple(t, kept));
  for (const auto& key : keys) {
    double maxb = 0.0, mind = 1.0;
    auto visit_rows = [&](const Tuple& u) {
      for (const auto& p : r.at(u)) {
        maxb = std::max(maxb, p.belief);
        mind = std::min(mind, p.doubt);
      }
    };
    if (range == ExtensionRange::declared) {
      for_each_extension(r.scheme(), kept, key, visit_rows);
    } else {
      for (const auto& [t, ps] : r.rows())
        if (project_tuple(t, kept) == key) visit_rows(t);
    }
    out.set(key, ConfidencePair(maxb, mind));
  }
  return out;
}

MultiRelation m_select_guard(const MultiRelation& r, const GuardPtr& guard) {
  guard_check(guard, r.scheme());
  MultiRelation out(r.scheme());
  const std::size_t n = r.scheme().tuple_count();
  for (std::size_t rank = 0; rank < n; ++rank) {
    Tuple t = tuple_at(r.scheme(), rank);
    if (guard_eval(guard, r.scheme(), t)) {
      auto it = r.rows().find(t);
      if (it != r.rows().end())
        for (const auto& p : it->second) out.add(t, p);
    } else {
      out.add(t, ConfidencePair(0.0, 1.0));
    }
  }
  return out;
}

NeutroRelation with_split_union(const NeutroRelation& r, const NeutroRelation& s) {
  return combine(m_union(split(r), split(s)));
}
NeutroRelation with_split_intersect(const NeutroRelation& r, const NeutroRelation& s) {
  return combine(m_intersect(split(r), split(s)));
}
NeutroRelation with_split_difference(const NeutroRelation& r, const NeutroRelation& s) {
  return combine(m_difference(split(r), split(s)));
}
NeutroRelation with_split_join(const NeutroRelation& r, const NeutroRelation& s) {
  return combine(m_join(split(r), split(s)));
}
NeutroRelation with_split_project(const NeutroRelation& r, const std::vector<std::string>& attrs,
                                  ExtensionRange range) {
  return m_project(split(r), attrs, range);
}

FuzzyRelation f_union(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_scheme(r.scheme, s.scheme);
  FuzzyRelation out(r.scheme);
  for (std::size_t k = 0; k < out.grades.size(); ++k)
    out.grades[k] = std::max(r.grades[k], s.grades[k]);
  return out;
}

FuzzyRelation f_complement(const FuzzyRelation& r) {
  FuzzyRelation out(r.scheme);
  for (std::size_t k = 0; k < out.grades.size(); ++k) out.grades[k] = 1.0 - r.grades[k];
  return out;
}

FuzzyRelation f_intersect(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_scheme(r.scheme, s.scheme);
  FuzzyRelation out(r.scheme);
  for (std::size_t k = 0; k < out.grades.size(); ++k)
    out.grades[k] = std::min(r.grades[k], s.grades[k]);
  return out;
}

FuzzyRelation f_difference(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_scheme(r.scheme, s.scheme);
  FuzzyRelation out(r.scheme);
  for (std::size_t k = 0; k < out.grades.size(); ++k)
    out.grades[k] = std::min(r.grades[k], 1.0 - s.grades[k]);
  return out;
}

FuzzyRelation f_join(const FuzzyRelation& r, const FuzzyRelation& s) {
  Scheme joined = join_scheme(r.scheme, s.scheme);
  std::vector<int> rpos = positions_of(joined, r.scheme);
  std::vector<int> spos = positions_of(joined, s.scheme);
  FuzzyRelation out(joined);
  const std::size_t n = joined.tuple_count();
  for (std::size_t rank = 0; rank < n; ++rank) {
    Tuple t = tuple_at(joined, rank);
    out.grades[rank] = std::min(r.at(project_tuple(t, rpos)), s.at(project_tuple(t, spos)));
  }
  return out;
}

FuzzyRelation f_project(const FuzzyRelation& r, const std::vector<std::string>& attrs) {
  Scheme target = project_scheme(r.scheme, attrs);
  std::vector<int> kept = positions_of(r.scheme, target);
  FuzzyRelation out(target);
  const std::size_t n = target.tuple_count();
  for (std::size_t rank = 0; rank < n; ++rank) {
    Tuple key = tuple_at(target, rank);
    double best = 0.0;
    for_each_extension(r.scheme, kept, key,
                       [&](const Tuple& u) { best = std::max(best, r.at(u)); });
    out.grades[rank] = best;
  }
  return out;
}

FuzzyRelation f_select(const FuzzyRelation& r, const GuardPtr& guard) {
  guard_check(guard, r.scheme);
  FuzzyRelation out(r.scheme);
  const std::size_t n = r.scheme.tuple_count();
  for (std::size_t rank = 0; rank < n; ++rank) {
    Tuple t = tuple_at(r.scheme, rank);
    out.grades[rank] = guard_eval(guard, r.scheme, t) ? r.grades[rank] : 0.0;
  }
  return out;
}

FuzzyRelation fuzzy_apply(const std::string& op, const std::vector<FuzzyRelation>& args,
                          const std::vector<std::string>& attrs, const GuardPtr& guard) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw error("fuzzy operator '" + op + "' expects " + std::to_string(n) + " arguments");
  };
  if (op == "union") { need(2); return f_union(args[0], args[1]); }
  if (op == "complement") { need(1); return f_complement(args[0]); }
  if (op == "intersection") { need(2); return f_intersect(args[0], args[1]); }
  if (op == "difference") { need(2); return f_difference(args[0], args[1]); }
  if (op == "join") { need(2); return f_join(args[0], args[1]); }
  if (op == "project") { need(1); return f_project(args[0], attrs); }
  if (op == "select") {
    need(1);
    if (!guard) throw error("fuzzy select needs a guard");
    return f_select(args[0], guard);
  }
  throw error("unknown fuzzy operator '" + op + "'");
}

} // namespace inse::nrdm
