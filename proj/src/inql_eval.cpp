#include "inse/inql/eval.hpp"

#include <algorithm>
#include <set>

namespace inse::inql {

using nrdm::DomainPtr;
using nrdm::Scheme;
using nrdm::Tuple;

namespace {

struct ProductAttr {
  std::string rel;
  std::string name;
  DomainPtr domain;
};

struct ProductScheme {
  std::vector<ProductAttr> attrs;
  // Factor k covers attrs [ranges[k].first, ranges[k].second).
  std::vector<const NeutroRelation*> factors;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;

  bool ambiguous(const std::string& name) const {
    int hits = 0;
    for (const auto& a : attrs) hits += a.name == name;
    return hits > 1;
  }

  int find(const Operand& o) const {
    int found = -1;
    for (std::size_t k = 0; k < attrs.size(); ++k) {
      const auto& a = attrs[k];
      if (o.kind == Operand::Kind::Qualified) {
        if (a.rel == o.qualifier && a.name == o.text) {
          if (found >= 0) throw error("ambiguous attribute reference '" + o.qualifier + "." +
                                      o.text + "'");
          found = static_cast<int>(k);
        }
      } else if (a.name == o.text) {
        if (found >= 0) throw error("ambiguous attribute reference '" + o.text + "'");
        found = static_cast<int>(k);
      }
    }
    return found;
  }
};

} // namespace

// One candidate row of a product, visible to conditions as a resolution scope.
class RowScope {
public:
  RowScope(const ProductScheme* scheme, const Tuple* row) : scheme_(scheme), row_(row) {}
  const ProductScheme& scheme() const { return *scheme_; }
  const Tuple& row() const { return *row_; }

private:
  const ProductScheme* scheme_;
  const Tuple* row_;
};

namespace {

ProductScheme build_product(const std::vector<std::string>& froms, const Database& db) {
  ProductScheme p;
  for (const auto& name : froms) {
    auto it = db.relations.find(name);
    if (it == db.relations.end()) throw error("unknown relation '" + name + "'");
    std::size_t begin = p.attrs.size();
    for (const auto& a : it->second.scheme().attrs) p.attrs.push_back({name, a.name, a.domain});
    p.factors.push_back(&it->second);
    p.ranges.push_back({begin, p.attrs.size()});
  }
  return p;
}

// Resolves an operand to a concrete value string, walking scopes innermost
// first; bare identifiers that match no attribute are domain constants.
std::string resolve_value(const Operand& o, const std::vector<const RowScope*>& scopes) {
  if (o.kind == Operand::Kind::Number || o.kind == Operand::Kind::String) return o.text;
  for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
    int idx = (*it)->scheme().find(o);
    if (idx >= 0) {
      const auto& attr = (*it)->scheme().attrs[static_cast<std::size_t>(idx)];
      return attr.domain->members[static_cast<std::size_t>(
          (*it)->row()[static_cast<std::size_t>(idx)])];
    }
  }
  if (o.kind == Operand::Kind::Qualified)
    throw error("unknown attribute reference '" + o.qualifier + "." + o.text + "'");
  return o.text;  // bare identifier used as a constant
}

double adjusted_doubt(const ConfidencePair& p) {
  return nrdm::sum_exceeds_one(p) ? 1.0 - p.belief : p.doubt;
}

NeutroRelation eval_query_impl(const Query& q, const Database& db, const SessionConfig& cfg,
                               const std::vector<const RowScope*>& outer, EvalTrace* trace);

NeutroRelation materialize_target(const SubqueryRef& ref, const Database& db,
                                  const SessionConfig& cfg,
                                  const std::vector<const RowScope*>& scopes) {
  if (!ref.query) {
    auto it = db.relations.find(ref.relname);
    if (it == db.relations.end()) throw error("unknown relation '" + ref.relname + "'");
    return it->second;
  }
  return eval_query_impl(*ref.query, db, cfg, scopes, nullptr);
}

// Rows a condition aggregates over: the stored support (active range) or the
// whole declared tuple space.
std::vector<std::pair<Tuple, ConfidencePair>> condition_rows(const NeutroRelation& r,
                                                             const SessionConfig& cfg) {
  std::vector<std::pair<Tuple, ConfidencePair>> out;
  if (cfg.range == QuantifierRange::active) {
    for (const auto& [t, p] : r.rows()) out.emplace_back(t, p);
    return out;
  }
  const std::size_t n = r.scheme().tuple_count();
  if (n > cfg.product_guard) throw error("tuple space too large for full-range evaluation");
  for (std::size_t rank = 0; rank < n; ++rank) {
    Tuple t = nrdm::tuple_at(r.scheme(), rank);
    out.emplace_back(t, r.at(t));
  }
  return out;
}

ConfidencePair eval_cond(const CondPtr& c, const std::vector<const RowScope*>& scopes,
                         const Database& db, const SessionConfig& cfg) {
  switch (c->kind) {
    case Cond::Kind::Not: return nrdm::cp_not(eval_cond(c->lhs, scopes, db, cfg));
    case Cond::Kind::And:
      return nrdm::cp_and(eval_cond(c->lhs, scopes, db, cfg), eval_cond(c->rhs, scopes, db, cfg));
    case Cond::Kind::Or:
      return nrdm::cp_or(eval_cond(c->lhs, scopes, db, cfg), eval_cond(c->rhs, scopes, db, cfg));
    case Cond::Kind::Cmp: {
      bool sat = nrdm::compare_values(c->op, resolve_value(c->left, scopes),
                                      resolve_value(c->right, scopes));
      return sat ? ConfidencePair(1.0, 0.0) : ConfidencePair(0.0, 1.0);
    }
    case Cond::Kind::Exists: {
      NeutroRelation r = materialize_target(c->target, db, cfg, scopes);
      double alpha = 0.0, beta = 1.0;
      for (const auto& [t, p] : condition_rows(r, cfg)) {
        alpha = std::max(alpha, p.belief);
        beta = std::min(beta, adjusted_doubt(p));
      }
      return {alpha, beta};
    }
    case Cond::Kind::In: {
      NeutroRelation r = materialize_target(c->target, db, cfg, scopes);
      if (c->tuple.size() != r.scheme().arity())
        throw error("tuple arity does not match the 'in' target");
      std::vector<std::string> values;
      values.reserve(c->tuple.size());
      for (const auto& o : c->tuple) values.push_back(resolve_value(o, scopes));
      Tuple t;
      try {
        t = nrdm::parse_tuple(r.scheme(), values);
      } catch (const error& e) {
        throw error(std::string("'in' condition: ") + e.what());
      }
      return r.at(t);
    }
    case Cond::Kind::AnyAll: {
      NeutroRelation r = materialize_target(c->target, db, cfg, scopes);
      if (r.scheme().arity() != 1)
        throw error("'any'/'all' need a single-attribute subquery result");
      const std::string v = resolve_value(c->left, scopes);
      if (c->quantifier_any) {
        // Belief from the best satisfying member, doubt from the least
        // doubted satisfying member; <0,1> when none satisfies.
        double alpha = 0.0, beta = 1.0;
        bool any = false;
        for (const auto& [t, p] : condition_rows(r, cfg)) {
          const std::string k = r.scheme().attrs[0].domain->members[static_cast<std::size_t>(t[0])];
          if (!nrdm::compare_values(c->op, v, k)) continue;
          any = true;
          alpha = std::max(alpha, p.belief);
          beta = std::min(beta, adjusted_doubt(p));
        }
        return any ? ConfidencePair(alpha, beta) : ConfidencePair(0.0, 1.0);
      }
      // all: violating members argue against; <1,0> when none violates.
      double alpha = 1.0, beta = 0.0;
      bool violated = false;
      for (const auto& [t, p] : condition_rows(r, cfg)) {
        const std::string k = r.scheme().attrs[0].domain->members[static_cast<std::size_t>(t[0])];
        if (nrdm::compare_values(c->op, v, k)) continue;
        violated = true;
        alpha = std::min(alpha, adjusted_doubt(p));
        beta = std::max(beta, p.belief);
      }
      return violated ? ConfidencePair(alpha, beta) : ConfidencePair(1.0, 0.0);
    }
  }
  throw error("malformed condition");
}

std::string pair_text(const ConfidencePair& p) {
  return "<" + fmt_grade(p.belief) + "," + fmt_grade(p.doubt) + ">";
}

std::string product_tuple_text(const ProductScheme& p, const Tuple& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += p.attrs[k].domain->members[static_cast<std::size_t>(t[k])];
  }
  return out + ")";
}

NeutroRelation eval_single_select(const SelectQuery& q, const Database& db,
                                  const SessionConfig& cfg,
                                  const std::vector<const RowScope*>& outer, EvalTrace* trace) {
  ProductScheme prod = build_product(q.froms, db);

  // Candidate rows: cross product of stored supports (active) or the whole
  // declared tuple space (full), with the factors' pairs meet-combined.
  std::vector<std::pair<Tuple, ConfidencePair>> candidates;
  if (cfg.range == QuantifierRange::active) {
    std::vector<std::vector<std::pair<Tuple, ConfidencePair>>> per_factor;
    std::size_t total = 1;
    for (const auto* rel : prod.factors) {
      std::vector<std::pair<Tuple, ConfidencePair>> rows(rel->rows().begin(), rel->rows().end());
      total *= rows.size();
      if (total > cfg.product_guard) throw error("product of stored supports is too large");
      per_factor.push_back(std::move(rows));
    }
    if (total > 0) {
      std::vector<std::size_t> counter(per_factor.size(), 0);
      while (true) {
        Tuple t;
        ConfidencePair p(1.0, 0.0);
        for (std::size_t f = 0; f < per_factor.size(); ++f) {
          const auto& [ft, fp] = per_factor[f][counter[f]];
          t.insert(t.end(), ft.begin(), ft.end());
          p = ConfidencePair(std::min(p.belief, fp.belief), std::max(p.doubt, fp.doubt));
        }
        candidates.emplace_back(std::move(t), p);
        std::size_t f = 0;
        while (f < per_factor.size() && ++counter[f] == per_factor[f].size()) {
          counter[f] = 0;
          ++f;
        }
        if (f == per_factor.size()) break;
      }
    }
  } else {
    std::size_t total = 1;
    for (const auto& a : prod.attrs) {
      total *= a.domain->members.size();
      if (total > cfg.product_guard) throw error("declared tuple space is too large");
    }
    Tuple t(prod.attrs.size(), 0);
    while (true) {
      ConfidencePair p(1.0, 0.0);
      for (std::size_t f = 0; f < prod.factors.size(); ++f) {
        Tuple sub(t.begin() + static_cast<long>(prod.ranges[f].first),
                  t.begin() + static_cast<long>(prod.ranges[f].second));
        ConfidencePair fp = prod.factors[f]->at(sub);
        p = ConfidencePair(std::min(p.belief, fp.belief), std::max(p.doubt, fp.doubt));
      }
      candidates.emplace_back(t, p);
      std::size_t k = 0;
      while (k < t.size() &&
             static_cast<std::size_t>(++t[k]) == prod.attrs[k].domain->members.size()) {
        t[k] = 0;
        ++k;
      }
      if (k == t.size()) break;
    }
  }

  // Infinite-valued selection: per candidate <min(p+, t_C), max(p-, f_C)>.
  std::vector<std::pair<Tuple, ConfidencePair>> selected;
  selected.reserve(candidates.size());
  std::string sigma_table;
  for (const auto& [t, p] : candidates) {
    RowScope scope(&prod, &t);
    std::vector<const RowScope*> scopes = outer;
    scopes.push_back(&scope);
    ConfidencePair cval = eval_cond(q.where, scopes, db, cfg);
    ConfidencePair sel(std::min(p.belief, cval.belief), std::max(p.doubt, cval.doubt));
    if (trace && cfg.explain)
      sigma_table += "  " + product_tuple_text(prod, t) + " " + pair_text(sel) + "\n";
    selected.emplace_back(t, sel);
  }
  if (trace && cfg.explain) trace->sections.push_back("sigma table:\n" + sigma_table);

  // Projection onto the select list: group by the projected tuple, belief by
  // max and doubt by min over each group.
  std::vector<int> kept;
  std::vector<nrdm::Attribute> out_attrs;
  if (q.star) {
    for (std::size_t k = 0; k < prod.attrs.size(); ++k) {
      kept.push_back(static_cast<int>(k));
      const auto& a = prod.attrs[k];
      out_attrs.push_back({prod.ambiguous(a.name) ? a.rel + "." + a.name : a.name, a.domain});
    }
  } else {
    for (const auto& item : q.items) {
      int idx = prod.find(item.attr);
      if (idx < 0)
        throw error("unknown attribute '" + item.attr.text + "' in the select list");
      kept.push_back(idx);
      const auto& a = prod.attrs[static_cast<std::size_t>(idx)];
      out_attrs.push_back({item.attr.kind == Operand::Kind::Qualified
                               ? item.attr.qualifier + "." + item.attr.text
                               : item.attr.text,
                           a.domain});
    }
  }
  NeutroRelation result{Scheme(out_attrs)};
  std::map<Tuple, ConfidencePair> groups;
  for (const auto& [t, p] : selected) {
    Tuple key(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k)
      key[k] = t[static_cast<std::size_t>(kept[k])];
    auto it = groups.find(key);
    if (it == groups.end())
      groups[key] = p;
    else
      it->second = ConfidencePair(std::max(it->second.belief, p.belief),
                                  std::min(it->second.doubt, p.doubt));
  }
  std::string pi_table;
  for (const auto& [t, p] : groups) {
    result.set(t, p);
    if (trace && cfg.explain)
      pi_table += "  " + nrdm::tuple_text(result.scheme(), t) + " " + pair_text(p) + "\n";
  }
  if (trace && cfg.explain) trace->sections.push_back("pi table:\n" + pi_table);
  return result;
}

NeutroRelation eval_query_impl(const Query& q, const Database& db, const SessionConfig& cfg,
                               const std::vector<const RowScope*>& outer, EvalTrace* trace) {
  if (q.selects.empty()) throw error("empty query");
  NeutroRelation acc = eval_single_select(*q.selects[0], db, cfg, outer, trace);
  for (std::size_t k = 1; k < q.selects.size(); ++k) {
    NeutroRelation next = eval_single_select(*q.selects[k], db, cfg, outer, trace);
    if (!acc.scheme().compatible_with(next.scheme()))
      throw error("union arms produce different schemes");
    NeutroRelation merged{acc.scheme()};
    std::set<Tuple> support;
    for (const auto& [t, p] : acc.rows()) support.insert(t);
    for (const auto& [t, p] : next.rows()) support.insert(t);
    for (const auto& t : support) {
      ConfidencePair a = acc.at(t), b = next.at(t);
      merged.set(t, ConfidencePair(std::max(a.belief, b.belief), std::min(a.doubt, b.doubt)));
    }
    acc = std::move(merged);
  }
  return acc;
}

} // namespace

NeutroRelation eval_query(const Query& q, const Database& db, const SessionConfig& cfg,
                          EvalTrace* trace) {
  return eval_query_impl(q, db, cfg, {}, trace);
}

ConfidencePair eval_condition(const CondPtr& c, const std::vector<const RowScope*>& scopes,
                              const Database& db, const SessionConfig& cfg) {
  return eval_cond(c, scopes, db, cfg);
}

ConfidencePair eval_condition_on_row(const CondPtr& c, const std::string& relname,
                                     const nrdm::Tuple& row, const Database& db,
                                     const SessionConfig& cfg) {
  auto it = db.relations.find(relname);
  if (it == db.relations.end()) throw error("unknown relation '" + relname + "'");
  ProductScheme prod = build_product({relname}, db);
  RowScope scope(&prod, &row);
  return eval_cond(c, {&scope}, db, cfg);
}

} // namespace inse::inql
