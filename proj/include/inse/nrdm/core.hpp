#pragma once

#include "inse/interval.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace inse::nrdm {

struct Domain {
  std::string name;
  std::vector<std::string> members;

  int index_of(const std::string& m) const;
};

using DomainPtr = std::shared_ptr<const Domain>;

struct Attribute {
  std::string name;
  DomainPtr domain;
};

// Ordered attribute list with per-attribute finite declared domains.
struct Scheme {
  std::vector<Attribute> attrs;

  Scheme() = default;
  explicit Scheme(std::vector<Attribute> a);
  int index_of(const std::string& attr) const;
  std::size_t arity() const { return attrs.size(); }
  // Number of tuples in the full tuple space over the declared domains.
  std::size_t tuple_count() const;
  bool compatible_with(const Scheme& o) const;  // same names and domain names
};

// A tuple stores one member index per attribute of its scheme.
using Tuple = std::vector<int>;

std::size_t tuple_rank(const Scheme& s, const Tuple& t);
Tuple tuple_at(const Scheme& s, std::size_t rank);
std::string tuple_text(const Scheme& s, const Tuple& t);
Tuple parse_tuple(const Scheme& s, const std::vector<std::string>& members);

// Per-tuple belief/doubt measure. The sum is unconstrained: below 1 is
// incompleteness, above 1 inconsistency.
struct ConfidencePair {
  double belief{0};
  double doubt{0};

  ConfidencePair() = default;
  ConfidencePair(double b, double d);
  bool operator==(const ConfidencePair& o) const { return belief == o.belief && doubt == o.doubt; }
  bool operator!=(const ConfidencePair& o) const { return !(*this == o); }
};

inline bool sum_exceeds_one(const ConfidencePair& p) { return p.belief + p.doubt > 1.0 + 1e-9; }

// Canonical neutrosophic relation: at most one pair per tuple, absent tuples
// read as <0,0> ("no information"). Rows equal to <0,0> are never stored.
class NeutroRelation {
public:
  NeutroRelation() = default;
  explicit NeutroRelation(Scheme s) : scheme_(std::move(s)) {}

  const Scheme& scheme() const { return scheme_; }
  const std::map<Tuple, ConfidencePair>& rows() const { return rows_; }
  ConfidencePair at(const Tuple& t) const;
  void set(const Tuple& t, const ConfidencePair& p);  // drops exact <0,0>
  bool operator==(const NeutroRelation& o) const;

private:
  Scheme scheme_;
  std::map<Tuple, ConfidencePair> rows_;
};

// Multi-row variant produced by split: several pairs may exist per tuple.
class MultiRelation {
public:
  MultiRelation() = default;
  explicit MultiRelation(Scheme s) : scheme_(std::move(s)) {}

  const Scheme& scheme() const { return scheme_; }
  const std::map<Tuple, std::vector<ConfidencePair>>& rows() const { return rows_; }
  void add(const Tuple& t, const ConfidencePair& p);
  // Rows for a tuple; absent tuples read as the single pair <0,0>.
  std::vector<ConfidencePair> at(const Tuple& t) const;

private:
  Scheme scheme_;
  std::map<Tuple, std::vector<ConfidencePair>> rows_;
};

// Total fuzzy relation stored dense over the tuple space, indexed by
// tuple_rank. The reps oracle works on these.
struct FuzzyRelation {
  Scheme scheme;
  std::vector<double> grades;

  FuzzyRelation() = default;
  explicit FuzzyRelation(Scheme s) : scheme(std::move(s)), grades(scheme.tuple_count(), 0.0) {}
  double at(const Tuple& t) const { return grades[tuple_rank(scheme, t)]; }
  bool operator==(const FuzzyRelation& o) const { return grades == o.grades; }
};

struct ClassifyFlags {
  bool consistent{false};
  bool complete{false};
  bool total{false};
  bool pseudo_consistent{false};
  bool inconsistent{false};
};

std::string to_string(const ClassifyFlags& f);

// Flags quantify over stored rows; a relation meant to be total must be
// stored totally.
ClassifyFlags classify(const NeutroRelation& r);
ClassifyFlags classify(const MultiRelation& r);

// Consistent rows pass through; a row with b+d > 1 becomes the two rows
// (b, 1-b) and (1-d, d).
MultiRelation split(const NeutroRelation& r);

// Per-tuple maxima of beliefs and doubts.
NeutroRelation combine(const MultiRelation& r);

// One-one correspondence between total neutrosophic relations and fuzzy
// relations: keep the belief factor.
FuzzyRelation to_fuzzy(const NeutroRelation& r);

} // namespace inse::nrdm
