#include "inse/ins_set.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace inse {

std::string fmt_grade(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_string(const UnitInterval& a) {
  return "[" + fmt_grade(a.lo) + "," + fmt_grade(a.hi) + "]";
}

namespace {

void skip_ws(const std::string& s, std::size_t& p) {
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

double parse_number(const std::string& s, std::size_t& p) {
  skip_ws(s, p);
  std::size_t consumed = 0;
  double v;
  try {
    v = std::stod(s.substr(p), &consumed);
  } catch (const std::exception&) {
    throw error("expected a number in '" + s + "' at offset " + std::to_string(p));
  }
  p += consumed;
  return v;
}

void expect_char(const std::string& s, std::size_t& p, char c) {
  skip_ws(s, p);
  if (p >= s.size() || s[p] != c)
    throw error(std::string("expected '") + c + "' in '" + s + "'");
  ++p;
}

UnitInterval parse_interval_at(const std::string& s, std::size_t& p) {
  skip_ws(s, p);
  if (p < s.size() && s[p] == '[') {
    ++p;
    double lo = parse_number(s, p);
    expect_char(s, p, ',');
    double hi = parse_number(s, p);
    expect_char(s, p, ']');
    return UnitInterval(lo, hi);
  }
  double v = parse_number(s, p);
  return UnitInterval::point(v);
}

} // namespace

UnitInterval parse_interval(const std::string& text) {
  std::size_t p = 0;
  UnitInterval iv = parse_interval_at(text, p);
  skip_ws(text, p);
  if (p != text.size()) throw error("trailing input after interval in '" + text + "'");
  return iv;
}

std::string to_string(const InsTriple& a) {
  return "<" + to_string(a.t) + "," + to_string(a.i) + "," + to_string(a.f) + ">";
}

InsTriple parse_triple(const std::string& text) {
  std::size_t p = 0;
  expect_char(text, p, '<');
  UnitInterval t = parse_interval_at(text, p);
  expect_char(text, p, ',');
  UnitInterval i = parse_interval_at(text, p);
  expect_char(text, p, ',');
  UnitInterval f = parse_interval_at(text, p);
  expect_char(text, p, '>');
  skip_ws(text, p);
  if (p != text.size()) throw error("trailing input after triple in '" + text + "'");
  return InsTriple(t, i, f);
}

InsSet::InsSet(std::vector<std::string> universe, std::vector<InsTriple> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
  if (universe_.size() != grades_.size())
    throw error("grade mapping must be total on the universe");
  std::set<std::string> seen;
  for (const auto& e : universe_)
    if (!seen.insert(e).second) throw error("duplicate universe element '" + e + "'");
}

const InsTriple& InsSet::at(const std::string& elem) const {
  auto it = std::find(universe_.begin(), universe_.end(), elem);
  if (it == universe_.end()) throw error("element '" + elem + "' not in universe");
  return grades_[static_cast<std::size_t>(it - universe_.begin())];
}

namespace {

void require_same_universe(const InsSet& a, const InsSet& b) {
  if (!a.same_universe(b)) throw error("universe mismatch between interval neutrosophic sets");
}

template <typename F>
InsSet zip(const InsSet& a, const InsSet& b, F f) {
  require_same_universe(a, b);
  std::vector<InsTriple> out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(f(a.at(k), b.at(k)));
  return InsSet(a.universe(), std::move(out));
}

template <typename F>
InsSet map(const InsSet& a, F f) {
  std::vector<InsTriple> out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(f(a.at(k)));
  return InsSet(a.universe(), std::move(out));
}

} // namespace

bool ins_contains(const InsSet& a, const InsSet& b) {
  require_same_universe(a, b);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!tri_leq(a.at(k), b.at(k))) return false;
  return true;
}

bool ins_equal(const InsSet& a, const InsSet& b) {
  return ins_contains(a, b) && ins_contains(b, a);
}

InsSet ins_complement(const InsSet& a) { return map(a, tri_neg); }
InsSet ins_intersect(const InsSet& a, const InsSet& b) { return zip(a, b, tri_meet); }
InsSet ins_union(const InsSet& a, const InsSet& b) { return zip(a, b, tri_join); }
InsSet ins_difference(const InsSet& a, const InsSet& b) { return zip(a, b, tri_difference); }
InsSet ins_add(const InsSet& a, const InsSet& b) { return zip(a, b, tri_add); }

InsSet ins_cartesian_product(const InsSet& a, const InsSet& b) {
  std::vector<std::string> universe;
  std::vector<InsTriple> grades;
  universe.reserve(a.size() * b.size());
  grades.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      universe.push_back("(" + a.universe()[i] + "," + b.universe()[j] + ")");
      grades.push_back(tri_product(a.at(i), b.at(j)));
    }
  return InsSet(std::move(universe), std::move(grades));
}

InsSet ins_scalar_mul(const InsSet& a, double k) {
  return map(a, [k](const InsTriple& g) { return tri_scale(g, k); });
}

InsSet ins_scalar_div(const InsSet& a, double k) {
  return map(a, [k](const InsTriple& g) { return tri_div(g, k); });
}

InsSet ins_truth_favorite(const InsSet& a) { return map(a, tri_truth_favorite); }
InsSet ins_false_favorite(const InsSet& a) { return map(a, tri_false_favorite); }

bool ins_is_empty(const InsSet& a) {
  const InsTriple bottom = ins_bottom();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.at(k) != bottom) return false;
  return true;
}

InsSet ins_constant(const std::vector<std::string>& universe, const InsTriple& g) {
  return InsSet(universe, std::vector<InsTriple>(universe.size(), g));
}

std::string to_text(const InsSet& a) {
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k)
    out += a.universe()[k] + " : " + to_string(a.at(k)) + "\n";
  return out;
}

InsSet parse_ins_set(std::istream& in) {
  std::vector<std::string> universe;
  std::vector<InsTriple> grades;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw error("line " + std::to_string(lineno) + ": expected 'elem : <triple>'");
    std::string elem = line.substr(0, colon);
    elem.erase(elem.find_last_not_of(" \t") + 1);
    elem.erase(0, elem.find_first_not_of(" \t"));
    if (elem.empty()) throw error("line " + std::to_string(lineno) + ": empty element name");
    try {
      grades.push_back(parse_triple(line.substr(colon + 1)));
    } catch (const error& e) {
      throw error("line " + std::to_string(lineno) + ": " + e.what());
    }
    universe.push_back(std::move(elem));
  }
  return InsSet(std::move(universe), std::move(grades));
}

InsSet load_ins_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return parse_ins_set(in);
}

InsRelation::InsRelation(std::vector<std::string> xs, std::vector<std::string> ys,
                         std::vector<InsTriple> grades)
    : xs_(std::move(xs)), ys_(std::move(ys)), grades_(std::move(grades)) {
  if (grades_.size() != xs_.size() * ys_.size())
    throw error("relation grades must be total on the domain product");
}

namespace {

InsTriple compose_cell(const InsRelation& r, const InsRelation& s, std::size_t x,
                       std::size_t z) {
  const std::size_t ny = r.ys().size();
  UnitInterval t(0.0, 0.0), i(0.0, 0.0), f(1.0, 1.0);
  for (std::size_t y = 0; y < ny; ++y) {
    const InsTriple& a = r.at(x, y);
    const InsTriple& b = s.at(y, z);
    t = iv_max(t, iv_min(a.t, b.t));
    i = iv_max(i, iv_min(a.i, b.i));
    f = iv_min(f, iv_max(a.f, b.f));
  }
  return {t, i, f};
}

} // namespace

InsRelation ins_compose_serial(const InsRelation& r, const InsRelation& s) {
  if (r.ys() != s.xs()) throw error("composition requires a shared middle domain");
  const std::size_t nx = r.xs().size(), nz = s.ys().size();
  std::vector<InsTriple> out(nx * nz);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t z = 0; z < nz; ++z) out[x * nz + z] = compose_cell(r, s, x, z);
  return InsRelation(r.xs(), s.ys(), std::move(out));
}

InsRelation ins_compose(const InsRelation& r, const InsRelation& s, exec_policy policy) {
  if (policy == exec_policy::serial) return ins_compose_serial(r, s);
  if (r.ys() != s.xs()) throw error("composition requires a shared middle domain");
  const std::size_t nx = r.xs().size(), nz = s.ys().size();
  std::vector<InsTriple> out(nx * nz);
  const long long cells = static_cast<long long>(nx * nz);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < cells; ++c) {
    const std::size_t x = static_cast<std::size_t>(c) / nz;
    const std::size_t z = static_cast<std::size_t>(c) % nz;
    out[static_cast<std::size_t>(c)] = compose_cell(r, s, x, z);
  }
  return InsRelation(r.xs(), s.ys(), std::move(out));
}

SampledInsSet::SampledInsSet(double x0_, double dx_, std::vector<InsTriple> g)
    : x0(x0_), dx(dx_), grades(std::move(g)) {
  if (grades.size() < 2) throw error("sampled set needs at least two grid points");
  if (!(dx > 0.0)) throw error("sampled set needs positive grid spacing");
}

SampledInsSet sampled_intersect(const SampledInsSet& a, const SampledInsSet& b) {
  if (a.size() != b.size() || a.x0 != b.x0 || a.dx != b.dx)
    throw error("sampled sets must share one grid");
  std::vector<InsTriple> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = tri_meet(a.grades[k], b.grades[k]);
  return SampledInsSet(a.x0, a.dx, std::move(out));
}

namespace {

// The six convexity inequalities at a combination node m strictly between i, j.
bool convex_at(const InsTriple& gi, const InsTriple& gj, const InsTriple& gm, bool strict) {
  auto ge = [strict](double lhs, double rhs) { return strict ? lhs > rhs : lhs >= rhs; };
  auto le = [strict](double lhs, double rhs) { return strict ? lhs < rhs : lhs <= rhs; };
  return ge(gm.t.lo, std::min(gi.t.lo, gj.t.lo)) && ge(gm.t.hi, std::min(gi.t.hi, gj.t.hi)) &&
         le(gm.i.lo, std::max(gi.i.lo, gj.i.lo)) && le(gm.i.hi, std::max(gi.i.hi, gj.i.hi)) &&
         le(gm.f.lo, std::max(gi.f.lo, gj.f.lo)) && le(gm.f.hi, std::max(gi.f.hi, gj.f.hi));
}

} // namespace

bool ins_is_convex(const SampledInsSet& a, bool strict) {
  const std::size_t n = a.size();
  // lambda in {0,1} holds trivially, so only interior nodes are checked.
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = i + 1; m < j; ++m)
        if (!convex_at(a.grades[i], a.grades[j], a.grades[m], strict)) return false;
  return true;
}

} // namespace inse
