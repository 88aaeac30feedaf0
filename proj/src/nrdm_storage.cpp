#include "inse/nrdm/storage.hpp"

#include <fstream>
#include <sstream>

namespace inse::nrdm {

namespace {

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  return s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

} // namespace

DomainCatalog parse_domains(std::istream& in) {
  DomainCatalog catalog;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("domain", 0) != 0)
      throw error("line " + std::to_string(lineno) + ": expected 'domain Name: members'");
    std::size_t colon = t.find(':');
    if (colon == std::string::npos)
      throw error("line " + std::to_string(lineno) + ": missing ':' in domain declaration");
    std::string name = trim(t.substr(6, colon - 6));
    if (name.empty()) throw error("line " + std::to_string(lineno) + ": empty domain name");
    auto d = std::make_shared<Domain>();
    d->name = name;
    for (const auto& m : split_csv(t.substr(colon + 1))) {
      if (m.empty()) throw error("line " + std::to_string(lineno) + ": empty domain member");
      if (d->index_of(m) >= 0)
        throw error("line " + std::to_string(lineno) + ": duplicate member '" + m + "'");
      d->members.push_back(m);
    }
    if (d->members.empty())
      throw error("line " + std::to_string(lineno) + ": domain '" + name + "' has no members");
    if (catalog.domains.count(name))
      throw error("line " + std::to_string(lineno) + ": duplicate domain '" + name + "'");
    catalog.domains[name] = std::move(d);
  }
  return catalog;
}

DomainCatalog load_domains(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return parse_domains(in);
}

NeutroRelation parse_relation(std::istream& in, const DomainCatalog& catalog) {
  std::string line;
  int lineno = 0;
  Scheme scheme;
  bool have_scheme = false;
  NeutroRelation rel;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!have_scheme) {
      if (t.rfind("scheme:", 0) != 0)
        throw error("line " + std::to_string(lineno) + ": expected a 'scheme:' header");
      std::vector<Attribute> attrs;
      for (const auto& part : split_csv(t.substr(7))) {
        std::size_t colon = part.find(':');
        if (colon == std::string::npos)
          throw error("line " + std::to_string(lineno) + ": expected 'Attr:Domain' in scheme");
        std::string attr = trim(part.substr(0, colon));
        std::string dom = trim(part.substr(colon + 1));
        auto it = catalog.domains.find(dom);
        if (it == catalog.domains.end())
          throw error("line " + std::to_string(lineno) + ": undeclared domain '" + dom + "'");
        attrs.push_back({attr, it->second});
      }
      scheme = Scheme(std::move(attrs));
      rel = NeutroRelation(scheme);
      have_scheme = true;
      continue;
    }
    std::vector<std::string> fields = split_csv(t);
    if (fields.size() != scheme.arity() + 2)
      throw error("line " + std::to_string(lineno) + ": expected " +
                  std::to_string(scheme.arity()) + " members plus belief,doubt");
    std::vector<std::string> members(fields.begin(), fields.end() - 2);
    Tuple tup;
    try {
      tup = parse_tuple(scheme, members);
    } catch (const error& e) {
      throw error("line " + std::to_string(lineno) + ": " + e.what());
    }
    double belief, doubt;
    try {
      std::size_t c1 = 0, c2 = 0;
      belief = std::stod(fields[fields.size() - 2], &c1);
      doubt = std::stod(fields[fields.size() - 1], &c2);
      if (c1 != fields[fields.size() - 2].size() || c2 != fields[fields.size() - 1].size())
        throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw error("line " + std::to_string(lineno) + ": malformed belief/doubt value");
    }
    ConfidencePair p;
    try {
      p = ConfidencePair(belief, doubt);
    } catch (const error& e) {
      throw error("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (rel.rows().count(tup))
      throw error("line " + std::to_string(lineno) + ": duplicate tuple " +
                  tuple_text(scheme, tup));
    rel.set(tup, p);
  }
  if (!have_scheme) throw error("relation file has no scheme header");
  return rel;
}

NeutroRelation load_relation(const std::string& path, const DomainCatalog& catalog) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  try {
    return parse_relation(in, catalog);
  } catch (const error& e) {
    throw error(path + ": " + e.what());
  }
}

std::string relation_csv(const NeutroRelation& r) {
  std::string out = "scheme: ";
  for (std::size_t k = 0; k < r.scheme().attrs.size(); ++k) {
    if (k) out += ", ";
    out += r.scheme().attrs[k].name + ":" + r.scheme().attrs[k].domain->name;
  }
  out += "\n";
  for (const auto& [t, p] : r.rows()) {
    for (std::size_t k = 0; k < t.size(); ++k)
      out += r.scheme().attrs[k].domain->members[static_cast<std::size_t>(t[k])] + ",";
    out += fmt_grade(p.belief) + "," + fmt_grade(p.doubt) + "\n";
  }
  return out;
}

void save_relation(const NeutroRelation& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write '" + path + "'");
  out << relation_csv(r);
  if (!out) throw error("failed while writing '" + path + "'");
}

} // namespace inse::nrdm
