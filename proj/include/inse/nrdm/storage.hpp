#pragma once

#include "inse/nrdm/calc.hpp"

#include <iosfwd>

namespace inse::nrdm {

// Domain catalog file: "domain Name: m1, m2, ..." lines, comments with '#'.
DomainCatalog parse_domains(std::istream& in);
DomainCatalog load_domains(const std::string& path);

// Relation file: a "scheme: A:DomName, B:DomName" header, then CSV rows
// "a,b,belief,doubt". Malformed rows, undeclared members and duplicate
// tuples are errors that carry the row number.
NeutroRelation parse_relation(std::istream& in, const DomainCatalog& catalog);
NeutroRelation load_relation(const std::string& path, const DomainCatalog& catalog);
void save_relation(const NeutroRelation& r, const std::string& path);
std::string relation_csv(const NeutroRelation& r);

} // namespace inse::nrdm
