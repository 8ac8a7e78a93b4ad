#pragma once

#include "axioms/axioms.hpp"
#include "core/format.hpp"

#include <string>
#include <vector>

namespace hompois {

struct CatalogEntry {
  std::string id;
  AlgebraClass cls;
  AlgebraDocument document;
  std::string description;
  // Known defects of the stored data against its class; empty when none.
  std::string erratum;
  // True for fixtures that are expected to fail their class check.
  bool negative = false;
};

const std::vector<CatalogEntry>& catalog_list();
// Throws Error(Argument) on an unknown id.
const CatalogEntry& catalog_get(const std::string& id);
AlgebraPresentation catalog_instantiate(const std::string& id, const ParameterBinding& binding = {});

}  // namespace hompois
