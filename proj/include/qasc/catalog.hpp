#pragma once

#include <string>
#include <vector>

#include "qasc/group.hpp"

namespace qasc {

struct CatalogEntry {
  std::string name;
  GroupPtr group;
};

/// Every group of order at most 16 up to isomorphism, followed by a selection
/// of groups of orders 17 to 24. Entries are sorted by order, then by the
/// listing order within an order.
const std::vector<CatalogEntry>& group_catalog();

/// Catalog entries with order <= max_order.
std::vector<CatalogEntry> catalog_up_to(int max_order);

/// Looks up a catalog entry by name; throws InputError if unknown.
GroupPtr catalog_group(const std::string& name);

}  // namespace qasc
