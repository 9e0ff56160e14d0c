#include "invgen/catalog.hpp"

#include <mutex>

#include "invgen/expr.hpp"

namespace invgen {

const std::vector<CatalogEntry> &verification_catalog() {
  static std::vector<CatalogEntry> catalog;
  static std::once_flag once;
  std::call_once(once, [] {
    std::vector<std::string> exprs;
    for (int n = 1; n <= 12; ++n) exprs.push_back("C" + std::to_string(n));
    exprs.push_back("x(C2,C2)");
    exprs.push_back("x(C3,C3)");
    exprs.push_back("x(C2,C2,C2)");
    exprs.push_back("S3");
    exprs.push_back("D4");
    exprs.push_back("D5");
    exprs.push_back("D6");
    exprs.push_back("perm[(1,2,3,4)(5,8,7,6);(1,5,3,7)(2,6,4,8)]"); // Q8
    exprs.push_back("A4");
    exprs.push_back("sdc(7,3,2)");
    exprs.push_back("sdc(5,4,2)");
    exprs.push_back("geq(2)");
    for (const auto &e : exprs) {
      CatalogEntry entry;
      entry.expr = e == "perm[(1,2,3,4)(5,8,7,6);(1,5,3,7)(2,6,4,8)]" ? "Q8" : e;
      entry.structured = parse_group_expr(e);
      entry.group = entry.structured->materialize().group;
      catalog.push_back(std::move(entry));
    }
  });
  return catalog;
}

} // namespace invgen
