#ifndef INVGEN_EXPR_HPP
#define INVGEN_EXPR_HPP

#include <string>

#include "invgen/structured.hpp"

namespace invgen {

/// Group-expression grammar (CLI-facing):
///   expr := "C" int | "S" int | "A" int | "D" int (dihedral of order 2n)
///         | "sdc(" n "," m "," k ")"        C_n x| C_m, generator acts x -> x^k
///         | "x(" expr {"," expr} ")"        direct product
///         | "wr(" prime "," int "," expr ")"  regular wreath C_q^m wr G
///         | "geq(" int ")"                  the supersoluble lower-bound family
///         | "tower(" int "," prime "," int ")"
///         | "perm[" cycles {";" cycles} "]" explicit generators, 1-based cycles
/// Parse errors carry the byte offset and the expected tokens.
StructuredGroupPtr parse_group_expr(const std::string &src,
                                    uint64_t order_cap = PermGroup::kDefaultOrderCap);

} // namespace invgen

#endif
