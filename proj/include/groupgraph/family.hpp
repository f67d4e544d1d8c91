#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "groupgraph/group.hpp"

namespace groupgraph {

inline constexpr std::size_t kDefaultOrderCap = 200;

// Reads GROUPGRAPH_ORDER_CAP, falling back to kDefaultOrderCap.
std::size_t order_cap_from_env();

struct FamilySpec;

namespace family {
struct Cyclic { std::size_t n; };
struct Dihedral { std::size_t n; };   // order 2n
struct Dicyclic { std::size_t n; };   // order 4n
struct Symmetric { std::size_t n; };  // order n!
struct ElementaryAbelian { std::size_t p; std::size_t k; };
struct DirectProduct { std::vector<FamilySpec> factors; };
struct FromFile { std::string path; };
}  // namespace family

struct FamilySpec {
  using Variant =
      std::variant<family::Cyclic, family::Dihedral, family::Dicyclic,
                   family::Symmetric, family::ElementaryAbelian,
                   family::DirectProduct, family::FromFile>;
  Variant variant;

  static FamilySpec cyclic(std::size_t n) { return {family::Cyclic{n}}; }
  static FamilySpec dihedral(std::size_t n) { return {family::Dihedral{n}}; }
  static FamilySpec dicyclic(std::size_t n) { return {family::Dicyclic{n}}; }
  static FamilySpec symmetric(std::size_t n) { return {family::Symmetric{n}}; }
  static FamilySpec elementary_abelian(std::size_t p, std::size_t k) {
    return {family::ElementaryAbelian{p, k}};
  }
  static FamilySpec product(std::vector<FamilySpec> factors) {
    return {family::DirectProduct{std::move(factors)}};
  }
  static FamilySpec from_file(std::string path) {
    return {family::FromFile{std::move(path)}};
  }
};

// Human-readable label, e.g. "Dihedral(3)" or "Product(Cyclic(3),Cyclic(5))".
std::string label(const FamilySpec& spec);

// Parses the command-line grammar: cyclic:6, dihedral:5, dicyclic:2,
// symmetric:4, ea:2,3, product:cyclic:3*cyclic:5, file:PATH.
FamilySpec parse_family_spec(std::string_view text);

// Canonical command-line form; parse_family_spec(to_spec_string(s)) == s.
std::string to_spec_string(const FamilySpec& spec);

FiniteGroup build_family(const FamilySpec& spec,
                         std::size_t order_cap = kDefaultOrderCap);

// Cayley-table text format: a line holding n, then n rows of n integers.
// '#' starts a comment running to end of line.
CayleyTable parse_cayley_table(std::string_view text);
CayleyTable read_cayley_table_file(const std::string& path);
std::string format_cayley_table(const FiniteGroup& g);

}  // namespace groupgraph
