#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace groupgraph {

using Element = std::uint32_t;

enum class GroupErrorKind {
  NotClosed,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotSquare,
  IndexOutOfRange,
  InvalidParameter,
  OrderCapExceeded,
  ParseError,
  FileError,
};

const char* to_string(GroupErrorKind kind);

class GroupError : public std::runtime_error {
 public:
  GroupError(GroupErrorKind kind, const std::string& what);
  GroupErrorKind kind() const noexcept { return kind_; }
  // Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  GroupErrorKind kind_;
  std::string detail_;
};

using CayleyTable = std::vector<std::vector<Element>>;

// A finite group given by its multiplication table. Element 0 is always the
// identity. Instances are immutable once constructed.
class FiniteGroup {
 public:
  // Validates closure, identity, two-sided inverses and associativity.
  // If the identity is not at index 0 it is swapped into place.
  static FiniteGroup from_cayley_table(const CayleyTable& raw,
                                       std::string label);

  std::size_t order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }

  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element identity() const noexcept { return 0; }

  Element inverse(Element i) const;
  std::uint64_t element_order(Element i) const;
  const std::vector<std::uint64_t>& element_orders() const noexcept {
    return orders_;
  }

  bool commute(Element a, Element b) const {
    return multiply(a, b) == multiply(b, a);
  }

  // Sorted element indices.
  const std::vector<Element>& center() const noexcept { return center_; }
  std::vector<Element> centralizer(Element i) const;

  // Least common multiple of all element orders.
  std::uint64_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept { return center_.size() == order_; }

  CayleyTable table() const;

 private:
  FiniteGroup() = default;
  void check_index(Element i) const;

  std::size_t order_ = 0;
  std::string label_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<Element> center_;
  std::uint64_t exponent_ = 1;
};

struct ClassEquation {
  bool holds = false;
  std::size_t group_order = 0;
  std::size_t center_size = 0;
  // Sizes of the non-central conjugacy classes, in order of their smallest
  // representative.
  std::vector<std::size_t> class_sizes;
  // Sum of |G| / |C_G(x)| over one representative per non-central class.
  std::size_t index_sum = 0;
};

// Partition of the group into conjugacy classes, each sorted, ordered by
// smallest member.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

ClassEquation class_equation(const FiniteGroup& g);

struct GroupProfile {
  std::size_t order = 0;
  bool is_abelian = false;
  std::size_t center_size = 0;
  std::uint64_t exponent = 1;
  bool is_full_exponent = false;
  bool is_p_group = false;
  std::optional<std::uint64_t> prime;  // set iff is_p_group
  bool is_prime_order = false;
  bool is_prime_power_order = false;
  bool is_eppo = false;
  bool is_even_order = false;
  bool all_nonidentity_self_inverse = false;
  bool no_nonidentity_self_inverse = false;
  std::size_t count_order_two = 0;
  bool is_cyclic = false;
};

GroupProfile profile(const FiniteGroup& g);

// Number-theory helpers shared with the graph builders and tests.
bool is_prime(std::uint64_t n);
// Returns p when n = p^k with k >= 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

}  // namespace groupgraph
