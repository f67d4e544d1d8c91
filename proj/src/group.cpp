#include "groupgraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace groupgraph {

const char* to_string(GroupErrorKind kind) {
  switch (kind) {
    case GroupErrorKind::NotClosed: return "NotClosed";
    case GroupErrorKind::NoIdentity: return "NoIdentity";
    case GroupErrorKind::NoInverse: return "NoInverse";
    case GroupErrorKind::NotAssociative: return "NotAssociative";
    case GroupErrorKind::NotSquare: return "NotSquare";
    case GroupErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case GroupErrorKind::InvalidParameter: return "InvalidParameter";
    case GroupErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case GroupErrorKind::ParseError: return "ParseError";
    case GroupErrorKind::FileError: return "FileError";
  }
  return "Unknown";
}

GroupError::GroupError(GroupErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      detail_(what) {}

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(const CayleyTable& raw,
                                           std::string label) {
  const std::size_t n = raw.size();
  if (n == 0) {
    throw GroupError(GroupErrorKind::NotSquare, "empty table");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw GroupError(GroupErrorKind::NotSquare,
                       "row " + std::to_string(i) + " has " +
                           std::to_string(raw[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (raw[i][j] >= n) {
        throw GroupError(GroupErrorKind::NotClosed,
                         "entry at (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") is " +
                             std::to_string(raw[i][j]));
      }
    }
  }

  // Identity: the first e with e*x = x*e = x for all x.
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = raw[e][x] == x && raw[x][e] == x;
    }
    if (ok) identity = e;
  }
  if (!identity) {
    throw GroupError(GroupErrorKind::NoIdentity,
                     "no row/column pair acts as identity");
  }

  // Relabel so the identity sits at index 0.
  std::vector<Element> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Element{0});
  std::swap(relabel[0], relabel[*identity]);

  FiniteGroup g;
  g.order_ = n;
  g.label_ = std::move(label);
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g.table_[relabel[i] * n + relabel[j]] = relabel[raw[i][j]];
    }
  }

  g.inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t found = 0;
    Element inv = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.table_[i * n + j] == 0 && g.table_[j * n + i] == 0) {
        ++found;
        inv = static_cast<Element>(j);
      }
    }
    if (found != 1) {
      throw GroupError(GroupErrorKind::NoInverse,
                       "element " + std::to_string(i) + " has " +
                           std::to_string(found) + " two-sided inverses");
    }
    g.inverse_[i] = inv;
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = g.table_[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = g.table_[ab * n + c];
        const std::size_t rhs = g.table_[a * n + g.table_[b * n + c]];
        if (lhs != rhs) {
          throw GroupError(GroupErrorKind::NotAssociative,
                           "(ab)c != a(bc) at " + triple(a, b, c));
        }
      }
    }
  }

  g.orders_.assign(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::uint64_t k = 1;
    Element power = static_cast<Element>(i);
    while (power != 0) {
      power = g.table_[power * n + i];
      ++k;
    }
    g.orders_[i] = k;
  }
  g.exponent_ = std::accumulate(
      g.orders_.begin(), g.orders_.end(), std::uint64_t{1},
      [](std::uint64_t acc, std::uint64_t o) { return std::lcm(acc, o); });

  for (std::size_t i = 0; i < n; ++i) {
    bool central = true;
    for (std::size_t j = 0; j < n && central; ++j) {
      central = g.table_[i * n + j] == g.table_[j * n + i];
    }
    if (central) g.center_.push_back(static_cast<Element>(i));
  }
  return g;
}

void FiniteGroup::check_index(Element i) const {
  if (i >= order_) {
    throw GroupError(GroupErrorKind::IndexOutOfRange,
                     "element " + std::to_string(i) + " in group of order " +
                         std::to_string(order_));
  }
}

Element FiniteGroup::inverse(Element i) const {
  check_index(i);
  return inverse_[i];
}

std::uint64_t FiniteGroup::element_order(Element i) const {
  check_index(i);
  return orders_[i];
}

std::vector<Element> FiniteGroup::centralizer(Element i) const {
  check_index(i);
  std::vector<Element> out;
  for (Element j = 0; j < order_; ++j) {
    if (commute(i, j)) out.push_back(j);
  }
  return out;
}

CayleyTable FiniteGroup::table() const {
  CayleyTable out(order_, std::vector<Element>(order_));
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) out[i][j] = table_[i * order_ + j];
  }
  return out;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < n; ++h) {
      const Element y = g.multiply(g.multiply(h, x), g.inverse(h));
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

ClassEquation class_equation(const FiniteGroup& g) {
  ClassEquation eq;
  eq.group_order = g.order();
  eq.center_size = g.center().size();
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1 && std::binary_search(g.center().begin(),
                                              g.center().end(), cls.front())) {
      continue;
    }
    eq.class_sizes.push_back(cls.size());
    eq.index_sum += g.order() / g.centralizer(cls.front()).size();
  }
  std::size_t class_total = 0;
  for (std::size_t s : eq.class_sizes) class_total += s;
  // Orbit-stabilizer ties the two sums together; both must match |G|.
  eq.holds = eq.group_order == eq.center_size + eq.index_sum &&
             class_total == eq.index_sum;
  return eq;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

GroupProfile profile(const FiniteGroup& g) {
  GroupProfile pr;
  const auto& orders = g.element_orders();
  pr.order = g.order();
  pr.center_size = g.center().size();
  pr.is_abelian = g.is_abelian();
  pr.exponent = g.exponent();
  pr.is_full_exponent =
      std::find(orders.begin(), orders.end(), pr.exponent) != orders.end();
  pr.prime = prime_power_base(pr.order);
  pr.is_p_group = pr.prime.has_value();
  pr.is_prime_power_order = pr.is_p_group;
  pr.is_prime_order = is_prime(pr.order);
  pr.is_eppo = std::all_of(orders.begin(), orders.end(), [](std::uint64_t o) {
    return o == 1 || prime_power_base(o).has_value();
  });
  pr.is_even_order = pr.order % 2 == 0;
  pr.count_order_two = static_cast<std::size_t>(
      std::count(orders.begin(), orders.end(), std::uint64_t{2}));
  pr.all_nonidentity_self_inverse = pr.exponent <= 2;
  std::size_t self_inverse = 0;
  for (Element i = 1; i < g.order(); ++i) {
    if (g.inverse(i) == i) ++self_inverse;
  }
  pr.no_nonidentity_self_inverse = self_inverse == 0;
  pr.is_cyclic = std::find(orders.begin(), orders.end(), std::uint64_t{pr.order}) != orders.end();
  return pr;
}

}  // namespace groupgraph
