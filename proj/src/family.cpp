#include "groupgraph/family.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>

namespace groupgraph {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t mul_saturating(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

[[noreturn]] void invalid(const std::string& what) {
  throw GroupError(GroupErrorKind::InvalidParameter, what);
}

// Order implied by the spec without building it; kSaturated on overflow.
// Files report 0 (unknown until read).
std::size_t predicted_order(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Cyclic& c) { return c.n; },
          [](const family::Dihedral& d) { return mul_saturating(2, d.n); },
          [](const family::Dicyclic& d) { return mul_saturating(4, d.n); },
          [](const family::Symmetric& s) {
            std::size_t f = 1;
            for (std::size_t i = 2; i <= s.n; ++i) f = mul_saturating(f, i);
            return f;
          },
          [](const family::ElementaryAbelian& e) {
            std::size_t o = 1;
            for (std::size_t i = 0; i < e.k; ++i) o = mul_saturating(o, e.p);
            return o;
          },
          [](const family::DirectProduct& d) {
            std::size_t o = 1;
            for (const auto& f : d.factors) {
              o = mul_saturating(o, predicted_order(f));
            }
            return o;
          },
          [](const family::FromFile&) { return std::size_t{0}; },
      },
      spec.variant);
}

void check_cap(std::size_t order, std::size_t cap, const FamilySpec& spec) {
  if (order > cap) {
    throw GroupError(GroupErrorKind::OrderCapExceeded,
                     label(spec) + " has order " +
                         (order == kSaturated ? std::string("> size_t")
                                              : std::to_string(order)) +
                         ", cap is " + std::to_string(cap));
  }
}

CayleyTable cyclic_table(std::size_t n) {
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  }
  return t;
}

// Element k (< n) is r^k, element n + k is s r^k.
// (s^f r^a)(s^g r^b) = s^(f+g) r^((-1)^g a + b).
CayleyTable dihedral_table(std::size_t n) {
  const std::size_t order = 2 * n;
  CayleyTable t(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t f = x / n, a = x % n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t g = y / n, b = y % n;
      const std::size_t rot = (g == 0 ? a : n - a) % n;
      t[x][y] = static_cast<Element>(((f + g) % 2) * n + (rot + b) % n);
    }
  }
  return t;
}

// Element k (< 2n) is a^k, element 2n + k is a^k x, with a^(2n) = e,
// x^2 = a^n and x a x^-1 = a^-1.
CayleyTable dicyclic_table(std::size_t n) {
  const std::size_t m = 2 * n;
  const std::size_t order = 2 * m;
  CayleyTable t(order, std::vector<Element>(order));
  for (std::size_t u = 0; u < order; ++u) {
    const std::size_t f = u / m, k1 = u % m;
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t g = v / m, k2 = v % m;
      std::size_t k, h;
      if (f == 0) {
        k = (k1 + k2) % m;
        h = g;
      } else if (g == 0) {
        // a^k1 x a^k2 = a^(k1 - k2) x
        k = (k1 + m - k2) % m;
        h = 1;
      } else {
        // a^k1 x a^k2 x = a^(k1 - k2) x^2 = a^(k1 - k2 + n)
        k = (k1 + m - k2 + n) % m;
        h = 0;
      }
      t[u][v] = static_cast<Element>(h * m + k);
    }
  }
  return t;
}

// Permutations of {0..n-1} in lexicographic order (identity first), composed
// right to left: (st)(i) = s(t(i)).
CayleyTable symmetric_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);

  CayleyTable t(perms.size(), std::vector<Element>(perms.size()));
  std::vector<std::size_t> comp(n);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      for (std::size_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = index.at(comp);
    }
  }
  return t;
}

// Vectors in (Z_p)^k, first coordinate least significant.
CayleyTable elementary_abelian_table(std::size_t p, std::size_t k) {
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) order *= p;
  CayleyTable t(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t a = x, b = y, out = 0, place = 1;
      for (std::size_t i = 0; i < k; ++i) {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
      }
      t[x][y] = static_cast<Element>(out);
    }
  }
  return t;
}

// Pair (a, b) maps to a * |B| + b.
CayleyTable product_table(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  CayleyTable t(na * nb, std::vector<Element>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x) {
    for (std::size_t y = 0; y < na * nb; ++y) {
      const Element ea = a.multiply(static_cast<Element>(x / nb),
                                    static_cast<Element>(y / nb));
      const Element eb = b.multiply(static_cast<Element>(x % nb),
                                    static_cast<Element>(y % nb));
      t[x][y] = static_cast<Element>(ea * nb + eb);
    }
  }
  return t;
}

void validate(const FamilySpec& spec) {
  std::visit(
      overloaded{
          [](const family::Cyclic& c) { if (c.n == 0) invalid("Cyclic(0)"); },
          [](const family::Dihedral& d) { if (d.n == 0) invalid("Dihedral(0)"); },
          [](const family::Dicyclic& d) { if (d.n == 0) invalid("Dicyclic(0)"); },
          [](const family::Symmetric& s) { if (s.n == 0) invalid("Symmetric(0)"); },
          [](const family::ElementaryAbelian& e) {
            if (!is_prime(e.p)) {
              invalid("ElementaryAbelian needs prime p, got " + std::to_string(e.p));
            }
            if (e.k == 0) invalid("ElementaryAbelian needs rank k >= 1");
          },
          [](const family::DirectProduct& d) {
            if (d.factors.empty()) invalid("DirectProduct needs at least one factor");
            for (const auto& f : d.factors) validate(f);
          },
          [](const family::FromFile& f) { if (f.path.empty()) invalid("empty path"); },
      },
      spec.variant);
}

std::size_t parse_positive(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || value == 0) {
    throw GroupError(GroupErrorKind::ParseError,
                     "expected a positive integer for " + std::string(what) +
                         ", got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::size_t order_cap_from_env() {
  const char* raw = std::getenv("GROUPGRAPH_ORDER_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultOrderCap;
  return parse_positive(raw, "GROUPGRAPH_ORDER_CAP");
}

std::string label(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Cyclic& c) { return "Cyclic(" + std::to_string(c.n) + ")"; },
          [](const family::Dihedral& d) { return "Dihedral(" + std::to_string(d.n) + ")"; },
          [](const family::Dicyclic& d) { return "Dicyclic(" + std::to_string(d.n) + ")"; },
          [](const family::Symmetric& s) { return "Symmetric(" + std::to_string(s.n) + ")"; },
          [](const family::ElementaryAbelian& e) {
            return "ElementaryAbelian(" + std::to_string(e.p) + "," +
                   std::to_string(e.k) + ")";
          },
          [](const family::DirectProduct& d) {
            std::string out = "Product(";
            for (std::size_t i = 0; i < d.factors.size(); ++i) {
              if (i) out += ",";
              out += label(d.factors[i]);
            }
            return out + ")";
          },
          [](const family::FromFile& f) { return "File(" + f.path + ")"; },
      },
      spec.variant);
}

std::string to_spec_string(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Cyclic& c) { return "cyclic:" + std::to_string(c.n); },
          [](const family::Dihedral& d) { return "dihedral:" + std::to_string(d.n); },
          [](const family::Dicyclic& d) { return "dicyclic:" + std::to_string(d.n); },
          [](const family::Symmetric& s) { return "symmetric:" + std::to_string(s.n); },
          [](const family::ElementaryAbelian& e) {
            return "ea:" + std::to_string(e.p) + "," + std::to_string(e.k);
          },
          [](const family::DirectProduct& d) {
            std::string out = "product:";
            for (std::size_t i = 0; i < d.factors.size(); ++i) {
              if (i) out += "*";
              out += to_spec_string(d.factors[i]);
            }
            return out;
          },
          [](const family::FromFile& f) { return "file:" + f.path; },
      },
      spec.variant);
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw GroupError(GroupErrorKind::ParseError,
                     "group spec '" + std::string(text) + "' lacks ':'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (kind == "cyclic") return FamilySpec::cyclic(parse_positive(arg, "cyclic"));
  if (kind == "dihedral") return FamilySpec::dihedral(parse_positive(arg, "dihedral"));
  if (kind == "dicyclic") return FamilySpec::dicyclic(parse_positive(arg, "dicyclic"));
  if (kind == "symmetric") return FamilySpec::symmetric(parse_positive(arg, "symmetric"));
  if (kind == "ea") {
    const auto comma = arg.find(',');
    if (comma == std::string_view::npos) {
      throw GroupError(GroupErrorKind::ParseError, "ea spec needs 'p,k'");
    }
    return FamilySpec::elementary_abelian(parse_positive(arg.substr(0, comma), "ea p"),
                                          parse_positive(arg.substr(comma + 1), "ea k"));
  }
  if (kind == "product") {
    std::vector<FamilySpec> factors;
    std::size_t start = 0;
    while (start <= arg.size()) {
      auto star = arg.find('*', start);
      if (star == std::string_view::npos) star = arg.size();
      factors.push_back(parse_family_spec(arg.substr(start, star - start)));
      start = star + 1;
    }
    if (factors.size() < 2) {
      throw GroupError(GroupErrorKind::ParseError,
                       "product spec needs at least two factors");
    }
    return FamilySpec::product(std::move(factors));
  }
  if (kind == "file") {
    if (arg.empty()) throw GroupError(GroupErrorKind::ParseError, "file spec needs a path");
    return FamilySpec::from_file(std::string(arg));
  }
  throw GroupError(GroupErrorKind::ParseError,
                   "unknown group family '" + std::string(kind) + "'");
}

FiniteGroup build_family(const FamilySpec& spec, std::size_t order_cap) {
  validate(spec);
  check_cap(predicted_order(spec), order_cap, spec);
  return std::visit(
      overloaded{
          [&](const family::Cyclic& c) {
            return FiniteGroup::from_cayley_table(cyclic_table(c.n), label(spec));
          },
          [&](const family::Dihedral& d) {
            return FiniteGroup::from_cayley_table(dihedral_table(d.n), label(spec));
          },
          [&](const family::Dicyclic& d) {
            return FiniteGroup::from_cayley_table(dicyclic_table(d.n), label(spec));
          },
          [&](const family::Symmetric& s) {
            return FiniteGroup::from_cayley_table(symmetric_table(s.n), label(spec));
          },
          [&](const family::ElementaryAbelian& e) {
            return FiniteGroup::from_cayley_table(elementary_abelian_table(e.p, e.k),
                                                  label(spec));
          },
          [&](const family::DirectProduct& d) {
            FiniteGroup acc = build_family(d.factors.front(), order_cap);
            for (std::size_t i = 1; i < d.factors.size(); ++i) {
              const FiniteGroup next = build_family(d.factors[i], order_cap);
              acc = FiniteGroup::from_cayley_table(product_table(acc, next), label(spec));
            }
            if (d.factors.size() == 1) {
              acc = FiniteGroup::from_cayley_table(acc.table(), label(spec));
            }
            return acc;
          },
          [&](const family::FromFile& f) {
            CayleyTable t = read_cayley_table_file(f.path);
            check_cap(t.size(), order_cap, spec);
            return FiniteGroup::from_cayley_table(t, label(spec));
          },
      },
      spec.variant);
}

}  // namespace groupgraph
