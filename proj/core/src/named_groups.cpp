#include "roth/named_groups.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>

namespace roth {

bool is_prime(std::size_t n) noexcept {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) result = saturating_mul(result, base);
  return result;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kUnsupportedParameter, what);
}

FiniteGroup cyclic_group(std::size_t n, std::string name) {
  return FiniteGroup::from_product(n, std::move(name), [n](Element a, Element b) { return (a + b) % n; });
}

FiniteGroup elementary_abelian_group(std::size_t p, std::size_t k, std::string name) {
  const std::size_t n = saturating_pow(p, k);
  return FiniteGroup::from_product(n, std::move(name), [p, k](Element a, Element b) {
    std::size_t result = 0;
    std::size_t place = 1;
    for (std::size_t i = 0; i < k; ++i) {
      result += ((a / place % p + b / place % p) % p) * place;
      place *= p;
    }
    return result;
  });
}

FiniteGroup dihedral_group(std::size_t n, std::string name) {
  return FiniteGroup::from_product(2 * n, std::move(name), [n](Element x, Element y) -> std::size_t {
    if (x < n && y < n) return (x + y) % n;
    if (x < n) return (y - n + x) % n + n;
    if (y < n) return (x - n + n - y) % n + n;
    return (x - n + n - (y - n)) % n;
  });
}

FiniteGroup quaternion_group(std::string name) {
  // Unit products for 1, i, j, k as (sign, unit).
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kNeg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return FiniteGroup::from_product(8, std::move(name), [](Element x, Element y) {
    const Element ux = x / 2, uy = y / 2;
    const Element sign = (x % 2) ^ (y % 2) ^ static_cast<Element>(kNeg[ux][uy]);
    return static_cast<Element>(kUnit[ux][uy]) * 2 + sign;
  });
}

FiniteGroup symmetric_group(std::size_t n, std::string name) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Element>(i));
  return FiniteGroup::from_product(perms.size(), std::move(name), [&](Element a, Element b) {
    std::vector<std::size_t> composed(n);
    for (std::size_t x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
    return index.at(composed);
  });
}

std::size_t parse_number(std::string_view token, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw Error(ErrorCode::kParse, "group spec '" + std::string(whole) + "': expected a number, got '" +
                                       std::string(token) + "'");
  return value;
}

GroupSpec parse_tokens(const std::vector<std::string_view>& tokens, std::size_t& pos, std::string_view whole) {
  auto next = [&]() -> std::string_view {
    if (pos >= tokens.size())
      throw Error(ErrorCode::kParse, "group spec '" + std::string(whole) + "' ends early");
    return tokens[pos++];
  };
  const std::string_view family = next();
  if (family == "cyclic") return GroupSpec::cyclic(parse_number(next(), whole));
  if (family == "elemab" || family == "elementary_abelian") {
    const auto p = parse_number(next(), whole);
    return GroupSpec::elementary_abelian(p, parse_number(next(), whole));
  }
  if (family == "dihedral") return GroupSpec::dihedral(parse_number(next(), whole));
  if (family == "quaternion8" || family == "q8") return GroupSpec::quaternion8();
  if (family == "symmetric" || family == "sym") return GroupSpec::symmetric(parse_number(next(), whole));
  if (family == "product") {
    auto a = parse_tokens(tokens, pos, whole);
    auto b = parse_tokens(tokens, pos, whole);
    return GroupSpec::direct_product(std::move(a), std::move(b));
  }
  throw Error(ErrorCode::kParse, "group spec '" + std::string(whole) + "': unknown family '" +
                                     std::string(family) + "'");
}

}  // namespace

std::string GroupSpec::label() const {
  auto num = [this](std::size_t i) { return std::to_string(params.at(i)); };
  switch (family) {
    case GroupFamily::kCyclic: return "cyclic:" + num(0);
    case GroupFamily::kElementaryAbelian: return "elemab:" + num(0) + ":" + num(1);
    case GroupFamily::kDihedral: return "dihedral:" + num(0);
    case GroupFamily::kQuaternion8: return "quaternion8";
    case GroupFamily::kSymmetric: return "symmetric:" + num(0);
    case GroupFamily::kDirectProduct: return "product:" + factors.at(0).label() + ":" + factors.at(1).label();
  }
  return "?";
}

std::size_t GroupSpec::order() const {
  switch (family) {
    case GroupFamily::kCyclic: return params.at(0);
    case GroupFamily::kElementaryAbelian: return saturating_pow(params.at(0), params.at(1));
    case GroupFamily::kDihedral: return saturating_mul(2, params.at(0));
    case GroupFamily::kQuaternion8: return 8;
    case GroupFamily::kSymmetric: {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= params.at(0); ++i) f = saturating_mul(f, i);
      return f;
    }
    case GroupFamily::kDirectProduct: return saturating_mul(factors.at(0).order(), factors.at(1).order());
  }
  return 0;
}

GroupSpec parse_group_spec(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    tokens.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  std::size_t pos = 0;
  GroupSpec spec = parse_tokens(tokens, pos, text);
  if (pos != tokens.size())
    throw Error(ErrorCode::kParse, "group spec '" + std::string(text) + "' has trailing tokens");
  return spec;
}

FiniteGroup make_named_group(const GroupSpec& spec, const Limits& limits) {
  switch (spec.family) {
    case GroupFamily::kCyclic: require(spec.params.at(0) >= 1, "cyclic(n) needs n >= 1"); break;
    case GroupFamily::kElementaryAbelian:
      require(is_prime(spec.params.at(0)), "elementary_abelian(p,k) needs prime p");
      require(spec.params.at(1) >= 1, "elementary_abelian(p,k) needs k >= 1");
      break;
    case GroupFamily::kDihedral: require(spec.params.at(0) >= 1, "dihedral(n) needs n >= 1"); break;
    case GroupFamily::kQuaternion8: break;
    case GroupFamily::kSymmetric:
      require(spec.params.at(0) >= 1 && spec.params.at(0) <= 5, "symmetric(n) supports 1 <= n <= 5");
      break;
    case GroupFamily::kDirectProduct: break;
  }
  const std::size_t order = spec.order();
  if (order > limits.max_group_order)
    throw Error(ErrorCode::kOverflowGuard, spec.label() + " has order " +
                                               (order == std::numeric_limits<std::size_t>::max()
                                                    ? std::string("overflowing size_t")
                                                    : std::to_string(order)) +
                                               ", above cap " + std::to_string(limits.max_group_order));
  std::string name = spec.label();
  switch (spec.family) {
    case GroupFamily::kCyclic: return cyclic_group(order, std::move(name));
    case GroupFamily::kElementaryAbelian:
      return elementary_abelian_group(spec.params[0], spec.params[1], std::move(name));
    case GroupFamily::kDihedral: return dihedral_group(spec.params[0], std::move(name));
    case GroupFamily::kQuaternion8: return quaternion_group(std::move(name));
    case GroupFamily::kSymmetric: return symmetric_group(spec.params[0], std::move(name));
    case GroupFamily::kDirectProduct: {
      const FiniteGroup a = make_named_group(spec.factors.at(0), limits);
      const FiniteGroup b = make_named_group(spec.factors.at(1), limits);
      const std::size_t nb = b.order();
      return FiniteGroup::from_product(order, std::move(name), [&](Element x, Element y) {
        return a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
               b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      });
    }
  }
  throw Error(ErrorCode::kUnsupportedParameter, "unknown group family");
}

std::vector<GroupSpec> builtin_group_specs(std::size_t max_order) {
  using G = GroupSpec;
  std::vector<GroupSpec> all;
  for (std::size_t n = 1; n <= 32; ++n) all.push_back(G::cyclic(n));
  all.push_back(G::cyclic(64));
  for (std::size_t k = 2; k <= 6; ++k) all.push_back(G::elementary_abelian(2, k));
  for (std::size_t k = 2; k <= 3; ++k) all.push_back(G::elementary_abelian(3, k));
  all.push_back(G::elementary_abelian(5, 2));
  all.push_back(G::elementary_abelian(7, 2));
  for (std::size_t n = 3; n <= 32; ++n) all.push_back(G::dihedral(n));
  all.push_back(G::quaternion8());
  all.push_back(G::symmetric(4));
  all.push_back(G::symmetric(5));
  all.push_back(G::direct_product(G::cyclic(2), G::cyclic(4)));
  all.push_back(G::direct_product(G::cyclic(2), G::cyclic(6)));
  all.push_back(G::direct_product(G::cyclic(2), G::dihedral(3)));
  all.push_back(G::direct_product(G::cyclic(4), G::cyclic(4)));
  all.push_back(G::direct_product(G::cyclic(2), G::quaternion8()));
  all.push_back(G::direct_product(G::cyclic(2), G::dihedral(4)));
  all.push_back(G::direct_product(G::cyclic(3), G::dihedral(3)));
  all.push_back(G::direct_product(G::cyclic(3), G::quaternion8()));
  all.push_back(G::direct_product(G::dihedral(3), G::dihedral(3)));
  all.push_back(G::direct_product(G::cyclic(2), G::symmetric(4)));
  all.push_back(G::direct_product(G::quaternion8(), G::cyclic(4)));
  std::erase_if(all, [max_order](const GroupSpec& s) { return s.order() > max_order; });
  std::stable_sort(all.begin(), all.end(),
                   [](const GroupSpec& a, const GroupSpec& b) { return a.order() < b.order(); });
  return all;
}

}  // namespace roth
