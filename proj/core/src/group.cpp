#include "roth/group.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

namespace roth {

std::optional<AxiomViolation> find_axiom_violation(const std::vector<std::vector<long>>& table) {
  const long n = static_cast<long>(table.size());
  for (long a = 0; a < n; ++a) {
    if (static_cast<long>(table[a].size()) != n)
      return AxiomViolation{GroupAxiom::kClosure, {a, static_cast<long>(table[a].size()), -1},
                            "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                                " entries, expected " + std::to_string(n)};
    for (long b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n)
        return AxiomViolation{GroupAxiom::kClosure, {a, b, table[a][b]},
                              "entry (" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                                  std::to_string(table[a][b]) + " is out of range"};
    }
  }
  if (n == 0) return AxiomViolation{GroupAxiom::kIdentity, {-1, -1, -1}, "empty table has no identity"};

  long identity = -1;
  for (long e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (long a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity < 0) return AxiomViolation{GroupAxiom::kIdentity, {-1, -1, -1}, "no two-sided identity element"};

  for (long a = 0; a < n; ++a) {
    bool found = false;
    for (long b = 0; b < n && !found; ++b) found = table[a][b] == identity && table[b][a] == identity;
    if (!found)
      return AxiomViolation{GroupAxiom::kInverses, {a, -1, -1},
                            "element " + std::to_string(a) + " has no two-sided inverse"};
  }

  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]])
          return AxiomViolation{GroupAxiom::kAssociativity, {a, b, c},
                                "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
                                    " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
                                    std::to_string(c) + ")"};
      }
  return std::nullopt;
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::string name) {
  Data data{order, std::move(table), std::vector<Element>(order, 0), std::vector<std::size_t>(order, 1), true,
            std::move(name)};
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const Element ab = data.table[a * order + b];
      if (ab == 0) data.inverses[a] = static_cast<Element>(b);
      if (ab != data.table[b * order + a]) data.abelian = false;
    }
    std::size_t k = 1;
    for (Element x = static_cast<Element>(a); x != 0; x = data.table[x * order + a]) ++k;
    data.element_orders[a] = k;
  }
  data_ = std::make_shared<const Data>(std::move(data));
}

Element FiniteGroup::pow(Element a, std::size_t k) const noexcept {
  Element result = identity();
  k %= element_order(a);
  for (std::size_t i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

std::vector<std::vector<long>> FiniteGroup::table() const {
  const std::size_t n = order();
  std::vector<std::vector<long>> rows(n, std::vector<long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = mul(static_cast<Element>(a), static_cast<Element>(b));
  return rows;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<long>>& table, std::string name,
                                    const Limits& limits) {
  if (table.size() > limits.max_group_order)
    throw Error(ErrorCode::kOverflowGuard, "group order " + std::to_string(table.size()) + " exceeds cap " +
                                               std::to_string(limits.max_group_order));
  if (auto violation = find_axiom_violation(table))
    throw NotAGroupError(violation->axiom, violation->witness,
                         "not a group (" + std::string(to_string(violation->axiom)) + "): " + violation->message);

  const std::size_t n = table.size();
  Element identity = 0;
  for (std::size_t e = 0; e < n; ++e) {
    if (table[e][0] == 0) {  // e * g = g forces e = identity
      identity = static_cast<Element>(e);
      break;
    }
  }
  // Swap labels 0 and identity; the map is its own inverse.
  auto relabel = [identity](long x) -> Element {
    if (x == 0) return identity;
    if (x == static_cast<long>(identity)) return 0;
    return static_cast<Element>(x);
  };
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[relabel(static_cast<long>(a)) * n + relabel(static_cast<long>(b))] = relabel(table[a][b]);
  return FiniteGroup(n, std::move(flat), std::move(name));
}

namespace {

std::vector<long> parse_row(std::string_view line, std::size_t line_no) {
  std::vector<long> values;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || (next < end && *next != ' ' && *next != '\t' && *next != '\r'))
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected integer, got '" +
                                         std::string(line) + "'");
    values.push_back(value);
    p = next;
  }
  return values;
}

}  // namespace

FiniteGroup load_cayley_table(std::string_view text, std::string name, const Limits& limits) {
  std::vector<std::vector<long>> rows;
  long order = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    auto values = parse_row(line, line_no);
    if (order < 0) {
      if (values.size() != 1 || values[0] <= 0)
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected a positive group order");
      order = values[0];
      if (static_cast<std::size_t>(order) > limits.max_group_order)
        throw Error(ErrorCode::kOverflowGuard, "group order " + std::to_string(order) + " exceeds cap " +
                                                   std::to_string(limits.max_group_order));
      continue;
    }
    if (static_cast<long>(rows.size()) == order)
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": more than " + std::to_string(order) +
                                         " table rows");
    if (static_cast<long>(values.size()) != order)
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " + std::to_string(order) +
                                         " entries, got " + std::to_string(values.size()));
    rows.push_back(std::move(values));
  }
  if (order < 0) throw Error(ErrorCode::kParse, "missing group order");
  if (static_cast<long>(rows.size()) != order)
    throw Error(ErrorCode::kParse, "expected " + std::to_string(order) + " table rows, got " +
                                       std::to_string(rows.size()));
  return FiniteGroup::from_table(rows, std::move(name), limits);
}

std::string write_cayley_table(const FiniteGroup& group) {
  std::ostringstream out;
  out << "# " << group.name() << '\n' << group.order() << '\n';
  for (Element a = 0; a < group.order(); ++a) {
    for (Element b = 0; b < group.order(); ++b) out << (b ? " " : "") << group.mul(a, b);
    out << '\n';
  }
  return out.str();
}

}  // namespace roth
