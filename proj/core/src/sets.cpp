#include "roth/sets.hpp"

#include <charconv>
#include <sstream>

#include "roth/random.hpp"

namespace roth {

namespace {

Bitset random_cells(std::size_t cells, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bitset out(cells);
  for (std::size_t c : sample_without_replacement(cells, sample_size(density, cells), rng)) out.set(c);
  return out;
}

void check_size(const Bitset& membership, std::size_t expected, const char* what) {
  if (membership.size() != expected)
    throw Error(ErrorCode::kUnsupportedParameter, std::string(what) + " membership has " +
                                                      std::to_string(membership.size()) + " cells, expected " +
                                                      std::to_string(expected));
}

}  // namespace

PairSet::PairSet(FiniteGroup group, Bitset membership)
    : group_(std::move(group)), membership_(std::move(membership)), size_(membership_.count()) {
  check_size(membership_, group_.order() * group_.order(), "pair set");
}

PairSet PairSet::empty(const FiniteGroup& group) { return PairSet(group, Bitset(group.order() * group.order())); }

PairSet PairSet::full(const FiniteGroup& group) {
  Bitset all(group.order() * group.order());
  all.set_all();
  return PairSet(group, std::move(all));
}

PairSet PairSet::from_pairs(const FiniteGroup& group, std::span<const std::pair<Element, Element>> pairs) {
  const std::size_t n = group.order();
  Bitset m(n * n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n)
      throw Error(ErrorCode::kUnsupportedParameter, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                                        ") is outside " + group.name());
    m.set(a * n + b);
  }
  return PairSet(group, std::move(m));
}

PairSet PairSet::random(const FiniteGroup& group, double density, std::uint64_t seed) {
  return PairSet(group, random_cells(group.order() * group.order(), density, seed));
}

double PairSet::density() const noexcept {
  return static_cast<double>(size_) / static_cast<double>(membership_.size());
}

std::vector<std::pair<Element, Element>> PairSet::members() const {
  std::vector<std::pair<Element, Element>> out;
  const std::size_t n = group_.order();
  membership_.for_each([&](std::size_t c) { out.emplace_back(static_cast<Element>(c / n), static_cast<Element>(c % n)); });
  return out;
}

ElementSet::ElementSet(FiniteGroup group, Bitset membership)
    : group_(std::move(group)), membership_(std::move(membership)), size_(membership_.count()) {
  check_size(membership_, group_.order(), "element set");
}

ElementSet ElementSet::empty(const FiniteGroup& group) { return ElementSet(group, Bitset(group.order())); }

ElementSet ElementSet::full(const FiniteGroup& group) {
  Bitset all(group.order());
  all.set_all();
  return ElementSet(group, std::move(all));
}

ElementSet ElementSet::from_elements(const FiniteGroup& group, std::span<const Element> elements) {
  Bitset m(group.order());
  for (Element g : elements) {
    if (g >= group.order())
      throw Error(ErrorCode::kUnsupportedParameter, "element " + std::to_string(g) + " is outside " + group.name());
    m.set(g);
  }
  return ElementSet(group, std::move(m));
}

ElementSet ElementSet::random(const FiniteGroup& group, double density, std::uint64_t seed) {
  return ElementSet(group, random_cells(group.order(), density, seed));
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  membership_.for_each([&](std::size_t g) { out.push_back(static_cast<Element>(g)); });
  return out;
}

std::size_t GridSet::cell_count(const FiniteGroup& group, std::size_t dimension, const Limits& limits) {
  if (!group.is_abelian())
    throw Error(ErrorCode::kNotAbelian, "grid sets need an abelian group; " + group.name() + " is not");
  if (dimension < 1 || dimension > limits.max_grid_dimension)
    throw Error(ErrorCode::kDimensionCap, "dimension " + std::to_string(dimension) + " outside [1, " +
                                              std::to_string(limits.max_grid_dimension) + "]");
  std::size_t cells = 1;
  for (std::size_t i = 0; i < dimension; ++i) {
    cells *= group.order();
    if (cells > limits.max_grid_cells)
      throw Error(ErrorCode::kOverflowGuard, "|G|^d exceeds the grid cap of " +
                                                 std::to_string(limits.max_grid_cells) + " cells");
  }
  return cells;
}

GridSet::GridSet(FiniteGroup group, std::size_t dimension, Bitset membership, const Limits& limits)
    : group_(std::move(group)), dimension_(dimension), membership_(std::move(membership)), size_(membership_.count()) {
  check_size(membership_, cell_count(group_, dimension_, limits), "grid set");
}

GridSet GridSet::empty(const FiniteGroup& group, std::size_t dimension, const Limits& limits) {
  return GridSet(group, dimension, Bitset(cell_count(group, dimension, limits)), limits);
}

GridSet GridSet::full(const FiniteGroup& group, std::size_t dimension, const Limits& limits) {
  Bitset all(cell_count(group, dimension, limits));
  all.set_all();
  return GridSet(group, dimension, std::move(all), limits);
}

GridSet GridSet::from_points(const FiniteGroup& group, std::size_t dimension,
                             std::span<const std::vector<Element>> points, const Limits& limits) {
  GridSet out = empty(group, dimension, limits);
  for (const auto& p : points) {
    bool ok = p.size() == dimension;
    for (Element x : p) ok = ok && x < group.order();
    if (!ok) throw Error(ErrorCode::kUnsupportedParameter, "grid point outside " + group.name() + "^d");
    out.membership_.set(out.encode(p));
  }
  out.size_ = out.membership_.count();
  return out;
}

GridSet GridSet::random(const FiniteGroup& group, std::size_t dimension, double density, std::uint64_t seed,
                        const Limits& limits) {
  return GridSet(group, dimension, random_cells(cell_count(group, dimension, limits), density, seed), limits);
}

std::size_t GridSet::encode(std::span<const Element> point) const noexcept {
  std::size_t cell = 0;
  for (Element x : point) cell = cell * group_.order() + x;
  return cell;
}

std::vector<Element> GridSet::decode(std::size_t cell) const {
  std::vector<Element> point(dimension_);
  for (std::size_t i = dimension_; i-- > 0;) {
    point[i] = static_cast<Element>(cell % group_.order());
    cell /= group_.order();
  }
  return point;
}

std::vector<std::vector<Element>> GridSet::members() const {
  std::vector<std::vector<Element>> out;
  membership_.for_each([&](std::size_t c) { out.push_back(decode(c)); });
  return out;
}

namespace {

std::vector<std::size_t> parse_indices(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> values;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == ',')) ++p;
    if (p == end) break;
    std::size_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{})
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected element index in '" +
                                         std::string(line) + "'");
    values.push_back(v);
    p = next;
  }
  return values;
}

}  // namespace

AnySet parse_set_file(std::string_view text, const FiniteGroup& group, const Limits& limits) {
  enum class Kind { kNone, kPair, kElement, kGrid } kind = Kind::kNone;
  std::size_t dimension = 0;
  std::vector<std::vector<Element>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    line = line.substr(first);
    if (kind == Kind::kNone) {
      std::istringstream header{std::string(line)};
      std::string word;
      header >> word;
      if (word == "pairset") {
        kind = Kind::kPair;
        dimension = 2;
      } else if (word == "elementset") {
        kind = Kind::kElement;
        dimension = 1;
      } else if (word == "gridset") {
        kind = Kind::kGrid;
        if (!(header >> dimension))
          throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": gridset header needs a dimension");
      } else {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                           ": expected header pairset|elementset|gridset d, got '" +
                                           std::string(line) + "'");
      }
      continue;
    }
    auto values = parse_indices(line, line_no);
    if (values.size() != dimension)
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " + std::to_string(dimension) +
                                         " indices, got " + std::to_string(values.size()));
    std::vector<Element> row;
    for (auto v : values) {
      if (v >= group.order())
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": index " + std::to_string(v) +
                                           " is outside " + group.name());
      row.push_back(static_cast<Element>(v));
    }
    rows.push_back(std::move(row));
  }
  switch (kind) {
    case Kind::kNone: throw Error(ErrorCode::kParse, "missing set header");
    case Kind::kPair: {
      std::vector<std::pair<Element, Element>> pairs;
      for (auto& r : rows) pairs.emplace_back(r[0], r[1]);
      return PairSet::from_pairs(group, pairs);
    }
    case Kind::kElement: {
      std::vector<Element> elems;
      for (auto& r : rows) elems.push_back(r[0]);
      return ElementSet::from_elements(group, elems);
    }
    case Kind::kGrid: return GridSet::from_points(group, dimension, rows, limits);
  }
  throw Error(ErrorCode::kParse, "unreachable");
}

std::string write_set_file(const AnySet& set) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PairSet>) {
          out << "pairset\n";
          for (auto [a, b] : s.members()) out << a << ' ' << b << '\n';
        } else if constexpr (std::is_same_v<T, ElementSet>) {
          out << "elementset\n";
          for (Element g : s.members()) out << g << '\n';
        } else {
          out << "gridset " << s.dimension() << '\n';
          for (const auto& p : s.members()) {
            for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
            out << '\n';
          }
        }
      },
      set);
  return out.str();
}

}  // namespace roth
