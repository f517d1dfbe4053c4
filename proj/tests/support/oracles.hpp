#pragma once

// Brute-force reference implementations. They touch only the group product,
// never the library finders, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "roth/group.hpp"

namespace oracle {

using roth::Element;
using roth::FiniteGroup;
using Membership = std::function<bool(Element, Element)>;

inline Element inv(const FiniteGroup& g, Element a) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(a, x) == 0) return x;
  return 0;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& s) {
  std::vector<bool> in(g.order(), false);
  for (Element x : s) in[x] = true;
  if (!in[0]) return false;
  for (Element x : s)
    for (Element y : s)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

/// Every subgroup found by checking all 2^n subsets, sorted by size then
/// lexicographically. Only for n <= 16.
inline std::vector<std::vector<Element>> subgroups_by_subsets(const FiniteGroup& g) {
  std::vector<std::vector<Element>> out;
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    std::vector<Element> s;
    for (Element x = 0; x < n; ++x)
      if (mask >> x & 1) s.push_back(x);
    if (is_subgroup(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Ordered (a, b, d) with d in h, (a,b), (ad,b), (a,db) in S.
inline std::uint64_t count_elso(const FiniteGroup& g, const Membership& in, const std::vector<Element>& h,
                                bool nondegenerate) {
  std::uint64_t count = 0;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      if (!in(a, b)) continue;
      for (Element d : h) {
        if (nondegenerate && d == 0) continue;
        if (in(g.mul(a, d), b) && in(a, g.mul(d, b))) ++count;
      }
    }
  return count;
}

/// Existence of (a,b),(a,c),(e,f) in S with ab = ec, ac = ef, e != a.
inline bool has_harmadik(const FiniteGroup& g, const Membership& in) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!in(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (!in(a, c)) continue;
        for (Element e = 0; e < n; ++e) {
          if (e == a) continue;
          for (Element f = 0; f < n; ++f)
            if (in(e, f) && g.mul(a, b) == g.mul(e, c) && g.mul(a, c) == g.mul(e, f)) return true;
        }
      }
    }
  return false;
}

/// Same as has_harmadik plus (e,c) in S.
inline bool has_quadruple(const FiniteGroup& g, const Membership& in) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!in(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (!in(a, c)) continue;
        for (Element e = 0; e < n; ++e) {
          if (e == a || !in(e, c)) continue;
          for (Element f = 0; f < n; ++f)
            if (in(e, f) && g.mul(a, b) == g.mul(e, c) && g.mul(a, c) == g.mul(e, f)) return true;
        }
      }
    }
  return false;
}

/// (a,b), (a,db), (ad^-1, d^2 b) with d in h, d != 1, optionally d of order != 2.
inline bool has_corollary(const FiniteGroup& g, const Membership& in, const std::vector<Element>& h,
                          bool exclude_order_two) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      if (!in(a, b)) continue;
      for (Element d : h) {
        if (d == 0) continue;
        const Element dd = g.mul(d, d);
        if (exclude_order_two && dd == 0) continue;
        if (in(a, g.mul(d, b)) && in(g.mul(a, inv(g, d)), g.mul(dd, b))) return true;
      }
    }
  return false;
}

/// b, db, d^2 b pairwise distinct, all in A, d in h.
inline bool has_ap3(const FiniteGroup& g, const std::vector<bool>& in, const std::vector<Element>& h) {
  for (Element b = 0; b < g.order(); ++b) {
    if (!in[b]) continue;
    for (Element d : h) {
      const Element db = g.mul(d, b), ddb = g.mul(d, db);
      if (db != b && ddb != b && ddb != db && in[db] && in[ddb]) return true;
    }
  }
  return false;
}

inline std::uint64_t count_ksv(const FiniteGroup& g, const std::vector<bool>& in) {
  std::uint64_t count = 0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      for (Element z = 0; z < g.order(); ++z)
        if (in[x] && in[y] && in[z] && g.mul(x, z) == g.mul(y, y)) ++count;
  return count;
}

/// Corners in G^2: (x,y), (x+t,y), (x,y+t) with t in h, t != 0.
inline bool has_corner2(const FiniteGroup& g, const Membership& in, const std::vector<Element>& h) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      if (!in(x, y)) continue;
      for (Element t : h)
        if (t != 0 && in(g.mul(x, t), y) && in(x, g.mul(y, t))) return true;
    }
  return false;
}

/// Largest A subset of Z_n free of nondegenerate 3-term progressions, by
/// checking every subset.
inline std::size_t max_ap3_free_cyclic(std::size_t n) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool free = true;
    for (std::size_t b = 0; b < n && free; ++b) {
      if (!(mask >> b & 1)) continue;
      for (std::size_t d = 1; d < n && free; ++d) {
        const std::size_t x = (b + d) % n, y = (b + 2 * d) % n;
        if (y != b && (mask >> x & 1) && (mask >> y & 1)) free = false;
      }
    }
    if (free) best = size;
  }
  return best;
}

/// Largest elso-free subset of G x G (nondegenerate, H = G) over all 2^(n^2)
/// subsets. Only for n^2 <= 16.
inline std::size_t max_elso_free(const FiniteGroup& g) {
  const std::size_t n = g.order(), cells = n * n;
  std::vector<Element> all(n);
  for (Element x = 0; x < n; ++x) all[x] = x;
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    const Membership in = [&](Element a, Element b) { return (mask >> (a * n + b) & 1) != 0; };
    if (count_elso(g, in, all, true) == 0) best = size;
  }
  return best;
}

}  // namespace oracle
