#include "grext/grpd/finite_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "grext/error.hpp"

namespace grext {

FiniteGroup FiniteGroup::from_table(std::string name, std::size_t order, std::vector<int> table,
                                    std::vector<std::string> element_names) {
  if (order == 0 || table.size() != order * order) fail("NotAGroup", name + ": table shape");
  FiniteGroup g;
  g.name_ = std::move(name);
  g.n_ = order;
  g.table_ = std::move(table);
  const int n = static_cast<int>(order);
  for (int v : g.table_) {
    if (v < 0 || v >= n) fail("NotAGroup", g.name_ + ": entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) fail("NotAGroup", g.name_ + ": 0 is not the identity");
  }
  g.inv_.assign(order, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) g.inv_[static_cast<std::size_t>(a)] = b;
    }
    if (g.inv_[static_cast<std::size_t>(a)] < 0) {
      fail("NotAGroup", g.name_ + ": element " + std::to_string(a) + " has no inverse");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          fail("NotAGroup", g.name_ + ": associativity fails at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  if (element_names.size() == order) {
    g.names_ = std::move(element_names);
  } else {
    g.names_.clear();
    for (int a = 0; a < n; ++a) g.names_.push_back(std::to_string(a));
  }
  return g;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) fail("NotAGroup", "Z" + std::to_string(m));
  std::vector<int> t(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a * m + b)] = (a + b) % m;
  }
  return from_table(m == 1 ? "1" : "Z" + std::to_string(m), static_cast<std::size_t>(m), std::move(t));
}

namespace {

std::string cycle_notation(const std::vector<int>& p) {
  std::string out;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup from_elements(std::string name, const std::vector<std::vector<int>>& elems,
                          std::vector<int> (*op)(const std::vector<int>&, const std::vector<int>&),
                          std::vector<std::string> names) {
  const std::size_t n = elems.size();
  std::vector<int> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto c = op(elems[a], elems[b]);
      auto it = std::find(elems.begin(), elems.end(), c);
      t[a * n + b] = static_cast<int>(it - elems.begin());
    }
  }
  return FiniteGroup::from_table(std::move(name), n, std::move(t), std::move(names));
}

// (p∘q)(i) = p(q(i)).
std::vector<int> perm_compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elems;
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(cycle_notation(e));
  return from_elements("S" + std::to_string(k), elems, perm_compose, names);
}

FiniteGroup FiniteGroup::dihedral(int m) {
  // r^i s^j · r^k s^l = r^(i + (-1)^j k) s^(j+l).
  const int n = 2 * m;
  std::vector<int> t(static_cast<std::size_t>(n * n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    int i = a % m, j = a / m;
    names.push_back((i == 0 && j == 0) ? "1"
                                       : (i ? "r" + (i > 1 ? "^" + std::to_string(i) : std::string()) : "") +
                                             (j ? "s" : ""));
    for (int b = 0; b < n; ++b) {
      int k = b % m, l = b / m;
      int ri = ((i + (j ? -k : k)) % m + m) % m;
      t[static_cast<std::size_t>(a * n + b)] = ri + m * ((j + l) % 2);
    }
  }
  return from_table("D" + std::to_string(m), static_cast<std::size_t>(n), std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::quaternion() {
  // Units ±1, ±i, ±j, ±k as (sign, axis) with axis 0 = 1.
  static const int unit_table[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  auto index = [](int sign, int axis) { return axis + (sign < 0 ? 4 : 0); };
  std::vector<int> t(64);
  const std::array<const char*, 8> names{"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int sa = a < 4 ? 1 : -1, xa = a % 4, sb = b < 4 ? 1 : -1, xb = b % 4;
      const int* u = unit_table[xa][xb];
      t[static_cast<std::size_t>(a * 8 + b)] = index(sa * sb * u[0], u[1]);
    }
  }
  return from_table("Q8", 8, std::move(t), std::vector<std::string>(names.begin(), names.end()));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.n_, nb = b.n_, n = na * nb;
  std::vector<int> t(n * n);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    int xa = static_cast<int>(x / nb), xb = static_cast<int>(x % nb);
    names.push_back("(" + a.element_name(xa) + "," + b.element_name(xb) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      int ya = static_cast<int>(y / nb), yb = static_cast<int>(y % nb);
      t[x * n + y] = a.mul(xa, ya) * static_cast<int>(nb) + b.mul(xb, yb);
    }
  }
  return from_table(a.name_ + "x" + b.name_, n, std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::by_name(const std::string& name) {
  if (name == "1" || name == "trivial") return trivial();
  if (name == "S3") return symmetric(3);
  if (name == "S4") return symmetric(4);
  if (name == "Q8") return quaternion();
  if (name == "D4") return dihedral(4);
  if (name == "D3") return dihedral(3);
  if (name == "Z2^2" || name == "Z2xZ2") {
    auto g = direct_product(cyclic(2), cyclic(2));
    g.name_ = "Z2^2";
    return g;
  }
  if (name == "Z2^3") {
    auto g = direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2));
    g.name_ = "Z2^3";
    return g;
  }
  if (name == "Z2xZ4") return direct_product(cyclic(2), cyclic(4));
  if (name.size() >= 2 && name[0] == 'Z') {
    try {
      std::size_t used = 0;
      int m = std::stoi(name.substr(1), &used);
      if (used == name.size() - 1 && m >= 1 && m <= 4096) return cyclic(m);
    } catch (const std::exception&) {
    }
  }
  fail("UnknownGroup", name);
}

std::vector<FiniteGroup> FiniteGroup::small_groups() {
  std::vector<FiniteGroup> out;
  for (const char* n : {"1", "Z2", "Z3", "Z4", "Z2^2", "Z5", "Z6", "S3", "Z7", "Z8", "Z2xZ4",
                        "Z2^3", "D4", "Q8"}) {
    out.push_back(by_name(n));
  }
  return out;
}

int FiniteGroup::power(int a, long e) const {
  int base = e < 0 ? inv(a) : a;
  long k = e < 0 ? -e : e;
  k %= element_order(a);
  int acc = 0;
  for (long i = 0; i < k; ++i) acc = mul(acc, base);
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::conjugacy_classes() const {
  std::vector<int> cls(n_, -1);
  for (int a = 0; a < order(); ++a) {
    if (cls[static_cast<std::size_t>(a)] >= 0) continue;
    for (int g = 0; g < order(); ++g) cls[static_cast<std::size_t>(conj(g, a))] = a;
  }
  return cls;
}

std::vector<int> FiniteGroup::subgroup_generated(const std::vector<int>& gens) const {
  std::set<int> h{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        int y = mul(x, g);
        if (h.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {h.begin(), h.end()};
}

bool FiniteGroup::is_normal(const std::vector<int>& subgroup) const {
  std::set<int> h(subgroup.begin(), subgroup.end());
  for (int g = 0; g < order(); ++g) {
    for (int x : subgroup) {
      if (!h.count(conj(g, x))) return false;
    }
  }
  return true;
}

}  // namespace grext
