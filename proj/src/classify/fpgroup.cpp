#include "grext/classify/fpgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

#include "grext/error.hpp"

namespace grext {

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

Word word_inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::string FPGroup::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += generators[static_cast<std::size_t>(std::abs(w[i]) - 1)];
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

std::string FPGroup::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + word_string(relators[i]);
  return out + ">";
}

AbelianInvariants abelianization(const FPGroup& G) {
  IntegerMatrix m(G.relators.size(), G.generators.size());
  for (std::size_t r = 0; r < G.relators.size(); ++r) {
    for (int x : G.relators[r]) m(r, static_cast<std::size_t>(std::abs(x) - 1)) += x > 0 ? 1 : -1;
  }
  return AbelianInvariants::cokernel(m, G.generators.size());
}

namespace {

Word substitute(const Word& w, int gen, const Word& value) {
  Word out;
  Word inv = word_inverse(value);
  for (int x : w) {
    if (std::abs(x) - 1 == gen) {
      const Word& v = x > 0 ? value : inv;
      out.insert(out.end(), v.begin(), v.end());
    } else {
      out.push_back(x);
    }
  }
  return free_reduce(out);
}

// Smallest cyclic rotation of w or of its inverse, for duplicate detection.
Word canonical_relator(const Word& w) {
  Word best = w;
  for (const Word& base : {w, word_inverse(w)}) {
    for (std::size_t s = 0; s < base.size(); ++s) {
      Word rot(base.begin() + static_cast<long>(s), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(s));
      if (rot < best) best = rot;
    }
  }
  return best;
}

void tidy(std::vector<Word>& rels) {
  std::vector<Word> out;
  for (const auto& r : rels) {
    Word c = cyclic_reduce(r);
    if (!c.empty()) out.push_back(canonical_relator(c));
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  rels = std::move(out);
}

}  // namespace

SimplifiedPresentation simplify(const FPGroup& G, std::size_t max_length) {
  const std::size_t n = G.generators.size();
  std::vector<Word> subst(n);
  for (std::size_t i = 0; i < n; ++i) subst[i] = {static_cast<int>(i) + 1};
  std::vector<Word> rels = G.relators;
  std::vector<bool> alive(n, true);
  for (;;) {
    tidy(rels);
    bool changed = false;
    for (std::size_t ri = 0; ri < rels.size() && !changed; ++ri) {
      const Word& r = rels[ri];
      std::vector<int> count(n);
      for (int x : r) ++count[static_cast<std::size_t>(std::abs(x) - 1)];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        int g = std::abs(r[pos]) - 1;
        if (count[static_cast<std::size_t>(g)] != 1) continue;
        // r = u x^e v  ⇒  x^e = u⁻¹ v⁻¹.
        Word u(r.begin(), r.begin() + static_cast<long>(pos));
        Word v(r.begin() + static_cast<long>(pos) + 1, r.end());
        Word val = free_reduce([&] {
          Word a = word_inverse(u), b = word_inverse(v);
          a.insert(a.end(), b.begin(), b.end());
          return a;
        }());
        if (r[pos] < 0) val = word_inverse(val);
        std::vector<Word> next;
        std::size_t total = 0;
        for (std::size_t k = 0; k < rels.size(); ++k) {
          if (k == ri) continue;
          next.push_back(substitute(rels[k], g, val));
          total += next.back().size();
        }
        if (total > max_length) continue;
        rels = std::move(next);
        for (auto& s : subst) s = substitute(s, g, val);
        alive[static_cast<std::size_t>(g)] = false;
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  std::vector<int> renumber(n, -1);
  SimplifiedPresentation out;
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) {
      renumber[i] = static_cast<int>(out.group.generators.size());
      out.group.generators.push_back(G.generators[i]);
    }
  }
  auto map_word = [&](const Word& w) {
    Word o;
    for (int x : w) {
      int r = renumber[static_cast<std::size_t>(std::abs(x) - 1)] + 1;
      o.push_back(x > 0 ? r : -r);
    }
    return o;
  };
  for (const auto& r : rels) out.group.relators.push_back(map_word(r));
  for (const auto& s : subst) out.substitution.push_back(map_word(s));
  return out;
}

namespace {

// Hasselgrove–Leech–Trotter coset enumeration.
class CosetTable {
 public:
  CosetTable(std::size_t gens, std::size_t limit) : cols_(2 * gens), limit_(limit) { new_coset(); }

  bool overflow() const { return overflow_; }
  std::size_t size() const { return p_.size(); }
  bool alive(std::size_t c) const { return p_[c] == c; }
  long& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < p_.size(); ++c) n += p_[c] == c;
    return n;
  }

  void define(std::size_t c, std::size_t x) {
    std::size_t d = new_coset();
    if (overflow_) return;
    at(c, x) = static_cast<long>(d);
    at(d, x ^ 1) = static_cast<long>(c);
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    std::size_t f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) {
        f = static_cast<std::size_t>(at(f, w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) {
        b = static_cast<std::size_t>(at(b, w[static_cast<std::size_t>(j)] ^ 1));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = static_cast<long>(b);
        at(b, w[static_cast<std::size_t>(i)] ^ 1) = static_cast<long>(f);
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
      if (overflow_) return;
    }
  }

 private:
  std::size_t new_coset() {
    if (p_.size() >= limit_) {
      overflow_ = true;
      return 0;
    }
    p_.push_back(p_.size());
    table_.resize(table_.size() + cols_, -1);
    return p_.size() - 1;
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (p_[r] != r) r = p_[r];
    while (p_[k] != r) {
      std::size_t next = p_[k];
      p_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& q) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    p_[l] = k;
    q.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> q;
    merge(a, b, q);
    for (std::size_t idx = 0; idx < q.size(); ++idx) {
      std::size_t g = q[idx];
      for (std::size_t x = 0; x < cols_; ++x) {
        if (at(g, x) < 0) continue;
        std::size_t d = static_cast<std::size_t>(at(g, x));
        at(d, x ^ 1) = -1;
        std::size_t m = rep(g), n = rep(d);
        if (at(m, x) >= 0) {
          merge(n, static_cast<std::size_t>(at(m, x)), q);
        } else if (at(n, x ^ 1) >= 0) {
          merge(m, static_cast<std::size_t>(at(n, x ^ 1)), q);
        } else {
          at(m, x) = static_cast<long>(n);
          at(n, x ^ 1) = static_cast<long>(m);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t limit_;
  bool overflow_ = false;
  std::vector<std::size_t> p_;
  std::vector<long> table_;
};

}  // namespace

std::optional<std::size_t> todd_coxeter_order(const FPGroup& G, std::size_t max_cosets) {
  const std::size_t g = G.generators.size();
  if (g == 0) return 1;
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : G.relators) {
    std::vector<std::size_t> w;
    for (int x : r) w.push_back(2 * static_cast<std::size_t>(std::abs(x) - 1) + (x < 0 ? 1 : 0));
    if (!w.empty()) rels.push_back(w);
  }
  CosetTable T(g, max_cosets);
  for (std::size_t c = 0; c < T.size(); ++c) {
    for (const auto& r : rels) {
      if (!T.alive(c)) break;
      T.scan_and_fill(c, r);
      if (T.overflow()) return std::nullopt;
    }
    for (std::size_t x = 0; x < 2 * g; ++x) {
      if (!T.alive(c)) break;
      if (T.at(c, x) < 0) T.define(c, x);
      if (T.overflow()) return std::nullopt;
    }
  }
  return T.live_count();
}

EdgePathPresentation edge_path_group(const Nerve& X) {
  EdgePathPresentation P;
  const std::size_t nv = X.vertices().size();
  P.parent_edge.assign(nv, -1);
  P.parent.assign(nv, -1);
  P.edge_generator.assign(X.edges().size(), -1);
  std::vector<bool> tree(X.edges().size());
  std::queue<int> q;
  q.push(X.basepoint());
  P.parent[X.vertex_index(X.basepoint())] = X.basepoint();
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    P.bfs_order.push_back(v);
    for (int w : X.neighbours(v)) {
      std::size_t wi = X.vertex_index(w);
      if (P.parent[wi] != -1) continue;
      P.parent[wi] = v;
      P.parent_edge[wi] = X.edge_index(v, w);
      tree[static_cast<std::size_t>(P.parent_edge[wi])] = true;
      q.push(w);
    }
  }
  for (std::size_t e = 0; e < X.edges().size(); ++e) {
    if (tree[e]) continue;
    P.edge_generator[e] = static_cast<long>(P.group.generators.size());
    P.group.generators.push_back("e" + std::to_string(X.edges()[e].first) + "_" +
                                 std::to_string(X.edges()[e].second));
  }
  auto step = [&](int a, int b, Word& w) {
    long e = X.edge_index(a, b);
    long g = P.edge_generator[static_cast<std::size_t>(e)];
    if (g >= 0) w.push_back(a < b ? static_cast<int>(g) + 1 : -static_cast<int>(g) - 1);
  };
  for (const auto& t : X.triangles()) {
    Word w;
    step(t[0], t[1], w);
    step(t[1], t[2], w);
    step(t[2], t[0], w);
    P.group.relators.push_back(w);
  }
  return P;
}

}  // namespace grext
