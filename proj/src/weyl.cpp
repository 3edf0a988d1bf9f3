#include "hecke_atlas/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "hecke_atlas/error.hpp"

namespace hecke_atlas::weyl {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.sign.assign(n, 1);
  return w;
}

int SignedPermutation::negatives() const {
  return static_cast<int>(std::count(sign.begin(), sign.end(), -1));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& b) const {
  SignedPermutation c;
  const int n = rank();
  c.perm.resize(n);
  c.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    c.perm[i] = perm[b.perm[i]];
    c.sign[i] = b.sign[i] * sign[b.perm[i]];
  }
  return c;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation c;
  const int n = rank();
  c.perm.resize(n);
  c.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    c.perm[perm[i]] = i;
    c.sign[perm[i]] = sign[i];
  }
  return c;
}

std::vector<int> SignedPermutation::apply(const std::vector<int>& v) const {
  std::vector<int> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = sign[i] * v[i];
  return out;
}

std::string SignedPermutation::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rank(); ++i) {
    if (i) out += " ";
    out += (sign[i] < 0 ? "-" : "") + std::to_string(perm[i] + 1);
  }
  return out + "]";
}

std::vector<SignedPermutation> weyl_group(int n, bool full) {
  if (n < 1 || n > 5) throw InputError("weyl_group: rank must lie in 1..5");
  std::vector<SignedPermutation> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      SignedPermutation w;
      w.perm = p;
      for (int i = 0; i < n; ++i) w.sign.push_back((mask >> i) & 1 ? -1 : 1);
      if (full || w.in_w0()) out.push_back(std::move(w));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int LeviDescriptor::rank() const {
  return std::accumulate(composition.begin(), composition.end(), 0) + tail_rank;
}

std::string LeviDescriptor::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < composition.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(composition[i]);
  }
  return out + "|" + std::to_string(tail_rank) + ")";
}

std::vector<LeviDescriptor> standard_levis(int n) {
  std::vector<LeviDescriptor> out;
  for (int tail = 0; tail <= n; ++tail) {
    const int rest = n - tail;
    if (rest == 0) {
      out.push_back({{}, tail});
      continue;
    }
    // compositions of rest via cut masks
    for (int mask = 0; mask < (1 << (rest - 1)); ++mask) {
      LeviDescriptor m{{}, tail};
      int len = 1;
      for (int i = 0; i < rest - 1; ++i) {
        if ((mask >> i) & 1) {
          m.composition.push_back(len);
          len = 1;
        } else {
          ++len;
        }
      }
      m.composition.push_back(len);
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::string decorations_to_string(const std::vector<Decoration>& d) {
  std::string out;
  for (const auto& x : d) out += std::to_string(x.label) + (x.self_dual ? "s" : "n");
  return out;
}

namespace {

struct Layout {
  int n = 0;
  std::vector<int> block_of;   // -1 on the tail
  std::vector<int> block_start;
  std::vector<std::vector<int>> roots;
};

std::vector<int> root(int n, int i, int si, int j, int sj) {
  std::vector<int> r(n, 0);
  r[i] = si;
  r[j] = sj;
  return r;
}

Layout layout_of(const LeviDescriptor& m) {
  Layout l;
  l.n = m.rank();
  if (l.n < 1 || l.n > 5) throw InputError("Levi rank must lie in 1..5");
  for (int b : m.composition)
    if (b < 1) throw InputError("Levi blocks must be positive");
  int c = 0;
  for (std::size_t b = 0; b < m.composition.size(); ++b) {
    l.block_start.push_back(c);
    for (int k = 0; k < m.composition[b]; ++k) l.block_of.push_back(static_cast<int>(b));
    for (int i = c; i < c + m.composition[b]; ++i)
      for (int j = c; j < c + m.composition[b]; ++j)
        if (i != j) l.roots.push_back(root(l.n, i, 1, j, -1));
    c += m.composition[b];
  }
  const int tail_start = c;
  for (int k = 0; k < m.tail_rank; ++k) l.block_of.push_back(-1);
  for (int i = tail_start; i < l.n; ++i)
    for (int j = tail_start; j < l.n; ++j)
      if (i != j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) l.roots.push_back(root(l.n, i, si, j, sj));
  std::sort(l.roots.begin(), l.roots.end());
  l.roots.erase(std::unique(l.roots.begin(), l.roots.end()), l.roots.end());
  return l;
}

bool normalizes(const Layout& l, const SignedPermutation& w) {
  for (int i = 0; i < l.n; ++i)
    if ((l.block_of[i] == -1) != (l.block_of[w.perm[i]] == -1)) return false;
  for (const auto& r : l.roots)
    if (!std::binary_search(l.roots.begin(), l.roots.end(), w.apply(r))) return false;
  return true;
}

BlockImage block_image(const Layout& l, const SignedPermutation& w) {
  BlockImage g;
  for (int s : l.block_start) {
    g.perm.push_back(l.block_of[w.perm[s]]);
    g.sign.push_back(w.sign[s]);
  }
  return g;
}

bool stabilizes(const BlockImage& g, const std::vector<Decoration>& d) {
  for (int b = 0; b < g.rank(); ++b) {
    const auto& src = d[b];
    const auto& dst = d[g.perm[b]];
    if (g.sign[b] < 0 && !src.self_dual) return false;
    if (!(dst == src)) return false;
  }
  return true;
}

bool positive(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return x > 0;
  return false;
}

std::vector<BlockImage> generate(const std::vector<BlockImage>& gens, int rank) {
  std::set<BlockImage> seen{SignedPermutation::identity(rank)};
  std::vector<BlockImage> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<BlockImage> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = g * x;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

RelativeWeyl relative_weyl(const LeviDescriptor& m) {
  const auto l = layout_of(m);
  RelativeWeyl out;
  const auto trivial = SignedPermutation::identity(static_cast<int>(m.composition.size()));
  for (const auto& w : weyl_group(l.n, true)) {
    if (!normalizes(l, w)) continue;
    ++out.normalizer_size;
    auto g = block_image(l, w);
    if (g == trivial) {
      ++out.wm_size;
      if (w.in_w0()) ++out.wm0_size;
    }
    out.W.insert(g);
    if (w.in_w0()) {
      ++out.normalizer0_size;
      out.W0.insert(g);
    }
  }
  out.equal = out.W == out.W0;
  if (!out.equal) {
    for (const auto& w : weyl_group(l.n, true)) {
      if (!normalizes(l, w)) continue;
      if (!out.W0.count(block_image(l, w))) {
        out.counterexample = w;
        break;
      }
    }
  }
  return out;
}

bool predicts_weyl_equals_w0(const LeviDescriptor& m) {
  if (m.tail_rank > 0) return true;
  for (int b : m.composition)
    if (b % 2 == 1) return false;
  return true;
}

OrbitStabilizers orbit_stabilizers(const LeviDescriptor& m, const std::vector<Decoration>& decorations) {
  if (decorations.size() != m.composition.size()) throw InputError("one decoration per GL block is required");
  for (std::size_t i = 0; i < decorations.size(); ++i)
    for (std::size_t j = 0; j < decorations.size(); ++j)
      if (decorations[i].label == decorations[j].label &&
          (m.composition[i] != m.composition[j] || decorations[i].self_dual != decorations[j].self_dual))
        throw InputError("equal labels need equal block sizes and duality flags");
  const auto rw = relative_weyl(m);
  OrbitStabilizers out;
  std::set<BlockImage> w0o;
  for (const auto& g : rw.W)
    if (stabilizes(g, decorations)) out.W_O.push_back(g);
  for (const auto& g : rw.W0)
    if (stabilizes(g, decorations)) {
      out.W0_O.push_back(g);
      w0o.insert(g);
    }
  out.equal = out.W_O.size() == out.W0_O.size();
  if (!out.equal)
    for (const auto& g : out.W_O)
      if (!w0o.count(g)) {
        out.counterexample = g;
        break;
      }

  const int b = static_cast<int>(m.composition.size());
  std::vector<BlockImage> reflections;
  auto consider = [&](std::vector<int> alpha, BlockImage refl) {
    if (!w0o.count(refl)) return;
    out.sigma_plus.push_back(std::move(alpha));
    reflections.push_back(std::move(refl));
  };
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      if (m.composition[i] != m.composition[j]) continue;
      auto swap = SignedPermutation::identity(b);
      std::swap(swap.perm[i], swap.perm[j]);
      std::vector<int> minus(b, 0), plus(b, 0);
      minus[i] = 1, minus[j] = -1;
      plus[i] = 1, plus[j] = 1;
      consider(minus, swap);
      auto neg = swap;
      neg.sign[i] = neg.sign[j] = -1;
      consider(plus, neg);
    }
    auto flip = SignedPermutation::identity(b);
    flip.sign[i] = -1;
    std::vector<int> single(b, 0);
    single[i] = 1;
    consider(single, flip);
  }
  out.W0_sigma = generate(reflections, b);

  std::set<std::vector<int>> sigma;
  for (const auto& a : out.sigma_plus) {
    sigma.insert(a);
    std::vector<int> neg(a);
    for (int& x : neg) x = -x;
    sigma.insert(neg);
  }
  for (const auto& g : out.W_O) {
    bool keeps = true;
    for (const auto& a : out.sigma_plus) {
      auto img = g.apply(a);
      if (!positive(img) || !sigma.count(img)) keeps = false;
    }
    if (keeps) {
      out.R.push_back(g);
      if (w0o.count(g)) out.R0.push_back(g);
    }
  }

  const std::set<BlockImage> wo(out.W_O.begin(), out.W_O.end());
  const std::set<BlockImage> ws(out.W0_sigma.begin(), out.W0_sigma.end());
  bool ok = out.W0_sigma.size() * out.R.size() == out.W_O.size();
  for (const auto& w : out.W0_sigma) ok = ok && wo.count(w);
  std::set<BlockImage> products;
  for (const auto& w : out.W0_sigma)
    for (const auto& r : out.R) products.insert(w * r);
  ok = ok && products == wo;
  for (const auto& r : out.R) {
    if (ws.count(r) && !(r == SignedPermutation::identity(b))) ok = false;
    for (const auto& w : out.W0_sigma)
      if (!ws.count(r * w * r.inverse())) ok = false;
  }
  out.semidirect = ok;
  return out;
}

bool predicts_orbit_weyl_equals_w0(const LeviDescriptor& m, const std::vector<Decoration>& decorations) {
  if (m.tail_rank > 0) return true;
  for (std::size_t i = 0; i < m.composition.size(); ++i)
    if (m.composition[i] % 2 == 1 && decorations[i].self_dual) return false;
  return true;
}

std::vector<std::vector<Decoration>> decoration_assignments(const LeviDescriptor& m, int max_labels) {
  const std::size_t b = m.composition.size();
  std::vector<std::vector<int>> labelings;
  std::vector<int> cur;
  // restricted growth strings
  auto rec = [&](auto&& self, int used) -> void {
    if (cur.size() == b) {
      labelings.push_back(cur);
      return;
    }
    const std::size_t pos = cur.size();
    for (int l = 0; l <= std::min(used, max_labels - 1); ++l) {
      bool fits = true;
      for (std::size_t j = 0; j < pos; ++j)
        if (cur[j] == l && m.composition[j] != m.composition[pos]) fits = false;
      if (!fits) continue;
      cur.push_back(l);
      self(self, std::max(used, l + 1));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<std::vector<Decoration>> out;
  for (const auto& lab : labelings) {
    const int labels = lab.empty() ? 0 : *std::max_element(lab.begin(), lab.end()) + 1;
    for (int mask = 0; mask < (1 << labels); ++mask) {
      std::vector<Decoration> d;
      for (int l : lab) d.push_back({l, ((mask >> l) & 1) != 0});
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace hecke_atlas::weyl
