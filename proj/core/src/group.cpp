#include "orbigraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace orbigraph {

std::string finite_group::name_of(Id a) const {
  if (a >= 0 && a < static_cast<Id>(names.size()) && !names[a].empty()) return names[a];
  return "k" + std::to_string(a);
}

static void check_group_shape(const finite_group& g) {
  const Id n = g.order();
  if (n == 0) throw malformed_input_error("group: empty element set");
  if (g.inv.size() != static_cast<std::size_t>(n))
    throw malformed_input_error("group: inv size mismatch");
  if (g.identity < 0 || g.identity >= n) throw malformed_input_error("group: identity out of range");
  for (Id a = 0; a < n; ++a) {
    if (g.mul[a].size() != static_cast<std::size_t>(n))
      throw malformed_input_error("group: ragged multiplication table");
    for (Id b = 0; b < n; ++b)
      if (g.mul[a][b] < 0 || g.mul[a][b] >= n)
        throw malformed_input_error("group: table entry out of range");
    if (g.inv[a] < 0 || g.inv[a] >= n) throw malformed_input_error("group: inv entry out of range");
  }
}

validation_report validate_group(const finite_group& g) {
  check_group_shape(g);
  validation_report rep;
  const Id n = g.order();
  const Id e = g.identity;
  for (Id a = 0; a < n; ++a) {
    if (g.mul[e][a] != a || g.mul[a][e] != a)
      rep.add("group-identity", {a}, "identity does not fix element " + std::to_string(a));
    if (g.mul[g.inv[a]][a] != e || g.mul[a][g.inv[a]] != e)
      rep.add("group-inverse", {a}, "inv(" + std::to_string(a) + ") is not a two-sided inverse");
  }
  for (Id a = 0; a < n && rep.violations.size() < 64; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) {
          rep.add("group-associativity", {a, b, c}, "(ab)c != a(bc)");
          if (rep.violations.size() >= 64) break;
        }
  return rep;
}

finite_group cyclic_group(int n) {
  finite_group g;
  g.mul.assign(n, std::vector<Id>(n));
  g.inv.assign(n, 0);
  g.names.resize(n);
  for (Id a = 0; a < n; ++a) {
    for (Id b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    g.inv[a] = (n - a) % n;
    g.names[a] = "r" + std::to_string(a);
  }
  g.identity = 0;
  return g;
}

finite_group symmetric_group(int n) {
  std::vector<std::vector<Id>> perms;
  std::vector<Id> base(n);
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  auto index_of = [&](const std::vector<Id>& p) {
    return static_cast<Id>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };

  const Id m = static_cast<Id>(perms.size());
  finite_group g;
  g.mul.assign(m, std::vector<Id>(m));
  g.inv.assign(m, 0);
  g.names.resize(m);
  for (Id a = 0; a < m; ++a) {
    for (Id b = 0; b < m; ++b) {
      std::vector<Id> ab(n);
      for (int i = 0; i < n; ++i) ab[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      g.mul[a][b] = index_of(ab);
    }
    std::vector<Id> ia(n);
    for (int i = 0; i < n; ++i) ia[perms[a][i]] = i;
    g.inv[a] = index_of(ia);
    std::string nm;
    for (int i = 0; i < n; ++i) nm += std::to_string(perms[a][i]);
    g.names[a] = "p" + nm;
  }
  g.identity = 0;
  return g;
}

finite_group direct_product(const finite_group& a, const finite_group& b) {
  const Id na = a.order(), nb = b.order();
  const Id n = na * nb;
  finite_group g;
  g.mul.assign(n, std::vector<Id>(n));
  g.inv.assign(n, 0);
  g.names.resize(n);
  auto enc = [nb](Id x, Id y) { return x * nb + y; };
  for (Id x1 = 0; x1 < na; ++x1)
    for (Id y1 = 0; y1 < nb; ++y1) {
      const Id i = enc(x1, y1);
      for (Id x2 = 0; x2 < na; ++x2)
        for (Id y2 = 0; y2 < nb; ++y2)
          g.mul[i][enc(x2, y2)] = enc(a.mul[x1][x2], b.mul[y1][y2]);
      g.inv[i] = enc(a.inv[x1], b.inv[y1]);
      g.names[i] = a.name_of(x1) + "." + b.name_of(y1);
    }
  g.identity = enc(a.identity, b.identity);
  return g;
}

std::vector<std::vector<Id>> all_subgroups(const finite_group& g) {
  const Id n = g.order();
  // Close random-free: grow from each subset of generators? For small n,
  // enumerate closures of all subsets is wasteful; instead collect closures
  // of generated subgroups breadth-first from the trivial one.
  std::set<std::vector<Id>> found;
  std::vector<Id> trivial = {g.identity};
  found.insert(trivial);
  std::vector<std::vector<Id>> queue = {trivial};
  auto closure = [&](std::vector<Id> elems) {
    std::set<Id> s(elems.begin(), elems.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Id> cur(s.begin(), s.end());
      for (Id x : cur)
        for (Id y : cur) {
          if (s.insert(g.mul[x][y]).second) grew = true;
          if (s.insert(g.inv[x]).second) grew = true;
        }
    }
    return std::vector<Id>(s.begin(), s.end());
  };
  while (!queue.empty()) {
    std::vector<Id> h = queue.back();
    queue.pop_back();
    for (Id x = 0; x < n; ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<Id> gen = h;
      gen.push_back(x);
      std::vector<Id> c = closure(gen);
      if (found.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<std::vector<Id>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

embedded_subgroup make_subgroup(const finite_group& g, std::vector<Id> elements) {
  std::sort(elements.begin(), elements.end());
  const Id m = static_cast<Id>(elements.size());
  auto local = [&](Id parent) {
    auto it = std::lower_bound(elements.begin(), elements.end(), parent);
    if (it == elements.end() || *it != parent)
      throw precondition_error("make_subgroup: element set not closed");
    return static_cast<Id>(it - elements.begin());
  };
  embedded_subgroup res;
  res.into_parent = elements;
  res.group.mul.assign(m, std::vector<Id>(m));
  res.group.inv.assign(m, 0);
  res.group.names.resize(m);
  for (Id i = 0; i < m; ++i) {
    for (Id j = 0; j < m; ++j) res.group.mul[i][j] = local(g.mul[elements[i]][elements[j]]);
    res.group.inv[i] = local(g.inv[elements[i]]);
    res.group.names[i] = g.name_of(elements[i]);
  }
  res.group.identity = local(g.identity);
  return res;
}

}  // namespace orbigraph
