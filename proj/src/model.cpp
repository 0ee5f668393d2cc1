// SPDX-License-Identifier: Apache-2.0
#include "pca/model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pca {

namespace {

struct Labeled {
  EpsPoint at;
  Id label;
};

// Extremes of a proper model come as a rotated sorted run; rotate it into
// place and sort only when that fails.
template <class T, class Less>
void sort_cyclic(std::vector<T>& v, Less less) {
  if (v.empty()) return;
  std::rotate(v.begin(), std::min_element(v.begin(), v.end(), less), v.end());
  if (!std::is_sorted(v.begin(), v.end(), less)) std::sort(v.begin(), v.end(), less);
}

std::vector<Id> extreme_word(const PowerModel& m) {
  auto less = [](const Labeled& a, const Labeled& b) { return a.at < b.at; };
  std::vector<Labeled> starts, ends, ext(2 * m.arcs.size());
  starts.reserve(m.arcs.size());
  ends.reserve(m.arcs.size());
  for (Id i = 0; i < m.n(); ++i) {
    starts.push_back({EpsPoint{m.arcs[i].s, 0}, 2 * i});
    ends.push_back({m.arcs[i].t, 2 * i + 1});
  }
  sort_cyclic(starts, less);
  sort_cyclic(ends, less);
  std::merge(starts.begin(), starts.end(), ends.begin(), ends.end(), ext.begin(), less);
  std::vector<Id> word;
  word.reserve(ext.size());
  for (const auto& e : ext) word.push_back(e.label);
  return word;
}

// Unwrapped end of arc a, strictly after its beginning.
Int unwrapped_end(const Model& m, Id a) {
  const Arc& x = m.arcs[a];
  return x.t > x.s ? x.t : x.t + m.c;
}

}  // namespace

bool Model::contains_point(Id a, Int x) const {
  Int off = mod(x - arcs[a].s, c);
  return off > 0 && off < length(a);
}

bool Model::intersects(Id a, Id b) const {
  if (a == b) return true;
  return contains_point(a, arcs[b].s) || contains_point(b, arcs[a].s);
}

bool arc_inside(const Arc& a, const Arc& b, Int c) {
  Int sa = mod(a.s - b.s, c), ta = mod(a.t - b.s, c), tb = mod(b.t - b.s, c);
  return sa > 0 && sa < ta && ta < tb;
}

Model validate(Int c, bool line, std::vector<Arc> raw) {
  if (raw.empty()) throw Error(Errc::EmptyModel, "no arcs");
  if (c < 1) throw Error(Errc::InvalidParams, "circle length must be positive");
  std::vector<Int> starts, ends, pts(2 * raw.size());
  starts.reserve(raw.size());
  ends.reserve(raw.size());
  for (const Arc& a : raw) {
    for (Int x : {a.s, a.t})
      if (x < 0 || x >= c) throw Error(Errc::OutOfRange, "extreme " + to_string(x) + " outside [0," + to_string(c) + ")");
    if (line && a.t < a.s)
      throw Error(Errc::ExternalArcInPig, "arc (" + to_string(a.s) + "," + to_string(a.t) + ") wraps");
    starts.push_back(a.s);
    ends.push_back(a.t);
  }
  sort_cyclic(starts, std::less<Int>());
  sort_cyclic(ends, std::less<Int>());
  std::merge(starts.begin(), starts.end(), ends.begin(), ends.end(), pts.begin());
  auto dup = std::adjacent_find(pts.begin(), pts.end());
  if (dup != pts.end()) throw Error(Errc::DuplicateExtreme, "extreme " + to_string(*dup) + " repeated");

  sort_cyclic(raw, [](const Arc& a, const Arc& b) { return a.s < b.s; });
  // Containment anywhere implies containment between cyclic neighbours.
  std::size_t n = raw.size();
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const Arc& a = raw[i];
      const Arc& b = raw[(i + 1) % n];
      if (arc_inside(a, b, c) || arc_inside(b, a, c))
        throw Error(Errc::NotProper, "arcs (" + to_string(a.s) + "," + to_string(a.t) + ") and (" +
                                          to_string(b.s) + "," + to_string(b.t) + ") are nested");
    }
  }
  return Model{c, line, std::move(raw)};
}

Nav navigation(const Model& m) {
  const Id n = m.n();
  Nav nav;
  nav.L.resize(n);
  nav.R.resize(n);
  nav.Fl.resize(n);
  nav.Fr.resize(n);
  nav.Hl.assign(n, kNone);
  nav.Hr.assign(n, kNone);

  // S[j] = beginnings unwrapped over [0, 2n); E[j] = ends unwrapped over [-n, n).
  std::vector<Int> S(2 * n), E(2 * n);
  for (Id j = 0; j < 2 * n; ++j) S[j] = m.arcs[j % n].s + (j >= n ? m.c : 0);
  for (Id j = 0; j < 2 * n; ++j) E[j] = unwrapped_end(m, j % n) - (j < n ? m.c : 0);

  for (Id i = 0; i < n; ++i) {
    nav.L[i] = (i + n - 1) % n;
    nav.R[i] = (i + 1) % n;
    Int T = unwrapped_end(m, i);
    auto it = std::upper_bound(S.begin() + i, S.begin() + i + n, T - 1);
    nav.Fr[i] = static_cast<Id>((it - S.begin() - 1) % n);
    // E index of arc j is j + n; search arcs i-n+1 .. i.
    auto lo = E.begin() + (i + 1);
    auto hi = E.begin() + (i + n + 1);
    auto jt = std::upper_bound(lo, hi, m.arcs[i].s);
    nav.Fl[i] = static_cast<Id>(((jt - E.begin()) - n + n) % n);
  }

  std::vector<Id> cnt_l(n, 0), cnt_r(n, 0), cand_l(n, kNone), cand_r(n, kNone);
  for (Id a = 0; a < n; ++a) {
    Id x = nav.Fr[a];
    if (nav.Fr[nav.R[a]] != x) {
      ++cnt_l[x];
      cand_l[x] = a;
    }
    Id y = nav.Fl[a];
    if (nav.Fl[nav.L[a]] != y) {
      ++cnt_r[y];
      cand_r[y] = a;
    }
  }
  for (Id x = 0; x < n; ++x) {
    if (cnt_l[x] == 1) nav.Hl[x] = cand_l[x];
    if (cnt_r[x] == 1) nav.Hr[x] = cand_r[x];
  }
  // When every arc has the same F_r (or F_l) there is no boundary to pick;
  // the arc itself closes the block.
  if (n > 0 && std::all_of(nav.Fr.begin(), nav.Fr.end(), [&](Id v) { return v == nav.Fr[0]; }))
    nav.Hl[nav.Fr[0]] = nav.Fr[0];
  if (n > 0 && std::all_of(nav.Fl.begin(), nav.Fl.end(), [&](Id v) { return v == nav.Fl[0]; }))
    nav.Hr[nav.Fl[0]] = nav.Fl[0];
  return nav;
}

bool is_pig(const Model& m) {
  for (Id a = 0; a < m.n(); ++a)
    if (m.external(a)) return false;
  return true;
}

Id omega(const Model& m) { return omega(m, navigation(m)); }

Id omega(const Model& m, const Nav& nav) {
  const Id n = m.n();
  if (is_pig(m)) return n;
  for (Id v = 0; v < n; ++v)
    if (nav.Fr[nav.Fr[v]] == nav.Fr[v]) return 2;
  // Every F_r step now advances; find the fewest steps that wrap past the start.
  int levels = 1;
  while ((Id{1} << levels) < n + 1) ++levels;
  std::vector<std::vector<Id>> up(levels + 1, std::vector<Id>(n));
  for (Id v = 0; v < n; ++v) up[0][v] = (nav.Fr[v] - v + n) % n;
  for (int b = 1; b <= levels; ++b)
    for (Id v = 0; v < n; ++v) {
      Id first = up[b - 1][v];
      Id second = first >= n ? 0 : up[b - 1][(v + first) % n];
      up[b][v] = std::min<Id>(n, first + second);
    }
  Id best = n + 2;
  for (Id v = 0; v < n; ++v) {
    Id total = 0, steps = 0, cur = v;
    for (int b = levels; b >= 0; --b) {
      if (total + up[b][cur] < n) {
        total += up[b][cur];
        cur = (cur + up[b][cur]) % n;
        steps += Id{1} << b;
      }
    }
    best = std::min(best, steps + 1);
  }
  return best;
}

bool PowerModel::contains_point(Id a, Int x) const {
  EpsPoint off{mod(x - arcs[a].s, c), 0};
  EpsPoint end{mod(arcs[a].t.base - arcs[a].s, c), arcs[a].t.eps};
  return off > EpsPoint{0, 0} && off < end;
}

PowerModel power(const Model& m, Id k) { return power(m, navigation(m), k); }

PowerModel power(const Model& m, const Nav& nav, Id k) {
  const Id n = m.n();
  if (k < 0) throw Error(Errc::InvalidParams, "negative power");
  if (k >= omega(m, nav)) throw Error(Errc::KTooLarge, "k must be below omega");
  std::vector<Id> target(n);
  std::iota(target.begin(), target.end(), 0);
  for (Id step = 0; step < k; ++step)
    for (Id a = 0; a < n; ++a) target[a] = nav.Fr[target[a]];

  PowerModel p;
  p.c = m.c;
  p.arcs.resize(n);
  if (is_pig(m)) {
    // Arcs stuck at the last interval share a target without sharing a
    // point, so the literal count repeats; rank by beginning instead.
    std::vector<Int> rank(n, 0);
    for (Id a = 0; a < n; ++a) p.arcs[a] = PowerArc{m.arcs[a].s, EpsPoint{m.arcs[target[a]].s, ++rank[target[a]]}};
    return p;
  }
  for (Id a = 0; a < n; ++a) {
    Int x = 0;
    for (Id b = nav.L[a]; b != a && m.contains_point(b, m.arcs[a].s); b = nav.L[b])
      if (target[b] == target[a]) ++x;
    p.arcs[a] = PowerArc{m.arcs[a].s, EpsPoint{m.arcs[target[a]].s, x + 1}};
  }
  return p;
}

PowerModel as_power(const Model& m) {
  PowerModel p;
  p.c = m.c;
  p.arcs.reserve(m.arcs.size());
  for (const Arc& a : m.arcs) p.arcs.push_back(PowerArc{a.s, EpsPoint{a.t, 0}});
  return p;
}

Int uniform_length(const Model& u) {
  Int len = u.length(0);
  for (Id a = 1; a < u.n(); ++a)
    if (u.length(a) != len) throw Error(Errc::NotUniform, "arc lengths differ");
  return len;
}

Model multiply(const Model& u, Int i) {
  if (i < 0) throw Error(Errc::InvalidParams, "negative multiple");
  Int ell = uniform_length(u) - 1;
  std::vector<Arc> arcs;
  arcs.reserve(u.arcs.size());
  for (const Arc& a : u.arcs) {
    Int t = mod(checked_add(a.s, checked_add(checked_mul(i, ell), 1)), u.c);
    if (t == a.s) throw Error(Errc::ExtremeCollision, "multiple covers the circle");
    arcs.push_back(Arc{a.s, t});
  }
  try {
    return validate(u.c, false, std::move(arcs));
  } catch (const Error& e) {
    if (e.code() == Errc::DuplicateExtreme) throw Error(Errc::ExtremeCollision, e.what());
    throw;
  }
}

Model to_even(const Model& m) {
  std::vector<Arc> arcs;
  arcs.reserve(m.arcs.size());
  for (const Arc& a : m.arcs) arcs.push_back(Arc{2 * a.s, 2 * a.t + 1});
  return validate(checked_mul(2, m.c), m.line, std::move(arcs));
}

Model normalize(const Model& m) {
  Int shift = m.arcs[0].s;
  if (shift == 0) return m;
  std::vector<Arc> arcs;
  arcs.reserve(m.arcs.size());
  for (const Arc& a : m.arcs) arcs.push_back(Arc{a.s - shift, mod(a.t - shift, m.c)});
  bool line = m.line && std::all_of(arcs.begin(), arcs.end(), [](const Arc& a) { return a.s < a.t; });
  return validate(m.c, line, std::move(arcs));
}

bool equivalent(const PowerModel& a, const PowerModel& b) {
  if (a.n() != b.n()) return false;
  return extreme_word(a) == extreme_word(b);
}

bool equivalent(const Model& a, const Model& b) { return equivalent(as_power(a), as_power(b)); }
bool equivalent(const Model& a, const PowerModel& b) { return equivalent(as_power(a), b); }

Unrolled unroll(const Model& m, Id lambda) {
  if (lambda < 1) throw Error(Errc::InvalidParams, "lambda must be positive");
  if (is_pig(m)) throw Error(Errc::PigInput, "unrolling needs an external arc");
  Int big = checked_mul(m.c, lambda);
  Unrolled u;
  u.model.c = big;
  for (Id i = 0; i < lambda; ++i)
    for (Id a = 0; a < m.n(); ++a) {
      const Arc& x = m.arcs[a];
      Int wrap = x.s > x.t ? 1 : 0;
      u.model.arcs.push_back(Arc{x.s + i * m.c, mod(x.t + m.c * (i + wrap), big)});
      u.copy_of.emplace_back(a, i);
    }
  // Copies are already in beginning order; validate for safety.
  u.model = validate(big, false, u.model.arcs);
  return u;
}

bool Digraph::has_edge(Id a, Id b) const {
  return std::find(out[a].begin(), out[a].end(), b) != out[a].end();
}

Digraph digraph(const Model& m) {
  Nav nav = navigation(m);
  Digraph d;
  d.n = m.n();
  d.out.resize(d.n);
  for (Id a = 0; a < d.n; ++a)
    for (Id b = nav.R[a]; b != a && m.contains_point(a, m.arcs[b].s); b = nav.R[b]) d.out[a].push_back(b);
  return d;
}

Digraph digraph(const PowerModel& m) {
  Digraph d;
  d.n = m.n();
  d.out.resize(d.n);
  for (Id a = 0; a < d.n; ++a)
    for (Id off = 1; off < d.n; ++off) {
      Id b = (a + off) % d.n;
      if (m.contains_point(a, m.arcs[b].s)) d.out[a].push_back(b);
    }
  return d;
}

Id gap_count(const Model& m) {
  Id gaps = 0;
  for (Id a = 1; a < m.n(); ++a)
    if (!m.intersects(a - 1, a)) ++gaps;
  return gaps;
}

Classification classify(const Model& m) { return classify(m, navigation(m)); }

Classification classify(const Model& m, const Nav& nav) {
  Classification c;
  c.pig = is_pig(m);
  c.spca = !c.pig;
  Id n = m.n();
  Id gaps = gap_count(m) + (n > 1 && !m.intersects(n - 1, 0) ? 1 : 0);
  c.connected = n == 1 || gaps <= 1;
  c.saturated = true;
  for (Id a = 0; a < n; ++a)
    if (nav.Fl[a] == a) c.saturated = false;
  return c;
}

}  // namespace pca
