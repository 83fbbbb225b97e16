#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "legch/augment.hpp"
#include "legch/disks.hpp"
#include "legch/surgery.hpp"

namespace legch {

struct CatalogResult {
  FrontDiagram d;
  std::map<std::string, Augmentation> augs;  // suggested augmentations by name
};

inline Augmentation aug_of(const FrontDiagram& d,
                           const std::map<std::string, Int>& values) {
  Augmentation a = Augmentation::zero(d.gens.size());
  for (auto& [name, v] : values) a.values[d.gen_index(name)] = v;
  return a;
}

inline std::map<std::string, Int> aug_values(const FrontDiagram& d,
                                             const Augmentation& a) {
  std::map<std::string, Int> m;
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi)
    if (a.values[gi] != 0) m[d.gens[gi].name] = a.values[gi];
  return m;
}

// Connected sum at a vertically adjacent pair (slot, slot+1) of distinct
// components, inserting nested kinks first when the Maslov potentials differ.
// Kink crossings are named <cname>k1, <cname>k2, ... and their cusps
// <cname>ka1, ...
inline FrontDiagram sum_with_kinks(const FrontDiagram& d0, int gap, int slot,
                                   const std::string& cname) {
  FrontDiagram d = d0;
  PotentialAssignment pa = maslov_potential(d);
  if (slot < 1 || slot + 1 > d.strands_at(gap))
    throw Error(Errc::SlotOutOfRange, "sum slot " + std::to_string(slot));
  int up = d.seg[gap][slot - 1], lo = d.seg[gap][slot];
  if (d.strand_comp[up] == d.strand_comp[lo])
    throw Error(Errc::SameComponent, "connected sum needs two components");
  long delta = pa.strand_pot[up] - pa.strand_pot[lo];
  if (delta < 0)
    throw Error(Errc::PotentialMismatch,
                "kinks only raise the lower strand; pick a site with "
                "pot(upper) >= pot(lower)");
  int g = gap, sl = slot;
  for (long j = 1; j <= delta; ++j) {
    d = r1_above(d, g, sl + 1, cname + "k" + std::to_string(j),
                 cname + "ka" + std::to_string(j));
    g += 1;  // between the new lc and its crossing
  }
  pa = maslov_potential(d);
  return connected_sum(d, pa, g, sl, cname);
}

// --- basic fronts -----------------------------------------------------------

inline FrontDiagram catalog_unknot() {
  return parse_front("lc 1\nbp 2 +\nrc 1\n");
}

// Figure 2 trefoil: d a1 = 1 + b1 + b3 + b1 b2 b3, d a2 = 1 - b1 t - b3 t - b3 b2 b1 t.
inline FrontDiagram catalog_trefoil() {
  return parse_front(
      "lc 1\nlc 3\nx 2 b1\nx 2 b2\nx 2 b3\nbp 4 +\nrc 1 a1\nrc 1 a2\n");
}

inline Augmentation trefoil_eps_n(const FrontDiagram& d, long n) {
  return aug_of(d, {{"b1", -1}, {"b2", n}, {"b3", 0}});
}

// Standard Hopf link with Maslov shift: |b1| = k, |b2| = -k.
inline FrontDiagram catalog_hopf(long k) {
  std::vector<Event> evs = {
      Event{EventKind::LeftCusp, 1},
      Event{EventKind::LeftCusp, 3},
      Event{EventKind::Crossing, 2, 0, "b1", true},
      Event{EventKind::BasePoint, 3, +1, "", false, 0},
      Event{EventKind::Crossing, 2, 0, "b2", true},
      Event{EventKind::BasePoint, 4, +1, "", false, -k - 1},
      Event{EventKind::RightCusp, 1, 0, "a1", true},
      Event{EventKind::RightCusp, 1, 0, "a2", true},
  };
  return build_diagram(evs);
}

// Hopf pipeline: kinks to equalize potentials, then the connected sum; the
// trivial augmentation extends by c -> -1 (and +-1 on kink crossings).
inline CatalogResult catalog_hopf_sum(long k) {
  FrontDiagram d = catalog_hopf(k);
  // right of b2 the comp-1 lower strand sits above the comp-2 upper strand
  // with potential gap k; between b1 and b2 the roles are swapped (gap -k)
  FrontDiagram nd = k >= 0
                        ? sum_with_kinks(d, gen_event_index(d, "a1"), 2, "c")
                        : sum_with_kinks(d, gen_event_index(d, "b2"), 2, "c");
  PotentialAssignment pa = maslov_potential(nd);
  auto table = differential_table(nd, pa);
  Augmentation eps =
      extend_augmentation(nd, pa, table, {}, {{"c", -1}});
  return {nd, {{"eps0", eps}}};
}

// Trefoil interlaced with unknots Lambda_{1,k_i} threading the two bottom
// strands between b2 and b3 (Figure 3).  Augmentations extend by zero.
inline FrontDiagram catalog_trefoil_interlaced(const std::vector<long>& ks) {
  FrontDiagram d = catalog_trefoil();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    std::string s = std::to_string(i + 1);
    int gap = gen_event_index(d, "b3");  // window between b2 and b3
    d = interlace_unknot(d, gap, 2,
                         InterlaceNames{{"d1u" + s, "d2u" + s},
                                        {"c2u" + s, "c1u" + s},
                                        "a0u" + s},
                         ks[i]);
  }
  return d;
}

// Lambda^T_{kbar}: interlace then sum each unknot into the trefoil.  The base
// augmentation is the trefoil's eps_n extended by zero; sum crossings go to -1
// and kink crossings are solved.
inline CatalogResult catalog_lambda_t(const std::vector<long>& ks, long n) {
  FrontDiagram d = catalog_trefoil_interlaced(ks);
  std::map<std::string, Int> defaults;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    std::string s = std::to_string(i + 1);
    if (ks[i] <= -1) {
      // before the unknot's right cusp: trefoil bottom (pot 0) above the
      // unknot top (pot k+1 <= 0)
      int gap = gen_event_index(d, "a0u" + s);
      d = sum_with_kinks(d, gap, 4, "cu" + s);
    } else {
      // between the ascent crossings: unknot top (pot k+1) above the
      // trefoil bottom (pot 0)
      int gap = gen_event_index(d, "d2u" + s);
      d = sum_with_kinks(d, gap, 4, "cu" + s);
    }
    defaults["cu" + s] = -1;
  }
  PotentialAssignment pa = maslov_potential(d);
  auto table = differential_table(d, pa);
  Augmentation eps = extend_augmentation(
      d, pa, table, {{"b1", -1}, {"b2", n}}, defaults);
  return {d, {{"eps_n", eps}}};
}

// Lambda_{m,k}: trefoil with an unknot threading the right window (Figure 8);
// the trefoil has Maslov shift k relative to the unknot, |b7| = -|b6| = k.
inline CatalogResult catalog_lambda_mk(long m, long k) {
  FrontDiagram d = catalog_trefoil();
  int gap = gen_event_index(d, "a1");  // window right of b3
  d = interlace_unknot(
      d, gap, 2, InterlaceNames{{"b6", "b4"}, {"b5", "b7"}, "a3"}, k - 1);
  PotentialAssignment pa = maslov_potential(d);
  Augmentation e1 = aug_of(d, {{"b1", -1}, {"b2", m}});
  Augmentation e2 = aug_of(d, {{"b3", -1}});
  return {d, {{"eps1", e1}, {"eps2", e2}}};
}

// --- the 2n-copy of the unknot ---------------------------------------------
// Vertically pushed-off eyes, realized numerically so the event order is a
// genuine plane arrangement.  Components bottom-to-top; base point on each
// lower strand with shift i, so pot(bottom_i) = i.
inline FrontDiagram catalog_copy2n(long n) {
  if (n < 1) throw Error(Errc::ParameterOutOfRange, "2n-copy needs n >= 1");
  const int N = (int)(2 * n);
  const double R = 10.0, H = 1.0;
  const double delta = 1.0 / (8.0 * N);
  const double mu = delta * delta * R / (4.0 * H * H);
  auto center = [&](int i) { return -mu * i; };
  auto level = [&](int i) { return delta * i; };
  auto gshape = [&](double u) {
    double v = 1.0 - (u / R) * (u / R);
    return v <= 0 ? 0.0 : std::sqrt(v);
  };
  auto top = [&](int i, double x) { return level(i) + H * gshape(x - center(i)); };
  auto bottom = [&](int i, double x) { return level(i) - H * gshape(x - center(i)); };

  struct Ev {
    double x;
    int kind;  // 0 lc, 1 rc, 2 crossing, 3 bp
    int i, j;  // eyes involved (crossing: top_i x bottom_j)
    std::string name;
  };
  std::vector<Ev> evs;
  for (int i = 1; i <= N; ++i) {
    evs.push_back({center(i) - R, 0, i, -1, ""});
    evs.push_back({center(i) + R, 1, i, -1, "a" + std::to_string(i)});
    evs.push_back({center(i), 3, i, -1, ""});
  }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      // top_i meets bottom_j twice; f > 0 in the middle, < 0 at overlap ends
      auto f = [&](double x) { return top(i, x) - bottom(j, x); };
      double lo = center(i) - R, hi = center(j) + R;
      double mid = 0.5 * (center(i) + center(j));
      auto bisect = [&](double a, double b) {
        for (int it = 0; it < 200; ++it) {
          double m2 = 0.5 * (a + b);
          if ((f(a) < 0) == (f(m2) < 0))
            a = m2;
          else
            b = m2;
        }
        return 0.5 * (a + b);
      };
      double xl = bisect(lo, mid), xr = bisect(hi, mid);
      evs.push_back({xl, 2, i, j,
                     "b" + std::to_string(j) + "_" + std::to_string(i)});
      evs.push_back({xr, 2, i, j,
                     "b" + std::to_string(i) + "_" + std::to_string(j)});
    }
  std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < evs.size(); ++i)
    if (evs[i].x - evs[i - 1].x < 1e-9)
      throw Error(Errc::BadInput, "2n-copy arrangement degenerate");

  // arcs alive at a given x: (eye, top/bottom); slot = 1 + #arcs strictly above
  auto heights_above = [&](double x, double y) {
    int c = 0;
    for (int i = 1; i <= N; ++i) {
      if (x <= center(i) - R || x >= center(i) + R) continue;
      if (top(i, x) > y) ++c;
      if (bottom(i, x) > y) ++c;
    }
    return c;
  };
  std::vector<Event> out;
  for (std::size_t e = 0; e < evs.size(); ++e) {
    const Ev& ev = evs[e];
    double hstep = 1e-7;
    switch (ev.kind) {
      case 0: {
        double x = ev.x + hstep;
        int slot = 1 + heights_above(x, top(ev.i, x));
        out.push_back(Event{EventKind::LeftCusp, slot});
        break;
      }
      case 1: {
        double x = ev.x - hstep;
        int slot = 1 + heights_above(x, top(ev.i, x)) ;
        out.push_back(Event{EventKind::RightCusp, slot, 0, ev.name, true});
        break;
      }
      case 2: {
        double x = ev.x - hstep;
        double yu = std::max(top(ev.i, x), bottom(ev.j, x));
        int slot = 1 + heights_above(x, yu);
        out.push_back(Event{EventKind::Crossing, slot, 0, ev.name, true});
        break;
      }
      case 3: {
        double x = ev.x;
        int slot = 1 + heights_above(x, bottom(ev.i, x));
        out.push_back(Event{EventKind::BasePoint, slot, +1, "", false, ev.i});
        break;
      }
    }
  }
  return build_diagram(out);
}

// The section-4.2.1 augmentation pair: eps1(b_{2i,2i-1}) = 1,
// eps2(b_{2i+1,2i}) = 1, everything else 0.
inline std::pair<Augmentation, Augmentation> copy2n_aug_pair(const FrontDiagram& d,
                                                             long n) {
  std::map<std::string, Int> v1, v2;
  for (long i = 1; i <= n; ++i)
    v1["b" + std::to_string(2 * i) + "_" + std::to_string(2 * i - 1)] = 1;
  for (long i = 1; 2 * i + 1 <= 2 * n; ++i)
    v2["b" + std::to_string(2 * i + 1) + "_" + std::to_string(2 * i)] = 1;
  return {aug_of(d, v1), aug_of(d, v2)};
}

}  // namespace legch
