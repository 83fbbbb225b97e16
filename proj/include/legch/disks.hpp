#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "legch/algebra.hpp"
#include "legch/diagram.hpp"

namespace legch {

// Negative corner types.  Up/Down are crossing quadrants; the three cusp
// types are the complements of condition (4): slit along the upper strand,
// slit along the lower strand, or the outside of the cusp wedge.  The outside
// type contributes the squared letter.
enum class Corner { Up, Down, CuspUpper, CuspLower, CuspOuter };

struct DiskToken {
  int gen = -1;  // generator index, or -1 for a t token
  Corner corner = Corner::Up;
  int tcomp = -1;
  long texp = 0;
  bool is_gen() const { return gen >= 0; }

  friend bool operator<(const DiskToken& a, const DiskToken& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    if (a.corner != b.corner) return (int)a.corner < (int)b.corner;
    if (a.tcomp != b.tcomp) return a.tcomp < b.tcomp;
    return a.texp < b.texp;
  }
  friend bool operator==(const DiskToken& a, const DiskToken& b) {
    return a.gen == b.gen && a.corner == b.corner && a.tcomp == b.tcomp &&
           a.texp == b.texp;
  }
};

// One element of Delta(a; b_1..b_n): boundary word tokens in counterclockwise
// order from the positive puncture.
struct Disk {
  int pos = -1;
  std::vector<DiskToken> tokens;

  // corners in boundary order; CuspOuter is one puncture expanding to b^2
  std::vector<std::pair<int, Corner>> corners() const {
    std::vector<std::pair<int, Corner>> cs;
    for (auto& t : tokens)
      if (t.is_gen()) cs.push_back({t.gen, t.corner});
    return cs;
  }

  Word word() const {
    Word w;
    for (auto& t : tokens) {
      if (t.is_gen()) {
        w.ls.push_back(gen_letter(t.gen));
        if (t.corner == Corner::CuspOuter) w.ls.push_back(gen_letter(t.gen));
      } else {
        w.ls.push_back(t_letter(t.tcomp, t.texp));
      }
    }
    w.canonicalize();
    return w;
  }

  // letter sequence with c(b) squares expanded; used by the linearized build
  std::vector<Letter> letters() const { return word().ls; }

  int sign(const FrontDiagram& d, const PotentialAssignment& pa) const {
    int s = 1;
    for (auto& t : tokens)
      if (t.is_gen() && t.corner == Corner::Down &&
          d.gens[t.gen].kind == GenKind::Crossing && is_even(pa.grading[t.gen]))
        s = -s;
    return s;
  }

  friend bool operator<(const Disk& a, const Disk& b) { return a.tokens < b.tokens; }
};

struct SweepOptions {
  int cap = 4;                   // interval-multiplicity cap (hard error)
  long max_states = 40'000'000;  // safety against runaway enumeration
};

inline int disk_cap_from_env(int fallback = 4) {
  if (const char* v = std::getenv("LEGCH_DISK_CAP")) {
    int c = std::atoi(v);
    if (c >= 1) return c;
  }
  return fallback;
}

namespace detail {

struct SweepIv {
  int top, bot;  // slots of the two boundary arcs at the current slice
  int gap;       // hole position in the token list
};

struct SweepState {
  std::vector<SweepIv> ivs;
  std::vector<DiskToken> toks;
};

// `ivs` is kept in counterclockwise boundary order, so holes sharing a
// position are disambiguated by index.
inline void bump_gaps(SweepState& st, int except, int pos, int len) {
  for (std::size_t i = 0; i < st.ivs.size(); ++i)
    if ((int)i != except &&
        (st.ivs[i].gap > pos || (st.ivs[i].gap == pos && (int)i > except)))
      st.ivs[i].gap += len;
}

inline void insert_top_token(SweepState& st, int iv, DiskToken t) {
  int p = st.ivs[iv].gap;
  st.toks.insert(st.toks.begin() + p, t);
  bump_gaps(st, iv, p, 1);
  st.ivs[iv].gap = p + 1;
}

inline void insert_bot_token(SweepState& st, int iv, DiskToken t) {
  int p = st.ivs[iv].gap;
  st.toks.insert(st.toks.begin() + p, t);
  bump_gaps(st, iv, p, 1);
}

inline int max_multiplicity(const SweepState& st) {
  int m = 0;
  for (const auto& a : st.ivs) {
    int c = 0;
    for (const auto& b : st.ivs)
      if (b.top <= a.top && a.top < b.bot) ++c;
    m = std::max(m, c);
  }
  return m;
}

}  // namespace detail

struct SweepStats {
  long cap_hits = 0;
  long states = 0;
};

// All admissible disks with positive corner at generator `pos`, enumerated by
// a sweep from the positive corner leftward.  At each slice the disk is a
// multiset of vertical intervals; crossings pass or turn boundary arcs, right
// cusps split a spanning interval (negative corner), left cusps close exact
// intervals.  Deterministic: output sorted lexicographically on token lists.
inline std::vector<Disk> enumerate_disks(const FrontDiagram& d,
                                         const PotentialAssignment& pa, int pos,
                                         const SweepOptions& opt = {},
                                         SweepStats* stats = nullptr) {
  using detail::SweepIv;
  using detail::SweepState;
  const Generator& g = d.gens[pos];
  const int pe = g.event;
  const int s0 = d.events[pe].slot;

  std::vector<SweepState> states;
  {
    SweepState seed;
    seed.ivs.push_back({s0, s0 + 1, 0});
    states.push_back(std::move(seed));
  }
  std::vector<Disk> done;
  long visited = 0;

  auto flush_empty = [&](std::vector<SweepState>& v) {
    std::vector<SweepState> keep;
    for (auto& st : v) {
      if (st.ivs.empty()) {
        Disk dk;
        dk.pos = pos;
        dk.tokens = std::move(st.toks);
        done.push_back(std::move(dk));
      } else {
        keep.push_back(std::move(st));
      }
    }
    v = std::move(keep);
  };
  flush_empty(states);

  for (int e = pe - 1; e >= 0 && !states.empty(); --e) {
    const Event& ev = d.events[e];
    std::vector<SweepState> next;
    for (SweepState& st : states) {
      if (++visited > opt.max_states)
        throw Error(Errc::CapExceeded, "sweep state budget exhausted");
      switch (ev.kind) {
        case EventKind::BasePoint: {
          SweepState ns = st;
          int w = d.bp_strand[e];
          int comp = d.strand_comp[w];
          for (std::size_t i = 0; i < ns.ivs.size(); ++i) {
            if (ns.ivs[i].top == ev.slot)
              detail::insert_top_token(ns, (int)i,
                                       DiskToken{-1, Corner::Up, comp, -ev.sign});
            if (ns.ivs[i].bot == ev.slot)
              detail::insert_bot_token(ns, (int)i,
                                       DiskToken{-1, Corner::Up, comp, ev.sign});
          }
          next.push_back(std::move(ns));
          break;
        }
        case EventKind::Crossing: {
          const int s = ev.slot;
          // per-interval choices: 0 = pass, 1 = corner
          std::vector<std::vector<int>> topc(st.ivs.size()), botc(st.ivs.size());
          for (std::size_t i = 0; i < st.ivs.size(); ++i) {
            topc[i] = st.ivs[i].top == s + 1 ? std::vector<int>{0, 1}
                                             : std::vector<int>{0};
            botc[i] = st.ivs[i].bot == s ? std::vector<int>{0, 1}
                                         : std::vector<int>{0};
          }
          std::vector<int> pick(2 * st.ivs.size(), 0);
          std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == st.ivs.size()) {
              SweepState ns = st;
              for (std::size_t j = 0; j < ns.ivs.size(); ++j) {
                SweepIv& iv = ns.ivs[j];
                int tchoice = pick[2 * j], bchoice = pick[2 * j + 1];
                // top arc
                if (iv.top == s + 1 && tchoice == 1) {
                  detail::insert_top_token(
                      ns, (int)j, DiskToken{d.event_gen[e], Corner::Down, -1, 0});
                } else if (iv.top == s) {
                  iv.top = s + 1;
                } else if (iv.top == s + 1) {
                  iv.top = s;
                }
                // bottom arc
                if (iv.bot == s && bchoice == 1) {
                  detail::insert_bot_token(
                      ns, (int)j, DiskToken{d.event_gen[e], Corner::Up, -1, 0});
                } else if (iv.bot == s) {
                  iv.bot = s + 1;
                } else if (iv.bot == s + 1) {
                  iv.bot = s;
                }
              }
              for (auto& iv : ns.ivs)
                if (iv.top >= iv.bot) return;  // forbidden right-quadrant pinch
              next.push_back(std::move(ns));
              return;
            }
            for (int tc : topc[i])
              for (int bc : botc[i]) {
                pick[2 * i] = tc;
                pick[2 * i + 1] = bc;
                rec(i + 1);
              }
          };
          rec(0);
          break;
        }
        case EventKind::RightCusp: {
          const int s = ev.slot;
          auto remap = [&](int j) { return j < s ? j : j + 2; };
          // options per spanning interval: 0 pass over the whole cusp,
          // 1/2/3 negative corner (CuspUpper/CuspLower/CuspOuter), 4 the
          // condition-(2) boundary pass through the cusp point: the sheet
          // splits into a crossed pair covering the wedge twice, no puncture.
          std::vector<std::vector<int>> choice(st.ivs.size());
          for (std::size_t i = 0; i < st.ivs.size(); ++i) {
            bool span = st.ivs[i].top <= s - 1 && st.ivs[i].bot >= s;
            choice[i] =
                span ? std::vector<int>{0, 1, 2, 3, 4} : std::vector<int>{0};
          }
          std::vector<int> pick(st.ivs.size(), 0);
          std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == st.ivs.size()) {
              SweepState ns;
              ns.toks = st.toks;
              std::vector<SweepIv> out;
              std::vector<std::pair<int, int>> inserts;  // (pos, len) applied
              auto adjusted = [&](int gp) {
                // inserts were made by earlier-ccw intervals, so ties bump
                for (auto& [p, l] : inserts)
                  if (gp >= p) gp += l;
                return gp;
              };
              for (std::size_t j = 0; j < st.ivs.size(); ++j) {
                SweepIv iv = st.ivs[j];
                int gp = adjusted(iv.gap);
                if (pick[j] == 0) {
                  out.push_back({remap(iv.top), remap(iv.bot), gp});
                  continue;
                }
                if (pick[j] == 4) {
                  // upper sheet keeps the old top and ends on the lower
                  // strand; lower sheet starts on the upper strand
                  out.push_back({remap(iv.top), s + 1, gp});
                  out.push_back({s, remap(iv.bot), gp});
                  continue;
                }
                Corner c = pick[j] == 1   ? Corner::CuspUpper
                           : pick[j] == 2 ? Corner::CuspLower
                                          : Corner::CuspOuter;
                ns.toks.insert(ns.toks.begin() + gp,
                               DiskToken{d.event_gen[e], c, -1, 0});
                inserts.push_back({gp, 1});
                // CuspUpper: both new arcs on the upper strand; CuspLower: on
                // the lower; CuspOuter: one on each, wedge not covered.
                int upbot = (c == Corner::CuspLower) ? s + 1 : s;
                int dntop = (c == Corner::CuspUpper) ? s : s + 1;
                out.push_back({remap(iv.top), upbot, gp});
                out.push_back({dntop, remap(iv.bot), gp + 1});
              }
              ns.ivs = std::move(out);
              next.push_back(std::move(ns));
              return;
            }
            for (int c : choice[i]) {
              pick[i] = c;
              rec(i + 1);
            }
          };
          rec(0);
          break;
        }
        case EventKind::LeftCusp: {
          const int s = ev.slot;
          SweepState ns;
          ns.toks = st.toks;
          bool dead = false;
          for (const SweepIv& iv : st.ivs) {
            if (iv.top == s && iv.bot == s + 1) continue;  // wedge closes
            bool touches = iv.top == s || iv.top == s + 1 || iv.bot == s ||
                           iv.bot == s + 1;
            if (touches) {
              dead = true;
              break;
            }
            int t = iv.top < s ? iv.top : iv.top - 2;
            int b = iv.bot < s ? iv.bot : iv.bot - 2;
            ns.ivs.push_back({t, b, iv.gap});
          }
          if (!dead) next.push_back(std::move(ns));
          break;
        }
      }
    }
    // cap check
    for (auto& st : next) {
      int m = detail::max_multiplicity(st);
      if (m > opt.cap) {
        if (stats) stats->cap_hits++;
        throw Error(Errc::CapExceeded,
                    "interval multiplicity " + std::to_string(m) + " exceeds cap " +
                        std::to_string(opt.cap) + " at event " + std::to_string(e + 1));
      }
    }
    states = std::move(next);
    flush_empty(states);
    if (stats) stats->states = std::max(stats->states, (long)states.size());
  }

  for (const Disk& dk : done) {
    long wg = word_grading(dk.word(), pa.grading);
    if (wg != pa.grading[pos] - 1)
      throw Error(Errc::BadInput, "disk grading law violated (engine bug) at " +
                                      d.gens[pos].name);
  }
  std::sort(done.begin(), done.end());
  return done;
}

// d(a) = r(a) + sum s(u) w(u); r = 1 on right cusps.
inline std::vector<AlgebraElement> differential_table(
    const FrontDiagram& d, const PotentialAssignment& pa,
    const SweepOptions& opt = {},
    std::map<int, std::vector<Disk>>* disks_out = nullptr) {
  std::vector<AlgebraElement> table(d.gens.size());
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi) {
    AlgebraElement e;
    if (d.gens[gi].kind == GenKind::RightCusp) e.add_term(Word{}, 1);
    auto disks = enumerate_disks(d, pa, (int)gi, opt);
    for (const Disk& dk : disks) e.add_term(dk.word(), dk.sign(d, pa));
    if (disks_out) (*disks_out)[(int)gi] = std::move(disks);
    table[gi] = std::move(e);
  }
  return table;
}

struct DSquaredReport {
  bool ok = true;
  std::vector<std::pair<int, AlgebraElement>> residues;  // nonzero d(d(a))
};

inline DSquaredReport check_d_squared(const FrontDiagram& d,
                                      const PotentialAssignment& pa,
                                      const std::vector<AlgebraElement>& table) {
  DSquaredReport rep;
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi) {
    AlgebraElement r = apply_differential(table[gi], table, pa.grading);
    if (!r.is_zero()) {
      rep.ok = false;
      rep.residues.push_back({(int)gi, std::move(r)});
    }
  }
  return rep;
}

}  // namespace legch
