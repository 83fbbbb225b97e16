#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "legch/error.hpp"

namespace legch {

enum class EventKind { LeftCusp, RightCusp, Crossing, BasePoint };

struct Event {
  EventKind kind;
  int slot;             // 1-based, counted from the top strand
  int sign = 0;         // BasePoint only: +1 if the oriented strand runs left-to-right here
  std::string label;    // generator name (Crossing / RightCusp)
  bool user_named = false;
  long shift = 0;       // BasePoint only: Maslov potential at this base point
};

enum class GenKind { Crossing, RightCusp };

struct Generator {
  std::string name;
  GenKind kind;
  int event;  // index into FrontDiagram::events
};

// A validated front in generic event-list position.  Strands are the
// components of the complement of the cusp points; they persist through
// crossings and base points.
struct FrontDiagram {
  std::vector<Event> events;
  bool bp_auto_inserted = false;

  // derived combinatorics
  int n_strands = 0;
  std::vector<std::vector<int>> seg;  // seg[g] = strand ids at gap g (left of events[g])
  std::vector<int> strand_comp;       // strand id -> component index
  int n_comps = 0;
  std::vector<int> comp_bp_event;     // component -> base point event
  std::vector<int> strand_dir;        // +1 rightward, -1 leftward
  std::vector<Generator> gens;
  std::vector<int> event_gen;         // event -> generator index, or -1
  std::vector<int> bp_strand;         // event -> strand id (BasePoint only)

  int strands_at(std::size_t gap) const { return (int)seg[gap].size(); }

  int gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].name == name) return (int)i;
    throw Error(Errc::BadInput, "unknown generator " + name);
  }
};

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace detail

// Validates the event list, traces strands and components, fixes orientations
// from the base points.  Inserts a missing base point on the lower strand of
// the component's first left cusp (with a warning flag).
inline FrontDiagram build_diagram(std::vector<Event> events) {
  FrontDiagram d;
  bool warned = false;

  for (int pass = 0;; ++pass) {
    d.events = events;
    d.seg.assign(events.size() + 1, {});
    d.n_strands = 0;
    std::vector<int> cur;
    for (std::size_t i = 0; i < events.size(); ++i) {
      d.seg[i] = cur;
      const Event& e = events[i];
      int n = (int)cur.size();
      switch (e.kind) {
        case EventKind::LeftCusp:
          if (e.slot < 1 || e.slot > n + 1)
            throw Error(Errc::SlotOutOfRange, "lc " + std::to_string(e.slot) + " with " +
                                                  std::to_string(n) + " strands (event " +
                                                  std::to_string(i + 1) + ")");
          cur.insert(cur.begin() + (e.slot - 1), {d.n_strands, d.n_strands + 1});
          d.n_strands += 2;
          break;
        case EventKind::RightCusp:
        case EventKind::Crossing:
          if (e.slot < 1 || e.slot + 1 > n)
            throw Error(Errc::SlotOutOfRange,
                        std::string(e.kind == EventKind::Crossing ? "x " : "rc ") +
                            std::to_string(e.slot) + " with " + std::to_string(n) +
                            " strands (event " + std::to_string(i + 1) + ")");
          if (e.kind == EventKind::Crossing)
            std::swap(cur[e.slot - 1], cur[e.slot]);
          else
            cur.erase(cur.begin() + (e.slot - 1), cur.begin() + (e.slot + 1));
          break;
        case EventKind::BasePoint:
          if (e.slot < 1 || e.slot > n)
            throw Error(Errc::SlotOutOfRange, "bp " + std::to_string(e.slot) + " with " +
                                                  std::to_string(n) + " strands (event " +
                                                  std::to_string(i + 1) + ")");
          if (e.sign != 1 && e.sign != -1)
            throw Error(Errc::ParseError, "base point needs a +/- orientation sign");
          break;
      }
    }
    d.seg[events.size()] = cur;
    if (!cur.empty())
      throw Error(Errc::OpenDiagram,
                  std::to_string(cur.size()) + " strands remain at the right end");

    // components: cusps join the two incident strands
    detail::UnionFind uf(d.n_strands);
    for (std::size_t i = 0; i < events.size(); ++i) {
      const Event& e = events[i];
      if (e.kind == EventKind::LeftCusp)
        uf.unite(d.seg[i + 1][e.slot - 1], d.seg[i + 1][e.slot]);
      else if (e.kind == EventKind::RightCusp)
        uf.unite(d.seg[i][e.slot - 1], d.seg[i][e.slot]);
    }
    // order components by first strand id (= order of first left cusp)
    std::vector<int> comp_of_root(d.n_strands, -1);
    d.strand_comp.assign(d.n_strands, -1);
    d.n_comps = 0;
    for (int s = 0; s < d.n_strands; ++s) {
      int r = uf.find(s);
      if (comp_of_root[r] < 0) comp_of_root[r] = d.n_comps++;
      d.strand_comp[s] = comp_of_root[r];
    }

    // base points: exactly one per component
    d.comp_bp_event.assign(d.n_comps, -1);
    d.bp_strand.assign(events.size(), -1);
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (events[i].kind != EventKind::BasePoint) continue;
      int s = d.seg[i][events[i].slot - 1];
      d.bp_strand[i] = s;
      int c = d.strand_comp[s];
      if (d.comp_bp_event[c] >= 0)
        throw Error(Errc::BadInput, "component has two base points");
      d.comp_bp_event[c] = (int)i;
    }
    std::size_t missing_lc = events.size();
    int missing_comp = -1;
    for (int c = 0; c < d.n_comps && missing_comp < 0; ++c) {
      if (d.comp_bp_event[c] >= 0) continue;
      for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].kind == EventKind::LeftCusp &&
            d.strand_comp[d.seg[i + 1][events[i].slot - 1]] == c) {
          missing_lc = i;
          missing_comp = c;
          break;
        }
      }
    }
    if (missing_comp >= 0) {
      // lower strand of the component's first left cusp, oriented rightward
      Event bp{EventKind::BasePoint, events[missing_lc].slot + 1, +1, "", false};
      events.insert(events.begin() + missing_lc + 1, bp);
      warned = true;
      continue;  // rebuild with the inserted base point
    }

    // orientations: flip across cusps, seeded at base points
    d.strand_dir.assign(d.n_strands, 0);
    std::vector<std::vector<int>> adj(d.n_strands);
    for (std::size_t i = 0; i < events.size(); ++i) {
      const Event& e = events[i];
      int u = -1, l = -1;
      if (e.kind == EventKind::LeftCusp) {
        u = d.seg[i + 1][e.slot - 1];
        l = d.seg[i + 1][e.slot];
      } else if (e.kind == EventKind::RightCusp) {
        u = d.seg[i][e.slot - 1];
        l = d.seg[i][e.slot];
      } else {
        continue;
      }
      adj[u].push_back(l);
      adj[l].push_back(u);
    }
    for (int c = 0; c < d.n_comps; ++c) {
      int be = d.comp_bp_event[c];
      int s0 = d.bp_strand[be];
      d.strand_dir[s0] = events[be].sign;
      std::vector<int> stack{s0};
      while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int t : adj[s]) {
          if (d.strand_dir[t] == 0) {
            d.strand_dir[t] = -d.strand_dir[s];
            stack.push_back(t);
          }
        }
      }
    }

    // generators in reading order, auto-named a1.., b1..
    d.gens.clear();
    d.event_gen.assign(events.size(), -1);
    int na = 0, nb = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
      const Event& e = events[i];
      if (e.kind == EventKind::RightCusp) {
        std::string nm = e.label.empty() ? "a" + std::to_string(++na) : e.label;
        d.event_gen[i] = (int)d.gens.size();
        d.gens.push_back({nm, GenKind::RightCusp, (int)i});
      } else if (e.kind == EventKind::Crossing) {
        std::string nm = e.label.empty() ? "b" + std::to_string(++nb) : e.label;
        d.event_gen[i] = (int)d.gens.size();
        d.gens.push_back({nm, GenKind::Crossing, (int)i});
      }
    }
    // duplicate names are useless for lookups and reports
    {
      std::map<std::string, int> seen;
      for (auto& g : d.gens)
        if (++seen[g.name] > 1)
          throw Error(Errc::BadInput, "duplicate generator name " + g.name);
    }
    d.bp_auto_inserted = warned;
    return d;
  }
}

// Maslov potentials per strand plus the induced gradings.
struct PotentialAssignment {
  std::vector<long> strand_pot;  // per strand id
  std::vector<long> shifts;      // per component: potential at its base point strand
  std::vector<long> grading;     // per generator
};

// Shifts default to the values carried on the base points; an explicit vector
// (indexed by component) overrides them.
inline PotentialAssignment maslov_potential(const FrontDiagram& d,
                                            std::vector<long> shifts = {}) {
  if (shifts.empty()) {
    shifts.resize(d.n_comps, 0);
    for (int c = 0; c < d.n_comps; ++c)
      shifts[c] = d.events[d.comp_bp_event[c]].shift;
  }
  shifts.resize(d.n_comps, 0);
  PotentialAssignment pa;
  pa.shifts = shifts;
  pa.strand_pot.assign(d.n_strands, 0);
  std::vector<char> known(d.n_strands, 0);

  // cusp constraints pot(upper) = pot(lower) + 1
  std::vector<std::pair<int, int>> cusp;  // (upper, lower)
  for (std::size_t i = 0; i < d.events.size(); ++i) {
    const Event& e = d.events[i];
    if (e.kind == EventKind::LeftCusp)
      cusp.push_back({d.seg[i + 1][e.slot - 1], d.seg[i + 1][e.slot]});
    else if (e.kind == EventKind::RightCusp)
      cusp.push_back({d.seg[i][e.slot - 1], d.seg[i][e.slot]});
  }
  std::vector<std::vector<std::pair<int, long>>> adj(d.n_strands);
  for (auto& [u, l] : cusp) {
    adj[u].push_back({l, -1});
    adj[l].push_back({u, +1});
  }
  for (int c = 0; c < d.n_comps; ++c) {
    int s0 = d.bp_strand[d.comp_bp_event[c]];
    pa.strand_pot[s0] = shifts[c];
    known[s0] = 1;
    std::vector<int> stack{s0};
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (auto& [t, off] : adj[s]) {
        long v = pa.strand_pot[s] + off;
        if (!known[t]) {
          known[t] = 1;
          pa.strand_pot[t] = v;
          stack.push_back(t);
        } else if (pa.strand_pot[t] != v) {
          throw Error(Errc::NoPotential,
                      "Maslov constraints contradict (nonzero rotation number)");
        }
      }
    }
  }

  pa.grading.assign(d.gens.size(), 0);
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi) {
    const Generator& g = d.gens[gi];
    if (g.kind == GenKind::RightCusp) {
      pa.grading[gi] = 1;
    } else {
      const Event& e = d.events[g.event];
      int ul = d.seg[g.event][e.slot - 1];
      int ll = d.seg[g.event][e.slot];
      pa.grading[gi] = pa.strand_pot[ul] - pa.strand_pot[ll];
    }
  }
  return pa;
}

struct ClassicalInvariants {
  std::vector<long> tb;        // per component (self-crossings only)
  std::vector<long> rot;
  long total_writhe = 0;
  long total_right_cusps = 0;
  long total_tb = 0;           // all crossings, including inter-component
};

inline ClassicalInvariants classical_invariants(const FrontDiagram& d) {
  ClassicalInvariants ci;
  ci.tb.assign(d.n_comps, 0);
  ci.rot.assign(d.n_comps, 0);
  std::vector<long> writhe(d.n_comps, 0), rcusps(d.n_comps, 0), up(d.n_comps, 0),
      down(d.n_comps, 0);
  for (std::size_t i = 0; i < d.events.size(); ++i) {
    const Event& e = d.events[i];
    if (e.kind == EventKind::Crossing) {
      int u = d.seg[i][e.slot - 1], l = d.seg[i][e.slot];
      long s = d.strand_dir[u] * d.strand_dir[l];
      ci.total_writhe += s;
      if (d.strand_comp[u] == d.strand_comp[l]) writhe[d.strand_comp[u]] += s;
    } else if (e.kind == EventKind::RightCusp) {
      int u = d.seg[i][e.slot - 1];
      ci.total_right_cusps++;
      rcusps[d.strand_comp[u]]++;
      (d.strand_dir[u] == +1 ? down : up)[d.strand_comp[u]]++;
    } else if (e.kind == EventKind::LeftCusp) {
      int u = d.seg[i + 1][e.slot - 1];
      (d.strand_dir[u] == +1 ? up : down)[d.strand_comp[u]]++;
    }
  }
  for (int c = 0; c < d.n_comps; ++c) {
    ci.tb[c] = writhe[c] - rcusps[c];
    ci.rot[c] = (down[c] - up[c]) / 2;
  }
  ci.total_tb = ci.total_writhe - ci.total_right_cusps;
  return ci;
}

// --- diagram text format ------------------------------------------------
// One event per line: `lc <slot>` | `rc <slot> [name]` | `x <slot> [name]` |
// `bp <slot> <+|->`.  `#` starts a comment.

inline FrontDiagram parse_front(const std::string& text) {
  std::vector<Event> evs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    auto want_slot = [&]() {
      int s;
      if (!(ls >> s) || s < 1)
        throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": bad slot");
      return s;
    };
    Event e{};
    if (op == "lc") {
      e.kind = EventKind::LeftCusp;
      e.slot = want_slot();
    } else if (op == "rc" || op == "x") {
      e.kind = op == "rc" ? EventKind::RightCusp : EventKind::Crossing;
      e.slot = want_slot();
      std::string nm;
      if (ls >> nm) {
        e.label = nm;
        e.user_named = true;
      }
    } else if (op == "bp") {
      e.kind = EventKind::BasePoint;
      e.slot = want_slot();
      std::string sg;
      if (!(ls >> sg) || (sg != "+" && sg != "-"))
        throw Error(Errc::ParseError,
                    "line " + std::to_string(lineno) + ": bp needs + or -");
      e.sign = sg == "+" ? +1 : -1;
      long sh;
      if (ls >> sh)
        e.shift = sh;  // optional Maslov shift at this base point
      else
        ls.clear();
    } else {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(lineno) + ": unknown event '" + op + "'");
    }
    std::string junk;
    if (ls >> junk)
      throw Error(Errc::ParseError,
                  "line " + std::to_string(lineno) + ": trailing '" + junk + "'");
    evs.push_back(e);
  }
  try {
    return build_diagram(evs);
  } catch (const Error&) {
    throw;
  }
}

inline std::string serialize_front(const FrontDiagram& d) {
  std::string out;
  for (const Event& e : d.events) {
    switch (e.kind) {
      case EventKind::LeftCusp:
        out += "lc " + std::to_string(e.slot);
        break;
      case EventKind::RightCusp:
        out += "rc " + std::to_string(e.slot);
        if (e.user_named) out += " " + e.label;
        break;
      case EventKind::Crossing:
        out += "x " + std::to_string(e.slot);
        if (e.user_named) out += " " + e.label;
        break;
      case EventKind::BasePoint:
        out += "bp " + std::to_string(e.slot) + (e.sign > 0 ? " +" : " -");
        if (e.shift != 0) out += " " + std::to_string(e.shift);
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace legch
