#pragma once

#include <string>
#include <vector>

#include "legch/diagram.hpp"

namespace legch {

// Every op returns a freshly validated diagram; generator identity across a
// surgery is by name, so bake auto-names into labels first.
inline FrontDiagram name_all_generators(const FrontDiagram& d) {
  std::vector<Event> evs = d.events;
  for (std::size_t i = 0; i < evs.size(); ++i)
    if (d.event_gen[i] >= 0 && !evs[i].user_named) {
      evs[i].label = d.gens[d.event_gen[i]].name;
      evs[i].user_named = true;
    }
  return build_diagram(evs);
}

inline FrontDiagram rename_generators(const FrontDiagram& d,
                                      const std::string& prefix) {
  std::vector<Event> evs = d.events;
  for (std::size_t i = 0; i < evs.size(); ++i)
    if (d.event_gen[i] >= 0) {
      evs[i].label = prefix + d.gens[d.event_gen[i]].name;
      evs[i].user_named = true;
    }
  return build_diagram(evs);
}

inline int gen_event_index(const FrontDiagram& d, const std::string& name) {
  return d.gens[d.gen_index(name)].event;
}

inline FrontDiagram insert_events(const FrontDiagram& d, int gap,
                                  std::vector<Event> block) {
  if (gap < 0 || gap > (int)d.events.size())
    throw Error(Errc::BadInput, "gap out of range");
  std::vector<Event> evs = d.events;
  evs.insert(evs.begin() + gap, block.begin(), block.end());
  return build_diagram(evs);
}

// --- connected sum ----------------------------------------------------------
// Figure-1 rewrite: two vertically adjacent segments of distinct components
// with equal Maslov potential are replaced by crossing arcs.  Creates one
// grading-0 crossing and drops the absorbed (lower) component's base point.
inline FrontDiagram connected_sum(const FrontDiagram& d,
                                  const PotentialAssignment& pa, int gap, int slot,
                                  const std::string& cname) {
  if (gap < 0 || gap > (int)d.events.size())
    throw Error(Errc::BadInput, "gap out of range");
  if (slot < 1 || slot + 1 > d.strands_at(gap))
    throw Error(Errc::SlotOutOfRange, "sum slot " + std::to_string(slot));
  int up = d.seg[gap][slot - 1], lo = d.seg[gap][slot];
  if (d.strand_comp[up] == d.strand_comp[lo])
    throw Error(Errc::SameComponent, "connected sum needs two components");
  if (pa.strand_pot[up] != pa.strand_pot[lo])
    throw Error(Errc::PotentialMismatch,
                "Maslov potentials differ at the sum site");
  std::vector<Event> evs = d.events;
  evs.insert(evs.begin() + gap,
             Event{EventKind::Crossing, slot, 0, cname, true});
  // remove the lower component's base point
  int bp = d.comp_bp_event[d.strand_comp[lo]];
  evs.erase(evs.begin() + (bp < gap ? bp : bp + 1));
  return build_diagram(evs);
}

// --- Reidemeister I ---------------------------------------------------------
// Kink with the loop above the strand; the new crossing has grading 0 and
// d(new cusp) = 1 + b, forcing eps(b) = -1.
inline FrontDiagram r1_above(const FrontDiagram& d, int gap, int slot,
                             const std::string& xname, const std::string& aname) {
  if (slot < 1 || slot > d.strands_at(gap))
    throw Error(Errc::PatternMismatch, "no strand at slot " + std::to_string(slot));
  return insert_events(d, gap,
                       {Event{EventKind::LeftCusp, slot, 0, "", false},
                        Event{EventKind::Crossing, slot + 1, 0, xname, true},
                        Event{EventKind::RightCusp, slot, 0, aname, true}});
}

// Mirror kink (loop below); d(new cusp) = 1 - b, so eps(b) = +1.
inline FrontDiagram r1_below(const FrontDiagram& d, int gap, int slot,
                             const std::string& xname, const std::string& aname) {
  if (slot < 1 || slot > d.strands_at(gap))
    throw Error(Errc::PatternMismatch, "no strand at slot " + std::to_string(slot));
  return insert_events(d, gap,
                       {Event{EventKind::LeftCusp, slot + 1, 0, "", false},
                        Event{EventKind::Crossing, slot, 0, xname, true},
                        Event{EventKind::RightCusp, slot + 1, 0, aname, true}});
}

// --- Reidemeister II --------------------------------------------------------
// A strand passes a cusp point; two crossings appear.  `cusp_event` names the
// cusp; the strand is the one vertically adjacent on the chosen side.

enum class R2Side { Above, Below };

inline FrontDiagram r2_past_cusp(const FrontDiagram& d, int cusp_event, R2Side side,
                                 const std::string& x1, const std::string& x2) {
  if (cusp_event < 0 || cusp_event >= (int)d.events.size())
    throw Error(Errc::BadInput, "event out of range");
  const Event ce = d.events[cusp_event];
  const int s = ce.slot;
  std::vector<Event> block;
  if (ce.kind == EventKind::RightCusp) {
    int n = d.strands_at(cusp_event);
    if (side == R2Side::Below) {
      if (s + 2 > n) throw Error(Errc::PatternMismatch, "no strand below the cusp");
      block = {Event{EventKind::Crossing, s + 1, 0, x1, true},
               Event{EventKind::Crossing, s, 0, x2, true},
               Event{EventKind::RightCusp, s + 1, ce.sign, ce.label, ce.user_named}};
    } else {
      if (s - 1 < 1) throw Error(Errc::PatternMismatch, "no strand above the cusp");
      block = {Event{EventKind::Crossing, s - 1, 0, x1, true},
               Event{EventKind::Crossing, s, 0, x2, true},
               Event{EventKind::RightCusp, s - 1, ce.sign, ce.label, ce.user_named}};
    }
  } else if (ce.kind == EventKind::LeftCusp) {
    int n = d.strands_at(cusp_event + 1);
    if (side == R2Side::Below) {
      if (s + 2 > n) throw Error(Errc::PatternMismatch, "no strand below the cusp");
      block = {Event{EventKind::LeftCusp, s + 1, 0, ce.label, ce.user_named},
               Event{EventKind::Crossing, s, 0, x1, true},
               Event{EventKind::Crossing, s + 1, 0, x2, true}};
    } else {
      if (s - 1 < 1) throw Error(Errc::PatternMismatch, "no strand above the cusp");
      block = {Event{EventKind::LeftCusp, s - 1, 0, ce.label, ce.user_named},
               Event{EventKind::Crossing, s, 0, x1, true},
               Event{EventKind::Crossing, s - 1, 0, x2, true}};
    }
  } else {
    throw Error(Errc::PatternMismatch, "r2 needs a cusp event");
  }
  std::vector<Event> evs = d.events;
  evs.erase(evs.begin() + cusp_event);
  evs.insert(evs.begin() + cusp_event, block.begin(), block.end());
  return build_diagram(evs);
}

// --- Reidemeister III -------------------------------------------------------
// Braid relation on three consecutive crossings at slots (s, s+1, s) or
// (s+1, s, s+1); the three crossings keep their names by strand pair.
inline FrontDiagram r3(const FrontDiagram& d, int first_event) {
  if (first_event < 0 || first_event + 2 >= (int)d.events.size())
    throw Error(Errc::BadInput, "event out of range");
  const Event *e0 = &d.events[first_event], *e1 = &d.events[first_event + 1],
              *e2 = &d.events[first_event + 2];
  if (e0->kind != EventKind::Crossing || e1->kind != EventKind::Crossing ||
      e2->kind != EventKind::Crossing)
    throw Error(Errc::PatternMismatch, "r3 needs three consecutive crossings");
  int s = std::min(e0->slot, e1->slot);
  bool lhs = e0->slot == s && e1->slot == s + 1 && e2->slot == s;
  bool rhs = e0->slot == s + 1 && e1->slot == s && e2->slot == s + 1;
  if (!lhs && !rhs) throw Error(Errc::PatternMismatch, "r3 slot pattern");
  std::vector<Event> evs = d.events;
  int a = lhs ? s + 1 : s, b = lhs ? s : s + 1;
  evs[first_event] = Event{EventKind::Crossing, a, 0, e2->label, e2->user_named};
  evs[first_event + 1] = Event{EventKind::Crossing, b, 0, e1->label, e1->user_named};
  evs[first_event + 2] = Event{EventKind::Crossing, a, 0, e0->label, e0->user_named};
  return build_diagram(evs);
}

// --- unclasp ----------------------------------------------------------------
// Removes two crossings between the same two strands by band rewiring.  Not a
// Legendrian isotopy; augmentation validity afterwards is the caller's check.
inline FrontDiagram unclasp(const FrontDiagram& d, const std::string& c1,
                            const std::string& c2) {
  int e1 = gen_event_index(d, c1), e2 = gen_event_index(d, c2);
  if (e1 > e2) std::swap(e1, e2);
  if (d.events[e1].kind != EventKind::Crossing ||
      d.events[e2].kind != EventKind::Crossing)
    throw Error(Errc::PatternMismatch, "unclasp needs two crossings");
  int a1 = d.seg[e1][d.events[e1].slot - 1], b1 = d.seg[e1][d.events[e1].slot];
  int a2 = d.seg[e2][d.events[e2].slot - 1], b2 = d.seg[e2][d.events[e2].slot];
  if (!((a1 == a2 && b1 == b2) || (a1 == b2 && b1 == a2)))
    throw Error(Errc::PatternMismatch, "the two crossings involve different strands");
  std::vector<Event> evs = d.events;
  evs.erase(evs.begin() + e2);
  evs.erase(evs.begin() + e1);
  return build_diagram(evs);
}

// --- interlaced unknot ------------------------------------------------------
// Standard unknot below the diagram threading the bottom k strands of the
// window: up through each once, across, back down.  New generators: ascent
// crossings, descent crossings, right cusp.
struct InterlaceNames {
  std::vector<std::string> ascent;   // with the bottom strand first
  std::vector<std::string> descent;  // with the top threaded strand first
  std::string cusp;
};

inline FrontDiagram interlace_unknot(const FrontDiagram& d, int gap, int k,
                                     const InterlaceNames& nm, long shift = 0) {
  int m = d.strands_at(gap);
  if (k < 1 || k > m) throw Error(Errc::WindowMismatch, "cannot thread " +
                                                            std::to_string(k) +
                                                            " of " + std::to_string(m) +
                                                            " strands");
  if ((int)nm.ascent.size() != k || (int)nm.descent.size() != k)
    throw Error(Errc::BadInput, "interlace needs k ascent and k descent names");
  std::vector<Event> block;
  block.push_back(Event{EventKind::LeftCusp, m + 1, 0, "", false});
  block.push_back(Event{EventKind::BasePoint, m + 2, +1, "", false, shift});
  for (int i = 0; i < k; ++i)
    block.push_back(Event{EventKind::Crossing, m - i, 0, nm.ascent[i], true});
  for (int i = 0; i < k; ++i)
    block.push_back(
        Event{EventKind::Crossing, m - k + 1 + i, 0, nm.descent[i], true});
  block.push_back(Event{EventKind::RightCusp, m + 1, 0, nm.cusp, true});
  return insert_events(d, gap, block);
}

// --- stacking ---------------------------------------------------------------
// Places d2 below d1 inside one x-gap of d1 (disjoint fronts, vertically
// adjacent); slots of d2 shift by the strand count there.
inline FrontDiagram stack_into_gap(const FrontDiagram& d1, int gap,
                                   const FrontDiagram& d2) {
  int off = d1.strands_at(gap);
  std::vector<Event> block = d2.events;
  for (Event& e : block) e.slot += off;
  return insert_events(d1, gap, block);
}

}  // namespace legch
