#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legch/algebra.hpp"
#include "legch/diagram.hpp"
#include "legch/snf.hpp"

namespace legch {

// Z-valued augmentation: nonzero only on grading-0 generators, every t_i -> -1
// (Leverson).  t values are fixed by convention and not stored.
struct Augmentation {
  std::vector<Int> values;  // per generator index

  static Augmentation zero(std::size_t ngens) {
    Augmentation a;
    a.values.assign(ngens, 0);
    return a;
  }

  Int eval_letter(const Letter& l) const {
    if (l.is_gen()) return values[l.gen];
    return is_even(l.texp) ? 1 : -1;
  }
  Int eval_word(const Word& w) const {
    Int r = 1;
    for (const Letter& l : w.ls) {
      r *= eval_letter(l);
      if (r == 0) return 0;
    }
    return r;
  }
  Int eval(const AlgebraElement& e) const {
    Int r = 0;
    for (auto& [w, c] : e.terms) r += c * eval_word(w);
    return r;
  }

  friend bool operator==(const Augmentation& a, const Augmentation& b) {
    return a.values == b.values;
  }
  friend bool operator<(const Augmentation& a, const Augmentation& b) {
    return a.values < b.values;
  }
};

struct AugCheck {
  bool ok = true;
  std::vector<std::pair<int, Int>> residues;  // generator, eps(d gen)
};

inline AugCheck verify_augmentation(const FrontDiagram& d,
                                    const PotentialAssignment& pa,
                                    const std::vector<AlgebraElement>& table,
                                    const Augmentation& eps) {
  AugCheck r;
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi) {
    if (pa.grading[gi] != 0 && eps.values[gi] != 0) {
      r.ok = false;
      r.residues.push_back({(int)gi, eps.values[gi]});
      continue;
    }
    Int v = eps.eval(table[gi]);
    if (v != 0) {
      r.ok = false;
      r.residues.push_back({(int)gi, v});
    }
  }
  return r;
}

// Exhaustive search for augmentations with grading-0 values in [-box, box],
// or over Z/m lifted to {0..m-1}.  Lexicographic in generator order.  Box
// search over Z is inherently a window; callers report the searched region.
struct AugSearchParams {
  std::optional<long> box;
  std::optional<long> modulus;
  int max_unknowns = 24;
};

inline std::vector<Augmentation> search_augmentations(
    const FrontDiagram& d, const PotentialAssignment& pa,
    const std::vector<AlgebraElement>& table, const AugSearchParams& params) {
  if (!params.box && !params.modulus)
    throw Error(Errc::BadInput, "search needs --box or --mod");
  if (params.box && *params.box < 0)
    throw Error(Errc::ParameterOutOfRange, "box must be >= 0");
  if (params.modulus && *params.modulus < 2)
    throw Error(Errc::ParameterOutOfRange, "modulus must be >= 2");

  std::vector<int> unknowns;
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi)
    if (pa.grading[gi] == 0) unknowns.push_back((int)gi);
  if ((int)unknowns.size() > params.max_unknowns)
    throw Error(Errc::ParameterOutOfRange,
                std::to_string(unknowns.size()) +
                    " grading-0 generators exceed the search limit");

  // constraints live on grading-1 generators
  std::vector<int> eqs;
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi)
    if (pa.grading[gi] == 1 && !table[gi].is_zero()) eqs.push_back((int)gi);
  // schedule each constraint at the last unknown in its support
  std::vector<int> pos_of(d.gens.size(), -1);
  for (std::size_t i = 0; i < unknowns.size(); ++i) pos_of[unknowns[i]] = (int)i;
  std::vector<std::vector<int>> due(unknowns.size() + 1);
  for (int e : eqs) {
    int last = -1;
    for (auto& [w, c] : table[e].terms)
      for (const Letter& l : w.ls)
        if (l.is_gen() && pos_of[l.gen] >= 0) last = std::max(last, pos_of[l.gen]);
    due[last + 1].push_back(e);
  }

  Augmentation cur = Augmentation::zero(d.gens.size());
  std::vector<Augmentation> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    for (int e : due[i]) {
      Int v = cur.eval(table[e]);
      if (params.modulus) {
        v %= *params.modulus;
        if (v < 0) v += *params.modulus;
      }
      if (v != 0) return;
    }
    if (i == unknowns.size()) {
      out.push_back(cur);
      return;
    }
    long lo = params.modulus ? 0 : -*params.box;
    long hi = params.modulus ? *params.modulus - 1 : *params.box;
    for (long v = lo; v <= hi; ++v) {
      cur.values[unknowns[i]] = v;
      rec(i + 1);
    }
    cur.values[unknowns[i]] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// --- dga-homotopy ---------------------------------------------------------

struct HomotopyWitness {
  std::vector<Int> K;  // nonzero only on grading -1 generators
};

struct HomotopyResult {
  bool homotopic = false;
  std::optional<HomotopyWitness> witness;
};

// eps1 - eps2 = K o d with K an (eps1, eps2)-derivation determined by its
// values on grading -1 generators.  The coefficient of K(g) in K(d a) is the
// bilinearized matrix entry, so this is an integer linear solve.
inline HomotopyResult dga_homotopic(const FrontDiagram& d,
                                    const PotentialAssignment& pa,
                                    const std::vector<AlgebraElement>& table,
                                    const Augmentation& e1, const Augmentation& e2) {
  std::vector<int> rows;  // grading -1 generators (unknowns)
  std::vector<int> cols;  // grading 0 generators (equations)
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi) {
    if (pa.grading[gi] == -1) rows.push_back((int)gi);
    if (pa.grading[gi] == 0) cols.push_back((int)gi);
  }
  std::vector<int> row_of(d.gens.size(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = (int)i;

  IntMat A((int)cols.size(), (int)rows.size());
  std::vector<Int> b(cols.size());
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    int a = cols[ci];
    b[ci] = e1.values[a] - e2.values[a];
    for (auto& [w, c] : table[a].terms) {
      for (std::size_t k = 0; k < w.ls.size(); ++k) {
        const Letter& l = w.ls[k];
        if (!l.is_gen() || row_of[l.gen] < 0) continue;
        Int coef = c;
        for (std::size_t j = 0; j < k && coef != 0; ++j)
          coef *= e1.eval_letter(w.ls[j]);
        for (std::size_t j = k + 1; j < w.ls.size() && coef != 0; ++j)
          coef *= e2.eval_letter(w.ls[j]);
        A.at((int)ci, row_of[l.gen]) += coef;
      }
    }
  }
  auto sol = solve_integer(A, b);
  HomotopyResult r;
  if (sol) {
    r.homotopic = true;
    HomotopyWitness w;
    w.K.assign(d.gens.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) w.K[rows[i]] = (*sol)[i];
    r.witness = std::move(w);
  }
  return r;
}

// --- extension over a surgery ----------------------------------------------

// Candidate = base values on surviving generators plus defaults on new ones;
// verified, then (optionally) brute-forced over the remaining new grading-0
// generators in a small box.
inline Augmentation extend_augmentation(
    const FrontDiagram& nd, const PotentialAssignment& npa,
    const std::vector<AlgebraElement>& ntable,
    const std::map<std::string, Int>& base,
    const std::map<std::string, Int>& defaults, long box = 2) {
  Augmentation cand = Augmentation::zero(nd.gens.size());
  std::vector<char> pinned(nd.gens.size(), 0);
  for (std::size_t gi = 0; gi < nd.gens.size(); ++gi) {
    auto it = base.find(nd.gens[gi].name);
    if (it != base.end()) {
      cand.values[gi] = it->second;
      pinned[gi] = 1;
      continue;
    }
    auto jt = defaults.find(nd.gens[gi].name);
    if (jt != defaults.end()) cand.values[gi] = jt->second;
  }
  if (verify_augmentation(nd, npa, ntable, cand).ok) return cand;

  // iterative single-unknown solve: many surgery differentials expose a new
  // generator linearly (d a = +-b + v)
  std::vector<int> unknowns;
  for (std::size_t gi = 0; gi < nd.gens.size(); ++gi)
    if (!pinned[gi] && npa.grading[gi] == 0) unknowns.push_back((int)gi);
  {
    Augmentation work = cand;
    std::vector<char> solved(nd.gens.size(), 0);
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t ei = 0; ei < nd.gens.size(); ++ei) {
        if (npa.grading[ei] != 1) continue;
        // residue as linear function of a single unsolved unknown?
        int the_unknown = -1;
        bool linear = true;
        Int c0 = 0, c1 = 0;
        for (auto& [w, c] : ntable[ei].terms) {
          int cnt = 0, ug = -1;
          for (const Letter& l : w.ls)
            if (l.is_gen() && !pinned[l.gen] && !solved[l.gen] &&
                npa.grading[l.gen] == 0 && work.values[l.gen] == 0) {
              // candidate unknown occurrence (tentative zero value)
              ++cnt;
              ug = l.gen;
            }
          if (cnt == 0) {
            c0 += c * work.eval_word(w);
          } else if (cnt == 1 &&
                     (the_unknown < 0 || the_unknown == ug)) {
            the_unknown = ug;
            Int coef = c;
            for (const Letter& l : w.ls) {
              if (l.is_gen() && l.gen == ug) continue;
              coef *= work.eval_letter(l);
            }
            c1 += coef;
          } else {
            linear = false;
            break;
          }
        }
        if (!linear || the_unknown < 0 || c1 == 0) continue;
        if (c0 % c1 != 0) continue;
        work.values[the_unknown] = -c0 / c1;
        solved[the_unknown] = 1;
        progress = true;
      }
    }
    if (verify_augmentation(nd, npa, ntable, work).ok) return work;
  }

  // last resort: box search over the new grading-0 generators
  std::function<std::optional<Augmentation>(std::size_t, Augmentation&)> rec =
      [&](std::size_t i, Augmentation& work) -> std::optional<Augmentation> {
    if (i == unknowns.size()) {
      if (verify_augmentation(nd, npa, ntable, work).ok) return work;
      return std::nullopt;
    }
    for (long v = -box; v <= box; ++v) {
      work.values[unknowns[i]] = v;
      if (auto r = rec(i + 1, work)) return r;
    }
    work.values[unknowns[i]] = 0;
    return std::nullopt;
  };
  if ((int)unknowns.size() <= 16) {
    Augmentation work = cand;
    if (auto r = rec(0, work)) return *r;
  }
  throw Error(Errc::NoExtension,
              "augmentation does not extend over the surgery (searched box " +
                  std::to_string(box) + ")");
}

// --- augmentation files -----------------------------------------------------
// Lines `name value`; omitted grading-0 generators default to 0; a nonzero
// value on a generator of nonzero grading is a load error.

inline Augmentation parse_augmentation(const FrontDiagram& d,
                                       const PotentialAssignment& pa,
                                       const std::string& text) {
  Augmentation a = Augmentation::zero(d.gens.size());
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    std::string val;
    if (!(ls >> val))
      throw Error(Errc::ParseError, "aug line " + std::to_string(lineno) + ": no value");
    int gi = d.gen_index(name);
    Int v(val);
    if (pa.grading[gi] != 0 && v != 0)
      throw Error(Errc::BadInput, name + " has grading " +
                                      std::to_string(pa.grading[gi]) +
                                      " and cannot carry a nonzero value");
    a.values[gi] = v;
  }
  return a;
}

inline std::string serialize_augmentation(const FrontDiagram& d,
                                          const Augmentation& a) {
  std::string out;
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi)
    if (a.values[gi] != 0)
      out += d.gens[gi].name + " " + a.values[gi].str() + "\n";
  return out;
}

}  // namespace legch
