#pragma once

#include <map>
#include <vector>

#include "legch/augment.hpp"
#include "legch/disks.hpp"
#include "legch/snf.hpp"

namespace legch {

// C(Lambda): free Z-module on crossings and right cusps, graded; matrices of
// the degree-lowering differential.
struct GradedComplex {
  std::map<long, std::vector<int>> basis;  // degree -> generator indices (id order)
  std::map<long, IntMat> mat;              // degree k -> matrix of d_k: C_k -> C_{k-1}

  int dim(long k) const {
    auto it = basis.find(k);
    return it == basis.end() ? 0 : (int)it->second.size();
  }
  const IntMat* matrix(long k) const {
    auto it = mat.find(k);
    return it == mat.end() ? nullptr : &it->second;
  }
  long min_degree() const { return basis.empty() ? 0 : basis.begin()->first; }
  long max_degree() const { return basis.empty() ? 0 : basis.rbegin()->first; }

  bool d_squared_zero() const {
    for (auto& [k, m] : mat) {
      auto up = mat.find(k + 1);
      if (up == mat.end()) continue;
      if (m.cols == 0 || up->second.cols == 0) continue;
      if (!(m * up->second).is_zero()) return false;
    }
    return true;
  }
};

// Bilinearized differential: for each disk word, each generator slot k gets
// s(u) * eps1(prefix) * eps2(suffix).  Words are fully expanded, so cusp b^2
// slots appear as two letters (and always die on the augmented side).
// eps1 = eps2 gives the linearized complex.
inline GradedComplex bilinearized_complex(const FrontDiagram& d,
                                          const PotentialAssignment& pa,
                                          const std::map<int, std::vector<Disk>>& disks,
                                          const Augmentation& e1,
                                          const Augmentation& e2) {
  GradedComplex C;
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi)
    C.basis[pa.grading[gi]].push_back((int)gi);

  std::map<int, int> pos;  // generator -> row/col position within its degree
  for (auto& [k, v] : C.basis)
    for (std::size_t i = 0; i < v.size(); ++i) pos[v[i]] = (int)i;

  for (auto& [k, v] : C.basis) {
    int rows = C.dim(k - 1);
    C.mat[k] = IntMat(rows, (int)v.size());
  }

  for (auto& [a, dks] : disks) {
    long ka = pa.grading[a];
    IntMat& M = C.mat[ka];
    for (const Disk& dk : dks) {
      int s = dk.sign(d, pa);
      std::vector<Letter> ls = dk.letters();
      for (std::size_t k = 0; k < ls.size(); ++k) {
        if (!ls[k].is_gen()) continue;
        Int coef = s;
        for (std::size_t j = 0; j < k && coef != 0; ++j)
          coef *= e1.eval_letter(ls[j]);
        for (std::size_t j = k + 1; j < ls.size() && coef != 0; ++j)
          coef *= e2.eval_letter(ls[j]);
        if (coef == 0) continue;
        // grading bookkeeping forces surviving slots into degree |a|-1
        if (pa.grading[ls[k].gen] != ka - 1)
          throw Error(Errc::BadInput, "slot grading violated (engine bug)");
        M.at(pos[ls[k].gen], pos[a]) += coef;
      }
    }
  }
  return C;
}

// tau_0 at chain level is eps2 - eps1 on grading-0 generators.
inline std::map<int, Int> tau0_chain_map(const FrontDiagram& d,
                                         const PotentialAssignment& pa,
                                         const Augmentation& e1,
                                         const Augmentation& e2) {
  std::map<int, Int> t;
  for (std::size_t gi = 0; gi < d.gens.size(); ++gi)
    if (pa.grading[gi] == 0) t[(int)gi] = e2.values[gi] - e1.values[gi];
  return t;
}

}  // namespace legch
