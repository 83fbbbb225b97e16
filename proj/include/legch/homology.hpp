#pragma once

#include <map>
#include <string>
#include <vector>

#include "legch/diagram.hpp"
#include "legch/linearized.hpp"
#include "legch/snf.hpp"

namespace legch {

// Per degree: free rank plus invariant factors d1 | d2 | ... (each >= 2).
// Degrees with trivial module are omitted.
struct GradedModule {
  std::map<long, std::pair<long, std::vector<Int>>> parts;

  long rank(long k) const {
    auto it = parts.find(k);
    return it == parts.end() ? 0 : it->second.first;
  }
  std::vector<Int> torsion(long k) const {
    auto it = parts.find(k);
    return it == parts.end() ? std::vector<Int>{} : it->second.second;
  }
  void set(long k, long rank, std::vector<Int> tors) {
    if (rank == 0 && tors.empty()) return;
    parts[k] = {rank, std::move(tors)};
  }
  long total_rank() const {
    long r = 0;
    for (auto& [k, p] : parts) r += p.first;
    return r;
  }
  friend bool operator==(const GradedModule& a, const GradedModule& b) {
    return a.parts == b.parts;
  }

  std::string str() const {
    if (parts.empty()) return "0";
    std::string out;
    for (auto& [k, p] : parts) {
      auto& [r, tors] = p;
      if (r > 0) {
        if (!out.empty()) out += " + ";
        out += r == 1 ? "Z" : "Z^" + std::to_string(r);
        out += "[" + std::to_string(k) + "]";
      }
      for (const Int& t : tors) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t.str() + "[" + std::to_string(k) + "]";
      }
    }
    return out;
  }
};

inline GradedModule graded_module_of(
    std::initializer_list<std::tuple<long, long, std::vector<long>>> parts) {
  GradedModule m;
  for (auto& [k, r, tors] : parts) {
    std::vector<Int> t(tors.begin(), tors.end());
    m.set(k, r, std::move(t));
  }
  return m;
}

// H_k = ker d_k / im d_{k+1} via Smith normal form.
inline GradedModule graded_homology(const GradedComplex& C) {
  if (!C.d_squared_zero()) throw Error(Errc::NotAComplex, "d^2 != 0");
  GradedModule H;
  for (auto& [k, gens] : C.basis) {
    long n = (long)gens.size();
    long rk_out = 0, rk_in = 0;
    std::vector<Int> tors;
    if (const IntMat* m = C.matrix(k))
      if (m->rows > 0) rk_out = smith_normal_form(*m).rank;
    if (const IntMat* m = C.matrix(k + 1)) {
      if (m->cols > 0 && m->rows > 0) {
        SnfResult s = smith_normal_form(*m);
        rk_in = s.rank;
        for (const Int& f : s.factors)
          if (f >= 2) tors.push_back(f);
      }
    }
    H.set(k, n - rk_out - rk_in, std::move(tors));
  }
  return H;
}

// Cochain homology of the transposed matrices, indexed on the same degree
// grid: H^k = ker(C_k -> C_{k+1}) / im(C_{k-1} -> C_k).
inline GradedModule graded_cohomology(const GradedComplex& C) {
  if (!C.d_squared_zero()) throw Error(Errc::NotAComplex, "d^2 != 0");
  GradedModule H;
  for (auto& [k, gens] : C.basis) {
    long n = (long)gens.size();
    long rk_out = 0, rk_in = 0;
    std::vector<Int> tors;
    if (const IntMat* m = C.matrix(k + 1))
      if (m->rows > 0 && m->cols > 0) rk_out = smith_normal_form(*m).rank;
    if (const IntMat* m = C.matrix(k)) {
      if (m->rows > 0 && m->cols > 0) {
        SnfResult s = smith_normal_form(*m);
        rk_in = s.rank;
        for (const Int& f : s.factors)
          if (f >= 2) tors.push_back(f);
      }
    }
    H.set(k, n - rk_out - rk_in, std::move(tors));
  }
  return H;
}

inline long euler_characteristic(const GradedComplex& C) {
  long chi = 0;
  for (auto& [k, gens] : C.basis)
    chi += is_even(k) ? (long)gens.size() : -(long)gens.size();
  return chi;
}

// F_p dimension of H_k(C (x) F_p) for the universal-coefficient cross-check.
inline long fp_homology_dim(const GradedComplex& C, long k, long p) {
  long n = C.dim(k);
  long rk_out = 0, rk_in = 0;
  if (const IntMat* m = C.matrix(k))
    if (m->rows > 0 && m->cols > 0) rk_out = rank_mod_p(*m, p);
  if (const IntMat* m = C.matrix(k + 1))
    if (m->rows > 0 && m->cols > 0) rk_in = rank_mod_p(*m, p);
  return n - rk_out - rk_in;
}

// --- duality / geography checks ---------------------------------------------

struct DualityCheck {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct DualityReport {
  std::vector<DualityCheck> checks;
  Int tau0_image_gcd = 0;  // image of tau_0 in H_0(Lambda) = Z is (gcd) Z
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
};

inline Int tau0_image(const GradedComplex& C, const FrontDiagram& d,
                      const PotentialAssignment& pa, const Augmentation& e1,
                      const Augmentation& e2) {
  // restrict tau0 = eps2 - eps1 to ker d_0
  auto it = C.basis.find(0);
  if (it == C.basis.end()) return 0;
  const std::vector<int>& gens = it->second;
  std::vector<Int> t(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    t[i] = e2.values[gens[i]] - e1.values[gens[i]];
  const IntMat* m = C.matrix(0);
  Int g = 0;
  if (!m || m->rows == 0) {
    for (auto& v : t) g = int_gcd(g, v);
    return g;
  }
  for (auto& ker : kernel_basis(*m)) {
    Int dot = 0;
    for (std::size_t i = 0; i < ker.size(); ++i) dot += t[i] * ker[i];
    g = int_gcd(g, dot);
  }
  return g;
}

inline std::string module_pair_witness(long k, const GradedModule& a, long kk,
                                       const GradedModule& b) {
  return "deg " + std::to_string(k) + ": rank " + std::to_string(a.rank(k)) +
         " vs deg " + std::to_string(kk) + ": rank " + std::to_string(b.rank(kk));
}

// The checks of Prop/Cor duality plus the Theorem shape constraints.  All are
// assertions on computed outputs; failures are report entries, not errors.
inline DualityReport duality_check(const FrontDiagram& d,
                                   const PotentialAssignment& pa,
                                   const GradedComplex& C12,
                                   const GradedComplex& C21,
                                   const Augmentation& e1, const Augmentation& e2,
                                   bool homotopic_pair) {
  DualityReport rep;
  GradedModule H12 = graded_homology(C12);
  GradedModule H21 = graded_homology(C21);
  GradedModule coH21 = graded_cohomology(C21);

  long lo = C12.basis.empty() ? 0 : C12.min_degree() - 1;
  long hi = C12.basis.empty() ? 0 : C12.max_degree() + 1;

  // (a) LCH_k(e1,e2) ~ LCH^{-k}(e2,e1) away from k in {-1,0,1}
  {
    bool ok = true;
    std::string w;
    for (long k = lo; k <= hi; ++k) {
      if (k >= -1 && k <= 1) continue;
      if (H12.rank(k) != coH21.rank(-k) || H12.torsion(k) != coH21.torsion(-k)) {
        ok = false;
        w = "deg " + std::to_string(k);
        break;
      }
    }
    rep.add("duality_iso_away_from_unit", ok, ok ? "all degrees" : w);
  }

  // (f) graded Euler characteristic = tb
  {
    auto ci = classical_invariants(d);
    long chi = euler_characteristic(C12);
    rep.add("euler_char_equals_tb", chi == ci.total_tb,
            "chi=" + std::to_string(chi) + " tb=" + std::to_string(ci.total_tb));
  }

  rep.tau0_image_gcd = tau0_image(C12, d, pa, e1, e2);

  if (homotopic_pair) {
    // linearized constraints (knots): r_k = r_{-k} for |k| > 1, r_1 = 1 + r_{-1},
    // r_0 even; Theorem 1 shape adds torsion symmetry T_k ~ T_{-k-1}.
    bool knot = d.n_comps == 1;
    if (knot) {
      bool ok = H12.rank(1) == 1 + H12.rank(-1) && H12.rank(0) % 2 == 0;
      for (long k = 2; k <= hi && ok; ++k) ok = H12.rank(k) == H12.rank(-k);
      rep.add("linearized_rank_constraints", ok,
              "r1=" + std::to_string(H12.rank(1)) +
                  " r-1=" + std::to_string(H12.rank(-1)) +
                  " r0=" + std::to_string(H12.rank(0)));
      bool tok = true;
      std::string w = "all degrees";
      for (long k = lo; k <= hi; ++k)
        if (H12.torsion(k) != H12.torsion(-k - 1)) {
          tok = false;
          w = "deg " + std::to_string(k);
          break;
        }
      rep.add("theorem1_shape", ok && tok, w);
    }
  } else {
    // Theorem 2 shape: Z[0] + F (even rank) + T
    bool ok = H12.rank(0) >= 1 && H12.total_rank() % 2 == 1;
    rep.add("theorem2_shape", ok,
            "r0=" + std::to_string(H12.rank(0)) +
                " total=" + std::to_string(H12.total_rank()));
  }

  // (e) torsion symmetry under its hypotheses
  if (d.n_comps == 1 && (homotopic_pair || rep.tau0_image_gcd == 1)) {
    bool ok = true;
    std::string w = "all degrees";
    for (long k = lo; k <= hi; ++k)
      if (H12.torsion(k) != H21.torsion(-k - 1)) {
        ok = false;
        w = "deg " + std::to_string(k);
        break;
      }
    rep.add("torsion_symmetry", ok, w);
  }

  // F_p cross-check of ranks vs torsion for p = 2, 3, 5
  {
    bool ok = true;
    std::string w = "p=2,3,5";
    for (long p : {2L, 3L, 5L}) {
      for (long k = lo; k <= hi && ok; ++k) {
        long expect = H12.rank(k);
        for (const Int& t : H12.torsion(k))
          if (t % p == 0) ++expect;
        for (const Int& t : H12.torsion(k - 1))
          if (t % p == 0) ++expect;
        if (fp_homology_dim(C12, k, p) != expect) {
          ok = false;
          w = "p=" + std::to_string(p) + " deg " + std::to_string(k);
        }
      }
    }
    rep.add("fp_dimension_crosscheck", ok, w);
  }
  return rep;
}

}  // namespace legch
