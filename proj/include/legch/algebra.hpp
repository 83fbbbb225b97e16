#pragma once

#include <map>
#include <string>
#include <vector>

#include "legch/error.hpp"
#include "legch/ints.hpp"

namespace legch {

// A letter is a generator or an invertible t_i^e.
struct Letter {
  int gen = -1;    // generator index, or -1
  int tcomp = -1;  // component index for t letters, or -1
  long texp = 0;

  bool is_gen() const { return gen >= 0; }
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.tcomp == b.tcomp && a.texp == b.texp;
  }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    if (a.tcomp != b.tcomp) return a.tcomp < b.tcomp;
    return a.texp < b.texp;
  }
};

inline Letter gen_letter(int g) { return Letter{g, -1, 0}; }
inline Letter t_letter(int comp, long exp) { return Letter{-1, comp, exp}; }

// Canonical form: adjacent t letters of the same component merged, zero
// exponents dropped.  Equality of words is then syntactic.
struct Word {
  std::vector<Letter> ls;

  void canonicalize() {
    std::vector<Letter> out;
    for (const Letter& l : ls) {
      if (!l.is_gen()) {
        if (l.texp == 0) continue;
        if (!out.empty() && !out.back().is_gen() && out.back().tcomp == l.tcomp) {
          out.back().texp += l.texp;
          if (out.back().texp == 0) out.pop_back();
          continue;
        }
      }
      out.push_back(l);
    }
    ls = std::move(out);
  }

  friend bool operator==(const Word& a, const Word& b) { return a.ls == b.ls; }
  // length-lex; deterministic so printed differentials are diffable
  friend bool operator<(const Word& a, const Word& b) {
    if (a.ls.size() != b.ls.size()) return a.ls.size() < b.ls.size();
    return a.ls < b.ls;
  }
};

inline Word word_of(std::initializer_list<Letter> ls) {
  Word w{std::vector<Letter>(ls)};
  w.canonicalize();
  return w;
}

struct AlgebraElement {
  std::map<Word, Int> terms;  // no zero coefficients stored

  bool is_zero() const { return terms.empty(); }

  void add_term(Word w, const Int& c) {
    if (c == 0) return;
    w.canonicalize();
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(std::move(w), c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms == b.terms;
  }
  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  AlgebraElement operator-() const {
    AlgebraElement r;
    for (auto& [w, c] : terms) r.terms.emplace(w, -c);
    return r;
  }
};

inline AlgebraElement algebra_zero() { return {}; }

inline AlgebraElement algebra_const(const Int& c) {
  AlgebraElement e;
  e.add_term(Word{}, c);
  return e;
}

inline AlgebraElement algebra_word(Word w, Int c = 1) {
  AlgebraElement e;
  e.add_term(std::move(w), c);
  return e;
}

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r;
  for (auto& [wx, cx] : x.terms)
    for (auto& [wy, cy] : y.terms) {
      Word w = wx;
      w.ls.insert(w.ls.end(), wy.ls.begin(), wy.ls.end());
      r.add_term(std::move(w), cx * cy);
    }
  return r;
}

inline long letter_grading(const Letter& l, const std::vector<long>& grading) {
  return l.is_gen() ? grading[l.gen] : 0;
}

inline long word_grading(const Word& w, const std::vector<long>& grading) {
  long g = 0;
  for (const Letter& l : w.ls) g += letter_grading(l, grading);
  return g;
}

// Extends a generator table by the graded Leibniz rule
// d(cc') = d(c) c' + (-1)^{|c|} c d(c'), with d(t_i) = 0.
inline AlgebraElement apply_differential(const AlgebraElement& x,
                                         const std::vector<AlgebraElement>& table,
                                         const std::vector<long>& grading) {
  AlgebraElement r;
  for (auto& [w, c] : x.terms) {
    long prefix_g = 0;
    for (std::size_t k = 0; k < w.ls.size(); ++k) {
      const Letter& l = w.ls[k];
      if (l.is_gen()) {
        if ((std::size_t)l.gen >= table.size())
          throw Error(Errc::BadInput, "differential table missing a generator");
        Int sgn = is_even(prefix_g) ? 1 : -1;
        for (auto& [dw, dc] : table[l.gen].terms) {
          Word out;
          out.ls.assign(w.ls.begin(), w.ls.begin() + k);
          out.ls.insert(out.ls.end(), dw.ls.begin(), dw.ls.end());
          out.ls.insert(out.ls.end(), w.ls.begin() + k + 1, w.ls.end());
          r.add_term(std::move(out), c * dc * sgn);
        }
      }
      prefix_g += letter_grading(l, grading);
    }
  }
  return r;
}

// --- printing -------------------------------------------------------------

inline std::string letter_to_string(const Letter& l,
                                    const std::vector<std::string>& names,
                                    int n_comps) {
  if (l.is_gen()) return names[l.gen];
  std::string t = n_comps == 1 ? "t" : "t" + std::to_string(l.tcomp + 1);
  if (l.texp != 1) t += "^" + std::to_string(l.texp);
  return t;
}

inline std::string to_string(const AlgebraElement& e,
                             const std::vector<std::string>& names, int n_comps) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (auto& [w, c] : e.terms) {
    Int a = c;
    if (out.empty()) {
      if (a < 0) out += "-", a = -a;
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string body;
    for (const Letter& l : w.ls) {
      if (!body.empty()) body += ".";
      body += letter_to_string(l, names, n_comps);
    }
    if (body.empty())
      out += a.str();
    else if (a == 1)
      out += body;
    else
      out += a.str() + "." + body;
  }
  return out;
}

}  // namespace legch
