#ifndef SHFKIT_TEST_HELPERS_HPP
#define SHFKIT_TEST_HELPERS_HPP

#include <random>

#include "shfkit/forms.hpp"
#include "shfkit/su3_structure.hpp"

namespace shfkit::test {

inline KForm random_form(int degree, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  KForm f = KForm::zero(degree);
  for (int i = 0; i < f.coeffs().size(); ++i) f.coeffs()[i] = u(rng);
  return f;
}

inline Vec6 random_vec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec6 v;
  for (int i = 0; i < 6; ++i) v[i] = u(rng);
  return v;
}

inline Mat6 random_mat(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat6 m;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m(r, c) = u(rng);
  return m;
}

/// Gather-style wedge with an explicit inversion count, independent of the
/// scatter/merge-sign production path.
inline KForm wedge_oracle(const KForm& a, const KForm& b) {
  const auto& tab = MultiIndexTable::get();
  int p = a.degree(), q = b.degree();
  KForm out = KForm::zero(p + q);
  const auto& big = tab.masks(p + q);
  for (int t = 0; t < static_cast<int>(big.size()); ++t) {
    auto I = MultiIndexTable::indices(big[t]);
    double total = 0.0;
    // all subsets S of I with |S| = p
    for (unsigned sel = 0; sel < (1u << I.size()); ++sel) {
      if (static_cast<int>(__builtin_popcount(sel)) != p) continue;
      std::vector<int> S, T;
      for (size_t r = 0; r < I.size(); ++r) ((sel >> r) & 1u ? S : T).push_back(I[r]);
      int inversions = 0;
      for (int s : S)
        for (int tt : T)
          if (s > tt) ++inversions;
      double ca = a.coeffs()[tab.position(p, MultiIndexTable::mask_of(S))];
      double cb = b.coeffs()[tab.position(q, MultiIndexTable::mask_of(T))];
      total += ((inversions % 2 == 0) ? 1.0 : -1.0) * ca * cb;
    }
    out.coeffs()[t] = total;
  }
  return out;
}

/// The standard flat model: omega = e12+e34+e56 and psi = Re((e1+i e2)^...).
inline KForm flat_omega() {
  return KForm::basis({1, 2}) + KForm::basis({3, 4}) + KForm::basis({5, 6});
}
inline KForm flat_psi() {
  return KForm::basis({1, 3, 5}) - KForm::basis({1, 4, 6}) - KForm::basis({2, 3, 6}) -
         KForm::basis({2, 4, 5});
}
inline KForm flat_psi_hat() {
  return KForm::basis({1, 3, 6}) + KForm::basis({1, 4, 5}) + KForm::basis({2, 3, 5}) -
         KForm::basis({2, 4, 6});
}

}  // namespace shfkit::test

#endif
