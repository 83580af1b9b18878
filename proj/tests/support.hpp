#pragma once

#include <random>
#include <vector>

#include "neumann/gl2.hpp"
#include "neumann/involution.hpp"
#include "oracle.hpp"

namespace test_support {

inline oracle::M to_m(const neumann::IntMat2& x) {
  return {x.a().get_si(), x.b().get_si(), x.c().get_si(), x.d().get_si()};
}

inline oracle::M to_m(const neumann::ProjMat2& x) { return to_m(x.rep()); }

inline neumann::ProjMat2 from_m(const oracle::M& x) {
  return neumann::ProjMat2(neumann::mat(neumann::to_integer(x.a), neumann::to_integer(x.b),
                                          neumann::to_integer(x.c), neumann::to_integer(x.d)));
}

inline oracle::Table to_table(const neumann::InvolutionWindow& w) {
  oracle::Table t{w.lo(), {}, {}};
  for (auto n = w.lo(); n <= w.hi(); ++n) {
    t.iota.push_back(w.iota(n));
    t.delta.push_back(w.delta(n));
  }
  return t;
}

/// Random element of PGL(2,Z) as a word in tau^{+-1}, omega, nu.
inline neumann::ProjMat2 random_element(std::mt19937_64& rng, int max_word) {
  using neumann::BaseGenerator;
  const neumann::ProjMat2 tau = neumann::base_generator(BaseGenerator::Tau);
  const neumann::ProjMat2 tau_inv = neumann::invert(tau);
  const neumann::ProjMat2 omega = neumann::base_generator(BaseGenerator::Omega);
  const neumann::ProjMat2 nu = neumann::base_generator(BaseGenerator::Nu);
  std::uniform_int_distribution<int> len_dist(0, max_word);
  std::uniform_int_distribution<int> letter(0, 3);
  neumann::ProjMat2 x = neumann::ProjMat2::identity();
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    switch (letter(rng)) {
      case 0: x = neumann::compose(x, tau); break;
      case 1: x = neumann::compose(x, tau_inv); break;
      case 2: x = neumann::compose(x, omega); break;
      default: x = neumann::compose(x, nu); break;
    }
  }
  return x;
}

inline std::vector<int> random_cases(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> case_dist(1, 6);
  std::vector<int> cases(static_cast<std::size_t>(len_dist(rng)));
  for (int& c : cases) c = case_dist(rng);
  return cases;
}

}  // namespace test_support
