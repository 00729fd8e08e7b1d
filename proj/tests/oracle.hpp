#pragma once

#include <random>
#include <utility>
#include <vector>

#include "cliff/multivector.hpp"

namespace oracle {

// Product of two blades given as ascending index lists, computed by
// concatenating the words and bubble-sorting them: each swap of distinct
// neighbours flips the sign, equal neighbours cancel with their square.
// squares[i-1] is the square of generator i.
inline std::pair<int, std::vector<int>> blade_product(const std::vector<int>& a, const std::vector<int>& b,
                                                      const std::vector<int>& squares) {
  std::vector<int> word(a);
  word.insert(word.end(), b.begin(), b.end());
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        sign *= squares[word[i] - 1];
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return {sign, word};
}

inline std::vector<int> squares_of(int p, int q) {
  std::vector<int> s(p, 1);
  s.insert(s.end(), q, -1);
  return s;
}

inline cliff::RealMultivector random_element(const cliff::Signature& sig, std::mt19937_64& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<std::uint64_t> mask(0, sig.full_mask());
  std::uniform_int_distribution<int> count(0, max_terms);
  cliff::RealMultivector x(sig);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t m = mask(rng);
    const int c = coeff(rng);
    cliff::Rational r(c, den(rng));
    r.canonicalize();
    x.add_term(cliff::Blade(m), r);
  }
  return x;
}

}  // namespace oracle
