#pragma once

#include "hexlab/modgroup.hpp"

#include <random>
#include <vector>

namespace hexlab::testing {

// Random freely reduced X/Y word with `len` letters of exponent +-1.
inline GroupWord random_xy_word(std::mt19937_64& rng, int len) {
  static const char syms[2] = {'X', 'Y'};
  std::vector<Letter> out;
  std::uniform_int_distribution<int> pick(0, 3);
  while (static_cast<int>(out.size()) < len) {
    int k = pick(rng);
    Letter l{syms[k / 2], k % 2 ? -1 : 1};
    if (!out.empty() && out.back().symbol == l.symbol && out.back().exponent == -l.exponent) continue;
    out.push_back(l);
  }
  return GroupWord(Alphabet::XY, out);
}

// Random S/T word of exactly `len` alternating syllables.
inline GroupWord random_st_word(std::mt19937_64& rng, int len) {
  std::vector<Letter> out;
  std::bernoulli_distribution coin(0.5);
  bool s_next = coin(rng);
  for (int i = 0; i < len; ++i) {
    if (s_next) {
      out.push_back({'S', 1});
    } else {
      out.push_back({'T', coin(rng) ? 1 : -1});
    }
    s_next = !s_next;
  }
  return GroupWord(Alphabet::ST, out);
}

inline ProjMatrix random_matrix(std::mt19937_64& rng, int len) {
  return word_to_matrix(random_st_word(rng, len));
}

}  // namespace hexlab::testing
