#pragma once

#include <random>
#include <vector>

#include "qwa/algebra.hpp"

namespace qwa {

// A deliberately naive rewriting engine over the free monoid on the letters
// {h_i, H_i = h_i^{-1}, x_i, y_i}. It shares no code with the graded element
// engine and serves as an independent ground truth for multiplication.

enum class LetterKind { H, HInv, X, Y };

struct FreeLetter {
    LetterKind kind;
    int factor;

    friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

using FreeWord = std::vector<FreeLetter>;

// A formal k-linear combination of free words (deliberately unnormalized).
struct WordSum {
    std::vector<std::pair<Scalar, FreeWord>> terms;
};

// Converts a normal-form element to a word sum without any rewriting:
// each term gamma h^a w_k becomes one word with prefactor gamma.
WordSum word_of_element(const GwaElement& a);

// Exhaustively applies the oriented rewrite rules of the presentation until
// no redex remains, then reads off the graded normal form. With an RNG the
// redex picked at each step is randomized (used as confluence evidence);
// without one the leftmost redex fires first.
GwaElement rewrite_to_normal_form(const WordSum& ws, const AlgebraPtr& alg);
GwaElement rewrite_to_normal_form(const WordSum& ws, const AlgebraPtr& alg,
                                  std::mt19937_64& rng);

}  // namespace qwa
