#pragma once

#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

/// All solutions m_1 >= ... >= m_r >= 1, m_1 <= d - 1, of the Noether
/// equalities in degree d, in lexicographically descending order.
/// Top-level branches run on up to `threads` workers; the result does not
/// depend on the thread count.
std::vector<HomaloidalType> enumerate_noether(Int degree, unsigned threads = 1);

/// The Noether solutions of degree d that pass Hudson's test, same order.
std::vector<HomaloidalType> enumerate_proper(Int degree, unsigned threads = 1);

/// (d; d-1, 1^(2d-2)), d >= 2.
HomaloidalType family_de_jonquieres(Int degree);

/// (d; d-2, 2^(d-2), 1^3), d >= 4.
HomaloidalType family_sub2(Int degree);

/// Proper types of degree 3m, 3m+1 and 3m+2 without a pair of
/// multiplicities summing to d-1 once m >= 4. Defined for m >= 3.
struct ThreeMFamily {
    HomaloidalType degree_3m;
    HomaloidalType degree_3m_plus_1;
    HomaloidalType degree_3m_plus_2;
};
ThreeMFamily family_3m(Int m);

}  // namespace cremona
