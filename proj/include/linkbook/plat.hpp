#pragma once

#include <map>
#include <string>
#include <vector>

#include "linkbook/coefficient.hpp"

namespace linkbook {

/// Degree-1 data of a plat per strand pair: the +-(1/2 pi) log lambda
/// magnitude (float) and the +-eps*n/2 rational summand whose parity encodes
/// the wiring. Strands are labeled by their top positions.
struct Degree1Table {
    int strands = 0;
    std::map<std::pair<int, int>, std::pair<double, Rational>> pairs;

    void accumulate(int a, int b, double logpart, Rational halfpart);
};

/// Entry (a, b) is true iff the half-integer part is a non-integer
/// (odd number of half-twists between the strands).
std::vector<std::vector<bool>> parity_matrix(const Degree1Table& t, int strands);

/// Recovers the top-to-bottom strand permutation from the pairwise parity
/// (inversion) data; throws ValidationError if no wiring realizes it.
std::vector<int> plat_permutation(const std::vector<std::vector<bool>>& parity);

/// A plat's crossing region: groups act on adjacent strand positions,
/// no extrema between the top and bottom rows.
struct PlatGroup {
    int pos = 1;          // left strand position
    int sign = 1;         // eps
    int half_twists = 1;  // n
    double lambda = 1.0;  // separation scale, feeds the log part only
};
using PlatWord = std::vector<PlatGroup>;

/// Ground-truth permutation: image of each top position at the bottom.
std::vector<int> plat_trace(const PlatWord& word, int strands);

/// Degree-1 extraction: per strand pair, sum of eps*n/2 over the groups the
/// pair crosses in, plus a log-lambda float part.
Degree1Table plat_degree1_table(const PlatWord& word, int strands);

std::string serialize_degree1_table(const Degree1Table& t);
Degree1Table parse_degree1_table(const std::string& text);

} // namespace linkbook
