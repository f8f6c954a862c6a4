#pragma once

#include <string>
#include <vector>

#include "linkbook/diagrams.hpp"
#include "linkbook/link_model.hpp"

namespace linkbook {

/// q x q symmetric rational matrix: pairwise linking numbers off the
/// diagonal, blackboard-framing writhe on it.
struct LinkingMatrix {
    int q = 0;
    std::vector<std::vector<Rational>> m;

    explicit LinkingMatrix(int q_ = 0)
        : q(q_), m(q_, std::vector<Rational>(q_, Rational(0))) {}

    bool operator==(const LinkingMatrix& o) const { return q == o.q && m == o.m; }
};

/// L_ij = (1/2) sum of eps*n over crossing groups joining components i and j.
LinkingMatrix linking_matrix(const MorseLink& link);

/// Congruence by the elementary matrix with (j, i) entry = sign:
/// L_i' = L_i + L_j +- 2 L_ij, L_ij' = L_ij +- L_j, L_j' = L_j.
LinkingMatrix linking_band_sum(const LinkingMatrix& lm, int i, int j, int sign);

/// Linking matrix of the disjoint union is the block-diagonal direct sum.
bool degree1_additivity_check(const MorseLink& a, const MorseLink& b);

/// One chord per crossing group, coefficient eps*n/2, feet at the group's
/// cells. The degree-1 data whose book blocks mirror the linking matrix.
DiagramSum degree_one_diagrams(const MorseLink& link);

std::string serialize_linking_matrix(const LinkingMatrix& lm);
LinkingMatrix parse_linking_matrix(const std::string& text);

} // namespace linkbook
