#pragma once

#include "linkbook/book.hpp"
#include "linkbook/diagrams.hpp"

namespace linkbook {

/// Direct diagrammatic band sum of component i over component j: every chord
/// foot on j independently stays on j or moves to the parallel doubled strand
/// on i (same strip), so a diagram with k feet on j expands to 2^k diagrams
/// with copied coefficients.
DiagramSum oracle_band_sum(const DiagramSum& s, int i, int j);

/// Orientation reversal of component r: each term's coefficient is multiplied
/// by (-1)^(feet on r) and the skeleton flag for r is toggled.
DiagramSum oracle_flip(const DiagramSum& s, int r);

/// Termwise encoding bridge. Flipped-orientation skeletons are reconciled
/// with the matrix convention: the sign moves out of the coefficient and into
/// the page entries (one -1 per foot on a flipped component).
BookSum booksum_of(const DiagramSum& s);

} // namespace linkbook
