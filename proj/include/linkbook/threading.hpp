#pragma once

#include "linkbook/book.hpp"

namespace linkbook {

/// Adjoins a trivial circle: component q+1 (empty block), every strip index
/// shifted up by 4. Maps B[qN] into B[(q+1)(N+4)].
BookSum thread_embed(const BookSum& s, int q, int N);

/// Recovers the component count of the underlying link from a thread stage:
/// checks that the ambient size factors as (q+steps)(N+4*steps) and counts
/// component blocks carrying at least one nonzero entry.
int infer_components(const BookSum& s, int steps);

} // namespace linkbook
