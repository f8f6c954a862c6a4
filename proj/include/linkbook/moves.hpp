#pragma once

#include <string>
#include <vector>

#include "linkbook/book.hpp"

namespace linkbook {

/// Sparse integer block matrix (possibly rectangular) acting on pages by the
/// congruence M^T A M. Block metadata: rows = q*n_in, cols = q*n_out.
struct TransformMatrix {
    int rows = 0;
    int cols = 0;
    int q = 1;
    int n_in = 0;
    int n_out = 0;
    std::vector<PageEntry> entries;  // general, sorted by (row, col)

    void add(int r, int c, long long v) {
        if (v != 0) entries.push_back({r, c, v});
    }
    void canonicalize();
    bool operator==(const TransformMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
};

TransformMatrix matmul(const TransformMatrix& a, const TransformMatrix& b);

/// Lifts a single-component block to diag(M) across q components.
TransformMatrix block_diag(const TransformMatrix& block, int q);

/// M^T p M, exact integer arithmetic; requires M.rows == p.dim().
Page congruence(const TransformMatrix& m, const Page& p);

/// Congruence applied to every page of every term, then expand_books.
BookSum apply_move(const BookSum& s, const TransformMatrix& m);

/// Identity plus I_N in the (j, i) block: the band sum of component i over j.
TransformMatrix band_sum_matrix(int i, int j, int q, int N);
/// Identity plus -I_N in the (j, i) block: the subtraction band sum
/// (equals flip_j . band sum . flip_j).
TransformMatrix band_sum_subtract_matrix(int i, int j, int q, int N);

BookSum band_sum_apply(const BookSum& s, int i, int j);
BookSum band_sum_subtract(const BookSum& s, int i, int j);

/// Identity with the (r, r) block replaced by -I_N.
TransformMatrix orientation_matrix(int r, int q, int N);
BookSum orientation_flip(const BookSum& s, int r);

enum class HumpMove { hump_to_strand, strand_to_hump, hump_to_hump };

/// Single-component block for the hump moves; the hump occupies strips
/// n+1..n+8. Lift with block_diag before applying to pages.
TransformMatrix d_pi_1_matrix(HumpMove variant, int n, int N);

/// qN x qN identity except the (t, t) block, which swaps strips n and n+3 and
/// zeroes the needle strips n+1, n+2.
TransformMatrix d_pi_2_matrix(int n, int N, int q, int t);

/// qN x qN identity except the (l, l) block, which reverses strips n..n+9.
TransformMatrix omega_1f_matrix(int n, int N, int q, int l);

enum class StripEdit { add, del };

/// Single-component block: add inserts a strip after the n-th, delete drops
/// the n-th. Lift with block_diag before applying to pages.
TransformMatrix strip_matrix(StripEdit kind, int n, int N);

/// True iff the two sides of an Omega.2 / Omega.3 move pair have identical
/// books after lifting.
bool omega_2_3_invariance_check(const TangleChordDiagram& left,
                                const TangleChordDiagram& right);

std::string serialize_transform(const TransformMatrix& m);
TransformMatrix parse_transform(const std::string& text);

} // namespace linkbook
