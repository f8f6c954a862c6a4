#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkbook/coefficient.hpp"
#include "linkbook/diagrams.hpp"

namespace linkbook {

struct PageEntry {
    int row = 0;
    int col = 0;
    long long value = 0;

    auto key() const { return std::pair<int, int>(row, col); }
    bool operator==(const PageEntry& o) const {
        return row == o.row && col == o.col && value == o.value;
    }
};

/// Sparse symmetric qN x qN integer matrix holding one chord (or, after
/// congruences, several). Only the upper triangle (row <= col) is stored; the
/// basis is (component-1)*N + strip. A chord with both feet in one cell is a
/// diagonal entry of value 2 (the quadratic-form convention), so splitting
/// and the band-sum congruence agree chord-by-chord.
struct Page {
    int q = 0;
    int N = 0;
    std::vector<PageEntry> entries;  // sorted by (row, col), row <= col, nonzero

    int dim() const { return q * N; }
    void add(int r, int c, long long v);  // symmetric accumulate
    void canonicalize();
    long long value_at(int r, int c) const;

    bool operator==(const Page& o) const {
        return q == o.q && N == o.N && entries == o.entries;
    }
    bool operator<(const Page& o) const;
};

/// Ordered stack of pages, bottom-up; all pages share (q, N).
struct Book {
    int q = 0;
    int N = 0;
    std::vector<Page> pages;

    bool operator==(const Book& o) const {
        return q == o.q && N == o.N && pages == o.pages;
    }
    bool operator<(const Book& o) const;
};

struct BookSum {
    int q = 0;
    int N = 0;
    std::vector<std::pair<Coefficient, Book>> terms;

    bool operator==(const BookSum& o) const {
        return q == o.q && N == o.N && terms == o.terms;
    }
};

using Cell = std::pair<int, int>;  // (component, strip)

Page encode_chord(Cell foot_a, Cell foot_b, int q, int N);
Book encode_diagram(const TangleChordDiagram& d);

/// One (cell, cell) pair per page; requires every page to hold a single
/// chord, else throws MultiChordPage.
std::vector<std::pair<Cell, Cell>> decode_book(const Book& b);

/// Splits a page into single-chord pages; an off-diagonal entry of value k
/// gives |k| signed unit pages, a diagonal entry of value 2k gives k
/// self-cell pages. The entrywise sum of the parts equals the input.
std::vector<Page> split_page(const Page& p);

/// Distributes every multi-chord page over its parts until all pages are
/// single-chord, then canonicalizes. Idempotent.
BookSum expand_books(const BookSum& s);

BookSum sum_canonicalize(BookSum s);

std::string serialize_page(const Page& p);
Page parse_page(const std::string& text);
std::string serialize_book_sum(const BookSum& s);
/// q/N hints are needed only when the sum (or a book) is empty and cannot
/// self-describe its ambient size.
BookSum parse_book_sum(const std::string& text, int q_hint = 0, int N_hint = 0);

} // namespace linkbook
