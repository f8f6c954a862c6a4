#pragma once

// Shared helpers for the test suites: canonical fixture words, a random Morse
// word generator, random diagrams/book sums, and small dense oracles kept
// independent of the library's sparse paths.

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include "linkbook/book.hpp"
#include "linkbook/diagrams.hpp"
#include "linkbook/link_model.hpp"

namespace linkbook::testsup {

inline MorseLink round_unknot() {
    return make_morse_link({{0, CupEvent{1}}, {2, CapEvent{1}}});
}

// flips windings until the traced sign of every group matches the requested one
inline std::vector<EventSlice> with_consistent_signs_for_eps(std::vector<EventSlice> w,
                                                             int eps) {
    w = with_consistent_signs(std::move(w));
    for (EventSlice& sl : w)
        if (auto* xg = std::get_if<CrossingGroupEvent>(&sl.event); xg && xg->sign != eps) {
            xg->winding = xg->winding == Winding::CW ? Winding::CCW : Winding::CW;
            xg->sign = eps;
        }
    return w;
}

// side-by-side Hopf-style link: q = 2, N = 8, linking number eps*n/2;
// n must be even or the two circles merge into a knot
inline MorseLink hopf(int eps = 1, int n = 2) {
    if (n % 2 != 0) throw std::logic_error("hopf fixture needs an even twist count");
    std::vector<EventSlice> w{{0, CupEvent{1}},
                              {2, CupEvent{3}},
                              {4, CrossingGroupEvent{2, eps, n, Winding::CW}},
                              {4, CapEvent{3}},
                              {2, CapEvent{1}}};
    return make_morse_link(with_consistent_signs_for_eps(std::move(w), eps));
}

// unknot with one self-crossing group of the requested sign
inline MorseLink twisted_unknot(int eps, int n) {
    std::vector<EventSlice> w{{0, CupEvent{1}},
                              {2, CrossingGroupEvent{1, eps, n, Winding::CCW}},
                              {2, CapEvent{1}}};
    return make_morse_link(with_consistent_signs_for_eps(std::move(w), eps));
}

/// Random closed Morse word; crossing signs are made consistent. Retries the
/// construction until it traces to at least `min_q` components.
inline MorseLink random_link(std::mt19937& rng, int max_events = 10, int min_q = 1) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<EventSlice> word;
        int w = 0;
        int budget = 2 + static_cast<int>(rng() % max_events);
        while (true) {
            bool must_close = static_cast<int>(word.size()) >= budget;
            int kind;
            if (w == 0)
                kind = 0;  // cup
            else if (must_close)
                kind = 1;  // cap
            else
                kind = rng() % 4;  // cups twice as likely as caps keeps words alive
            EventSlice sl;
            sl.width = w;
            if (kind == 0 || kind == 2) {
                sl.event = CupEvent{1 + static_cast<int>(rng() % (w + 1))};
                w += 2;
            } else if (kind == 1) {
                sl.event = CapEvent{1 + static_cast<int>(rng() % (w - 1))};
                w -= 2;
            } else {
                CrossingGroupEvent xg;
                xg.pos = 1 + static_cast<int>(rng() % (w - 1));
                xg.half_twists = 1 + static_cast<int>(rng() % 3);
                xg.winding = rng() % 2 ? Winding::CW : Winding::CCW;
                sl.event = xg;
            }
            word.push_back(sl);
            if (w == 0 && must_close) break;
        }
        MorseLink link = make_morse_link(with_consistent_signs(std::move(word)));
        if (link.q() >= min_q) return link;
    }
    throw std::runtime_error("random_link could not satisfy min_q");
}

inline Rational random_rational(std::mt19937& rng) {
    long long num = static_cast<long long>(rng() % 11) - 5;
    long long den = 1 + static_cast<long long>(rng() % 4);
    return {num, den};
}

inline Coefficient random_coefficient(std::mt19937& rng, bool nonzero = true) {
    Coefficient c{random_rational(rng), random_rational(rng)};
    if (nonzero && c.is_zero()) c.re = Rational(1, 2);
    return c;
}

/// Random synthetic diagram: <= max_chords chords at distinct heights,
/// arbitrary (comp, strip) cells.
inline TangleChordDiagram random_diagram(std::mt19937& rng, int q, int N,
                                         int max_chords = 3) {
    int m = 1 + static_cast<int>(rng() % max_chords);
    std::set<int> heights;
    while (static_cast<int>(heights.size()) < m)
        heights.insert(1 + static_cast<int>(rng() % 20));
    std::vector<Chord> chords;
    for (int h : heights) {
        Chord c;
        c.a = {1 + static_cast<int>(rng() % q), 1 + static_cast<int>(rng() % N), 0, h};
        c.b = {1 + static_cast<int>(rng() % q), 1 + static_cast<int>(rng() % N), 0, h};
        chords.push_back(c);
    }
    return synthetic_diagram(q, N, chords);
}

inline DiagramSum random_diagram_sum(std::mt19937& rng, int q, int N,
                                     int max_terms = 2, int max_chords = 3) {
    DiagramSum s;
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t)
        s.terms.emplace_back(random_coefficient(rng), random_diagram(rng, q, N, max_chords));
    return sum_canonicalize(std::move(s));
}

// --- dense oracles ------------------------------------------------------

using DenseInt = std::vector<std::vector<long long>>;

inline DenseInt densify_page(const Page& p) {
    DenseInt d(p.dim(), std::vector<long long>(p.dim(), 0));
    for (const PageEntry& e : p.entries) {
        d[e.row - 1][e.col - 1] = e.value;
        d[e.col - 1][e.row - 1] = e.value;
    }
    return d;
}

inline DenseInt dense_congruence(const DenseInt& m, const DenseInt& a) {
    size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    DenseInt out(cols, std::vector<long long>(cols, 0));
    for (size_t x = 0; x < cols; ++x)
        for (size_t y = 0; y < cols; ++y)
            for (size_t r = 0; r < rows; ++r)
                for (size_t c = 0; c < rows; ++c)
                    out[x][y] += m[r][x] * a[r][c] * m[c][y];
    return out;
}

using DenseRat = std::vector<std::vector<Rational>>;

inline DenseRat rat_mult(const DenseRat& a, const DenseRat& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    DenseRat out(n, std::vector<Rational>(m, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
    return out;
}

inline DenseRat rat_transpose(const DenseRat& a) {
    DenseRat out(a[0].size(), std::vector<Rational>(a.size(), Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

} // namespace linkbook::testsup
