#include "linkbook/oracle.hpp"

#include <vector>

#include "linkbook/errors.hpp"

namespace linkbook {

DiagramSum oracle_band_sum(const DiagramSum& s, int i, int j) {
    DiagramSum out;
    for (const auto& [coeff, d] : s.terms) {
        if (i == j || i < 1 || i > d.q || j < 1 || j > d.q)
            throw ValidationError("band sum components out of range");
        // positions of feet on component j: (chord index, which foot)
        std::vector<std::pair<size_t, int>> feet;
        for (size_t c = 0; c < d.chords.size(); ++c) {
            if (d.chords[c].a.comp == j) feet.emplace_back(c, 0);
            if (d.chords[c].b.comp == j) feet.emplace_back(c, 1);
        }
        const size_t k = feet.size();
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            TangleChordDiagram nd = d;
            for (size_t f = 0; f < k; ++f) {
                if (!(mask & (size_t{1} << f))) continue;
                Chord& c = nd.chords[feet[f].first];
                (feet[f].second == 0 ? c.a : c.b).comp = i;  // same strip, same slot
            }
            for (Chord& c : nd.chords) c.normalize();
            out.terms.emplace_back(coeff, std::move(nd));
        }
    }
    return sum_canonicalize(std::move(out));
}

DiagramSum oracle_flip(const DiagramSum& s, int r) {
    DiagramSum out;
    for (const auto& [coeff, d] : s.terms) {
        if (r < 1 || r > d.q) throw ValidationError("flip component out of range");
        int feet_on_r = 0;
        for (const Chord& c : d.chords)
            feet_on_r += (c.a.comp == r) + (c.b.comp == r);
        TangleChordDiagram nd = d;
        nd.flipped[r - 1] ^= 1;
        out.terms.emplace_back(feet_on_r % 2 ? -coeff : coeff, std::move(nd));
    }
    return sum_canonicalize(std::move(out));
}

BookSum booksum_of(const DiagramSum& s) {
    BookSum out;
    for (const auto& [coeff, d] : s.terms) {
        if (out.q == 0) {
            out.q = d.q;
            out.N = d.N;
        } else if (out.q != d.q || out.N != d.N) {
            throw DimensionError("diagram sum terms disagree on (q, N)");
        }
        Book b = encode_diagram(d);
        int flipped_feet = 0;
        for (size_t c = 0; c < d.chords.size(); ++c) {
            const Chord& ch = d.chords[c];
            int on_flipped = (d.flipped[ch.a.comp - 1] ? 1 : 0) +
                             (d.flipped[ch.b.comp - 1] ? 1 : 0);
            flipped_feet += on_flipped;
            if (on_flipped % 2)
                for (PageEntry& e : b.pages[c].entries) e.value = -e.value;
        }
        out.terms.emplace_back(flipped_feet % 2 ? -coeff : coeff, std::move(b));
    }
    return sum_canonicalize(std::move(out));
}

} // namespace linkbook
