#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "linkbook/coefficient.hpp"
#include "linkbook/link_model.hpp"

namespace linkbook {

struct ChordFoot {
    int comp = 0;    // component 1..q
    int strip = 0;   // strip 1..N
    int slot = 0;    // strand slot, oracle-level tracking
    int height = 0;  // slice index

    auto key() const { return std::tie(comp, strip, slot); }
};

/// One chord; feet stored in canonical (comp, strip, slot) order,
/// both at the same height.
struct Chord {
    ChordFoot a, b;

    int height() const { return a.height; }
    void normalize() {
        if (b.key() < a.key()) std::swap(a, b);
    }
};

/// m chords on a hooked link skeleton, ordered bottom-up by height;
/// no two chords share a height. `flipped[c-1]` marks components whose
/// orientation has been reversed relative to the skeleton (oracle use).
struct TangleChordDiagram {
    int q = 0;
    int N = 0;
    std::vector<Chord> chords;
    std::vector<signed char> flipped;            // size q
    std::shared_ptr<const HookedLink> link;      // may be null for synthetic diagrams

    int degree() const { return static_cast<int>(chords.size()); }
};

/// Compares (q, N, flags, per-chord cell data in page order); heights and the
/// skeleton pointer are not part of the identity.
bool diagram_equal(const TangleChordDiagram& x, const TangleChordDiagram& y);
bool diagram_less(const TangleChordDiagram& x, const TangleChordDiagram& y);

struct DiagramSum {
    std::vector<std::pair<Coefficient, TangleChordDiagram>> terms;
};

/// Diagram on a concrete link; feet given as (height, slotA, slotB),
/// components and strips are computed from the trace and layout.
TangleChordDiagram diagram_on_link(std::shared_ptr<const HookedLink> link,
                                   const std::vector<std::array<int, 3>>& chords);

/// Skeleton-free diagram for codec and oracle work; feet carry explicit cells.
TangleChordDiagram synthetic_diagram(int q, int N,
                                     const std::vector<Chord>& chords);

/// Moves every chord up, top chord first, one slice at a time, until a cap
/// consumes a foot's slot, a crossing group involves it, another chord blocks
/// the slice above, or the word ends. Strips are recomputed from final slots.
/// Idempotent.
TangleChordDiagram lift_chords(const TangleChordDiagram& d);

/// Merges identical diagrams, drops zero coefficients, sorts terms by
/// (degree, lexicographic chord data).
DiagramSum sum_canonicalize(DiagramSum s);

std::string serialize_diagram_sum(const DiagramSum& s);
DiagramSum parse_diagram_sum(const std::string& text,
                             std::shared_ptr<const HookedLink> link = nullptr);

} // namespace linkbook
