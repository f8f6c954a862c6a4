#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "linkbook/coefficient.hpp"
#include "linkbook/errors.hpp"

namespace linkbook {

enum class Winding { CW, CCW };

/// Local minimum: two new strands appear at slots pos, pos+1.
struct CupEvent {
    int pos = 1;
};

/// Local maximum: the strands at slots pos, pos+1 are joined and removed.
struct CapEvent {
    int pos = 1;
};

/// A group of `half_twists` crossings of one handedness between the strands
/// at slots pos, pos+1. `sign` is stored explicitly and must be consistent
/// with (winding, relative orientation): same orientation + CCW => +1,
/// same + CW => -1, opposite orientation flips the sign.
struct CrossingGroupEvent {
    int pos = 1;
    int sign = 1;
    int half_twists = 1;
    Winding winding = Winding::CCW;
};

using Event = std::variant<CupEvent, CapEvent, CrossingGroupEvent>;

struct EventSlice {
    int width = 0;  // live strands entering the slice
    Event event;
};

/// Strand connectivity and canonical orientation computed by tracing the word.
/// Level k is the gap above slice k (level 0 sits below slice 1). labels[k][s-1]
/// is the component of slot s at level k; dirs[k][s-1] is +1 (up) or -1 (down)
/// under the canonical seed orientation of that component.
struct Trace {
    int q = 0;
    std::vector<std::vector<int>> labels;
    std::vector<std::vector<int>> dirs;
};

/// A closed oriented framed link as an ordered word of event slices,
/// blackboard framing implied. Immutable after construction.
struct MorseLink {
    std::vector<EventSlice> slices;
    std::vector<int> orientations;  // +1 / -1 per component
    Trace trace;

    int q() const { return trace.q; }
    int slice_count() const { return static_cast<int>(slices.size()); }
    int width_entering(int slice) const { return slices[slice - 1].width; }

    /// Component of the strand at `slot` entering `slice`.
    int component(int slice, int slot) const {
        return trace.labels[slice - 1][slot - 1];
    }
    /// Direction (+1 up / -1 down) of the strand at `slot` entering `slice`,
    /// with orientation flags applied.
    int direction(int slice, int slot) const {
        int c = component(slice, slot);
        return trace.dirs[slice - 1][slot - 1] * orientations[c - 1];
    }
};

/// Validates strand bookkeeping, closure, event bounds and crossing-sign
/// consistency, then traces components. Throws ValidationError.
MorseLink make_morse_link(std::vector<EventSlice> slices,
                          std::vector<int> orientations = {});

/// Component labels and canonical directions per (level, slot); computed at
/// construction time, exposed here as the tracing operation proper.
inline const Trace& trace_components(const MorseLink& link) { return link.trace; }

/// Replaces each crossing group's stored sign with the one dictated by its
/// winding and the traced orientations. Construction aid for generated words.
std::vector<EventSlice> with_consistent_signs(std::vector<EventSlice> slices,
                                              std::vector<int> orientations = {});

MorseLink parse_morse_link(const std::string& text);
std::string serialize_morse_link(const MorseLink& link);

/// Time-wise concatenation of two closed words. Components of b are
/// relabeled after a's.
MorseLink disjoint_union(const MorseLink& a, const MorseLink& b);

/// The vertical strips induced by local extrema. Every extremum at slots
/// (p, p+1) contributes boundary lines x = p, p+1/2, p+1; lines are
/// deduplicated, grouped into clusters (maximal runs at gaps <= 1/2) and each
/// cluster carries its own two outer strips, so N = #lines + #clusters.
struct StripLayout {
    int strip_count = 0;                       // N
    std::vector<Rational> boundaries;          // sorted, deduplicated
    std::vector<int> cluster_of_boundary;      // parallel to boundaries
    std::vector<std::vector<int>> slot_strip;  // [slice-1][slot-1]
    std::map<int, int> apex_strip;             // extremum slice -> strip

    int N() const { return strip_count; }
    int strip_of(int slice, int slot) const {
        return slot_strip[slice - 1][slot - 1];
    }
};

StripLayout slice_strips(const MorseLink& link);

/// The link with all but one local maximum per component marked as hooks.
/// Hooks are metadata only; strips are unchanged.
struct HookedLink {
    MorseLink base;
    StripLayout layout;
    std::set<int> hooked_maxima;  // cap slice indices
};

HookedLink mark_hooks(const MorseLink& link);

} // namespace linkbook
