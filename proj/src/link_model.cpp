#include "linkbook/link_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>

#include <json.hpp>

namespace linkbook {

namespace {

using ojson = nlohmann::ordered_json;

int event_pos(const Event& e) {
    return std::visit([](const auto& ev) { return ev.pos; }, e);
}

int width_delta(const Event& e) {
    if (std::holds_alternative<CupEvent>(e)) return 2;
    if (std::holds_alternative<CapEvent>(e)) return -2;
    return 0;
}

// Leaving slot of an entering strand, nullopt if consumed by a cap.
std::optional<int> forward_slot(const Event& e, int s) {
    if (const auto* cup = std::get_if<CupEvent>(&e)) {
        return s < cup->pos ? s : s + 2;
    }
    if (const auto* cap = std::get_if<CapEvent>(&e)) {
        if (s < cap->pos) return s;
        if (s > cap->pos + 1) return s - 2;
        return std::nullopt;
    }
    const auto& xg = std::get<CrossingGroupEvent>(e);
    if (xg.half_twists % 2 == 1) {
        if (s == xg.pos) return xg.pos + 1;
        if (s == xg.pos + 1) return xg.pos;
    }
    return s;
}

// Entering slot of a leaving strand, nullopt if born at a cup.
std::optional<int> backward_slot(const Event& e, int s) {
    if (const auto* cup = std::get_if<CupEvent>(&e)) {
        if (s < cup->pos) return s;
        if (s > cup->pos + 1) return s - 2;
        return std::nullopt;
    }
    if (const auto* cap = std::get_if<CapEvent>(&e)) {
        return s < cap->pos ? s : s + 2;
    }
    const auto& xg = std::get<CrossingGroupEvent>(e);
    if (xg.half_twists % 2 == 1) {
        if (s == xg.pos) return xg.pos + 1;
        if (s == xg.pos + 1) return xg.pos;
    }
    return s;
}

void check_widths(const std::vector<EventSlice>& slices) {
    if (slices.empty()) throw ValidationError("empty link word");
    int running = 0;
    for (size_t k = 0; k < slices.size(); ++k) {
        const EventSlice& sl = slices[k];
        if (sl.width != running)
            throw ValidationError("slice " + std::to_string(k + 1) +
                                  ": declared width " + std::to_string(sl.width) +
                                  " does not match running strand count " +
                                  std::to_string(running));
        int pos = event_pos(sl.event);
        if (pos < 1) throw ValidationError("slice position must be 1-based");
        if (std::holds_alternative<CupEvent>(sl.event)) {
            if (pos + 1 > sl.width + 2)
                throw ValidationError("cup position out of range");
        } else {
            if (pos + 1 > sl.width)
                throw ValidationError("cap/crossing position out of range");
        }
        if (const auto* xg = std::get_if<CrossingGroupEvent>(&sl.event)) {
            if (xg->half_twists < 1)
                throw ValidationError("crossing group needs at least one half-twist");
            if (xg->sign != 1 && xg->sign != -1)
                throw ValidationError("crossing sign must be +1 or -1");
        }
        running += width_delta(sl.event);
    }
    if (running != 0)
        throw ValidationError("word ends with " + std::to_string(running) +
                              " live strands (open endpoints)");
}

Trace trace_word(const std::vector<EventSlice>& slices) {
    const int S = static_cast<int>(slices.size());
    Trace t;
    // level widths: level k = gap above slice k, level 0 below slice 1
    std::vector<int> width(S + 1, 0);
    for (int k = 1; k <= S; ++k)
        width[k] = slices[k - 1].width + width_delta(slices[k - 1].event);
    std::vector<std::vector<int>> label(S + 1), dir(S + 1);
    for (int k = 0; k <= S; ++k) {
        label[k].assign(width[k], 0);
        dir[k].assign(width[k], 0);
    }

    // Walk each component along its circle, heading +1 (up) / -1 (down).
    auto walk = [&](int comp, int level0, int slot0) {
        int L = level0, s = slot0, heading = 1;
        while (label[L][s - 1] == 0) {
            label[L][s - 1] = comp;
            dir[L][s - 1] = heading;
            if (heading == 1) {
                const Event& e = slices[L].event;  // slice L+1
                if (const auto* cap = std::get_if<CapEvent>(&e);
                    cap && (s == cap->pos || s == cap->pos + 1)) {
                    s = (s == cap->pos) ? cap->pos + 1 : cap->pos;
                    heading = -1;
                } else {
                    s = *forward_slot(e, s);
                    ++L;
                }
            } else {
                const Event& e = slices[L - 1].event;  // slice L
                if (const auto* cup = std::get_if<CupEvent>(&e);
                    cup && (s == cup->pos || s == cup->pos + 1)) {
                    s = (s == cup->pos) ? cup->pos + 1 : cup->pos;
                    heading = 1;
                } else {
                    s = *backward_slot(e, s);
                    --L;
                }
            }
        }
    };

    int q = 0;
    for (int k = 1; k <= S; ++k) {
        const auto* cup = std::get_if<CupEvent>(&slices[k - 1].event);
        if (!cup) continue;
        if (label[k][cup->pos] != 0) continue;  // right leg at (level k, pos+1)
        ++q;
        walk(q, k, cup->pos + 1);  // seed: right leg of the first cup goes up
    }
    t.q = q;
    t.labels = std::move(label);
    t.dirs = std::move(dir);
    return t;
}

void check_crossing_signs(const MorseLink& link) {
    for (int k = 1; k <= link.slice_count(); ++k) {
        const auto* xg = std::get_if<CrossingGroupEvent>(&link.slices[k - 1].event);
        if (!xg) continue;
        bool same = link.direction(k, xg->pos) == link.direction(k, xg->pos + 1);
        int expect = (same ? 1 : -1) * (xg->winding == Winding::CCW ? 1 : -1);
        if (xg->sign != expect)
            throw ValidationError("crossing sign at slice " + std::to_string(k) +
                                  " inconsistent with winding and orientation");
    }
}

} // namespace

MorseLink make_morse_link(std::vector<EventSlice> slices, std::vector<int> orientations) {
    check_widths(slices);
    MorseLink link;
    link.slices = std::move(slices);
    link.trace = trace_word(link.slices);
    if (orientations.empty()) {
        link.orientations.assign(link.trace.q, 1);
    } else {
        if (static_cast<int>(orientations.size()) != link.trace.q)
            throw ValidationError("orientation list length does not match component count");
        for (int o : orientations)
            if (o != 1 && o != -1) throw ValidationError("orientation flag must be +1 or -1");
        link.orientations = std::move(orientations);
    }
    check_crossing_signs(link);
    return link;
}

std::vector<EventSlice> with_consistent_signs(std::vector<EventSlice> slices,
                                              std::vector<int> orientations) {
    check_widths(slices);
    Trace t = trace_word(slices);
    if (orientations.empty()) orientations.assign(t.q, 1);
    if (static_cast<int>(orientations.size()) != t.q)
        throw ValidationError("orientation list length does not match component count");
    for (size_t k = 0; k < slices.size(); ++k) {
        auto* xg = std::get_if<CrossingGroupEvent>(&slices[k].event);
        if (!xg) continue;
        auto dir = [&](int slot) {
            int comp = t.labels[k][slot - 1];
            return t.dirs[k][slot - 1] * orientations[comp - 1];
        };
        bool same = dir(xg->pos) == dir(xg->pos + 1);
        xg->sign = (same ? 1 : -1) * (xg->winding == Winding::CCW ? 1 : -1);
    }
    return slices;
}

MorseLink disjoint_union(const MorseLink& a, const MorseLink& b) {
    std::vector<EventSlice> slices = a.slices;
    slices.insert(slices.end(), b.slices.begin(), b.slices.end());
    std::vector<int> orient = a.orientations;
    orient.insert(orient.end(), b.orientations.begin(), b.orientations.end());
    return make_morse_link(std::move(slices), std::move(orient));
}

// --- JSON -------------------------------------------------------------

namespace {

Event event_from_json(const ojson& ev) {
    if (!ev.is_array() || ev.size() < 2 || !ev[0].is_string())
        throw ParseError("event must be [\"cup\"|\"cap\"|\"xg\", ...]");
    std::string kind = ev[0].get<std::string>();
    if (kind == "cup" || kind == "cap") {
        if (ev.size() != 2 || !ev[1].is_number_integer())
            throw ParseError("cup/cap event must be [kind, pos]");
        int pos = ev[1].get<int>();
        if (kind == "cup") return CupEvent{pos};
        return CapEvent{pos};
    }
    if (kind == "xg") {
        if (ev.size() != 5 || !ev[1].is_number_integer() || !ev[2].is_number_integer() ||
            !ev[3].is_number_integer() || !ev[4].is_string())
            throw ParseError("crossing event must be [\"xg\", pos, eps, n, \"cw\"|\"ccw\"]");
        CrossingGroupEvent xg;
        xg.pos = ev[1].get<int>();
        xg.sign = ev[2].get<int>();
        xg.half_twists = ev[3].get<int>();
        std::string w = ev[4].get<std::string>();
        if (w == "cw")
            xg.winding = Winding::CW;
        else if (w == "ccw")
            xg.winding = Winding::CCW;
        else
            throw ParseError("winding must be \"cw\" or \"ccw\"");
        return xg;
    }
    throw ParseError("unknown event kind '" + kind + "'");
}

ojson event_to_json(const Event& e) {
    ojson ev = ojson::array();
    if (const auto* cup = std::get_if<CupEvent>(&e)) {
        ev.push_back("cup");
        ev.push_back(cup->pos);
    } else if (const auto* cap = std::get_if<CapEvent>(&e)) {
        ev.push_back("cap");
        ev.push_back(cap->pos);
    } else {
        const auto& xg = std::get<CrossingGroupEvent>(e);
        ev.push_back("xg");
        ev.push_back(xg.pos);
        ev.push_back(xg.sign);
        ev.push_back(xg.half_twists);
        ev.push_back(xg.winding == Winding::CW ? "cw" : "ccw");
    }
    return ev;
}

} // namespace

MorseLink parse_morse_link(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad link JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("slices") || !j["slices"].is_array())
        throw ParseError("link JSON must be an object with a \"slices\" array");
    std::vector<EventSlice> slices;
    for (const auto& js : j["slices"]) {
        if (!js.is_object() || !js.contains("w") || !js.contains("ev"))
            throw ParseError("slice must be {\"w\": int, \"ev\": [...]}");
        EventSlice sl;
        if (!js["w"].is_number_integer()) throw ParseError("slice width must be an integer");
        sl.width = js["w"].get<int>();
        sl.event = event_from_json(js["ev"]);
        slices.push_back(sl);
    }
    std::vector<int> orient;
    if (j.contains("orient")) {
        for (const auto& o : j["orient"]) {
            std::string s = o.get<std::string>();
            if (s == "+")
                orient.push_back(1);
            else if (s == "-")
                orient.push_back(-1);
            else
                throw ParseError("orientation flag must be \"+\" or \"-\"");
        }
    }
    return make_morse_link(std::move(slices), std::move(orient));
}

std::string serialize_morse_link(const MorseLink& link) {
    ojson j;
    j["slices"] = ojson::array();
    for (const EventSlice& sl : link.slices) {
        ojson js;
        js["w"] = sl.width;
        js["ev"] = event_to_json(sl.event);
        j["slices"].push_back(js);
    }
    bool any_flip = std::any_of(link.orientations.begin(), link.orientations.end(),
                                [](int o) { return o == -1; });
    if (any_flip) {
        ojson orient = ojson::array();
        for (int o : link.orientations) orient.push_back(o == 1 ? "+" : "-");
        j["orient"] = orient;
    }
    return j.dump();
}

// --- Strips -----------------------------------------------------------

namespace {

struct Extremum {
    int slice;
    int pos;  // left slot
};

std::vector<Extremum> extrema_of(const MorseLink& link) {
    std::vector<Extremum> out;
    for (int k = 1; k <= link.slice_count(); ++k) {
        const Event& e = link.slices[k - 1].event;
        if (const auto* cup = std::get_if<CupEvent>(&e))
            out.push_back({k, cup->pos});
        else if (const auto* cap = std::get_if<CapEvent>(&e))
            out.push_back({k, cap->pos});
    }
    return out;
}

} // namespace

StripLayout slice_strips(const MorseLink& link) {
    StripLayout layout;
    const std::vector<Extremum> exts = extrema_of(link);
    if (exts.empty()) throw ValidationError("closed word without extrema");

    std::vector<Rational> lines;
    for (const Extremum& e : exts) {
        lines.emplace_back(e.pos);
        lines.emplace_back(2 * e.pos + 1, 2);
        lines.emplace_back(e.pos + 1);
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    // Clusters: maximal runs of lines separated by gaps <= 1/2. Each cluster
    // owns its two outer strips, so a disjoint sublink contributes its full
    // strip count and threading adds 4 strips per adjoined circle.
    const Rational half(1, 2);
    std::vector<int> cluster(lines.size(), 0);
    int nclusters = 1;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i] - lines[i - 1] > half) ++nclusters;
        cluster[i] = nclusters - 1;
    }
    // first strip index (1-based) of each cluster
    std::vector<int> first_strip(nclusters), first_line(nclusters, -1), nlines(nclusters, 0);
    for (size_t i = 0; i < lines.size(); ++i) {
        if (first_line[cluster[i]] < 0) first_line[cluster[i]] = static_cast<int>(i);
        ++nlines[cluster[i]];
    }
    int acc = 1;
    for (int c = 0; c < nclusters; ++c) {
        first_strip[c] = acc;
        acc += nlines[c] + 1;
    }
    layout.strip_count = acc - 1;
    layout.boundaries = lines;
    layout.cluster_of_boundary = cluster;

    auto line_index = [&](const Rational& x) -> int {
        auto it = std::lower_bound(lines.begin(), lines.end(), x);
        if (it != lines.end() && *it == x) return static_cast<int>(it - lines.begin());
        return -1;
    };
    // strip index of the interval just right of line i (within its cluster,
    // or the cluster's right outer strip)
    auto strip_right_of = [&](int i) {
        int c = cluster[i];
        int j = i - first_line[c];  // 0-based within cluster
        return first_strip[c] + 1 + j;
    };
    auto strip_left_of = [&](int i) {
        int c = cluster[i];
        int j = i - first_line[c];
        return first_strip[c] + j;
    };

    // roles of an integer line x: left leg of an extremum at (x, x+1) and/or
    // right leg of one at (x-1, x)
    auto resolve_on_line = [&](int i, int x, int slice) -> int {
        bool left_role = false, right_role = false;
        int best_dist = -1, best_slice = 0;
        bool best_is_left = false;
        for (const Extremum& e : exts) {
            bool l = (e.pos == x), r = (e.pos + 1 == x);
            if (!l && !r) continue;
            left_role |= l;
            right_role |= r;
            int d = std::abs(e.slice - slice);
            if (best_dist < 0 || d < best_dist ||
                (d == best_dist && e.slice < best_slice)) {
                best_dist = d;
                best_slice = e.slice;
                best_is_left = l;
            }
        }
        if (left_role && !right_role) return strip_right_of(i);
        if (right_role && !left_role) return strip_left_of(i);
        return best_is_left ? strip_right_of(i) : strip_left_of(i);
    };

    auto strip_of_x = [&](const Rational& x, int slice) -> int {
        int i = line_index(x);
        if (i >= 0) return resolve_on_line(i, static_cast<int>(x.numerator()), slice);
        auto it = std::lower_bound(lines.begin(), lines.end(), x);
        if (it == lines.begin()) return first_strip[0];  // left of everything
        if (it == lines.end()) {
            int c = nclusters - 1;
            return first_strip[c] + nlines[c];
        }
        int hi = static_cast<int>(it - lines.begin());
        int lo = hi - 1;
        if (cluster[lo] == cluster[hi]) return strip_right_of(lo);
        // in a gap between clusters: nearest line wins, tie to the lower cluster
        return (x - lines[lo] <= lines[hi] - x) ? strip_right_of(lo) : strip_left_of(hi);
    };

    layout.slot_strip.resize(link.slice_count());
    for (int k = 1; k <= link.slice_count(); ++k) {
        int w = link.width_entering(k);
        layout.slot_strip[k - 1].resize(w);
        for (int s = 1; s <= w; ++s)
            layout.slot_strip[k - 1][s - 1] = strip_of_x(Rational(s), k);
    }
    for (const Extremum& e : exts) {
        int i = line_index(Rational(2 * e.pos + 1, 2));
        layout.apex_strip[e.slice] = strip_left_of(i);
    }
    return layout;
}

HookedLink mark_hooks(const MorseLink& link) {
    HookedLink hooked;
    hooked.base = link;
    hooked.layout = slice_strips(link);
    // topmost maximum of each component stays unhooked
    std::map<int, int> topmost;  // component -> cap slice
    std::vector<std::pair<int, int>> caps;  // (slice, component)
    for (int k = 1; k <= link.slice_count(); ++k) {
        const auto* cap = std::get_if<CapEvent>(&link.slices[k - 1].event);
        if (!cap) continue;
        int comp = link.component(k, cap->pos);
        caps.emplace_back(k, comp);
        topmost[comp] = std::max(topmost.count(comp) ? topmost[comp] : 0, k);
    }
    for (auto [slice, comp] : caps)
        if (slice != topmost[comp]) hooked.hooked_maxima.insert(slice);
    return hooked;
}

} // namespace linkbook
