#include "linkbook/diagrams.hpp"

#include <algorithm>
#include <array>
#include <set>

#include <json.hpp>

#include "linkbook/errors.hpp"

namespace linkbook {

namespace {

using ojson = nlohmann::ordered_json;

std::array<int, 7> chord_key(const Chord& c) {
    return {c.a.comp, c.a.strip, c.a.slot, c.b.comp, c.b.strip, c.b.slot, 0};
}

} // namespace

bool diagram_equal(const TangleChordDiagram& x, const TangleChordDiagram& y) {
    if (x.q != y.q || x.N != y.N || x.flipped != y.flipped) return false;
    if (x.chords.size() != y.chords.size()) return false;
    for (size_t i = 0; i < x.chords.size(); ++i)
        if (chord_key(x.chords[i]) != chord_key(y.chords[i])) return false;
    return true;
}

bool diagram_less(const TangleChordDiagram& x, const TangleChordDiagram& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (x.q != y.q) return x.q < y.q;
    if (x.N != y.N) return x.N < y.N;
    for (size_t i = 0; i < x.chords.size(); ++i) {
        auto kx = chord_key(x.chords[i]), ky = chord_key(y.chords[i]);
        if (kx != ky) return kx < ky;
    }
    return x.flipped < y.flipped;
}

TangleChordDiagram diagram_on_link(std::shared_ptr<const HookedLink> link,
                                   const std::vector<std::array<int, 3>>& chords) {
    if (!link) throw ValidationError("diagram needs a link skeleton");
    const MorseLink& base = link->base;
    TangleChordDiagram d;
    d.q = base.q();
    d.N = link->layout.N();
    d.flipped.assign(d.q, 0);
    d.link = link;
    for (const auto& [h, sa, sb] : chords) {
        if (h < 1 || h > base.slice_count())
            throw ValidationError("chord height out of range");
        int w = base.width_entering(h);
        if (sa < 1 || sa > w || sb < 1 || sb > w)
            throw ValidationError("chord foot slot out of range at its height");
        if (sa == sb) throw ValidationError("chord feet must sit on distinct strands");
        Chord c;
        c.a = {base.component(h, sa), link->layout.strip_of(h, sa), sa, h};
        c.b = {base.component(h, sb), link->layout.strip_of(h, sb), sb, h};
        c.normalize();
        d.chords.push_back(c);
    }
    std::sort(d.chords.begin(), d.chords.end(),
              [](const Chord& x, const Chord& y) { return x.height() < y.height(); });
    std::set<int> heights;
    for (const Chord& c : d.chords)
        if (!heights.insert(c.height()).second)
            throw ValidationError("two chords at the same height");
    return d;
}

TangleChordDiagram synthetic_diagram(int q, int N, const std::vector<Chord>& chords) {
    TangleChordDiagram d;
    d.q = q;
    d.N = N;
    d.flipped.assign(q, 0);
    d.chords = chords;
    for (Chord& c : d.chords) c.normalize();
    std::sort(d.chords.begin(), d.chords.end(),
              [](const Chord& x, const Chord& y) { return x.height() < y.height(); });
    return d;
}

namespace {

// Does the event at `slice` stop a chord whose feet sit just below it?
bool stops_chord(const Event& e, int sa, int sb) {
    if (const auto* cap = std::get_if<CapEvent>(&e))
        return sa == cap->pos || sa == cap->pos + 1 || sb == cap->pos || sb == cap->pos + 1;
    if (const auto* xg = std::get_if<CrossingGroupEvent>(&e))
        return sa == xg->pos || sa == xg->pos + 1 || sb == xg->pos || sb == xg->pos + 1;
    return false;  // cups never consume strands
}

int slot_past(const Event& e, int s) {
    if (const auto* cup = std::get_if<CupEvent>(&e)) return s < cup->pos ? s : s + 2;
    if (const auto* cap = std::get_if<CapEvent>(&e)) return s < cap->pos ? s : s - 2;
    return s;  // crossing groups stop the chord before this is reached
}

} // namespace

TangleChordDiagram lift_chords(const TangleChordDiagram& d) {
    if (!d.link) throw ValidationError("lift_chords needs a link skeleton");
    const MorseLink& base = d.link->base;
    const int S = base.slice_count();

    TangleChordDiagram out = d;
    std::set<int> occupied;
    for (const Chord& c : out.chords) occupied.insert(c.height());

    // top chord first
    for (auto it = out.chords.rbegin(); it != out.chords.rend(); ++it) {
        Chord& c = *it;
        int h = c.height();
        int sa = c.a.slot, sb = c.b.slot;
        occupied.erase(h);
        while (h + 1 <= S && !occupied.count(h + 1) &&
               !stops_chord(base.slices[h - 1].event, sa, sb)) {
            const Event& e = base.slices[h - 1].event;
            sa = slot_past(e, sa);
            sb = slot_past(e, sb);
            ++h;
        }
        occupied.insert(h);
        c.a.height = c.b.height = h;
        c.a.slot = sa;
        c.b.slot = sb;
        c.a.comp = base.component(h, sa);
        c.b.comp = base.component(h, sb);
        c.a.strip = d.link->layout.strip_of(h, sa);
        c.b.strip = d.link->layout.strip_of(h, sb);
        c.normalize();
    }
    std::sort(out.chords.begin(), out.chords.end(),
              [](const Chord& x, const Chord& y) { return x.height() < y.height(); });
    return out;
}

DiagramSum sum_canonicalize(DiagramSum s) {
    std::sort(s.terms.begin(), s.terms.end(), [](const auto& x, const auto& y) {
        if (diagram_less(x.second, y.second)) return true;
        if (diagram_less(y.second, x.second)) return false;
        return x.first < y.first;
    });
    DiagramSum out;
    for (auto& term : s.terms) {
        if (!out.terms.empty() && diagram_equal(out.terms.back().second, term.second))
            out.terms.back().first = out.terms.back().first + term.first;
        else
            out.terms.push_back(std::move(term));
    }
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                   [](const auto& t) { return t.first.is_zero(); }),
                    out.terms.end());
    return out;
}

// --- JSON -------------------------------------------------------------

namespace {

ojson coeff_to_json(const Coefficient& c) {
    return ojson::array({c.re.numerator(), c.re.denominator(),
                         c.im.numerator(), c.im.denominator()});
}

Coefficient coeff_from_json(const ojson& j) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("coefficient must be [reNum, reDen, imNum, imDen]");
    long long rn = j[0].get<long long>(), rd = j[1].get<long long>();
    long long in = j[2].get<long long>(), id = j[3].get<long long>();
    if (rd == 0 || id == 0) throw ParseError("zero denominator in coefficient");
    return {Rational(rn, rd), Rational(in, id)};
}

ojson foot_to_json(const ChordFoot& f) {
    return ojson::array({f.comp, f.strip, f.slot});
}

ChordFoot foot_from_json(const ojson& j, int height) {
    if (!j.is_array() || j.size() != 3) throw ParseError("chord foot must be [comp, strip, slot]");
    return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), height};
}

} // namespace

std::string serialize_diagram_sum(const DiagramSum& s) {
    ojson j = ojson::array();
    for (const auto& [c, x] : s.terms) {
        ojson term;
        term["c"] = coeff_to_json(c);
        ojson chords = ojson::array();
        for (const Chord& ch : x.chords) {
            ojson jc;
            jc["h"] = ch.height();
            jc["a"] = foot_to_json(ch.a);
            jc["b"] = foot_to_json(ch.b);
            chords.push_back(jc);
        }
        term["x"] = chords;
        j.push_back(term);
    }
    return j.dump();
}

DiagramSum parse_diagram_sum(const std::string& text,
                             std::shared_ptr<const HookedLink> link) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad diagram sum JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("diagram sum must be an array of terms");
    DiagramSum s;
    for (const auto& term : j) {
        if (!term.contains("c") || !term.contains("x"))
            throw ParseError("term must have \"c\" and \"x\"");
        TangleChordDiagram d;
        d.link = link;
        if (link) {
            d.q = link->base.q();
            d.N = link->layout.N();
        }
        for (const auto& jc : term["x"]) {
            int h = jc.at("h").get<int>();
            Chord c;
            c.a = foot_from_json(jc.at("a"), h);
            c.b = foot_from_json(jc.at("b"), h);
            c.normalize();
            d.chords.push_back(c);
            d.q = std::max({d.q, c.a.comp, c.b.comp});
            d.N = std::max({d.N, c.a.strip, c.b.strip});
        }
        d.flipped.assign(d.q, 0);
        std::sort(d.chords.begin(), d.chords.end(),
                  [](const Chord& x, const Chord& y) { return x.height() < y.height(); });
        s.terms.emplace_back(coeff_from_json(term["c"]), std::move(d));
    }
    return s;
}

} // namespace linkbook
