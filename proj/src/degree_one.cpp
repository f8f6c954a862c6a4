#include "linkbook/degree_one.hpp"

#include <memory>

#include <json.hpp>

#include "linkbook/errors.hpp"

namespace linkbook {

namespace {
using ojson = nlohmann::ordered_json;
}

LinkingMatrix linking_matrix(const MorseLink& link) {
    LinkingMatrix lm(link.q());
    for (int k = 1; k <= link.slice_count(); ++k) {
        const auto* xg = std::get_if<CrossingGroupEvent>(&link.slices[k - 1].event);
        if (!xg) continue;
        int c1 = link.component(k, xg->pos);
        int c2 = link.component(k, xg->pos + 1);
        Rational half(xg->sign * xg->half_twists, 2);
        if (c1 == c2) {
            lm.m[c1 - 1][c1 - 1] += half;
        } else {
            lm.m[c1 - 1][c2 - 1] += half;
            lm.m[c2 - 1][c1 - 1] += half;
        }
    }
    return lm;
}

LinkingMatrix linking_band_sum(const LinkingMatrix& lm, int i, int j, int sign) {
    if (i == j) throw ValidationError("band sum needs two distinct components");
    if (i < 1 || i > lm.q || j < 1 || j > lm.q)
        throw DimensionError("band sum component out of range");
    if (sign != 1 && sign != -1) throw ValidationError("band sum sign must be +1 or -1");
    LinkingMatrix out = lm;
    Rational s(sign);
    for (int k = 0; k < lm.q; ++k) out.m[i - 1][k] += s * out.m[j - 1][k];
    for (int k = 0; k < lm.q; ++k) out.m[k][i - 1] += s * out.m[k][j - 1];
    return out;
}

bool degree1_additivity_check(const MorseLink& a, const MorseLink& b) {
    LinkingMatrix la = linking_matrix(a), lb = linking_matrix(b);
    LinkingMatrix lu = linking_matrix(disjoint_union(a, b));
    if (lu.q != la.q + lb.q) return false;
    for (int r = 0; r < lu.q; ++r)
        for (int c = 0; c < lu.q; ++c) {
            Rational want(0);
            if (r < la.q && c < la.q)
                want = la.m[r][c];
            else if (r >= la.q && c >= la.q)
                want = lb.m[r - la.q][c - la.q];
            if (lu.m[r][c] != want) return false;
        }
    return true;
}

DiagramSum degree_one_diagrams(const MorseLink& link) {
    auto hooked = std::make_shared<HookedLink>(mark_hooks(link));
    DiagramSum s;
    for (int k = 1; k <= link.slice_count(); ++k) {
        const auto* xg = std::get_if<CrossingGroupEvent>(&link.slices[k - 1].event);
        if (!xg) continue;
        TangleChordDiagram d =
            diagram_on_link(hooked, {{{k, xg->pos, xg->pos + 1}}});
        Coefficient c{Rational(xg->sign * xg->half_twists, 2), Rational(0)};
        s.terms.emplace_back(c, std::move(d));
    }
    return sum_canonicalize(std::move(s));
}

std::string serialize_linking_matrix(const LinkingMatrix& lm) {
    ojson j;
    j["q"] = lm.q;
    ojson rows = ojson::array();
    for (const auto& row : lm.m) {
        ojson r = ojson::array();
        for (const Rational& v : row)
            r.push_back(ojson::array({v.numerator(), v.denominator()}));
        rows.push_back(r);
    }
    j["m"] = rows;
    return j.dump();
}

LinkingMatrix parse_linking_matrix(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad linking matrix JSON: ") + e.what());
    }
    LinkingMatrix lm(j.at("q").get<int>());
    const auto& rows = j.at("m");
    if (static_cast<int>(rows.size()) != lm.q)
        throw ParseError("linking matrix row count != q");
    for (int r = 0; r < lm.q; ++r) {
        if (static_cast<int>(rows[r].size()) != lm.q)
            throw ParseError("linking matrix is not square");
        for (int c = 0; c < lm.q; ++c) {
            long long den = rows[r][c][1].get<long long>();
            if (den == 0) throw ParseError("zero denominator in linking matrix");
            lm.m[r][c] = Rational(rows[r][c][0].get<long long>(), den);
        }
    }
    return lm;
}

} // namespace linkbook
