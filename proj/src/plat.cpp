#include "linkbook/plat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "linkbook/errors.hpp"

namespace linkbook {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

} // namespace

void Degree1Table::accumulate(int a, int b, double logpart, Rational halfpart) {
    auto& slot = pairs[ordered(a, b)];
    slot.first += logpart;
    slot.second += halfpart;
}

std::vector<std::vector<bool>> parity_matrix(const Degree1Table& t, int strands) {
    std::vector<std::vector<bool>> p(strands, std::vector<bool>(strands, false));
    for (const auto& [ab, v] : t.pairs) {
        auto [a, b] = ab;
        if (a < 1 || b < 1 || a > strands || b > strands)
            throw ValidationError("strand pair out of range");
        const Rational& half = v.second;
        if (half.denominator() != 1 && half.denominator() != 2)
            throw ValidationError("malformed half-integer part");
        bool odd = half.denominator() == 2;
        p[a - 1][b - 1] = odd;
        p[b - 1][a - 1] = odd;
    }
    return p;
}

std::vector<int> plat_permutation(const std::vector<std::vector<bool>>& parity) {
    const int n = static_cast<int>(parity.size());
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(parity[a].size()) != n)
            throw ValidationError("parity matrix must be square");
        if (parity[a][a]) throw ValidationError("strand cannot invert with itself");
        for (int b = 0; b < n; ++b)
            if (parity[a][b] != parity[b][a])
                throw ValidationError("parity matrix must be symmetric");
    }
    // parity(a,b) for a<b says whether the pair inverts; the bottom position
    // of strand a counts the strands that end up to its left
    std::vector<int> image(n);
    for (int a = 0; a < n; ++a) {
        int pos = 1;
        for (int b = 0; b < a; ++b)
            if (!parity[b][a]) ++pos;
        for (int b = a + 1; b < n; ++b)
            if (parity[a][b]) ++pos;
        image[a] = pos;
    }
    std::vector<int> seen(n, 0);
    for (int v : image) {
        if (v < 1 || v > n || seen[v - 1]++)
            throw ValidationError("parity matrix admits no realizing plat wiring");
    }
    return image;
}

std::vector<int> plat_trace(const PlatWord& word, int strands) {
    std::vector<int> at(strands);  // position -> strand label
    std::iota(at.begin(), at.end(), 1);
    for (const PlatGroup& g : word) {
        if (g.pos < 1 || g.pos + 1 > strands)
            throw ValidationError("plat group position out of range");
        if (g.half_twists % 2 == 1) std::swap(at[g.pos - 1], at[g.pos]);
    }
    std::vector<int> image(strands);
    for (int pos = 1; pos <= strands; ++pos) image[at[pos - 1] - 1] = pos;
    return image;
}

Degree1Table plat_degree1_table(const PlatWord& word, int strands) {
    Degree1Table t;
    t.strands = strands;
    std::vector<int> at(strands);
    std::iota(at.begin(), at.end(), 1);
    for (const PlatGroup& g : word) {
        if (g.pos < 1 || g.pos + 1 > strands)
            throw ValidationError("plat group position out of range");
        int a = at[g.pos - 1], b = at[g.pos];
        t.accumulate(a, b, std::log(g.lambda) / (2.0 * kPi),
                     Rational(g.sign * g.half_twists, 2));
        if (g.half_twists % 2 == 1) std::swap(at[g.pos - 1], at[g.pos]);
    }
    return t;
}

std::string serialize_degree1_table(const Degree1Table& t) {
    ojson j;
    j["strands"] = t.strands;
    ojson pairs = ojson::array();
    for (const auto& [ab, v] : t.pairs)
        pairs.push_back(ojson::array({ab.first, ab.second, v.first,
                                      v.second.numerator(), v.second.denominator()}));
    j["pairs"] = pairs;
    return j.dump();
}

Degree1Table parse_degree1_table(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad degree-1 table JSON: ") + e.what());
    }
    Degree1Table t;
    if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
        throw ParseError("degree-1 table must be {\"pairs\": [...]}");
    int max_strand = 0;
    for (const auto& jp : j["pairs"]) {
        if (!jp.is_array() || jp.size() != 5)
            throw ParseError("pair must be [a, b, logpart, halfNum, halfDen]");
        int a = jp[0].get<int>(), b = jp[1].get<int>();
        long long den = jp[4].get<long long>();
        if (den == 0) throw ParseError("zero denominator in half part");
        t.accumulate(a, b, jp[2].get<double>(), Rational(jp[3].get<long long>(), den));
        max_strand = std::max({max_strand, a, b});
    }
    t.strands = j.value("strands", max_strand);
    return t;
}

} // namespace linkbook
