#include "linkbook/book.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include <json.hpp>

#include "linkbook/errors.hpp"

namespace linkbook {

namespace {
using ojson = nlohmann::ordered_json;
}

void Page::add(int r, int c, long long v) {
    if (v == 0) return;
    if (r > c) std::swap(r, c);
    entries.push_back({r, c, v});
}

void Page::canonicalize() {
    std::sort(entries.begin(), entries.end(),
              [](const PageEntry& x, const PageEntry& y) { return x.key() < y.key(); });
    std::vector<PageEntry> merged;
    for (const PageEntry& e : entries) {
        if (!merged.empty() && merged.back().key() == e.key())
            merged.back().value += e.value;
        else
            merged.push_back(e);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const PageEntry& e) { return e.value == 0; }),
                 merged.end());
    entries = std::move(merged);
}

long long Page::value_at(int r, int c) const {
    if (r > c) std::swap(r, c);
    for (const PageEntry& e : entries)
        if (e.row == r && e.col == c) return e.value;
    return 0;
}

bool Page::operator<(const Page& o) const {
    if (q != o.q) return q < o.q;
    if (N != o.N) return N < o.N;
    if (entries.size() != o.entries.size()) return entries.size() < o.entries.size();
    for (size_t i = 0; i < entries.size(); ++i) {
        const PageEntry &a = entries[i], &b = o.entries[i];
        if (a.key() != b.key()) return a.key() < b.key();
        if (a.value != b.value) return a.value < b.value;
    }
    return false;
}

bool Book::operator<(const Book& o) const {
    if (q != o.q) return q < o.q;
    if (N != o.N) return N < o.N;
    if (pages.size() != o.pages.size()) return pages.size() < o.pages.size();
    for (size_t i = 0; i < pages.size(); ++i) {
        if (pages[i] < o.pages[i]) return true;
        if (o.pages[i] < pages[i]) return false;
    }
    return false;
}

Page encode_chord(Cell foot_a, Cell foot_b, int q, int N) {
    auto in_range = [&](Cell f) {
        return f.first >= 1 && f.first <= q && f.second >= 1 && f.second <= N;
    };
    if (q < 1 || N < 1 || !in_range(foot_a) || !in_range(foot_b))
        throw DimensionError("chord cell out of range");
    Page p;
    p.q = q;
    p.N = N;
    int r = (foot_a.first - 1) * N + foot_a.second;
    int c = (foot_b.first - 1) * N + foot_b.second;
    p.add(r, c, r == c ? 2 : 1);
    p.canonicalize();
    return p;
}

Book encode_diagram(const TangleChordDiagram& d) {
    Book b;
    b.q = d.q;
    b.N = d.N;
    for (const Chord& c : d.chords)
        b.pages.push_back(encode_chord({c.a.comp, c.a.strip}, {c.b.comp, c.b.strip},
                                       d.q, d.N));
    return b;
}

namespace {

Cell cell_of(int index, int N) { return {(index - 1) / N + 1, (index - 1) % N + 1}; }

} // namespace

std::vector<std::pair<Cell, Cell>> decode_book(const Book& b) {
    std::vector<std::pair<Cell, Cell>> out;
    for (const Page& p : b.pages) {
        if (p.entries.size() != 1) throw MultiChordPage("page does not hold exactly one chord");
        const PageEntry& e = p.entries.front();
        bool diagonal = e.row == e.col;
        long long mag = std::llabs(e.value);
        if ((diagonal && mag != 2) || (!diagonal && mag != 1))
            throw MultiChordPage("page entry is not a single chord");
        out.emplace_back(cell_of(e.row, p.N), cell_of(e.col, p.N));
    }
    return out;
}

std::vector<Page> split_page(const Page& p) {
    std::vector<Page> parts;
    for (const PageEntry& e : p.entries) {
        long long sign = e.value < 0 ? -1 : 1;
        long long mag = std::llabs(e.value);
        Page unit;
        unit.q = p.q;
        unit.N = p.N;
        if (e.row == e.col) {
            unit.entries = {{e.row, e.col, 2 * sign}};
            for (long long k = 0; k < mag / 2; ++k) parts.push_back(unit);
            if (mag % 2) {
                unit.entries = {{e.row, e.col, sign}};
                parts.push_back(unit);
            }
        } else {
            unit.entries = {{e.row, e.col, sign}};
            for (long long k = 0; k < mag; ++k) parts.push_back(unit);
        }
    }
    // a zero page splits into nothing: the chord it carried was killed, and
    // expand_books drops every book containing it
    return parts;
}

BookSum sum_canonicalize(BookSum s) {
    std::sort(s.terms.begin(), s.terms.end(), [](const auto& x, const auto& y) {
        if (x.second < y.second) return true;
        if (y.second < x.second) return false;
        return x.first < y.first;
    });
    std::vector<std::pair<Coefficient, Book>> merged;
    for (auto& term : s.terms) {
        if (!merged.empty() && merged.back().second == term.second)
            merged.back().first = merged.back().first + term.first;
        else
            merged.push_back(std::move(term));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& t) { return t.first.is_zero(); }),
                 merged.end());
    s.terms = std::move(merged);
    return s;
}

BookSum expand_books(const BookSum& s) {
    BookSum out;
    out.q = s.q;
    out.N = s.N;
    for (const auto& [coeff, book] : s.terms) {
        std::vector<std::vector<Page>> parts;
        size_t count = 1;
        for (const Page& p : book.pages) {
            parts.push_back(split_page(p));
            count *= parts.back().size();
        }
        std::vector<size_t> idx(parts.size(), 0);
        for (size_t n = 0; n < count; ++n) {
            Book b;
            b.q = book.q;
            b.N = book.N;
            for (size_t i = 0; i < parts.size(); ++i) b.pages.push_back(parts[i][idx[i]]);
            out.terms.emplace_back(coeff, std::move(b));
            for (size_t i = parts.size(); i-- > 0;) {
                if (++idx[i] < parts[i].size()) break;
                idx[i] = 0;
            }
        }
    }
    return sum_canonicalize(std::move(out));
}

// --- JSON -------------------------------------------------------------

namespace {

ojson page_to_json(const Page& p) {
    ojson j;
    j["q"] = p.q;
    j["N"] = p.N;
    ojson e = ojson::array();
    for (const PageEntry& pe : p.entries) e.push_back(ojson::array({pe.row, pe.col, pe.value}));
    j["e"] = e;
    return j;
}

Page page_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("N") || !j.contains("e"))
        throw ParseError("page must be {\"q\",\"N\",\"e\"}");
    Page p;
    p.q = j["q"].get<int>();
    p.N = j["N"].get<int>();
    for (const auto& je : j["e"]) {
        if (!je.is_array() || je.size() != 3) throw ParseError("page entry must be [r,c,v]");
        int r = je[0].get<int>(), c = je[1].get<int>();
        long long v = je[2].get<long long>();
        if (r < 1 || c < 1 || r > p.dim() || c > p.dim())
            throw DimensionError("page entry out of range");
        if (r > c) throw ParseError("page entries must satisfy r <= c");
        p.add(r, c, v);
    }
    p.canonicalize();
    return p;
}

ojson coeff_to_json(const Coefficient& c) {
    return ojson::array({c.re.numerator(), c.re.denominator(),
                         c.im.numerator(), c.im.denominator()});
}

Coefficient coeff_from_json(const ojson& j) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("coefficient must be [reNum, reDen, imNum, imDen]");
    long long rd = j[1].get<long long>(), id = j[3].get<long long>();
    if (rd == 0 || id == 0) throw ParseError("zero denominator in coefficient");
    return {Rational(j[0].get<long long>(), rd), Rational(j[2].get<long long>(), id)};
}

} // namespace

std::string serialize_page(const Page& p) { return page_to_json(p).dump(); }

Page parse_page(const std::string& text) {
    try {
        return page_from_json(ojson::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad page JSON: ") + e.what());
    }
}

std::string serialize_book_sum(const BookSum& s) {
    ojson j = ojson::array();
    for (const auto& [c, b] : s.terms) {
        ojson term;
        term["c"] = coeff_to_json(c);
        ojson pages = ojson::array();
        for (const Page& p : b.pages) pages.push_back(page_to_json(p));
        term["b"] = pages;
        j.push_back(term);
    }
    return j.dump();
}

BookSum parse_book_sum(const std::string& text, int q_hint, int N_hint) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad book sum JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("book sum must be an array of terms");
    BookSum s;
    s.q = q_hint;
    s.N = N_hint;
    for (const auto& term : j) {
        if (!term.contains("c") || !term.contains("b"))
            throw ParseError("term must have \"c\" and \"b\"");
        Book b;
        for (const auto& jp : term["b"]) b.pages.push_back(page_from_json(jp));
        if (!b.pages.empty()) {
            b.q = b.pages.front().q;
            b.N = b.pages.front().N;
            for (const Page& p : b.pages)
                if (p.q != b.q || p.N != b.N)
                    throw DimensionError("pages of one book must share (q, N)");
        } else {
            b.q = s.q;
            b.N = s.N;
        }
        if (s.q == 0) {
            s.q = b.q;
            s.N = b.N;
        } else if (b.q != 0 && (b.q != s.q || b.N != s.N)) {
            throw DimensionError("books of one sum must share (q, N)");
        }
        s.terms.emplace_back(coeff_from_json(term["c"]), std::move(b));
    }
    if (s.q == 0)
        throw ParseError("empty book sum needs explicit q and N");
    for (auto& [c, b] : s.terms)
        if (b.q == 0) {
            b.q = s.q;
            b.N = s.N;
        }
    return sum_canonicalize(std::move(s));
}

} // namespace linkbook
