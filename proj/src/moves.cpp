#include "linkbook/moves.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "linkbook/errors.hpp"

namespace linkbook {

namespace {
using ojson = nlohmann::ordered_json;
}

void TransformMatrix::canonicalize() {
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

TransformMatrix matmul(const TransformMatrix& a, const TransformMatrix& b) {
    if (a.cols != b.rows) throw DimensionError("matmul dimension mismatch");
    TransformMatrix out;
    out.rows = a.rows;
    out.cols = b.cols;
    out.q = a.q;
    out.n_in = a.n_in;
    out.n_out = b.n_out;
    std::map<int, std::vector<PageEntry>> b_by_row;
    for (const PageEntry& e : b.entries) b_by_row[e.row].push_back(e);
    std::map<std::pair<int, int>, long long> acc;
    for (const PageEntry& ea : a.entries) {
        auto it = b_by_row.find(ea.col);
        if (it == b_by_row.end()) continue;
        for (const PageEntry& eb : it->second) acc[{ea.row, eb.col}] += ea.value * eb.value;
    }
    for (const auto& [rc, v] : acc) out.add(rc.first, rc.second, v);
    out.canonicalize();
    return out;
}

TransformMatrix block_diag(const TransformMatrix& block, int q) {
    TransformMatrix out;
    out.q = q;
    out.n_in = block.rows;
    out.n_out = block.cols;
    out.rows = q * block.rows;
    out.cols = q * block.cols;
    for (int c = 0; c < q; ++c)
        for (const PageEntry& e : block.entries)
            out.add(c * block.rows + e.row, c * block.cols + e.col, e.value);
    out.canonicalize();
    return out;
}

Page congruence(const TransformMatrix& m, const Page& p) {
    if (m.rows != p.dim()) throw DimensionError("congruence: matrix rows != page dimension");
    if (m.q != p.q || m.n_in != p.N)
        throw DimensionError("congruence: block metadata does not match page");

    std::map<int, std::vector<PageEntry>> m_by_row;
    for (const PageEntry& e : m.entries) m_by_row[e.row].push_back(e);

    // T = A_full * M
    std::map<std::pair<int, int>, long long> t;
    auto accumulate = [&](int r, int c, long long v) {
        auto it = m_by_row.find(c);
        if (it == m_by_row.end()) return;
        for (const PageEntry& em : it->second) t[{r, em.col}] += v * em.value;
    };
    for (const PageEntry& e : p.entries) {
        accumulate(e.row, e.col, e.value);
        if (e.row != e.col) accumulate(e.col, e.row, e.value);
    }
    // B = M^T * T
    std::map<std::pair<int, int>, long long> b;
    for (const PageEntry& em : m.entries) {
        // em contributes M^T[em.col][em.row]
        for (const auto& [rc, v] : t) {
            if (rc.first != em.row) continue;
            b[{em.col, rc.second}] += em.value * v;
        }
    }
    Page out;
    out.q = p.q;
    out.N = m.n_out;
    for (const auto& [rc, v] : b)
        if (rc.first <= rc.second) out.add(rc.first, rc.second, v);
    out.canonicalize();
    return out;
}

BookSum apply_move(const BookSum& s, const TransformMatrix& m) {
    if (m.q != s.q || m.rows != s.q * s.N)
        throw DimensionError("move matrix does not match book sum dimensions");
    BookSum out;
    out.q = s.q;
    out.N = m.n_out;
    for (const auto& [coeff, book] : s.terms) {
        Book nb;
        nb.q = out.q;
        nb.N = out.N;
        for (const Page& p : book.pages) nb.pages.push_back(congruence(m, p));
        out.terms.emplace_back(coeff, std::move(nb));
    }
    return expand_books(out);
}

namespace {

TransformMatrix band_sum_base(int i, int j, int q, int N, long long v) {
    if (i == j) throw ValidationError("band sum needs two distinct components");
    if (i < 1 || i > q || j < 1 || j > q)
        throw DimensionError("band sum component out of range");
    TransformMatrix m;
    m.q = q;
    m.n_in = m.n_out = N;
    m.rows = m.cols = q * N;
    for (int k = 1; k <= q * N; ++k) m.add(k, k, 1);
    for (int s = 1; s <= N; ++s) m.add((j - 1) * N + s, (i - 1) * N + s, v);
    m.canonicalize();
    return m;
}

} // namespace

TransformMatrix band_sum_matrix(int i, int j, int q, int N) {
    return band_sum_base(i, j, q, N, 1);
}

TransformMatrix band_sum_subtract_matrix(int i, int j, int q, int N) {
    return band_sum_base(i, j, q, N, -1);
}

BookSum band_sum_apply(const BookSum& s, int i, int j) {
    return apply_move(sum_canonicalize(s), band_sum_matrix(i, j, s.q, s.N));
}

BookSum band_sum_subtract(const BookSum& s, int i, int j) {
    return apply_move(sum_canonicalize(s), band_sum_subtract_matrix(i, j, s.q, s.N));
}

TransformMatrix orientation_matrix(int r, int q, int N) {
    if (r < 1 || r > q) throw DimensionError("orientation component out of range");
    TransformMatrix m;
    m.q = q;
    m.n_in = m.n_out = N;
    m.rows = m.cols = q * N;
    for (int k = 1; k <= q * N; ++k) {
        int comp = (k - 1) / N + 1;
        m.add(k, k, comp == r ? -1 : 1);
    }
    m.canonicalize();
    return m;
}

BookSum orientation_flip(const BookSum& s, int r) {
    return apply_move(s, orientation_matrix(r, s.q, s.N));
}

TransformMatrix d_pi_1_matrix(HumpMove variant, int n, int N) {
    if (n < 0 || N < 1) throw DimensionError("bad hump parameters");
    TransformMatrix m;
    m.q = 1;
    switch (variant) {
        case HumpMove::hump_to_strand:
            if (N <= 8 || n + 8 > N)
                throw DimensionError("hump deletion needs N > 8 and n+8 <= N");
            m.rows = N;
            m.cols = N - 8;
            for (int k = 1; k <= n; ++k) m.add(k, k, 1);
            for (int r = n + 9; r <= N; ++r) m.add(r, r - 8, 1);
            break;
        case HumpMove::strand_to_hump:
            if (n > N) throw DimensionError("hump offset exceeds N");
            m.rows = N;
            m.cols = N + 8;
            for (int k = 1; k <= n; ++k) m.add(k, k, 1);
            for (int r = n + 1; r <= N; ++r) m.add(r, r + 8, 1);
            break;
        case HumpMove::hump_to_hump:
            if (n + 8 > N) throw DimensionError("hump strips n+1..n+8 exceed N");
            m.rows = m.cols = N;
            for (int k = 1; k <= n; ++k) m.add(k, k, 1);
            for (int r = n + 9; r <= N; ++r) m.add(r, r, 1);
            break;
    }
    m.n_in = m.rows;
    m.n_out = m.cols;
    m.canonicalize();
    return m;
}

TransformMatrix d_pi_2_matrix(int n, int N, int q, int t) {
    if (n < 1 || n + 3 > N) throw DimensionError("needle strips n..n+3 out of range");
    if (t < 1 || t > q) throw DimensionError("component out of range");
    TransformMatrix m;
    m.q = q;
    m.n_in = m.n_out = N;
    m.rows = m.cols = q * N;
    for (int c = 1; c <= q; ++c) {
        int base = (c - 1) * N;
        for (int s = 1; s <= N; ++s) {
            if (c == t && s >= n && s <= n + 3) continue;
            m.add(base + s, base + s, 1);
        }
        if (c == t) {
            m.add(base + n, base + n + 3, 1);
            m.add(base + n + 3, base + n, 1);
            // strips n+1, n+2 map to zero: the needle is too narrow to carry feet
        }
    }
    m.canonicalize();
    return m;
}

TransformMatrix omega_1f_matrix(int n, int N, int q, int l) {
    if (n < 1 || n + 9 > N) throw DimensionError("curl strips n..n+9 out of range");
    if (l < 1 || l > q) throw DimensionError("component out of range");
    TransformMatrix m;
    m.q = q;
    m.n_in = m.n_out = N;
    m.rows = m.cols = q * N;
    for (int c = 1; c <= q; ++c) {
        int base = (c - 1) * N;
        for (int s = 1; s <= N; ++s) {
            if (c == l && s >= n && s <= n + 9) continue;
            m.add(base + s, base + s, 1);
        }
        if (c == l)
            for (int k = 0; k <= 9; ++k) m.add(base + n + k, base + n + 9 - k, 1);
    }
    m.canonicalize();
    return m;
}

TransformMatrix strip_matrix(StripEdit kind, int n, int N) {
    TransformMatrix m;
    m.q = 1;
    if (kind == StripEdit::add) {
        if (n < 0 || n > N) throw DimensionError("strip insertion point out of range");
        m.rows = N;
        m.cols = N + 1;
        for (int k = 1; k <= n; ++k) m.add(k, k, 1);
        for (int r = n + 1; r <= N; ++r) m.add(r, r + 1, 1);
    } else {
        if (n < 1 || n > N) throw DimensionError("strip to delete out of range");
        m.rows = N;
        m.cols = N - 1;
        for (int k = 1; k < n; ++k) m.add(k, k, 1);
        for (int r = n + 1; r <= N; ++r) m.add(r, r - 1, 1);
    }
    m.n_in = m.rows;
    m.n_out = m.cols;
    m.canonicalize();
    return m;
}

bool omega_2_3_invariance_check(const TangleChordDiagram& left,
                                const TangleChordDiagram& right) {
    Book lb = encode_diagram(lift_chords(left));
    Book rb = encode_diagram(lift_chords(right));
    return lb == rb;
}

// --- JSON -------------------------------------------------------------

std::string serialize_transform(const TransformMatrix& m) {
    ojson j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["q"] = m.q;
    j["N"] = m.n_in;
    ojson e = ojson::array();
    for (const PageEntry& pe : m.entries) e.push_back(ojson::array({pe.row, pe.col, pe.value}));
    j["e"] = e;
    return j.dump();
}

TransformMatrix parse_transform(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad transform JSON: ") + e.what());
    }
    TransformMatrix m;
    m.rows = j.at("rows").get<int>();
    m.cols = j.at("cols").get<int>();
    m.q = j.value("q", 1);
    m.n_in = j.value("N", m.rows / std::max(1, m.q));
    m.n_out = m.cols / std::max(1, m.q);
    for (const auto& je : j.at("e")) {
        int r = je[0].get<int>(), c = je[1].get<int>();
        if (r < 1 || r > m.rows || c < 1 || c > m.cols)
            throw DimensionError("transform entry out of range");
        m.add(r, c, je[2].get<long long>());
    }
    m.canonicalize();
    return m;
}

} // namespace linkbook
