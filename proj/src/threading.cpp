#include "linkbook/threading.hpp"

#include <set>

#include "linkbook/errors.hpp"

namespace linkbook {

BookSum thread_embed(const BookSum& s, int q, int N) {
    if (s.q != q || s.N != N) throw DimensionError("thread_embed size mismatch");
    BookSum out;
    out.q = q + 1;
    out.N = N + 4;
    for (const auto& [coeff, book] : s.terms) {
        Book nb;
        nb.q = out.q;
        nb.N = out.N;
        for (const Page& p : book.pages) {
            Page np;
            np.q = out.q;
            np.N = out.N;
            for (const PageEntry& e : p.entries) {
                int rc = (e.row - 1) / N, rs = (e.row - 1) % N + 1;
                int cc = (e.col - 1) / N, cs = (e.col - 1) % N + 1;
                np.add(rc * out.N + rs + 4, cc * out.N + cs + 4, e.value);
            }
            np.canonicalize();
            nb.pages.push_back(std::move(np));
        }
        out.terms.emplace_back(coeff, std::move(nb));
    }
    return sum_canonicalize(std::move(out));
}

int infer_components(const BookSum& s, int steps) {
    if (steps < 0) throw ValidationError("thread stage count must be >= 0");
    int q0 = s.q - steps;
    int n0 = s.N - 4 * steps;
    if (q0 < 1 || n0 < 1)
        throw ValidationError("ambient size admits no consistent (q, N) at this stage");
    std::set<int> live;
    for (const auto& [coeff, book] : s.terms) {
        (void)coeff;
        for (const Page& p : book.pages)
            for (const PageEntry& e : p.entries) {
                live.insert((e.row - 1) / s.N + 1);
                live.insert((e.col - 1) / s.N + 1);
            }
    }
    if (live.empty())
        throw ValidationError("all-zero book sum: component count underdetermined");
    return static_cast<int>(live.size());
}

} // namespace linkbook
