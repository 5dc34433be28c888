#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "circix/gf.hpp"
#include "circix/graph.hpp"
#include "circix/rational.hpp"

namespace circix {

/// Vector linear index code: l coded symbols for n messages of t symbols
/// each, encoded as c = B x with B of size l x (n t). Column (i, j) of B is
/// the precoding vector of message symbol x_{i,j} and sits at index i*t + j;
/// every module in this library uses that same indexing.
struct LinearIndexCode {
    PrimeField field;
    int n;
    int t;
    int l;
    GFMatrix B;

    LinearIndexCode(PrimeField field_, int n_, int t_, int l_, GFMatrix b)
        : field(field_), n(n_), t(t_), l(l_), B(std::move(b)) {
        if (n < 1 || t < 1 || l < 0) throw std::invalid_argument("LinearIndexCode: bad dimensions");
        if (B.rows() != l || B.cols() != n * t)
            throw std::invalid_argument("LinearIndexCode: B must be l x n*t");
        if (!(B.field() == field)) throw std::invalid_argument("LinearIndexCode: field mismatch");
    }

    [[nodiscard]] int col(int i, int j) const { return i * t + j; }
    [[nodiscard]] std::vector<int> precoding(int i, int j) const { return B.column(col(i, j)); }
    [[nodiscard]] Rational rate() const { return {l, t}; }

    static LinearIndexCode uncoded(PrimeField field, int n, int t = 1) {
        return {field, n, t, n * t, GFMatrix::identity(field, n * t)};
    }
};

struct ValidityReport {
    bool valid = true;
    std::vector<std::pair<int, int>> violations;  // (receiver, symbol) pairs
};

/// Decodability criterion: receiver i recovers x_{i,j} iff B^{ij} is not in
/// the span of its own other columns plus all columns of messages outside
/// S_i u {i}. Collects every violating (i, j).
inline ValidityReport check_validity(const LinearIndexCode& code, const SideInfoGraph& g) {
    if (code.n != g.n()) throw std::invalid_argument("check_validity: code.n != graph n");
    ValidityReport report;
    for (int i = 0; i < code.n; ++i) {
        std::vector<std::vector<int>> interferers;
        for (int ip = 0; ip < code.n; ++ip) {
            if (ip == i || g.knows(i, ip)) continue;
            for (int jp = 0; jp < code.t; ++jp) interferers.push_back(code.precoding(ip, jp));
        }
        for (int j = 0; j < code.t; ++j) {
            std::vector<std::vector<int>> basis = interferers;
            for (int jp = 0; jp < code.t; ++jp)
                if (jp != j) basis.push_back(code.precoding(i, jp));
            if (in_span(code.precoding(i, j), basis, code.field)) {
                report.valid = false;
                report.violations.emplace_back(i, j);
            }
        }
    }
    return report;
}

inline bool is_valid(const LinearIndexCode& code, const SideInfoGraph& g) {
    return check_validity(code, g).valid;
}

/// Independent formulation of the same criterion, used as a cross-check:
/// receiver i can decode iff each of its unit coordinate vectors lies in
/// rowspace(B) + span of the unit vectors of its side-information
/// coordinates.
inline bool can_decode_rowspace(const LinearIndexCode& code, const SideInfoGraph& g, int i) {
    if (code.n != g.n()) throw std::invalid_argument("can_decode_rowspace: code.n != graph n");
    const int dim = code.n * code.t;
    std::vector<std::vector<int>> basis;
    for (int r = 0; r < code.l; ++r) basis.push_back(code.B.row(r));
    for (int u = 0; u < code.n; ++u) {
        if (!g.knows(i, u)) continue;
        for (int jp = 0; jp < code.t; ++jp) {
            std::vector<int> unit(dim, 0);
            unit[code.col(u, jp)] = 1;
            basis.push_back(unit);
        }
    }
    for (int j = 0; j < code.t; ++j) {
        std::vector<int> unit(dim, 0);
        unit[code.col(i, j)] = 1;
        if (!in_span(unit, basis, code.field)) return false;
    }
    return true;
}

/// c = B x for the cumulated message vector x (length n t, blocks of t).
inline std::vector<int> encode(const LinearIndexCode& code, const std::vector<int>& x) {
    return code.B.apply(x);
}

/// Side information handed to a decoder: message index -> t symbols.
using SideValues = std::map<int, std::vector<int>>;

/// Generic decoder for receiver i: expresses each unit vector e_{i,j} as a
/// combination of rows of B and side-information unit vectors (one
/// elimination for all j at once), then evaluates that combination on the
/// received codeword and the known messages.
inline std::vector<int> decode(const LinearIndexCode& code, const SideInfoGraph& g, int i,
                               const std::vector<int>& codeword, const SideValues& side) {
    if (static_cast<int>(codeword.size()) != code.l)
        throw std::invalid_argument("decode: codeword length != l");
    const PrimeField& f = code.field;
    const int dim = code.n * code.t;

    // Solve M^T y = e_{ij}: rows of M are B's rows followed by side units.
    std::vector<std::vector<int>> rows;
    std::vector<std::pair<int, int>> side_coords;  // (message, symbol) per extra row
    for (int r = 0; r < code.l; ++r) rows.push_back(code.B.row(r));
    for (int u = 0; u < code.n; ++u) {
        if (!g.knows(i, u)) continue;
        auto it = side.find(u);
        if (it == side.end() || static_cast<int>(it->second.size()) != code.t)
            throw std::invalid_argument("decode: missing side-information values");
        for (int jp = 0; jp < code.t; ++jp) {
            std::vector<int> unit(dim, 0);
            unit[code.col(u, jp)] = 1;
            rows.push_back(unit);
            side_coords.emplace_back(u, jp);
        }
    }
    const int m = static_cast<int>(rows.size());

    // Augmented system: columns are the m combination coefficients, then one
    // right-hand side per demanded symbol.
    std::vector<std::vector<int>> aug(dim, std::vector<int>(m + code.t, 0));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < dim; ++c) aug[c][r] = rows[r][c];
    for (int j = 0; j < code.t; ++j) aug[code.col(i, j)][m + j] = 1;

    const int rank_all = detail::echelonize(aug, f);
    // A pivot in a right-hand-side column means that e_{ij} is not reachable.
    std::vector<int> pivot_col(rank_all);
    for (int r = 0; r < rank_all; ++r) {
        int c = 0;
        while (c < m + code.t && aug[r][c] == 0) ++c;
        if (c >= m) throw std::runtime_error("receiver cannot decode");
        pivot_col[r] = c;
    }

    std::vector<int> result(code.t, 0);
    for (int j = 0; j < code.t; ++j) {
        // Back-substituted solution y: free variables zero, so y[pivot] is
        // just the reduced right-hand side (echelonize produced RREF).
        long long acc = 0;
        for (int r = 0; r < rank_all; ++r) {
            const int coeff = aug[r][m + j];
            if (coeff == 0) continue;
            const int var = pivot_col[r];
            const int value = var < code.l
                                  ? codeword[var]
                                  : side.at(side_coords[var - code.l].first)
                                        [side_coords[var - code.l].second];
            acc += static_cast<long long>(coeff) * value;
        }
        result[j] = static_cast<int>(acc % f.q());
    }
    return result;
}

/// Time-sharing expansion: m interleaved copies of the code, so t' = m t
/// and l' = m l with the same rate. Chunk r of every message is encoded by
/// copy r. Validity is preserved.
inline LinearIndexCode repeat_code(const LinearIndexCode& code, int m) {
    if (m < 1) throw std::invalid_argument("repeat_code: m >= 1");
    if (m == 1) return code;
    const int t2 = code.t * m, l2 = code.l * m;
    GFMatrix b(code.field, l2, code.n * t2);
    for (int r = 0; r < m; ++r)
        for (int row = 0; row < code.l; ++row)
            for (int i = 0; i < code.n; ++i)
                for (int j = 0; j < code.t; ++j)
                    b.set(r * code.l + row, i * t2 + r * code.t + j, code.B.at(row, code.col(i, j)));
    return {code.field, code.n, t2, l2, std::move(b)};
}

}  // namespace circix
