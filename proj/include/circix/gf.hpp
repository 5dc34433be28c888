#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace circix {

/// Prime field F_q, 2 <= q <= 251. Residues are plain ints in [0, q);
/// q <= 251 keeps every product inside a machine word.
class PrimeField {
public:
    explicit PrimeField(int q) : q_(q) {
        if (q < 2 || q > 251 || !is_prime(q))
            throw std::invalid_argument("PrimeField: q must be prime, 2 <= q <= 251");
    }

    [[nodiscard]] int q() const { return q_; }

    [[nodiscard]] int add(int a, int b) const { return (a + b) % q_; }
    [[nodiscard]] int sub(int a, int b) const { return (a - b + q_) % q_; }
    [[nodiscard]] int mul(int a, int b) const { return (a * b) % q_; }
    [[nodiscard]] int neg(int a) const { return (q_ - a) % q_; }

    [[nodiscard]] int inv(int a) const {
        if (a % q_ == 0) throw std::domain_error("zero has no inverse");
        // Fermat: a^(q-2), q is prime.
        int result = 1, base = a % q_, e = q_ - 2;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

private:
    static bool is_prime(int n) {
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return n >= 2;
    }

    int q_;
};

/// Dense row-major matrix over a prime field. Entries are kept reduced.
class GFMatrix {
public:
    GFMatrix(PrimeField field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("GFMatrix: negative dimension");
    }

    GFMatrix(PrimeField field, int rows, int cols, std::vector<int> entries)
        : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("GFMatrix: entries.size() != rows*cols");
        for (int& e : entries_) {
            e %= field_.q();
            if (e < 0) e += field_.q();
        }
    }

    static GFMatrix identity(PrimeField field, int n) {
        GFMatrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    [[nodiscard]] const PrimeField& field() const { return field_; }
    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] const std::vector<int>& entries() const { return entries_; }

    [[nodiscard]] int at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) {
        v %= field_.q();
        if (v < 0) v += field_.q();
        entries_[static_cast<size_t>(r) * cols_ + c] = v;
    }

    [[nodiscard]] std::vector<int> row(int r) const {
        return {entries_.begin() + static_cast<long>(r) * cols_,
                entries_.begin() + static_cast<long>(r + 1) * cols_};
    }
    [[nodiscard]] std::vector<int> column(int c) const {
        std::vector<int> v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    /// c = M x over F_q; x.size() must equal cols().
    [[nodiscard]] std::vector<int> apply(const std::vector<int>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("GFMatrix::apply: dimension mismatch");
        std::vector<int> out(rows_, 0);
        for (int r = 0; r < rows_; ++r) {
            long long acc = 0;
            for (int c = 0; c < cols_; ++c) acc += static_cast<long long>(at(r, c)) * x[c];
            out[r] = static_cast<int>(acc % field_.q());
        }
        return out;
    }

    friend bool operator==(const GFMatrix& a, const GFMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.entries_ == b.entries_;
    }

private:
    PrimeField field_;
    int rows_, cols_;
    std::vector<int> entries_;
};

namespace detail {

/// In-place forward elimination with first-nonzero pivoting. Returns the
/// rank; rows above it form a row-echelon basis of the input's rowspace.
inline int echelonize(std::vector<std::vector<int>>& m, const PrimeField& f) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const int inv = f.inv(m[rank][col]);
        for (int c = col; c < cols; ++c) m[rank][c] = f.mul(m[rank][c], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const int factor = m[r][col];
            for (int c = col; c < cols; ++c)
                m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline int rank(const GFMatrix& m) {
    std::vector<std::vector<int>> work(m.rows());
    for (int r = 0; r < m.rows(); ++r) work[r] = m.row(r);
    return detail::echelonize(work, m.field());
}

/// True iff v is an F_q-linear combination of the vectors in basis.
/// An empty basis spans only the zero vector.
inline bool in_span(const std::vector<int>& v, const std::vector<std::vector<int>>& basis,
                    const PrimeField& field) {
    for (const auto& u : basis)
        if (u.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
    std::vector<std::vector<int>> work = basis;
    const int r = detail::echelonize(work, field);
    work.resize(r);
    // Reduce v against the echelon basis; v is in the span iff it cancels.
    std::vector<int> residual = v;
    for (int& e : residual) {
        e %= field.q();
        if (e < 0) e += field.q();
    }
    for (const auto& row : work) {
        int lead = 0;
        while (lead < static_cast<int>(row.size()) && row[lead] == 0) ++lead;
        if (lead == static_cast<int>(row.size())) continue;
        const int factor = residual[lead];
        if (factor == 0) continue;
        for (size_t c = lead; c < residual.size(); ++c)
            residual[c] = field.sub(residual[c], field.mul(factor, row[c]));
    }
    for (int e : residual)
        if (e != 0) return false;
    return true;
}

/// Kronecker product; for column vectors this is the tensor product.
inline GFMatrix kron(const GFMatrix& a, const GFMatrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("kron: field mismatch");
    GFMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int ra = 0; ra < a.rows(); ++ra)
        for (int ca = 0; ca < a.cols(); ++ca) {
            const int scale = a.at(ra, ca);
            if (scale == 0) continue;
            for (int rb = 0; rb < b.rows(); ++rb)
                for (int cb = 0; cb < b.cols(); ++cb)
                    out.set(ra * b.rows() + rb, ca * b.cols() + cb,
                            a.field().mul(scale, b.at(rb, cb)));
        }
    return out;
}

/// Tensor product of two coordinate vectors (u ⊗ w as a flat vector).
inline std::vector<int> kron_vec(const std::vector<int>& u, const std::vector<int>& w,
                                 const PrimeField& field) {
    std::vector<int> out;
    out.reserve(u.size() * w.size());
    for (int a : u)
        for (int b : w) out.push_back(field.mul(a, b));
    return out;
}

}  // namespace circix
