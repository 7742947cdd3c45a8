#include "ctx/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ctx {

RayVector RayVector::canonicalize(std::vector<Int> coords) {
    Int g = 0;
    for (const Int& c : coords) g = boost::multiprecision::gcd(g, c);
    if (g == 0) throw ZeroVectorError();
    for (Int& c : coords) c /= g;
    for (const Int& c : coords) {
        if (c != 0) {
            if (c < 0)
                for (Int& x : coords) x = -x;
            break;
        }
    }
    RayVector r;
    r.coords_ = std::move(coords);
    return r;
}

RayVector RayVector::canonicalize(const std::vector<Rat>& coords) {
    Int lcm = 1;
    for (const Rat& c : coords) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    std::vector<Int> ints;
    ints.reserve(coords.size());
    for (const Rat& c : coords) {
        Rat scaled = c * lcm;
        ints.push_back(boost::multiprecision::numerator(scaled));
    }
    return canonicalize(std::move(ints));
}

std::string RayVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

Int dot(const RayVector& a, const RayVector& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("dot: dimensions " + std::to_string(a.dim()) + " vs " +
                                     std::to_string(b.dim()));
    Int s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

RayVector cross3(const RayVector& a, const RayVector& b) {
    if (a.dim() != 3 || b.dim() != 3) throw DimensionMismatchError("cross3 requires dimension 3");
    std::vector<Int> c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                       a[0] * b[1] - a[1] * b[0]};
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw ParallelRaysError();
    return RayVector::canonicalize(std::move(c));
}

namespace {

// Row echelon form over the rationals, in place. Returns pivot columns.
// Columns are eliminated left to right so the result is deterministic.
std::vector<std::size_t> rational_echelon(std::vector<std::vector<Rat>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < m.size() && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == m.size()) continue;
        std::swap(m[row], m[pivot_row]);
        const Rat pivot = m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] /= pivot;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const std::vector<RayVector>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t d = vectors[0].dim();
    for (const RayVector& v : vectors)
        if (v.dim() != d) throw DimensionMismatchError("rank: mixed dimensions");

    // Fraction-free (Bareiss) elimination keeps every intermediate an integer.
    std::vector<std::vector<Int>> m;
    m.reserve(vectors.size());
    for (const RayVector& v : vectors) m.push_back(v.coords());

    std::size_t r = 0;
    Int prev_pivot = 1;
    for (std::size_t col = 0; col < d && r < m.size(); ++col) {
        std::size_t pivot_row = r;
        while (pivot_row < m.size() && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == m.size()) continue;
        std::swap(m[r], m[pivot_row]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < d; ++j)
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev_pivot;
            m[i][col] = 0;
        }
        prev_pivot = m[r][col];
        ++r;
    }
    return r;
}

Subspace Subspace::span(const std::vector<RayVector>& vectors, std::size_t ambient_dim) {
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    for (const RayVector& v : vectors) {
        if (v.dim() != ambient_dim) throw DimensionMismatchError("span: vector/ambient dimension");
        std::vector<RayVector> trial = s.basis_;
        trial.push_back(v);
        if (ctx::rank(trial) > s.basis_.size()) s.basis_.push_back(v);
    }
    return s;
}

bool in_span(const RayVector& x, const Subspace& s) {
    if (x.dim() != s.ambient_dim()) throw DimensionMismatchError("in_span: dimensions");
    std::vector<RayVector> trial = s.basis();
    trial.push_back(x);
    return rank(trial) == s.rank();
}

Subspace orthocomplement(const Subspace& s) {
    const std::size_t d = s.ambient_dim();
    std::vector<std::vector<Rat>> m;
    m.reserve(s.rank());
    for (const RayVector& v : s.basis()) {
        std::vector<Rat> row;
        row.reserve(d);
        for (std::size_t j = 0; j < d; ++j) row.emplace_back(v[j]);
        m.push_back(std::move(row));
    }
    const std::vector<std::size_t> pivots = rational_echelon(m);

    // One nullspace vector per free column, free columns in index order.
    std::vector<RayVector> out;
    std::size_t p = 0;
    for (std::size_t col = 0; col < d; ++col) {
        if (p < pivots.size() && pivots[p] == col) {
            ++p;
            continue;
        }
        std::vector<Rat> x(d, Rat(0));
        x[col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][col];
        out.push_back(RayVector::canonicalize(x));
    }
    return Subspace::span(out, d);
}

std::vector<RayVector> reduced_basis(const Subspace& s) {
    std::vector<std::vector<Rat>> m;
    m.reserve(s.rank());
    for (const RayVector& v : s.basis()) {
        std::vector<Rat> row;
        row.reserve(s.ambient_dim());
        for (std::size_t j = 0; j < s.ambient_dim(); ++j) row.emplace_back(v[j]);
        m.push_back(std::move(row));
    }
    rational_echelon(m);
    std::vector<RayVector> out;
    out.reserve(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) out.push_back(RayVector::canonicalize(m[i]));
    return out;
}

std::vector<RayVector> orthogonalize(const std::vector<RayVector>& basis) {
    std::vector<std::vector<Rat>> ortho;
    std::vector<RayVector> out;
    for (const RayVector& v : basis) {
        std::vector<Rat> u;
        u.reserve(v.dim());
        for (std::size_t j = 0; j < v.dim(); ++j) u.emplace_back(v[j]);
        for (const std::vector<Rat>& w : ortho) {
            Rat num = 0, den = 0;
            for (std::size_t j = 0; j < u.size(); ++j) {
                num += Rat(v[j]) * w[j];
                den += w[j] * w[j];
            }
            const Rat coeff = num / den;
            for (std::size_t j = 0; j < u.size(); ++j) u[j] -= coeff * w[j];
        }
        ortho.push_back(u);
        out.push_back(RayVector::canonicalize(u));
    }
    return out;
}

}  // namespace ctx
