#include "qcohom/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qcohom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw Error("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::row_vector(const std::vector<Int>& v) {
    return IntMatrix(1, v.size(), v);
}

IntMatrix IntMatrix::col_vector(const std::vector<Int>& v) {
    return IntMatrix(v.size(), 1, v);
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw Error("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("IntMatrix: shape mismatch in sum");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const { return scaled(-1); }

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * c;
    return out;
}

IntMatrix IntMatrix::mod(const Int& m) const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        Int r = entries_[i] % m;
        if (r < 0) r += m;
        out.entries_[i] = r;
    }
    return out;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw Error("IntMatrix: vector length mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
    if (rows_ != other.rows_) throw Error("IntMatrix: hstack row mismatch");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& other) const {
    if (cols_ != other.cols_ && rows_ != 0 && other.rows_ != 0)
        throw Error("IntMatrix: vstack col mismatch");
    std::size_t c = rows_ == 0 ? other.cols_ : cols_;
    IntMatrix out(rows_ + other.rows_, c);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Quotient minimizing |a - q*b|, b != 0.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs_int(r) > abs_int(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

struct SnfState {
    IntMatrix D, U, V, Uinv, Vinv;

    // Row op on D mirrors on U (left factor) and inversely on Uinv.
    void row_add(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < D.cols(); ++j) D.at(dst, j) += c * D.at(src, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(dst, j) += c * U.at(src, j);
        for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv.at(i, src) -= c * Uinv.at(i, dst);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < D.rows(); ++i) D.at(i, dst) += c * D.at(i, src);
        for (std::size_t i = 0; i < V.rows(); ++i) V.at(i, dst) += c * V.at(i, src);
        for (std::size_t j = 0; j < Vinv.cols(); ++j) Vinv.at(src, j) -= c * Vinv.at(dst, j);
    }
    void row_swap(std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
        Uinv.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
        Vinv.swap_rows(a, b);
    }
    void row_negate(std::size_t i) {
        for (std::size_t j = 0; j < D.cols(); ++j) D.at(i, j) = -D.at(i, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(i, j) = -U.at(i, j);
        for (std::size_t k = 0; k < Uinv.rows(); ++k) Uinv.at(k, i) = -Uinv.at(k, i);
    }
};

}  // namespace

std::vector<Int> SmithNormalForm::diagonal() const {
    std::vector<Int> d;
    std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

std::size_t SmithNormalForm::rank() const {
    std::size_t r = 0;
    for (const Int& d : diagonal())
        if (d != 0) ++r;
    return r;
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    SnfState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
               IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t t = 0;
    while (t < R && t < C) {
        // Minimal-absolute-value pivot keeps coefficient growth tame.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                const Int& x = s.D.at(i, j);
                if (x == 0) continue;
                if (!found || abs_int(x) < abs_int(s.D.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        s.row_swap(t, pi);
        s.col_swap(t, pj);

        // Reduce with nearest quotients; any nonzero remainder is strictly
        // smaller than the pivot, so re-running the pivot search converges
        // without the coefficient blow-up of sweep-and-promote schemes.
        bool remainder = false;
        for (std::size_t i = t + 1; i < R; ++i) {
            if (s.D.at(i, t) == 0) continue;
            Int q = nearest_quotient(s.D.at(i, t), s.D.at(t, t));
            if (q != 0) s.row_add(i, t, -q);
            if (s.D.at(i, t) != 0) remainder = true;
        }
        if (remainder) continue;
        for (std::size_t j = t + 1; j < C; ++j) {
            if (s.D.at(t, j) == 0) continue;
            Int q = nearest_quotient(s.D.at(t, j), s.D.at(t, t));
            if (q != 0) s.col_add(j, t, -q);
            if (s.D.at(t, j) != 0) remainder = true;
        }
        if (remainder) continue;

        // Fold in any entry the pivot does not divide, then redo this step.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < R && divides_all; ++i)
            for (std::size_t j = t + 1; j < C && divides_all; ++j)
                if (s.D.at(i, j) % s.D.at(t, t) != 0) {
                    s.row_add(t, i, 1);
                    divides_all = false;
                }
        if (!divides_all) continue;

        if (s.D.at(t, t) < 0) s.row_negate(t);
        ++t;
    }
    return SmithNormalForm{s.U, s.D, s.V, s.Uinv, s.Vinv};
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        // Euclidean sweep down column c.
        while (true) {
            std::size_t piv = R;
            for (std::size_t i = r; i < R; ++i)
                if (a.at(i, c) != 0 && (piv == R || abs_int(a.at(i, c)) < abs_int(a.at(piv, c))))
                    piv = i;
            if (piv == R) break;
            a.swap_rows(r, piv);
            bool done = true;
            for (std::size_t i = r + 1; i < R; ++i) {
                if (a.at(i, c) == 0) continue;
                Int q = nearest_quotient(a.at(i, c), a.at(r, c));
                for (std::size_t j = 0; j < C; ++j) a.at(i, j) -= q * a.at(r, j);
                if (a.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a.at(r, c) == 0) continue;
        if (a.at(r, c) < 0)
            for (std::size_t j = 0; j < C; ++j) a.at(r, j) = -a.at(r, j);
        // Reduce the rows above into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q = a.at(i, c) / a.at(r, c);
            if (a.at(i, c) % a.at(r, c) < 0) q -= 1;
            if (q != 0)
                for (std::size_t j = 0; j < C; ++j) a.at(i, j) -= q * a.at(r, j);
        }
        ++r;
    }
    IntMatrix out(r, C);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) out.at(i, j) = a.at(i, j);
    return out;
}

bool lattice_contains(const IntMatrix& hnf, const std::vector<Int>& v) {
    std::vector<Int> w = v;
    std::size_t row = 0;
    for (std::size_t c = 0; c < w.size() && row < hnf.rows(); ++c) {
        if (hnf.at(row, c) == 0) continue;
        if (w[c] % hnf.at(row, c) != 0) return false;
        Int q = w[c] / hnf.at(row, c);
        for (std::size_t j = c; j < w.size(); ++j) w[j] -= q * hnf.at(row, j);
        ++row;
    }
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> lattice_reduce(const IntMatrix& hnf, std::vector<Int> v) {
    std::size_t row = 0;
    for (std::size_t c = 0; c < v.size() && row < hnf.rows(); ++c) {
        if (hnf.at(row, c) == 0) continue;
        Int q = v[c] / hnf.at(row, c);
        if (v[c] % hnf.at(row, c) < 0) q -= 1;
        if (q != 0)
            for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * hnf.at(row, j);
        ++row;
    }
    return v;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return hermite_normal_form(a) == hermite_normal_form(b);
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithNormalForm snf = smith_normal_form(m);
    std::size_t r = snf.rank();
    IntMatrix out(m.cols(), m.cols() - r);
    for (std::size_t k = r; k < m.cols(); ++k)
        for (std::size_t i = 0; i < m.cols(); ++i) out.at(i, k - r) = snf.V.at(i, k);
    return out;
}

std::optional<std::vector<Int>> solve(const IntMatrix& m, const std::vector<Int>& b) {
    if (b.size() != m.rows()) throw Error("solve: shape mismatch");
    SmithNormalForm snf = smith_normal_form(m);
    std::vector<Int> ub = snf.U.apply(b);
    std::vector<Int> y(m.cols());
    std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int d = i < n ? snf.D.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return snf.V.apply(y);
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMatrix preimage_lattice_rows(const IntMatrix& m, const IntMatrix& l_rows) {
    IntMatrix stacked = m.hstack(l_rows.transpose());
    IntMatrix ker = kernel_basis(stacked);
    IntMatrix out(ker.cols(), m.cols());
    for (std::size_t k = 0; k < ker.cols(); ++k)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(k, j) = ker.at(j, k);
    return out;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

std::size_t rank_mod2(const IntMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<char>> a(R, std::vector<char>(C));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) a[i][j] = static_cast<char>(m.at(i, j) % 2 != 0);
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && !a[piv][c]) ++piv;
        if (piv == R) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = 0; i < R; ++i)
            if (i != r && a[i][c])
                for (std::size_t j = c; j < C; ++j) a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

}  // namespace qcohom
