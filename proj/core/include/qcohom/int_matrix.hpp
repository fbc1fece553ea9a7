#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcohom {

using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Dense integer matrix with arbitrary-precision entries, row-major.
 * Everything downstream (normal forms, homology, ring bases) runs on
 * matrices small enough that density is a feature, not a bug. */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix diagonal(const std::vector<Int>& d);
    static IntMatrix row_vector(const std::vector<Int>& v);
    static IntMatrix col_vector(const std::vector<Int>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& c) const;
    IntMatrix mod(const Int& m) const;

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> col(std::size_t j) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector

    // Stack blocks: [this | other] and [this ; other].
    IntMatrix hstack(const IntMatrix& other) const;
    IntMatrix vstack(const IntMatrix& other) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

/* U * m * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
 * Uinv and Vinv are maintained alongside so subquotient bookkeeping never
 * needs a separate inversion pass. */
struct SmithNormalForm {
    IntMatrix U, D, V;
    IntMatrix Uinv, Vinv;
    std::vector<Int> diagonal() const;
    std::size_t rank() const;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

/* Row-style Hermite normal form of the lattice spanned by the rows of m:
 * nonzero rows only, pivots positive, entries above a pivot reduced into
 * [0, pivot). Unique for a given lattice, so usable for lattice equality. */
IntMatrix hermite_normal_form(const IntMatrix& m);

/* Lattice helpers; lattices are row spans of the given matrices. */
bool lattice_contains(const IntMatrix& hnf, const std::vector<Int>& v);
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> lattice_reduce(const IntMatrix& hnf, std::vector<Int> v);  // canonical coset rep

/* Basis of {x : m x = 0} as matrix columns (a saturated lattice). */
IntMatrix kernel_basis(const IntMatrix& m);

/* Rows spanning {v : m v ∈ rowspan(l_rows) viewed as columns}. */
IntMatrix preimage_lattice_rows(const IntMatrix& m, const IntMatrix& l_rows);

/* One solution of m x = b, if any. */
std::optional<std::vector<Int>> solve(const IntMatrix& m, const std::vector<Int>& b);

Int determinant(const IntMatrix& m);      // Bareiss, square matrices
std::size_t rank(const IntMatrix& m);
std::size_t rank_mod2(const IntMatrix& m);

}  // namespace qcohom
