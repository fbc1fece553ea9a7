#include "qcohom/chain_complex.hpp"

namespace qcohom {

ChainComplex::ChainComplex(long lowest_degree, std::vector<std::size_t> ranks,
                           std::vector<IntMatrix> differentials)
    : lowest_(lowest_degree), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
    if (ranks_.empty()) throw Error("ChainComplex: needs at least one degree");
    if (diffs_.size() + 1 != ranks_.size())
        throw Error("ChainComplex: differential count must be #degrees - 1");
    for (std::size_t k = 0; k < diffs_.size(); ++k)
        if (diffs_[k].rows() != ranks_[k] || diffs_[k].cols() != ranks_[k + 1])
            throw Error("ChainComplex: differential shape mismatch");
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
        if (!(diffs_[k] * diffs_[k + 1]).is_zero())
            throw Error("ChainComplex: d∘d != 0");
}

std::size_t ChainComplex::rank(long degree) const {
    if (degree < lowest_ || degree > highest_degree()) return 0;
    return ranks_[static_cast<std::size_t>(degree - lowest_)];
}

IntMatrix ChainComplex::differential_from(long degree) const {
    long k = degree - lowest_ - 1;
    if (k < 0 || k >= static_cast<long>(diffs_.size()))
        return IntMatrix::zero(rank(degree - 1), rank(degree));
    return diffs_[static_cast<std::size_t>(k)];
}

ChainComplex ChainComplex::dualize() const {
    std::vector<std::size_t> ranks(ranks_.rbegin(), ranks_.rend());
    std::vector<IntMatrix> diffs;
    for (std::size_t k = diffs_.size(); k-- > 0;) diffs.push_back(diffs_[k].transpose());
    return ChainComplex(-highest_degree(), std::move(ranks), std::move(diffs));
}

ChainComplex ChainComplex::shifted(long q) const {
    return ChainComplex(lowest_ + q, ranks_, diffs_);
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& a, const ChainComplex& b) {
    long lo = std::min(a.lowest_degree(), b.lowest_degree());
    long hi = std::max(a.highest_degree(), b.highest_degree());
    std::vector<std::size_t> ranks;
    for (long d = lo; d <= hi; ++d) ranks.push_back(a.rank(d) + b.rank(d));
    std::vector<IntMatrix> diffs;
    for (long d = lo + 1; d <= hi; ++d) {
        IntMatrix da = a.differential_from(d);
        IntMatrix db = b.differential_from(d);
        IntMatrix m(a.rank(d - 1) + b.rank(d - 1), a.rank(d) + b.rank(d));
        for (std::size_t i = 0; i < da.rows(); ++i)
            for (std::size_t j = 0; j < da.cols(); ++j) m.at(i, j) = da.at(i, j);
        for (std::size_t i = 0; i < db.rows(); ++i)
            for (std::size_t j = 0; j < db.cols(); ++j)
                m.at(a.rank(d - 1) + i, a.rank(d) + j) = db.at(i, j);
        diffs.push_back(std::move(m));
    }
    return ChainComplex(lo, std::move(ranks), std::move(diffs));
}

namespace {

// Rows spanning ker(m) ⊆ Z^{cols}.
IntMatrix kernel_rows(const IntMatrix& m) { return kernel_basis(m).transpose(); }

FinAbGroup homology_z(const ChainComplex& c, long i) {
    std::size_t r = c.rank(i);
    if (r == 0) return FinAbGroup::zero();
    IntMatrix d_in = c.differential_from(i);        // C_i -> C_{i-1}
    IntMatrix d_from = c.differential_from(i + 1);  // C_{i+1} -> C_i
    IntMatrix k = d_in.rows() == 0 ? IntMatrix::identity(r) : kernel_rows(d_in);
    IntMatrix l = d_from.transpose();
    return Subquotient(k, l).group();
}

std::size_t rank_q(const IntMatrix& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m); }

FinAbGroup homology_mod2(const ChainComplex& c, long i) {
    std::size_t r = c.rank(i);
    if (r == 0) return FinAbGroup::zero();
    std::size_t k = r - rank_mod2(c.differential_from(i));
    std::size_t b = rank_mod2(c.differential_from(i + 1));
    FinAbGroup g;
    g.torsion.assign(k - b, Int(2));
    return g;
}

FinAbGroup homology_q(const ChainComplex& c, long i) {
    std::size_t r = c.rank(i);
    if (r == 0) return FinAbGroup::zero();
    std::size_t k = r - rank_q(c.differential_from(i));
    std::size_t b = rank_q(c.differential_from(i + 1));
    return FinAbGroup::free(static_cast<long>(k - b));
}

}  // namespace

FinAbGroup homology(const ChainComplex& c, long i, Coefficients coeffs) {
    switch (coeffs) {
        case Coefficients::Z: return homology_z(c, i);
        case Coefficients::Mod2: return homology_mod2(c, i);
        case Coefficients::Q: return homology_q(c, i);
    }
    throw Error("homology: unknown coefficients");
}

FinAbGroup cohomology(const ChainComplex& c, long i, Coefficients coeffs) {
    return homology(c.dualize(), -i, coeffs);
}

CohomologyClasses cohomology_classes(const ChainComplex& c, long i) {
    std::size_t r = c.rank(i);
    if (r == 0) return {FinAbGroup::zero(), IntMatrix::zero(0, 0)};
    // Cochain differentials are the transposes of the boundary maps.
    IntMatrix d_out = c.differential_from(i + 1).transpose();  // C^i -> C^{i+1}
    IntMatrix d_in = c.differential_from(i).transpose();       // C^{i-1} -> C^i
    IntMatrix k = d_out.rows() == 0 ? IntMatrix::identity(r) : kernel_rows(d_out);
    IntMatrix l = d_in.transpose();
    Subquotient sq(k, l);
    IntMatrix reps(sq.group().generator_count(), r);
    for (std::size_t g = 0; g < sq.group().generator_count(); ++g) {
        std::vector<Int> v = sq.generator(g);
        for (std::size_t j = 0; j < r; ++j) reps.at(g, j) = v[j];
    }
    return {sq.group(), reps};
}

}  // namespace qcohom
