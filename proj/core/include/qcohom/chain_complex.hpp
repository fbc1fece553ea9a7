#pragma once

#include "qcohom/abelian.hpp"

#include <vector>

namespace qcohom {

enum class Coefficients { Z, Mod2, Q };

/* Bounded complex of free finite-rank Z-modules. differentials[k] is the
 * boundary map from degree lowest+k+1 into degree lowest+k; composites of
 * consecutive differentials are checked to vanish at construction.
 * Zero-rank degrees are stored explicitly so shifts stay index arithmetic. */
class ChainComplex {
public:
    ChainComplex(long lowest_degree, std::vector<std::size_t> ranks,
                 std::vector<IntMatrix> differentials);

    long lowest_degree() const { return lowest_; }
    long highest_degree() const { return lowest_ + static_cast<long>(ranks_.size()) - 1; }
    std::size_t rank(long degree) const;
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    // Boundary from `degree` into `degree - 1` (zero-shaped outside support).
    IntMatrix differential_from(long degree) const;

    /* Transpose all differentials and reverse the grading, so that
     * H_{-i}(dual) = H^i(original). */
    ChainComplex dualize() const;
    /* Degree shift: the result lives in degrees lowest+q .. highest+q. */
    ChainComplex shifted(long q) const;
    static ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

private:
    long lowest_;
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> diffs_;
};

FinAbGroup homology(const ChainComplex& c, long i, Coefficients coeffs = Coefficients::Z);
FinAbGroup cohomology(const ChainComplex& c, long i, Coefficients coeffs = Coefficients::Z);

/* Cocycle representatives of the generators of H^i(c, Z), as integer
 * cochains in the cell basis of degree i. Used for chain-level reduction. */
struct CohomologyClasses {
    FinAbGroup group;
    IntMatrix representatives;  // one row per generator, length = rank(i)
};
CohomologyClasses cohomology_classes(const ChainComplex& c, long i);

}  // namespace qcohom
