#pragma once

#include "qcohom/int_matrix.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace qcohom {

/* Finitely generated abelian group in invariant-factor form.
 * The representation is canonical: d_1 | d_2 | ... with all d_i >= 2,
 * so two values are equal iff the groups are isomorphic. */
struct FinAbGroup {
    long free_rank = 0;
    std::vector<Int> torsion;

    static FinAbGroup zero() { return {}; }
    static FinAbGroup free(long rank) { return {rank, {}}; }
    static FinAbGroup cyclic(const Int& n);                 // Z/n, n >= 1 (n == 1 gives 0)
    static FinAbGroup from_diagonal(const std::vector<Int>& diag, std::size_t ambient_rank);

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    std::size_t generator_count() const { return static_cast<std::size_t>(free_rank) + torsion.size(); }
    // Order of the i-th generator in the free-then-torsion ordering; 0 = infinite.
    Int generator_order(std::size_t i) const;

    bool operator==(const FinAbGroup& other) const = default;

    std::string to_string() const;   // "Z^2 + Z/2"
    std::string to_json() const;     // {"free_rank":2,"torsion":[2]}
    static FinAbGroup from_json(const std::string& text);
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup direct_sum(const std::vector<FinAbGroup>& parts);

/* Relation lattice of the canonical presentation Z^g ->> G (rows in Z^g). */
IntMatrix relation_lattice(const FinAbGroup& g);

/* Homomorphism between groups in their canonical generator systems
 * (free generators first, then torsion generators). Column j of `matrix`
 * holds the image of the j-th source generator. */
struct GroupHom {
    FinAbGroup source;
    FinAbGroup target;
    IntMatrix matrix;

    GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix m);
    static GroupHom identity(const FinAbGroup& g);
    static GroupHom zero(const FinAbGroup& src, const FinAbGroup& tgt);

    std::vector<Int> apply(const std::vector<Int>& v) const;
    GroupHom compose(const GroupHom& inner) const;  // this ∘ inner

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }
};

FinAbGroup hom_kernel(const GroupHom& h);
FinAbGroup hom_image(const GroupHom& h);
FinAbGroup hom_cokernel(const GroupHom& h);

/* Pullback {(a, b) : f(a) = g(b)} with its two projections. */
struct FiberProduct {
    FinAbGroup group;
    GroupHom pr_a;
    GroupHom pr_b;
};
FiberProduct fiber_product(const GroupHom& f, const GroupHom& g);

/* A subquotient K/L of Z^n presented by row-span lattices L ⊆ K, with the
 * coordinate bookkeeping needed to express vectors of K in the canonical
 * generator system of the quotient. This is the single engine behind
 * homology groups, ring degree pieces, kernels and fiber products. */
class Subquotient {
public:
    Subquotient(const IntMatrix& k_rows, const IntMatrix& l_rows);

    const FinAbGroup& group() const { return group_; }
    std::size_t ambient_dim() const { return n_; }
    // Generators as vectors in Z^n, free-then-torsion order.
    std::vector<Int> generator(std::size_t i) const;
    // Coordinates of v ∈ K in the generator system (throws if v ∉ K).
    std::vector<Int> coords(const std::vector<Int>& v) const;
    bool contains(const std::vector<Int>& v) const;
    // True iff v ∈ L, i.e. v represents zero in the quotient.
    bool is_zero_class(const std::vector<Int>& v) const;

private:
    std::size_t n_;
    IntMatrix basis_;      // HNF basis of K, rows
    IntMatrix vinv_;       // from SNF of relations-in-basis-coords
    IntMatrix v_;
    std::vector<Int> orders_;           // per w-coordinate: invariant factor (0 = free)
    std::vector<std::size_t> gen_idx_;  // generator -> w-coordinate, free first
    FinAbGroup group_;
    IntMatrix l_hnf_;
};

/* Convenience: the map between two subquotients induced by an ambient
 * integer matrix m : Z^{n_src} -> Z^{n_tgt} with m(K_s) ⊆ K_t, m(L_s) ⊆ L_t. */
GroupHom induced_hom(const Subquotient& src, const Subquotient& tgt, const IntMatrix& m);

}  // namespace qcohom
