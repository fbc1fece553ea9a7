#pragma once

#include "qcohom/abelian.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace qcohom {

/* Degree lattice Z ⊕ Z ⊕ Z/2: (cohomological, weight, twist). */
struct DegreeVector {
    long coh = 0;
    long weight = 0;
    int twist = 0;

    DegreeVector operator+(const DegreeVector& o) const {
        return {coh + o.coh, weight + o.weight, (twist + o.twist) % 2};
    }
    DegreeVector operator-(const DegreeVector& o) const {
        return {coh - o.coh, weight - o.weight, ((twist - o.twist) % 2 + 2) % 2};
    }
    auto operator<=>(const DegreeVector&) const = default;
    std::string to_string() const;
};

struct DegreeWindow {
    long coh_max = 0;
    long weight_max = 0;
    bool contains(const DegreeVector& d) const {
        return d.coh >= 0 && d.coh <= coh_max && d.weight >= 0 && d.weight <= weight_max;
    }
};

using Monomial = std::vector<int>;  // exponent per generator

struct Term {
    Int coeff;
    Monomial mono;
};
using Polynomial = std::vector<Term>;  // normalized: sorted, merged, no zero coefficients

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Int& c);

/* Rewrite rule g^(cap+1) -> replacement, for generators whose degree is
 * neutral in every enumeration axis (e.g. d² = 1, τ² = 1). */
struct PowerRule {
    int cap;
    Polynomial replacement;
};

struct Generator {
    std::string name;
    DegreeVector degree;
    std::optional<PowerRule> rule;
};

struct ModuleBasis {
    FinAbGroup group;
    std::vector<std::string> monomials;
};

class GradedAlgebraPresentation;
using PresentationPtr = std::shared_ptr<const GradedAlgebraPresentation>;

/* Homogeneous element in canonical form: coordinates over the monomial
 * basis of its degree, reduced modulo the relation lattice. */
class RingElement {
public:
    RingElement(PresentationPtr pres, DegreeVector degree, std::vector<Int> canonical_coords);

    const PresentationPtr& presentation() const { return pres_; }
    const DegreeVector& degree() const { return deg_; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const;
    bool operator==(const RingElement& o) const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement scaled(const Int& c) const;
    std::string to_string() const;

private:
    PresentationPtr pres_;
    DegreeVector deg_;
    std::vector<Int> coords_;
};

RingElement multiply(const RingElement& a, const RingElement& b);
RingElement power(const RingElement& a, int n);

/* Finitely presented graded-commutative algebra over Z. Per-degree module
 * structure is obtained by quotienting the free module on the monomials of
 * that degree by the lattice spanned by all relation multiples; Smith and
 * Hermite forms make every question exact. No Gröbner machinery. */
class GradedAlgebraPresentation : public std::enable_shared_from_this<GradedAlgebraPresentation> {
public:
    struct DegreeData {
        std::vector<Monomial> monomials;
        IntMatrix lattice;      // relation lattice rows over the monomials
        IntMatrix lattice_hnf;  // canonicalized
        std::shared_ptr<const Subquotient> piece;
        std::vector<std::string> labels;
    };

    static PresentationPtr create(std::string name, std::vector<Generator> generators,
                                  std::vector<Polynomial> relations, DegreeWindow window);

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const DegreeWindow& window() const { return window_; }

    int generator_index(const std::string& name) const;
    DegreeVector monomial_degree(const Monomial& m) const;
    DegreeVector polynomial_degree(const Polynomial& p) const;  // throws if inhomogeneous

    /* Koszul-signed product; the sign is fed by the cohomological degree
     * only ((-1)^{ii'}), the twist contributes no sign. */
    Polynomial multiply_monomials(const Monomial& a, const Monomial& b) const;
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
    Polynomial normalize(Polynomial p) const;  // apply power rules, merge

    const DegreeData& degree_data(const DegreeVector& d) const;
    ModuleBasis module_basis(const DegreeVector& d) const;
    const std::vector<Monomial>& monomials_of_degree(const DegreeVector& d) const;

    RingElement element(const Polynomial& p, std::optional<DegreeVector> degree = {}) const;
    RingElement zero(const DegreeVector& d) const;
    RingElement unit() const;
    RingElement generator_element(const std::string& name) const;
    /* Parse "2*xi^2*beta - alpha" into an element. */
    RingElement parse_element(const std::string& text) const;

    std::string monomial_name(const Monomial& m) const;
    std::string poly_to_display(const Polynomial& p) const;
    std::string describe() const;
    std::string signature() const;  // stable key for the disk cache

private:
    GradedAlgebraPresentation(std::string name, std::vector<Generator> gens,
                              std::vector<Polynomial> relations, DegreeWindow window);
    void enumerate(const DegreeVector& d, std::size_t gen, Monomial& current, long coh, long weight,
                   int twist, std::vector<Monomial>& out) const;
    std::vector<Int> raw_coords(const Polynomial& p, const DegreeVector& d) const;

    std::string name_;
    std::vector<Generator> gens_;
    std::vector<Polynomial> relations_;
    std::vector<DegreeVector> relation_degrees_;
    DegreeWindow window_;

    mutable std::shared_mutex mutex_;
    mutable std::map<DegreeVector, std::vector<Monomial>> monomial_cache_;
    mutable std::map<DegreeVector, std::shared_ptr<const DegreeData>> data_cache_;

    friend class RingElement;
};

/* Affine transform of degree lattices, e.g. identity, twist-collapse,
 * (i,j,t) -> (i,t). A transform may declare that the hom is only defined
 * (and only checked) on the diagonal subring i = j. */
struct DegreeTransform {
    long c_i = 1, c_j = 0;  // coh'   = c_i*i + c_j*j
    long w_i = 0, w_j = 1;  // weight'= w_i*i + w_j*j
    int t_t = 1, t_c = 0;   // twist' = (t_t*t + t_c) mod 2
    bool diagonal_only = false;

    DegreeVector apply(const DegreeVector& d) const {
        return {c_i * d.coh + c_j * d.weight, w_i * d.coh + w_j * d.weight,
                ((t_t * d.twist + t_c) % 2 + 2) % 2};
    }
    bool admits(const DegreeVector& d) const { return !diagonal_only || d.coh == d.weight; }

    static DegreeTransform identity() { return {}; }
    static DegreeTransform collapse_twist() { return {1, 0, 0, 1, 0, 0, false}; }
    static DegreeTransform forget_weight() { return {1, 0, 0, 0, 1, 0, false}; }
    static DegreeTransform diagonal_forget_weight() { return {1, 0, 0, 0, 1, 0, true}; }
    static DegreeTransform forget_weight_and_twist() { return {1, 0, 0, 0, 0, 0, false}; }
};

/* Map of presented rings given on generators, transforming degrees. */
class GradedRingHom {
public:
    GradedRingHom(std::string name, PresentationPtr source, PresentationPtr target,
                  DegreeTransform transform, std::vector<RingElement> generator_images);

    const std::string& name() const { return name_; }
    const PresentationPtr& source() const { return source_; }
    const PresentationPtr& target() const { return target_; }
    const DegreeTransform& transform() const { return transform_; }

    RingElement apply(const RingElement& e) const;
    RingElement apply_monomial(const Monomial& m) const;

    /* True iff every source relation maps to zero. */
    bool check_hom() const;
    /* True iff the induced map on module bases is bijective in every
     * admissible degree of the window. */
    bool check_iso(const DegreeWindow& window) const;
    /* The induced map between the module-basis pieces at d and T(d). */
    GroupHom induced(const DegreeVector& d) const;
    IntMatrix piece_matrix(const DegreeVector& d) const;

private:
    std::string name_;
    PresentationPtr source_;
    PresentationPtr target_;
    DegreeTransform transform_;
    std::vector<RingElement> images_;
};

/* Optional on-disk cache for module_basis results (one JSON file per
 * presentation signature). Enabled by the CLI via QCOHOM_CACHE_DIR. */
void set_basis_cache_directory(const std::filesystem::path& dir);
void clear_basis_cache_directory();

}  // namespace qcohom
