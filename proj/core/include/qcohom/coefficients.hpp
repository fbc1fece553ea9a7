#pragma once

#include "qcohom/abelian.hpp"
#include "qcohom/presented_ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcohom {

/* Raised when a symbolic expression is evaluated against a coefficient
 * group that is not finitely generated over the chosen field. */
struct OpaqueError : Error {
    explicit OpaqueError(const std::string& label)
        : Error(label + " is not finitely generated for this field"), label(label) {}
    std::string label;
};

enum class CoeffFamily { W, I, Ibar, GW, KM, TwoKM, KMW };

/* Coefficient symbol such as I^3, Ibar^1, K^MW_2. The constructed family
 * and index are kept for display; comparisons and evaluation go through
 * the normal form (I^j with j <= 0 is W, K^MW_j with j < 0 is W and with
 * j = 0 is GW; negative-index Ibar/K^M/2K^M vanish). */
struct CoefficientLabel {
    CoeffFamily family;
    long index = 0;

    /* Normal form; std::nullopt means the label denotes the zero group. */
    std::optional<CoefficientLabel> normalized() const;
    bool is_zero() const { return !normalized().has_value(); }

    bool operator==(const CoefficientLabel& o) const;
    bool operator<(const CoefficientLabel& o) const;

    std::string render(bool ascii = false) const;  // paper notation, e.g. "I^0(F)"
    static CoefficientLabel parse(const std::string& text);  // "I^3", "KM_1", ...
};

/* Formal direct sum of coefficient groups. */
struct SymbolicGroupExpr {
    std::vector<CoefficientLabel> summands;  // zero labels dropped, sorted by normal form

    static SymbolicGroupExpr zero() { return {}; }
    void add(const CoefficientLabel& label);
    SymbolicGroupExpr operator+(const SymbolicGroupExpr& o) const;
    bool is_zero() const { return summands.empty(); }
    bool operator==(const SymbolicGroupExpr& o) const;
    std::string render(bool ascii = false) const;  // "I^0(F) + Ibar^1(F)" / with ⊕
};

/* One summand H^{shift}(S, label) of a closed-form expression over a
 * general smooth base S. Specializing to S = Spec(F) keeps the terms
 * with shift = i. */
struct BaseTerm {
    long shift;
    CoefficientLabel label;
};

struct GeneralBaseExpr {
    std::vector<BaseTerm> terms;
    SymbolicGroupExpr specialize_to_field(long i) const;
    std::string render(bool ascii = false) const;  // "H^{i-2}(S, Ibar^{j-2}) + ..."
};

enum class EventualPattern { Zero, Constant };

/* Everything the tables need to know about a base field F: the groups
 * W(F) ⊇ I ⊇ I² ⊇ ..., the quotients Ibar^j, GW, Milnor and Milnor-Witt
 * groups, inclusion maps where concrete, and the declared behaviour for
 * indices beyond the stored window. Groups that exist but are not
 * finitely generated (e.g. K^M_1(R)) are first-class Opaque entries. */
class CoefficientDatum {
public:
    using Entry = std::optional<FinAbGroup>;  // nullopt = Opaque

    std::string field_name;

    static CoefficientDatum reals();
    static CoefficientDatum complexes();
    static CoefficientDatum finite_field(long q);
    static CoefficientDatum from_json_file(const std::string& path);
    static CoefficientDatum from_json_text(const std::string& text);

    /* Group assigned to the label; throws OpaqueError for opaque entries
     * and Error for labels the datum does not cover. */
    FinAbGroup lookup(const CoefficientLabel& label) const;
    bool is_opaque(const CoefficientLabel& label) const;

    /* Inclusion I^{j+1} -> I^j when both sides are concrete. */
    GroupHom inclusion(long j) const;

    /* Cokernel of each stored inclusion must equal Ibar^j. */
    void validate_quotient_consistency() const;

    bool has_ring_presentation() const { return builtin_ != Builtin::None; }
    bool is_reals() const { return builtin_ == Builtin::Reals; }
    bool is_finite_field() const { return builtin_ == Builtin::FiniteField; }
    long finite_field_q() const { return q_; }

    void set_entry(CoeffFamily family, long index, Entry value);
    void set_threshold(long j0) { threshold_ = j0; }
    void set_eventual(CoeffFamily family, EventualPattern pattern);

private:
    enum class Builtin { None, Reals, Complexes, FiniteField };

    Entry resolve(const CoefficientLabel& label) const;

    Builtin builtin_ = Builtin::None;
    long q_ = 0;
    std::map<std::pair<CoeffFamily, long>, Entry> table_;
    long threshold_ = 0;
    std::map<CoeffFamily, EventualPattern> eventual_;
    std::vector<GroupHom> inclusions_;  // I^{j+1} -> I^j for j = 0..

    friend CoefficientDatum make_builtin(CoefficientDatum::Builtin kind, long q);
};

FinAbGroup evaluate(const SymbolicGroupExpr& expr, const CoefficientDatum& datum);

/* Brute-force Witt ring of F_q: diagonal forms up to max_rank modulo the
 * Witt relations, classified by rank and discriminant. Independent of
 * builtin_datum by construction. */
FinAbGroup witt_oracle(long q, int max_rank);

/* The coefficient ring of I-cohomology over F: the graded ring
 * ⊕_j I^j(F) in degrees (0, j, 0), together with the data needed to
 * spell out ideal-valued relations like I'ξ in quadric presentations. */
struct CoefficientRingData {
    std::vector<Generator> generators;
    std::vector<Polynomial> relations;
    /* Weight-0 polynomials generating the image of I^1(F) in W(F); the
     * relation set I'ξ expands to {g·ξ} over these. */
    std::vector<Polynomial> fundamental_ideal_generators;
};

CoefficientRingData coefficient_ring_data(const CoefficientDatum& datum);
PresentationPtr coefficient_ring_presentation(const CoefficientDatum& datum,
                                              long weight_window = 8);

/* Same for the quotient ring ⊕_j Ibar^j(F). */
CoefficientRingData ibar_coefficient_ring_data(const CoefficientDatum& datum);

/* Milnor K-theory ring ⊕_j K^M_j(F) when finitely presentable (finite
 * fields); std::nullopt otherwise. */
std::optional<CoefficientRingData> milnor_coefficient_ring_data(const CoefficientDatum& datum);

}  // namespace qcohom
