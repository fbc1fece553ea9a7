#include "qcohom/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qcohom {

FinAbGroup FinAbGroup::cyclic(const Int& n) {
    if (n < 1) throw Error("FinAbGroup::cyclic: order must be >= 1");
    FinAbGroup g;
    if (n > 1) g.torsion.push_back(n);
    return g;
}

FinAbGroup FinAbGroup::from_diagonal(const std::vector<Int>& diag, std::size_t ambient_rank) {
    FinAbGroup g;
    std::size_t nonzero = 0;
    for (const Int& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        Int a = d < 0 ? Int(-d) : d;
        if (a > 1) g.torsion.push_back(a);
    }
    g.free_rank = static_cast<long>(ambient_rank - nonzero);
    return g;
}

Int FinAbGroup::generator_order(std::size_t i) const {
    if (i < static_cast<std::size_t>(free_rank)) return 0;
    return torsion.at(i - free_rank);
}

std::string FinAbGroup::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

std::string FinAbGroup::to_json() const {
    std::ostringstream os;
    os << "{\"free_rank\":" << free_rank << ",\"torsion\":[";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
    os << "]}";
    return os.str();
}

FinAbGroup FinAbGroup::from_json(const std::string& text) {
    // Schema is fixed and tiny; a hand parser keeps the core dependency-free.
    auto fail = [&] { throw Error("FinAbGroup::from_json: malformed record: " + text); };
    auto skip_ws = [&](std::size_t& i) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](std::size_t& i, const std::string& tok) {
        skip_ws(i);
        if (text.compare(i, tok.size(), tok) != 0) fail();
        i += tok.size();
    };
    auto read_int = [&](std::size_t& i) {
        skip_ws(i);
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail();
        return Int(text.substr(start, i - start));
    };
    std::size_t i = 0;
    FinAbGroup g;
    expect(i, "{");
    expect(i, "\"free_rank\"");
    expect(i, ":");
    g.free_rank = static_cast<long>(read_int(i));
    expect(i, ",");
    expect(i, "\"torsion\"");
    expect(i, ":");
    expect(i, "[");
    skip_ws(i);
    if (i < text.size() && text[i] != ']') {
        while (true) {
            g.torsion.push_back(read_int(i));
            skip_ws(i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
    }
    expect(i, "]");
    expect(i, "}");
    if (g.free_rank < 0) fail();
    for (const Int& d : g.torsion)
        if (d < 2) fail();
    for (std::size_t k = 0; k + 1 < g.torsion.size(); ++k)
        if (g.torsion[k + 1] % g.torsion[k] != 0)
            throw Error("FinAbGroup::from_json: torsion list is not a divisibility chain");
    return g;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) { return direct_sum(std::vector<FinAbGroup>{a, b}); }

FinAbGroup direct_sum(const std::vector<FinAbGroup>& parts) {
    long free_rank = 0;
    std::vector<Int> all_torsion;
    for (const FinAbGroup& p : parts) {
        free_rank += p.free_rank;
        all_torsion.insert(all_torsion.end(), p.torsion.begin(), p.torsion.end());
    }
    // Renormalize the torsion multiset into a divisibility chain.
    SmithNormalForm snf = smith_normal_form(IntMatrix::diagonal(all_torsion));
    FinAbGroup g = FinAbGroup::from_diagonal(snf.diagonal(), all_torsion.size());
    g.free_rank = free_rank;
    return g;
}

IntMatrix relation_lattice(const FinAbGroup& g) {
    std::size_t n = g.generator_count();
    IntMatrix rel(g.torsion.size(), n);
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        rel.at(i, static_cast<std::size_t>(g.free_rank) + i) = g.torsion[i];
    return rel;
}

GroupHom::GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count())
        throw Error("GroupHom: matrix shape does not match generator counts");
    // Torsion columns must be annihilated by their generator's order.
    for (std::size_t j = 0; j < source.generator_count(); ++j) {
        Int d = source.generator_order(j);
        if (d == 0) continue;
        for (std::size_t i = 0; i < target.generator_count(); ++i) {
            Int e = target.generator_order(i);
            Int x = d * matrix.at(i, j);
            bool ok = e == 0 ? x == 0 : x % e == 0;
            if (!ok) throw Error("GroupHom: image of torsion generator not annihilated by its order");
        }
    }
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.generator_count()));
}

GroupHom GroupHom::zero(const FinAbGroup& src, const FinAbGroup& tgt) {
    return GroupHom(src, tgt, IntMatrix::zero(tgt.generator_count(), src.generator_count()));
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& v) const { return matrix.apply(v); }

GroupHom GroupHom::compose(const GroupHom& inner) const {
    if (inner.target != source) throw Error("GroupHom::compose: middle groups differ");
    return GroupHom(inner.source, target, matrix * inner.matrix);
}

bool GroupHom::is_injective() const {
    IntMatrix pre = preimage_lattice_rows(matrix, relation_lattice(target));
    IntMatrix rel_hnf = hermite_normal_form(relation_lattice(source));
    for (std::size_t i = 0; i < pre.rows(); ++i)
        if (!lattice_contains(rel_hnf, pre.row(i))) return false;
    return true;
}

bool GroupHom::is_surjective() const { return hom_cokernel(*this).is_zero(); }

FinAbGroup hom_kernel(const GroupHom& h) {
    IntMatrix pre = preimage_lattice_rows(h.matrix, relation_lattice(h.target));
    return Subquotient(pre, relation_lattice(h.source)).group();
}

FinAbGroup hom_image(const GroupHom& h) {
    IntMatrix k = h.matrix.transpose().vstack(relation_lattice(h.target));
    return Subquotient(k, relation_lattice(h.target)).group();
}

FinAbGroup hom_cokernel(const GroupHom& h) {
    std::size_t t = h.target.generator_count();
    IntMatrix rels = h.matrix.transpose().vstack(relation_lattice(h.target));
    return Subquotient(IntMatrix::identity(t), rels).group();
}

FiberProduct fiber_product(const GroupHom& f, const GroupHom& g) {
    if (f.target != g.target)
        throw Error("fiber_product: homomorphisms have incompatible targets");
    std::size_t sa = f.source.generator_count();
    std::size_t sb = g.source.generator_count();
    IntMatrix m = f.matrix.hstack(-g.matrix);
    IntMatrix pre = preimage_lattice_rows(m, relation_lattice(f.target));

    IntMatrix l(0, sa + sb);
    {
        IntMatrix la = relation_lattice(f.source);
        IntMatrix lb = relation_lattice(g.source);
        IntMatrix rows(la.rows() + lb.rows(), sa + sb);
        for (std::size_t i = 0; i < la.rows(); ++i)
            for (std::size_t j = 0; j < sa; ++j) rows.at(i, j) = la.at(i, j);
        for (std::size_t i = 0; i < lb.rows(); ++i)
            for (std::size_t j = 0; j < sb; ++j) rows.at(la.rows() + i, sa + j) = lb.at(i, j);
        l = rows;
    }
    Subquotient sq(pre, l);
    const FinAbGroup& p = sq.group();

    auto reduce_block = [](std::vector<Int> block, const FinAbGroup& grp) {
        for (std::size_t i = 0; i < grp.generator_count(); ++i) {
            Int d = grp.generator_order(i);
            if (d != 0) {
                block[i] %= d;
                if (block[i] < 0) block[i] += d;
            }
        }
        return block;
    };

    IntMatrix ma(sa, p.generator_count()), mb(sb, p.generator_count());
    for (std::size_t gidx = 0; gidx < p.generator_count(); ++gidx) {
        std::vector<Int> v = sq.generator(gidx);
        std::vector<Int> a(v.begin(), v.begin() + sa), b(v.begin() + sa, v.end());
        a = reduce_block(std::move(a), f.source);
        b = reduce_block(std::move(b), g.source);
        for (std::size_t i = 0; i < sa; ++i) ma.at(i, gidx) = a[i];
        for (std::size_t i = 0; i < sb; ++i) mb.at(i, gidx) = b[i];
    }
    return FiberProduct{p, GroupHom(p, f.source, ma), GroupHom(p, g.source, mb)};
}

Subquotient::Subquotient(const IntMatrix& k_rows, const IntMatrix& l_rows) : n_(k_rows.cols()) {
    if (l_rows.rows() > 0 && l_rows.cols() != n_)
        throw Error("Subquotient: ambient dimension mismatch");
    basis_ = hermite_normal_form(k_rows);
    std::size_t k = basis_.rows();

    // Express L in the basis of K.
    IntMatrix bt = basis_.transpose();
    IntMatrix s(l_rows.rows(), k);
    for (std::size_t i = 0; i < l_rows.rows(); ++i) {
        auto z = solve(bt, l_rows.row(i));
        if (!z) throw Error("Subquotient: L is not contained in K");
        for (std::size_t j = 0; j < k; ++j) s.at(i, j) = (*z)[j];
    }
    SmithNormalForm snf = smith_normal_form(s);
    v_ = snf.V;
    vinv_ = snf.Vinv;

    orders_.assign(k, Int(0));
    std::vector<Int> diag = snf.diagonal();
    for (std::size_t i = 0; i < diag.size() && i < k; ++i) orders_[i] = diag[i];

    std::vector<std::size_t> free_idx, torsion_idx;
    for (std::size_t i = 0; i < k; ++i) {
        if (orders_[i] == 0)
            free_idx.push_back(i);
        else if (orders_[i] != 1 && orders_[i] != -1)
            torsion_idx.push_back(i);
    }
    gen_idx_ = free_idx;
    gen_idx_.insert(gen_idx_.end(), torsion_idx.begin(), torsion_idx.end());

    group_.free_rank = static_cast<long>(free_idx.size());
    for (std::size_t i : torsion_idx) {
        Int d = orders_[i];
        group_.torsion.push_back(d < 0 ? Int(-d) : d);
    }
    l_hnf_ = hermite_normal_form(l_rows);
}

std::vector<Int> Subquotient::generator(std::size_t i) const {
    std::size_t w = gen_idx_.at(i);
    // Element with w-coordinates e_w: row w of V^{-1}, pushed down to Z^n.
    std::vector<Int> out(n_);
    for (std::size_t b = 0; b < basis_.rows(); ++b) {
        const Int& c = vinv_.at(w, b);
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) out[j] += c * basis_.at(b, j);
    }
    return out;
}

std::vector<Int> Subquotient::coords(const std::vector<Int>& v) const {
    auto z = solve(basis_.transpose(), v);
    if (!z) throw Error("Subquotient::coords: vector not in K");
    std::size_t k = basis_.rows();
    std::vector<Int> w(k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) w[j] += (*z)[i] * v_.at(i, j);
    std::vector<Int> out(gen_idx_.size());
    for (std::size_t g = 0; g < gen_idx_.size(); ++g) {
        std::size_t idx = gen_idx_[g];
        Int c = w[idx];
        Int d = orders_[idx];
        if (d != 0) {
            if (d < 0) d = -d;
            c %= d;
            if (c < 0) c += d;
        }
        out[g] = c;
    }
    return out;
}

bool Subquotient::contains(const std::vector<Int>& v) const {
    return static_cast<bool>(solve(basis_.transpose(), v));
}

bool Subquotient::is_zero_class(const std::vector<Int>& v) const {
    return lattice_contains(l_hnf_, v);
}

GroupHom induced_hom(const Subquotient& src, const Subquotient& tgt, const IntMatrix& m) {
    std::size_t s = src.group().generator_count();
    IntMatrix hom(tgt.group().generator_count(), s);
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Int> img = m.apply(src.generator(j));
        std::vector<Int> c = tgt.coords(img);
        for (std::size_t i = 0; i < c.size(); ++i) hom.at(i, j) = c[i];
    }
    return GroupHom(src.group(), tgt.group(), hom);
}

}  // namespace qcohom
