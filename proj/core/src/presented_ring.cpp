#include "qcohom/presented_ring.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>

namespace qcohom {

std::string DegreeVector::to_string() const {
    std::ostringstream os;
    os << "(" << coh << "," << weight << "," << twist << ")";
    return os.str();
}

namespace {

bool mono_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial merge_terms(Polynomial p) {
    std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return mono_less(a.mono, b.mono); });
    Polynomial out;
    for (Term& t : p) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff == 0; }),
              out.end());
    return out;
}

}  // namespace

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial p = a;
    p.insert(p.end(), b.begin(), b.end());
    return merge_terms(std::move(p));
}

Polynomial poly_scale(const Polynomial& a, const Int& c) {
    if (c == 0) return {};
    Polynomial p = a;
    for (Term& t : p) t.coeff *= c;
    return p;
}

/* ---------------- presentation ---------------- */

GradedAlgebraPresentation::GradedAlgebraPresentation(std::string name, std::vector<Generator> gens,
                                                     std::vector<Polynomial> relations,
                                                     DegreeWindow window)
    : name_(std::move(name)), gens_(std::move(gens)), relations_(std::move(relations)),
      window_(window) {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        if (gens_[g].degree.coh < 0 || gens_[g].degree.weight < 0)
            throw Error(name_ + ": generator degrees must be componentwise non-negative");
        if (gens_[g].rule) {
            for (const Term& t : gens_[g].rule->replacement) {
                if (t.mono.size() != gens_.size())
                    throw Error(name_ + ": power rule monomial width mismatch");
                if (t.mono[g] > gens_[g].rule->cap)
                    throw Error(name_ + ": power rule must lower the exponent of its generator");
            }
        }
    }
    for (Polynomial& r : relations_) {
        for (const Term& t : r)
            if (t.mono.size() != gens_.size())
                throw Error(name_ + ": relation monomial width mismatch");
        r = merge_terms(std::move(r));
        relation_degrees_.push_back(polynomial_degree(r));
    }
}

PresentationPtr GradedAlgebraPresentation::create(std::string name, std::vector<Generator> gens,
                                                  std::vector<Polynomial> relations,
                                                  DegreeWindow window) {
    return PresentationPtr(
        new GradedAlgebraPresentation(std::move(name), std::move(gens), std::move(relations), window));
}

int GradedAlgebraPresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    throw Error(name_ + ": no generator named '" + name + "'");
}

DegreeVector GradedAlgebraPresentation::monomial_degree(const Monomial& m) const {
    DegreeVector d;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        d.coh += m[g] * gens_[g].degree.coh;
        d.weight += m[g] * gens_[g].degree.weight;
        d.twist += m[g] * gens_[g].degree.twist;
    }
    d.twist = ((d.twist % 2) + 2) % 2;
    return d;
}

DegreeVector GradedAlgebraPresentation::polynomial_degree(const Polynomial& p) const {
    if (p.empty()) throw Error(name_ + ": zero polynomial has no degree");
    DegreeVector d = monomial_degree(p.front().mono);
    for (const Term& t : p)
        if (monomial_degree(t.mono) != d)
            throw Error(name_ + ": inhomogeneous polynomial");
    return d;
}

Polynomial GradedAlgebraPresentation::normalize(Polynomial p) const {
    // Apply power rules until every capped exponent is within its cap.
    bool changed = true;
    while (changed) {
        changed = false;
        Polynomial next;
        for (const Term& t : p) {
            bool rewritten = false;
            for (std::size_t g = 0; g < gens_.size() && !rewritten; ++g) {
                if (!gens_[g].rule) continue;
                int cap = gens_[g].rule->cap;
                if (t.mono[g] > cap) {
                    Monomial rest = t.mono;
                    rest[g] -= cap + 1;
                    // No Koszul sign: capped generators have even (zero) cohomological degree.
                    for (const Term& r : gens_[g].rule->replacement) {
                        Monomial m = rest;
                        for (std::size_t k = 0; k < m.size(); ++k) m[k] += r.mono[k];
                        next.push_back(Term{t.coeff * r.coeff, std::move(m)});
                    }
                    rewritten = true;
                    changed = true;
                }
            }
            if (!rewritten) next.push_back(t);
        }
        p = std::move(next);
    }
    return merge_terms(std::move(p));
}

Polynomial GradedAlgebraPresentation::multiply_monomials(const Monomial& a, const Monomial& b) const {
    // Koszul sign from reordering, driven by the cohomological degree only.
    long swaps = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (b[i] == 0 || gens_[i].degree.coh % 2 == 0) continue;
        long odd_tail = 0;
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[j].degree.coh % 2 != 0) odd_tail += a[j];
        swaps += static_cast<long>(b[i]) * odd_tail;
    }
    Monomial m(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) m[i] = a[i] + b[i];
    Polynomial p{Term{swaps % 2 == 0 ? Int(1) : Int(-1), std::move(m)}};
    return normalize(std::move(p));
}

Polynomial GradedAlgebraPresentation::multiply(const Polynomial& a, const Polynomial& b) const {
    Polynomial out;
    for (const Term& ta : a)
        for (const Term& tb : b)
            for (const Term& t : multiply_monomials(ta.mono, tb.mono))
                out.push_back(Term{ta.coeff * tb.coeff * t.coeff, t.mono});
    return merge_terms(std::move(out));
}

void GradedAlgebraPresentation::enumerate(const DegreeVector& d, std::size_t gen, Monomial& current,
                                          long coh, long weight, int twist,
                                          std::vector<Monomial>& out) const {
    if (coh > d.coh || weight > d.weight) return;
    if (gen == gens_.size()) {
        if (coh == d.coh && weight == d.weight && twist % 2 == d.twist) out.push_back(current);
        return;
    }
    const Generator& g = gens_[gen];
    long e_max = -1;
    if (g.degree.coh > 0) e_max = (d.coh - coh) / g.degree.coh;
    if (g.degree.weight > 0) {
        long by_weight = (d.weight - weight) / g.degree.weight;
        e_max = e_max < 0 ? by_weight : std::min(e_max, by_weight);
    }
    if (g.rule) {
        long cap = g.rule->cap;
        e_max = e_max < 0 ? cap : std::min(e_max, cap);
    }
    if (e_max < 0)
        throw Error(name_ + ": degree-0 subring not finite under declared caps");
    for (long e = 0; e <= e_max; ++e) {
        current[gen] = static_cast<int>(e);
        enumerate(d, gen + 1, current, coh + e * g.degree.coh, weight + e * g.degree.weight,
                  twist + static_cast<int>(e) * g.degree.twist, out);
    }
    current[gen] = 0;
}

const std::vector<Monomial>& GradedAlgebraPresentation::monomials_of_degree(
    const DegreeVector& d) const {
    {
        std::shared_lock lock(mutex_);
        auto it = monomial_cache_.find(d);
        if (it != monomial_cache_.end()) return it->second;
    }
    std::vector<Monomial> out;
    Monomial current(gens_.size());
    enumerate(d, 0, current, 0, 0, 0, out);
    std::sort(out.begin(), out.end(), mono_less);
    std::unique_lock lock(mutex_);
    return monomial_cache_.emplace(d, std::move(out)).first->second;
}

std::vector<Int> GradedAlgebraPresentation::raw_coords(const Polynomial& p,
                                                       const DegreeVector& d) const {
    const std::vector<Monomial>& basis = monomials_of_degree(d);
    std::vector<Int> v(basis.size());
    for (const Term& t : p) {
        auto it = std::lower_bound(basis.begin(), basis.end(), t.mono, mono_less);
        if (it == basis.end() || *it != t.mono)
            throw Error(name_ + ": monomial outside the basis of degree " + d.to_string());
        v[static_cast<std::size_t>(it - basis.begin())] += t.coeff;
    }
    return v;
}

const GradedAlgebraPresentation::DegreeData& GradedAlgebraPresentation::degree_data(
    const DegreeVector& d) const {
    if (!window_.contains(d))
        throw Error(name_ + ": degree window exceeded at " + d.to_string());
    {
        std::shared_lock lock(mutex_);
        auto it = data_cache_.find(d);
        if (it != data_cache_.end()) return *it->second;
    }
    auto data = std::make_shared<DegreeData>();
    data->monomials = monomials_of_degree(d);
    std::size_t m = data->monomials.size();

    std::vector<std::vector<Int>> rows;
    for (std::size_t r = 0; r < relations_.size(); ++r) {
        DegreeVector delta = d - relation_degrees_[r];
        if (delta.coh < 0 || delta.weight < 0) continue;
        for (const Monomial& mono : monomials_of_degree(delta)) {
            Polynomial prod = multiply(Polynomial{Term{Int(1), mono}}, relations_[r]);
            if (prod.empty()) continue;
            rows.push_back(raw_coords(prod, d));
        }
    }
    IntMatrix lattice(rows.size(), m);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) lattice.at(i, j) = rows[i][j];
    data->lattice = lattice;
    data->lattice_hnf = hermite_normal_form(lattice);
    data->piece = std::make_shared<Subquotient>(IntMatrix::identity(m), lattice);
    for (const Monomial& mono : data->monomials) data->labels.push_back(monomial_name(mono));

    std::unique_lock lock(mutex_);
    return *data_cache_.emplace(d, std::move(data)).first->second;
}

/* ---------------- disk cache ---------------- */

namespace {

struct DiskCache {
    std::mutex mutex;
    std::optional<std::filesystem::path> dir;
};

DiskCache& disk_cache() {
    static DiskCache c;
    return c;
}

std::string cache_file_name(const std::string& signature) {
    // FNV-1a; the signature itself is stored in the file to rule out collisions.
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : signature) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h << ".json";
    return os.str();
}

std::optional<ModuleBasis> disk_cache_lookup(const std::string& signature, const std::string& key) {
    DiskCache& c = disk_cache();
    std::lock_guard lock(c.mutex);
    if (!c.dir) return std::nullopt;
    std::ifstream in(*c.dir / cache_file_name(signature));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (...) {
        return std::nullopt;
    }
    if (j.value("signature", std::string()) != signature) return std::nullopt;
    auto entries = j.find("entries");
    if (entries == j.end() || !entries->contains(key)) return std::nullopt;
    const nlohmann::json& e = (*entries)[key];
    ModuleBasis mb;
    mb.group = FinAbGroup::from_json(e.at("group").get<std::string>());
    mb.monomials = e.at("monomials").get<std::vector<std::string>>();
    return mb;
}

void disk_cache_store(const std::string& signature, const std::string& key, const ModuleBasis& mb) {
    DiskCache& c = disk_cache();
    std::lock_guard lock(c.mutex);
    if (!c.dir) return;
    std::filesystem::path file = *c.dir / cache_file_name(signature);
    nlohmann::json j;
    {
        std::ifstream in(file);
        if (in) {
            try {
                in >> j;
            } catch (...) {
                j = nlohmann::json();
            }
        }
    }
    if (j.value("signature", std::string()) != signature) {
        j = nlohmann::json::object();
        j["signature"] = signature;
        j["entries"] = nlohmann::json::object();
    }
    j["entries"][key] = {{"group", mb.group.to_json()}, {"monomials", mb.monomials}};
    std::ofstream out(file);
    out << j.dump();
}

}  // namespace

void set_basis_cache_directory(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::lock_guard lock(disk_cache().mutex);
    disk_cache().dir = dir;
}

void clear_basis_cache_directory() {
    std::lock_guard lock(disk_cache().mutex);
    disk_cache().dir.reset();
}

ModuleBasis GradedAlgebraPresentation::module_basis(const DegreeVector& d) const {
    if (auto hit = disk_cache_lookup(signature(), d.to_string())) return *hit;
    const DegreeData& data = degree_data(d);
    ModuleBasis mb{data.piece->group(), data.labels};
    disk_cache_store(signature(), d.to_string(), mb);
    return mb;
}

/* ---------------- elements ---------------- */

RingElement::RingElement(PresentationPtr pres, DegreeVector degree, std::vector<Int> coords)
    : pres_(std::move(pres)), deg_(degree), coords_(std::move(coords)) {}

bool RingElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& x) { return x == 0; });
}

bool RingElement::operator==(const RingElement& o) const {
    if (pres_.get() != o.pres_.get() || deg_ != o.deg_)
        throw Error("RingElement: comparing elements of different rings or degrees");
    return coords_ == o.coords_;
}

RingElement RingElement::operator+(const RingElement& o) const {
    if (pres_.get() != o.pres_.get() || deg_ != o.deg_)
        throw Error("RingElement: adding elements of different rings or degrees");
    std::vector<Int> sum(coords_.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = coords_[i] + o.coords_[i];
    const auto& data = pres_->degree_data(deg_);
    return RingElement(pres_, deg_, lattice_reduce(data.lattice_hnf, std::move(sum)));
}

RingElement RingElement::operator-() const {
    std::vector<Int> neg(coords_.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -coords_[i];
    const auto& data = pres_->degree_data(deg_);
    return RingElement(pres_, deg_, lattice_reduce(data.lattice_hnf, std::move(neg)));
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::scaled(const Int& c) const {
    std::vector<Int> v(coords_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] * c;
    const auto& data = pres_->degree_data(deg_);
    return RingElement(pres_, deg_, lattice_reduce(data.lattice_hnf, std::move(v)));
}

std::string RingElement::to_string() const {
    if (is_zero()) return "0";
    const auto& data = pres_->degree_data(deg_);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        Int c = coords_[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Int a = c < 0 ? Int(-c) : c;
        const std::string& label = data.labels[i];
        if (a != 1)
            os << a << (label == "1" ? "" : "*" + label);
        else
            os << label;
        first = false;
    }
    return os.str();
}

RingElement multiply(const RingElement& a, const RingElement& b) {
    if (a.presentation().get() != b.presentation().get())
        throw Error("multiply: elements of different rings");
    const auto& pres = a.presentation();
    DegreeVector d = a.degree() + b.degree();
    const auto& da = pres->degree_data(a.degree());
    const auto& db = pres->degree_data(b.degree());
    Polynomial pa, pb;
    for (std::size_t i = 0; i < a.coords().size(); ++i)
        if (a.coords()[i] != 0) pa.push_back(Term{a.coords()[i], da.monomials[i]});
    for (std::size_t i = 0; i < b.coords().size(); ++i)
        if (b.coords()[i] != 0) pb.push_back(Term{b.coords()[i], db.monomials[i]});
    return pres->element(pres->multiply(pa, pb), d);
}

RingElement power(const RingElement& a, int n) {
    if (n < 0) throw Error("power: negative exponent");
    RingElement out = a.presentation()->unit();
    for (int i = 0; i < n; ++i) out = multiply(out, a);
    return out;
}

RingElement GradedAlgebraPresentation::element(const Polynomial& p,
                                               std::optional<DegreeVector> degree) const {
    Polynomial q = normalize(p);
    DegreeVector d;
    if (q.empty()) {
        if (!degree) throw Error(name_ + ": zero element needs an explicit degree");
        d = *degree;
    } else {
        d = polynomial_degree(q);
        if (degree && *degree != d) throw Error(name_ + ": element degree mismatch");
    }
    const DegreeData& data = degree_data(d);
    return RingElement(shared_from_this(), d, lattice_reduce(data.lattice_hnf, raw_coords(q, d)));
}

RingElement GradedAlgebraPresentation::zero(const DegreeVector& d) const {
    return element(Polynomial{}, d);
}

RingElement GradedAlgebraPresentation::unit() const {
    return element(Polynomial{Term{Int(1), Monomial(gens_.size())}});
}

RingElement GradedAlgebraPresentation::generator_element(const std::string& name) const {
    Monomial m(gens_.size());
    m[static_cast<std::size_t>(generator_index(name))] = 1;
    return element(Polynomial{Term{Int(1), std::move(m)}});
}

RingElement GradedAlgebraPresentation::parse_element(const std::string& text) const {
    // Grammar: term (('+'|'-') term)*, term := [int '*'?] factor ('*' factor)*,
    // factor := name ['^' int]. "0" parses to nothing (degree must come from context).
    Polynomial poly;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        Int sign = 1;
        skip_ws();
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
                throw Error("parse_element: expected '+' or '-' in '" + text + "'");
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        }
        first = false;
        skip_ws();
        Int coeff = 1;
        Monomial mono(gens_.size());
        bool saw_factor = false;
        while (i < text.size()) {
            skip_ws();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                coeff *= Int(text.substr(start, i - start));
                saw_factor = true;
            } else if (i < text.size() &&
                       (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                std::size_t start = i;
                while (i < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                    ++i;
                std::string name = text.substr(start, i - start);
                int exp = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    std::size_t s2 = i;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                    if (s2 == i) throw Error("parse_element: missing exponent in '" + text + "'");
                    exp = std::stoi(text.substr(s2, i - s2));
                }
                mono[static_cast<std::size_t>(generator_index(name))] += exp;
                saw_factor = true;
            } else {
                throw Error("parse_element: unexpected character in '" + text + "'");
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw Error("parse_element: empty term in '" + text + "'");
        if (coeff != 0) poly.push_back(Term{sign * coeff, std::move(mono)});
        skip_ws();
    }
    return element(poly);
}

std::string GradedAlgebraPresentation::monomial_name(const Monomial& m) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        if (m[g] == 0) continue;
        if (!first) os << "*";
        os << gens_[g].name;
        if (m[g] > 1) os << "^" << m[g];
        first = false;
    }
    return first ? "1" : os.str();
}

std::string GradedAlgebraPresentation::describe() const {
    std::ostringstream os;
    os << name_ << ": Z[";
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        os << (g ? ", " : "") << gens_[g].name << gens_[g].degree.to_string();
        if (gens_[g].rule) {
            Polynomial rep = gens_[g].rule->replacement;
            os << " (cap " << gens_[g].rule->cap << ", " << gens_[g].name << "^"
               << gens_[g].rule->cap + 1 << " -> " << poly_to_display(rep) << ")";
        }
    }
    os << "] / (";
    for (std::size_t r = 0; r < relations_.size(); ++r)
        os << (r ? ", " : "") << poly_to_display(relations_[r]);
    os << ")";
    return os.str();
}

std::string GradedAlgebraPresentation::poly_to_display(const Polynomial& p) const {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : p) {
        if (!first) os << (t.coeff < 0 ? " - " : " + ");
        else if (t.coeff < 0) os << "-";
        Int a = t.coeff < 0 ? Int(-t.coeff) : t.coeff;
        std::string label = monomial_name(t.mono);
        if (a != 1)
            os << a << (label == "1" ? "" : "*" + label);
        else
            os << label;
        first = false;
    }
    return os.str();
}

std::string GradedAlgebraPresentation::signature() const {
    std::ostringstream os;
    os << describe() << " window(" << window_.coh_max << "," << window_.weight_max << ")";
    return os.str();
}

/* ---------------- ring homomorphisms ---------------- */

GradedRingHom::GradedRingHom(std::string name, PresentationPtr source, PresentationPtr target,
                             DegreeTransform transform, std::vector<RingElement> generator_images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
      transform_(transform), images_(std::move(generator_images)) {
    if (images_.size() != source_->generators().size())
        throw Error(name_ + ": one image per source generator required");
    for (std::size_t g = 0; g < images_.size(); ++g) {
        if (images_[g].presentation().get() != target_.get())
            throw Error(name_ + ": generator image lives in the wrong ring");
        DegreeVector expected = transform_.apply(source_->generators()[g].degree);
        if (images_[g].degree() != expected)
            throw Error(name_ + ": image of '" + source_->generators()[g].name +
                        "' has degree " + images_[g].degree().to_string() + ", expected " +
                        expected.to_string());
    }
}

RingElement GradedRingHom::apply_monomial(const Monomial& m) const {
    RingElement out = target_->unit();
    for (std::size_t g = 0; g < m.size(); ++g)
        if (m[g] > 0) out = multiply(out, power(images_[g], m[g]));
    return out;
}

RingElement GradedRingHom::apply(const RingElement& e) const {
    if (e.presentation().get() != source_.get())
        throw Error(name_ + ": element is not in the source ring");
    const auto& data = source_->degree_data(e.degree());
    RingElement out = target_->zero(transform_.apply(e.degree()));
    for (std::size_t i = 0; i < e.coords().size(); ++i) {
        if (e.coords()[i] == 0) continue;
        out = out + apply_monomial(data.monomials[i]).scaled(e.coords()[i]);
    }
    return out;
}

bool GradedRingHom::check_hom() const {
    for (std::size_t r = 0; r < source_->relations().size(); ++r) {
        const Polynomial& rel = source_->relations()[r];
        DegreeVector e = source_->polynomial_degree(rel);
        if (!transform_.admits(e)) continue;
        RingElement img = target_->zero(transform_.apply(e));
        for (const Term& t : rel) img = img + apply_monomial(t.mono).scaled(t.coeff);
        if (!img.is_zero()) return false;
    }
    return true;
}

IntMatrix GradedRingHom::piece_matrix(const DegreeVector& d) const {
    const auto& src = source_->degree_data(d);
    const auto& tgt = target_->degree_data(transform_.apply(d));
    IntMatrix m(tgt.monomials.size(), src.monomials.size());
    for (std::size_t j = 0; j < src.monomials.size(); ++j) {
        RingElement img = apply_monomial(src.monomials[j]);
        for (std::size_t i = 0; i < img.coords().size(); ++i) m.at(i, j) = img.coords()[i];
    }
    return m;
}

GroupHom GradedRingHom::induced(const DegreeVector& d) const {
    const auto& src = source_->degree_data(d);
    const auto& tgt = target_->degree_data(transform_.apply(d));
    return induced_hom(*src.piece, *tgt.piece, piece_matrix(d));
}

bool GradedRingHom::check_iso(const DegreeWindow& window) const {
    for (long i = 0; i <= window.coh_max; ++i)
        for (long j = 0; j <= window.weight_max; ++j)
            for (int t = 0; t < 2; ++t) {
                DegreeVector d{i, j, t};
                if (!transform_.admits(d)) continue;
                if (!source_->window().contains(d)) continue;
                DegreeVector td = transform_.apply(d);
                if (!target_->window().contains(td)) continue;
                const auto& src = source_->degree_data(d);
                const auto& tgt = target_->degree_data(td);
                if (src.monomials.empty() && tgt.piece->group().is_zero()) continue;
                IntMatrix m = piece_matrix(d);
                // Surjective: coker(M + L_t) = 0.
                IntMatrix rels = m.transpose().vstack(tgt.lattice);
                if (!Subquotient(IntMatrix::identity(tgt.monomials.size()), rels).group().is_zero())
                    return false;
                // Injective: preimage of L_t contained in L_s.
                IntMatrix pre = preimage_lattice_rows(m, tgt.lattice);
                for (std::size_t r = 0; r < pre.rows(); ++r)
                    if (!lattice_contains(src.lattice_hnf, pre.row(r))) return false;
            }
    return true;
}

}  // namespace qcohom
