#include "ncspectrum/abelian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ncs {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<Word>& rows, std::size_t cols) {
    IntegerMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Word IntegerMatrix::row(std::size_t r) const {
    return Word(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntegerMatrix::append_row(const Word& w) {
    if (w.size() != cols_) throw std::invalid_argument("row length does not match column count");
    data_.insert(data_.end(), w.begin(), w.end());
    ++rows_;
}

bool IntegerMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0) return false;
    return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in integer matrix multiply");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) out(i, j) += aik * b(k, j);
        }
    return out;
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) /= prev;  // exact by Sylvester's identity
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Word mul(const Word& x, const IntegerMatrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("word length does not match matrix rows");
    Word out(m.cols());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out[j] += x[i] * m(i, j);
    }
    return out;
}

namespace {

class SnfWorker {
public:
    SnfWorker(const IntegerMatrix& m, SNFOptions opt)
        : a_(m), r_(m.rows()), c_(m.cols()), opt_(opt) {
        if (opt_.track_left) u_ = IntegerMatrix::identity(r_);
        if (opt_.track_right || opt_.track_right_inverse) v_ = IntegerMatrix::identity(c_);
        if (opt_.track_right_inverse) vi_ = IntegerMatrix::identity(c_);
    }

    SNFResult run() {
        std::size_t t = 0;
        while (t < std::min(r_, c_)) {
            auto pivot = smallest_in_submatrix(t);
            if (!pivot) break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            settle_pivot(t);
            if (a_(t, t) < 0) negate_row(t);
            ++t;
        }
        SNFResult out;
        out.D = std::move(a_);
        out.rank = t;
        if (opt_.track_left) out.U = std::move(u_);
        if (opt_.track_right) out.V = v_;
        if (opt_.track_right_inverse) out.V_inverse = std::move(vi_);
        return out;
    }

private:
    std::optional<std::pair<std::size_t, std::size_t>> smallest_in_submatrix(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < r_; ++i)
            for (std::size_t j = t; j < c_; ++j) {
                const auto& x = a_(i, j);
                if (x == 0) continue;
                if (!best || mpz_cmpabs(x.get_mpz_t(), a_(best->first, best->second).get_mpz_t()) < 0) best = {i, j};
            }
        return best;
    }

    void settle_pivot(std::size_t t) {
        Integer q;
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r_; ++i) {
                if (a_(i, t) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                add_row_multiple(i, t, -q);
                if (a_(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c_; ++j) {
                if (a_(t, j) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                add_col_multiple(j, t, -q);
                if (a_(t, j) != 0) clean = false;
            }
            if (!clean) {
                // Row t precedes the rows below it in row-major order.
                std::pair<std::size_t, std::size_t> best{t, t};
                for (std::size_t j = t + 1; j < c_; ++j)
                    if (a_(t, j) != 0 && mpz_cmpabs(a_(t, j).get_mpz_t(), a_(best.first, best.second).get_mpz_t()) < 0) best = {t, j};
                for (std::size_t i = t + 1; i < r_; ++i)
                    if (a_(i, t) != 0 && mpz_cmpabs(a_(i, t).get_mpz_t(), a_(best.first, best.second).get_mpz_t()) < 0) best = {i, t};
                swap_rows(t, best.first);
                swap_cols(t, best.second);
                continue;
            }
            bool fixed = false;
            for (std::size_t i = t + 1; i < r_ && !fixed; ++i)
                for (std::size_t j = t + 1; j < c_; ++j)
                    if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                        add_row_multiple(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) return;
        }
    }

    // row dst += q * row src
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < c_; ++j)
            if (a_(src, j) != 0) a_(dst, j) += q * a_(src, j);
        if (opt_.track_left)
            for (std::size_t j = 0; j < r_; ++j)
                if (u_(src, j) != 0) u_(dst, j) += q * u_(src, j);
    }

    // col dst += q * col src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < r_; ++i)
            if (a_(i, src) != 0) a_(i, dst) += q * a_(i, src);
        if (v_.rows())
            for (std::size_t i = 0; i < c_; ++i)
                if (v_(i, src) != 0) v_(i, dst) += q * v_(i, src);
        if (opt_.track_right_inverse)
            for (std::size_t j = 0; j < c_; ++j)
                if (vi_(dst, j) != 0) vi_(src, j) -= q * vi_(dst, j);
    }

    void swap_rows(std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap(a_(x, j), a_(y, j));
        if (opt_.track_left)
            for (std::size_t j = 0; j < r_; ++j) std::swap(u_(x, j), u_(y, j));
    }

    void swap_cols(std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < r_; ++i) std::swap(a_(i, x), a_(i, y));
        if (v_.rows())
            for (std::size_t i = 0; i < c_; ++i) std::swap(v_(i, x), v_(i, y));
        if (opt_.track_right_inverse)
            for (std::size_t j = 0; j < c_; ++j) std::swap(vi_(x, j), vi_(y, j));
    }

    void negate_row(std::size_t t) {
        for (std::size_t j = 0; j < c_; ++j) a_(t, j) = -a_(t, j);
        if (opt_.track_left)
            for (std::size_t j = 0; j < r_; ++j) u_(t, j) = -u_(t, j);
    }

    IntegerMatrix a_;
    std::size_t r_, c_;
    SNFOptions opt_;
    IntegerMatrix u_, v_, vi_;
};

}  // namespace

SNFResult snf(const IntegerMatrix& m, SNFOptions options) { return SnfWorker(m, options).run(); }

std::optional<Word> solve_left(const IntegerMatrix& m, const Word& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("right-hand side length does not match columns");
    auto res = snf(m, {.track_left = true, .track_right = true});
    Word y = mul(x, res.V);
    Word w(m.rows());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < res.rank) {
            const auto& d = res.D(i, i);
            if (!mpz_divisible_p(y[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
            w[i] = y[i] / d;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return mul(w, res.U);
}

IntegerMatrix left_kernel(const IntegerMatrix& m) {
    auto res = snf(m, {.track_left = true, .track_right = false});
    IntegerMatrix out(0, m.rows());
    for (std::size_t i = res.rank; i < m.rows(); ++i) out.append_row(res.U.row(i));
    return out;
}

std::string group_string(const InvariantFactors& f) {
    std::vector<std::string> parts;
    if (f.free_rank == 1) parts.emplace_back("Z");
    if (f.free_rank > 1) parts.push_back("Z^" + std::to_string(f.free_rank));
    for (const auto& d : f.torsion) parts.push_back("Z/" + d.get_str());
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) out += " ⊕ " + parts[k];
    return out;
}

PresentedAbGroup::PresentedAbGroup(std::size_t ngens, IntegerMatrix relations)
    : ngens_(ngens), relations_(std::move(relations)) {
    if (relations_.cols() != ngens_) throw std::invalid_argument("relation matrix width must equal the generator count");
    // Duplicate and zero rows do not change the relation lattice.
    std::set<Word> unique;
    IntegerMatrix reduced(0, ngens_);
    for (std::size_t r = 0; r < relations_.rows(); ++r) {
        Word w = relations_.row(r);
        bool nonzero = std::any_of(w.begin(), w.end(), [](const Integer& v) { return v != 0; });
        if (!nonzero) continue;
        Word neg = w;
        for (auto& v : neg) v = -v;
        if (unique.count(w) || unique.count(neg)) continue;
        unique.insert(w);
        reduced.append_row(w);
    }
    auto res = snf(reduced, {.track_left = false, .track_right = true, .track_right_inverse = true});
    auto normal = std::make_shared<Normal>();
    for (std::size_t j = 0; j < ngens_; ++j) {
        Integer d = j < res.rank ? res.D(j, j) : Integer(0);
        if (d == 1) continue;
        normal->kept.push_back(j);
        normal->orders.push_back(d);
    }
    normal->to_canonical = IntegerMatrix(ngens_, normal->kept.size());
    normal->from_canonical = IntegerMatrix(normal->kept.size(), ngens_);
    for (std::size_t k = 0; k < normal->kept.size(); ++k) {
        auto j = normal->kept[k];
        for (std::size_t i = 0; i < ngens_; ++i) {
            normal->to_canonical(i, k) = res.V(i, j);
            normal->from_canonical(k, i) = (*res.V_inverse)(j, i);
        }
    }
    normal_ = std::move(normal);
}

PresentedAbGroup PresentedAbGroup::cyclic(const Integer& order) {
    IntegerMatrix rel(1, 1);
    rel(0, 0) = order;
    return {1, rel};
}

InvariantFactors PresentedAbGroup::invariant_factors() const {
    InvariantFactors f;
    for (const auto& d : normal_->orders) {
        if (d == 0)
            ++f.free_rank;
        else
            f.torsion.push_back(d);
    }
    return f;
}

Word PresentedAbGroup::canonical(const Word& x) const {
    if (x.size() != ngens_) throw std::invalid_argument("word length does not match generator count");
    Word y = mul(x, normal_->to_canonical);
    for (std::size_t k = 0; k < y.size(); ++k) {
        const auto& d = normal_->orders[k];
        if (d != 0) mpz_fdiv_r(y[k].get_mpz_t(), y[k].get_mpz_t(), d.get_mpz_t());
    }
    return y;
}

Word PresentedAbGroup::from_canonical(const Word& coords) const {
    if (coords.size() != normal_->orders.size()) throw std::invalid_argument("coordinate vector has the wrong length");
    return mul(coords, normal_->from_canonical);
}

Word PresentedAbGroup::generator(std::size_t k) const {
    Word w(ngens_);
    w.at(k) = 1;
    return w;
}

bool PresentedAbGroup::is_zero(const Word& x) const {
    auto y = canonical(x);
    return std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; });
}

bool PresentedAbGroup::element_eq(const Word& x, const Word& y) const {
    if (x.size() != ngens_ || y.size() != ngens_) throw std::invalid_argument("word length does not match generator count");
    Word diff(ngens_);
    for (std::size_t k = 0; k < ngens_; ++k) diff[k] = x[k] - y[k];
    return is_zero(diff);
}

AbHom::AbHom(PresentedAbGroup domain, PresentedAbGroup codomain, IntegerMatrix images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (images_.rows() != domain_.ngens() || images_.cols() != codomain_.ngens())
        throw std::invalid_argument("image matrix must be ngens(domain) x ngens(codomain)");
    const auto& rel = domain_.relations();
    for (std::size_t r = 0; r < rel.rows(); ++r)
        if (!codomain_.is_zero(mul(rel.row(r), images_)))
            throw std::domain_error("homomorphism is not well defined: relation " + std::to_string(r) +
                                    " does not map to zero");
}

AbHom AbHom::identity(const PresentedAbGroup& g) { return {g, g, IntegerMatrix::identity(g.ngens())}; }

AbHom AbHom::zero(const PresentedAbGroup& g, const PresentedAbGroup& h) {
    return {g, h, IntegerMatrix(g.ngens(), h.ngens())};
}

Word AbHom::apply(const Word& x) const { return mul(x, images_); }

bool AbHom::equals(const AbHom& other) const {
    if (!(domain_ == other.domain_) || !(codomain_ == other.codomain_)) return false;
    for (std::size_t k = 0; k < domain_.ngens(); ++k)
        if (!codomain_.element_eq(images_.row(k), other.images_.row(k))) return false;
    return true;
}

AbHom compose(const AbHom& g, const AbHom& f) {
    if (!(f.codomain() == g.domain())) throw std::invalid_argument("group homs do not chain");
    return {f.domain(), g.codomain(), f.images() * g.images()};
}

namespace {

IntegerMatrix stacked_with_orders(const IntegerMatrix& top, const std::vector<Integer>& orders) {
    IntegerMatrix s = top;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        Word row(orders.size());
        row[k] = orders[k];
        s.append_row(row);
    }
    return s;
}

IntegerMatrix leading_columns(const IntegerMatrix& m, std::size_t n) {
    IntegerMatrix out(m.rows(), n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace

std::pair<PresentedAbGroup, AbHom> kernel(const AbHom& h) {
    const auto& g = h.domain();
    const auto& target = h.codomain();
    const std::size_t cg = g.coordinate_orders().size();
    // Work in canonical coordinates on both sides.
    IntegerMatrix images(cg, target.coordinate_orders().size());
    IntegerMatrix back(cg, g.ngens());
    for (std::size_t k = 0; k < cg; ++k) {
        Word e(cg);
        e[k] = 1;
        Word word = g.from_canonical(e);
        for (std::size_t j = 0; j < g.ngens(); ++j) back(k, j) = word[j];
        Word img = target.canonical(h.apply(word));
        for (std::size_t j = 0; j < img.size(); ++j) images(k, j) = img[j];
    }
    // Kernel generators: x-parts of {(x, y) : x C + y diag(orders) = 0}.
    auto gens = leading_columns(left_kernel(stacked_with_orders(images, target.coordinate_orders())), cg);
    // Relations among them: combinations landing in the domain relation lattice.
    auto rels = leading_columns(left_kernel(stacked_with_orders(gens, g.coordinate_orders())), gens.rows());
    PresentedAbGroup k(gens.rows(), rels);
    AbHom inclusion(k, g, gens * back);
    return {k, inclusion};
}

std::optional<Word> preimage(const AbHom& h, const Word& x) {
    const auto& cod = h.codomain();
    const std::size_t c = cod.coordinate_orders().size();
    IntegerMatrix s(0, c);
    for (std::size_t k = 0; k < h.domain().ngens(); ++k) s.append_row(cod.canonical(h.images().row(k)));
    s = stacked_with_orders(s, cod.coordinate_orders());
    auto z = solve_left(s, cod.canonical(x));
    if (!z) return std::nullopt;
    z->resize(h.domain().ngens());
    return z;
}

Colimit colimit(const AbDiagram& d) {
    if (d.variance != Variance::covariant) throw std::invalid_argument("colimit needs a covariant diagram");
    d.validate();
    Colimit out;
    std::size_t total = 0;
    for (const auto& g : d.node_data) {
        out.offsets.push_back(total);
        total += g.ngens();
    }
    IntegerMatrix rel(0, total);
    for (std::size_t n = 0; n < d.node_data.size(); ++n) {
        const auto& r = d.node_data[n].relations();
        for (std::size_t i = 0; i < r.rows(); ++i) {
            Word w(total);
            for (std::size_t j = 0; j < r.cols(); ++j) w[out.offsets[n] + j] = r(i, j);
            rel.append_row(w);
        }
    }
    for (std::size_t e = 0; e < d.shape.edge_count(); ++e) {
        const auto& edge = d.shape.edges()[e];
        const auto& h = d.edge_data[e];
        for (std::size_t g = 0; g < h.domain().ngens(); ++g) {
            Word w(total);
            w[out.offsets[edge.source] + g] += 1;
            for (std::size_t j = 0; j < h.codomain().ngens(); ++j) w[out.offsets[edge.target] + j] -= h.images()(g, j);
            rel.append_row(w);
        }
    }
    out.group = PresentedAbGroup(total, rel);
    for (std::size_t n = 0; n < d.node_data.size(); ++n) {
        IntegerMatrix inj(d.node_data[n].ngens(), total);
        for (std::size_t g = 0; g < d.node_data[n].ngens(); ++g) inj(g, out.offsets[n] + g) = 1;
        out.injections.emplace_back(d.node_data[n], out.group, inj);
    }
    return out;
}

AbHom colimit_induced(const AbDiagramMorphism& m, const AbDiagram& d1, const Colimit& c1, const AbDiagram& d2,
                      const Colimit& c2, bool check) {
    if (check && !check_naturality(m, d1, d2))
        throw std::domain_error("diagram morphism is not natural; no induced map of colimits");
    IntegerMatrix images(c1.group.ngens(), c2.group.ngens());
    for (std::size_t a = 0; a < d1.node_data.size(); ++a) {
        const auto& eta = m.components.at(a);
        auto fa = m.node_map.at(a);
        for (std::size_t g = 0; g < d1.node_data[a].ngens(); ++g) {
            auto row = c1.offsets[a] + g;
            for (std::size_t j = 0; j < eta.codomain().ngens(); ++j) images(row, c2.offsets[fa] + j) = eta.images()(g, j);
        }
    }
    return {c1.group, c2.group, images};
}

AbHom colimit_factor(const AbDiagram& d, const Colimit& c, const std::vector<AbHom>& cocone) {
    if (cocone.size() != d.node_data.size()) throw std::invalid_argument("cocone needs one leg per node");
    const auto& target = cocone.front().codomain();
    for (std::size_t e = 0; e < d.shape.edge_count(); ++e) {
        const auto& edge = d.shape.edges()[e];
        if (!compose(cocone[edge.target], d.edge_data[e]).equals(cocone[edge.source]))
            throw std::domain_error("cocone legs do not commute with edge " + edge.id);
    }
    IntegerMatrix images(c.group.ngens(), target.ngens());
    for (std::size_t n = 0; n < cocone.size(); ++n)
        for (std::size_t g = 0; g < cocone[n].domain().ngens(); ++g)
            for (std::size_t j = 0; j < target.ngens(); ++j) images(c.offsets[n] + g, j) = cocone[n].images()(g, j);
    return {c.group, target, images};
}

}  // namespace ncs
