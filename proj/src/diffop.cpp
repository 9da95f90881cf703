#include <h3/diffop.hpp>

#include <algorithm>
#include <map>

namespace h3 {

namespace {

MultiPoly repeated_derivative(const MultiPoly& p, const DerivIndex& beta) {
    MultiPoly out = p;
    for (std::size_t i = 0; i < beta.size() && !out.is_zero(); ++i)
        for (unsigned k = 0; k < beta[i]; ++k) out = out.differentiate(i);
    return out;
}

std::string mono_text(const VariableSpace* space, const Mono& m) {
    MultiPoly w(space);
    w.add_term(m, Golden(1));
    return w.str();
}

// numeric order on Q(sqrt 5), exact
bool num_less(const Golden& a, const Golden& b) { return (b - a).sign() > 0; }

}  // namespace

DiffOperator::DiffOperator(const VariableSpace* space) : space_(space) {}

DiffOperator DiffOperator::derivative(const VariableSpace* space, std::size_t var,
                                      unsigned order) {
    DiffOperator out(space);
    DerivIndex beta(space->var_count(), 0);
    beta[var] = order;
    out.add(beta, MultiPoly::constant(space, Golden(1)));
    return out;
}

DiffOperator DiffOperator::multiplication(const MultiPoly& c) {
    DiffOperator out(c.space());
    out.add(DerivIndex(c.space()->var_count(), 0), c);
    return out;
}

unsigned DiffOperator::order() const {
    unsigned best = 0;
    for (const auto& [beta, coef] : terms_) {
        unsigned total = 0;
        for (unsigned b : beta) total += b;
        best = std::max(best, total);
    }
    return best;
}

void DiffOperator::add(const DerivIndex& beta, const MultiPoly& coef) {
    if (beta.size() != space_->var_count())
        throw SpaceMismatch("derivative index has wrong arity");
    if (coef.space() != space_) throw SpaceMismatch("coefficient lives in another space");
    if (coef.is_zero()) return;
    auto it = terms_.find(beta);
    if (it == terms_.end()) {
        terms_.emplace(beta, coef);
        return;
    }
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly DiffOperator::coefficient(const DerivIndex& beta) const {
    auto it = terms_.find(beta);
    return it == terms_.end() ? MultiPoly::zero(space_) : it->second;
}

MultiPoly DiffOperator::apply(const MultiPoly& p) const {
    if (p.space() != space_) throw SpaceMismatch("operand lives in another space");
    MultiPoly out(space_);
    for (const auto& [beta, coef] : terms_) out += coef * repeated_derivative(p, beta);
    return out;
}

DiffOperator DiffOperator::compose(const DiffOperator& rhs) const {
    if (rhs.space_ != space_) throw SpaceMismatch("composing operators over different spaces");
    const std::size_t v = space_->var_count();
    DiffOperator out(space_);
    for (const auto& [beta, c1] : terms_) {
        for (const auto& [gamma, c2] : rhs.terms_) {
            // Leibniz: d^beta (c2 d^gamma) = sum_{delta <= beta} C(beta,delta)
            //          (d^delta c2) d^(beta-delta+gamma)
            DerivIndex delta(v, 0);
            while (true) {
                Golden binom_prod(1);
                for (std::size_t i = 0; i < v; ++i)
                    binom_prod = binom_prod * Golden(rational(binomial(beta[i], delta[i]), Int(1)));
                MultiPoly dc = repeated_derivative(c2, delta);
                if (!dc.is_zero()) {
                    DerivIndex idx(v);
                    for (std::size_t i = 0; i < v; ++i) idx[i] = beta[i] - delta[i] + gamma[i];
                    out.add(idx, c1 * dc * binom_prod);
                }
                std::size_t pos = 0;
                while (pos < v && delta[pos] == beta[pos]) delta[pos++] = 0;
                if (pos == v) break;
                ++delta[pos];
            }
        }
    }
    return out;
}

DiffOperator DiffOperator::commutator(const DiffOperator& rhs) const {
    return compose(rhs) - rhs.compose(*this);
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator out(space_);
    for (const auto& [beta, coef] : terms_) out.terms_.emplace(beta, -coef);
    return out;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    if (o.space_ != space_) throw SpaceMismatch("adding operators over different spaces");
    for (const auto& [beta, coef] : o.terms_) add(beta, coef);
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
    if (o.space_ != space_) throw SpaceMismatch("adding operators over different spaces");
    for (const auto& [beta, coef] : o.terms_) add(beta, -coef);
    return *this;
}

DiffOperator operator*(const Golden& c, DiffOperator a) {
    if (c.is_zero()) return DiffOperator(a.space_);
    for (auto& [beta, coef] : a.terms_) coef *= c;
    return a;
}

DiffOperator operator*(const MultiPoly& c, DiffOperator a) {
    if (c.space() != a.space_) throw SpaceMismatch("scaling by a poly from another space");
    if (c.is_zero()) return DiffOperator(a.space_);
    for (auto& [beta, coef] : a.terms_) coef *= c;
    return a;
}

std::string DiffOperator::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "{" + it->second.str() + "}";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            out += " d" + std::to_string(i + 1);
            if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
        }
    }
    return out;
}

FlagSpace FlagSpace::build(const VariableSpace* space, std::vector<long> alpha, unsigned n) {
    const std::size_t v = space->var_count();
    if (alpha.size() != v) throw SpaceMismatch("weight vector has wrong arity");
    for (long w : alpha)
        if (w <= 0) throw SpaceMismatch("flag weights must be positive");

    FlagSpace out{space, std::move(alpha), n, {}};
    Mono m(space->size(), 0);
    long budget = static_cast<long>(n);
    // odometer over exponents with alpha-weight at most n
    while (true) {
        out.basis.push_back(m);
        std::size_t pos = 0;
        while (pos < v) {
            ++m[pos];
            if (out.weight_of(m) <= budget) break;
            m[pos++] = 0;
        }
        if (pos == v) break;
    }
    std::sort(out.basis.begin(), out.basis.end(), [&](const Mono& a, const Mono& b) {
        long wa = out.weight_of(a), wb = out.weight_of(b);
        if (wa != wb) return wa < wb;
        return MonoOrder{}(b, a);  // ascending canonical order inside a weight class
    });
    return out;
}

long FlagSpace::weight_of(const Mono& m) const {
    long w = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) w += alpha[i] * static_cast<long>(m[i]);
    return w;
}

MultiPoly FlagSpace::to_poly(const std::vector<Golden>& coords) const {
    if (coords.size() != basis.size()) throw SpaceMismatch("coordinate vector has wrong size");
    MultiPoly out(space);
    for (std::size_t k = 0; k < basis.size(); ++k) out.add_term(basis[k], coords[k]);
    return out;
}

std::vector<Golden> FlagSpace::coords_of(const MultiPoly& p) const {
    if (p.space() != space) throw SpaceMismatch("polynomial lives in another space");
    std::vector<Golden> out(basis.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end())
            throw NotInvariant("outside the flag at level " + std::to_string(n) + ": " +
                               mono_text(space, m));
        out[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return out;
}

std::set<long> weight_shifts(const DiffOperator& op, const std::vector<long>& alpha) {
    const std::size_t v = op.space()->var_count();
    if (alpha.size() != v) throw SpaceMismatch("weight vector has wrong arity");
    std::set<long> out;
    for (const auto& [beta, coef] : op.terms()) {
        long base = 0;
        for (std::size_t i = 0; i < v; ++i) base += alpha[i] * static_cast<long>(beta[i]);
        for (const auto& [m, c] : coef.terms()) {
            long w = 0;
            for (std::size_t i = 0; i < v; ++i) w += alpha[i] * static_cast<long>(m[i]);
            out.insert(w - base);
        }
    }
    return out;
}

DiffOperator weight_component(const DiffOperator& op, const std::vector<long>& alpha, long s) {
    const std::size_t v = op.space()->var_count();
    if (alpha.size() != v) throw SpaceMismatch("weight vector has wrong arity");
    DiffOperator out(op.space());
    for (const auto& [beta, coef] : op.terms()) {
        long base = 0;
        for (std::size_t i = 0; i < v; ++i) base += alpha[i] * static_cast<long>(beta[i]);
        MultiPoly piece(op.space());
        for (const auto& [m, c] : coef.terms()) {
            long w = 0;
            for (std::size_t i = 0; i < v; ++i) w += alpha[i] * static_cast<long>(m[i]);
            if (w - base == s) piece.add_term(m, c);
        }
        out.add(beta, piece);
    }
    return out;
}

Matrix flag_matrix(const DiffOperator& op, const FlagSpace& flag) {
    if (op.space() != flag.space) throw SpaceMismatch("operator and flag disagree on space");
    if (!op.space()->params.empty())
        throw SpaceMismatch("flag matrices need numeric coefficients");
    const std::size_t dim = flag.dim();
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        MultiPoly basis_j(flag.space);
        basis_j.add_term(flag.basis[j], Golden(1));
        std::vector<Golden> img = flag.coords_of(op.apply(basis_j));
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = img[i];
    }
    return m;
}

namespace {

// exact division of an ascending monic-led polynomial by (x - c);
// returns true and replaces p by the quotient when the remainder vanishes
bool deflate(std::vector<Golden>& p, const Golden& c) {
    const std::size_t n = p.size() - 1;
    if (n == 0) return false;
    std::vector<Golden> q(n);
    q[n - 1] = p[n];
    for (std::size_t k = n - 1; k >= 1; --k) q[k - 1] = p[k] + c * q[k];
    if (!(p[0] + c * q[0]).is_zero()) return false;
    p = std::move(q);
    return true;
}

struct RawLevel {
    Golden val;
    std::size_t algebraic;
    std::vector<std::vector<Golden>> vecs;
};

// eigenvalues taken from the diagonal (complete for graded-triangular
// matrices), each validated by deflating the characteristic polynomial;
// second member is the degree left undeflated
std::pair<std::vector<RawLevel>, std::size_t> eigen_split(const Matrix& m) {
    std::vector<Golden> cp = m.charpoly();
    std::vector<RawLevel> out;
    std::vector<Golden> seen;
    for (std::size_t i = 0; i < m.rows; ++i) {
        const Golden& c = m.at(i, i);
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        seen.push_back(c);
        std::size_t mult = 0;
        while (cp.size() > 1 && deflate(cp, c)) ++mult;
        if (mult == 0) continue;
        Matrix shifted = m;
        for (std::size_t k = 0; k < m.rows; ++k) shifted.at(k, k) = shifted.at(k, k) - c;
        out.push_back({c, mult, shifted.nullspace()});
    }
    return {std::move(out), cp.size() - 1};
}

}  // namespace

std::vector<EigenLevel> spectrum(const DiffOperator& op, const FlagSpace& flag) {
    Matrix m = flag_matrix(op, flag);
    auto [raw, leftover] = eigen_split(m);
    if (leftover != 0)
        throw UnsplitDegeneracy("diagonal candidates miss " + std::to_string(leftover) +
                                " eigenvalues");
    std::vector<EigenLevel> out;
    for (const RawLevel& r : raw) {
        EigenLevel level{r.val, r.algebraic, {}};
        for (const auto& v : r.vecs) level.functions.push_back(flag.to_poly(v));
        out.push_back(std::move(level));
    }
    std::sort(out.begin(), out.end(),
              [](const EigenLevel& a, const EigenLevel& b) { return num_less(b.lambda, a.lambda); });
    return out;
}

JointBasis joint_eigenbasis(const DiffOperator& h, const DiffOperator& f,
                            const FlagSpace& flag) {
    JointBasis out;
    for (const EigenLevel& level : spectrum(h, flag)) {
        const std::size_t k = level.functions.size();
        if (k < level.algebraic)
            out.unsplit_notes.push_back("eigenvalue " + str(level.lambda) +
                                        ": geometric multiplicity below algebraic");
        if (k == 1) {
            const MultiPoly& phi = level.functions[0];
            MultiPoly fphi = f.apply(phi);
            Golden gamma(0);
            if (!fphi.is_zero()) {
                const auto& lead = *phi.terms().begin();
                gamma = fphi.coeff(lead.first) / lead.second;
            }
            if (fphi != phi * gamma)
                throw StructuralMismatch("partner does not preserve the eigenspace of " +
                                         str(level.lambda));
            out.items.push_back({phi, level.lambda, gamma});
            continue;
        }
        // partner restricted to the eigenspace, in the eigenbasis coordinates
        Echelon ech(flag.dim());
        for (const MultiPoly& phi : level.functions) ech.insert(flag.coords_of(phi));
        Matrix block(k, k);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Golden> col;
            try {
                col = ech.express(flag.coords_of(f.apply(level.functions[j])));
            } catch (const NotInImage&) {
                throw StructuralMismatch("partner does not preserve the eigenspace of " +
                                         str(level.lambda));
            }
            for (std::size_t i = 0; i < k; ++i) block.at(i, j) = col[i];
        }
        auto [raw, leftover] = eigen_split(block);
        if (leftover != 0)
            out.unsplit_notes.push_back("eigenvalue " + str(level.lambda) + ": block of size " +
                                        std::to_string(k) + " left " + std::to_string(leftover) +
                                        " directions unsplit");
        std::sort(raw.begin(), raw.end(),
                  [](const RawLevel& a, const RawLevel& b) { return num_less(a.val, b.val); });
        for (const RawLevel& r : raw) {
            for (const auto& v : r.vecs) {
                MultiPoly phi(flag.space);
                for (std::size_t i = 0; i < k; ++i) phi += level.functions[i] * v[i];
                out.items.push_back({std::move(phi), level.lambda, r.val});
            }
        }
    }
    return out;
}

bool wpt_check(const WptParams& w, unsigned n) {
    const VariableSpace* T = VariableSpace::tau3();
    MultiPoly t1 = MultiPoly::variable(T, 0), t2 = MultiPoly::variable(T, 1),
              t3 = MultiPoly::variable(T, 2);
    auto c = [&](const Golden& g) { return MultiPoly::constant(T, g); };
    std::vector<MultiPoly> images = {
        t1 + c(w.a),
        t2 + c(w.b1) * t1 * t1 + c(w.b2) * t1 + c(w.b3),
        t3 + c(w.c1) * t1 * t2 + c(w.c2) * t1 * t1 * t1 + c(w.c3) * t2 + c(w.c4) * t1 * t1 +
            c(w.c5) * t1 + c(w.c6)};
    FlagSpace flag = FlagSpace::build(T, {1, 2, 3}, n);
    for (const Mono& m : flag.basis) {
        MultiPoly b(T);
        b.add_term(m, Golden(1));
        if (b.substitute(T, images).weighted_degree({1, 2, 3}) > static_cast<long>(n))
            return false;
    }
    return true;
}

FlagAngle flag_angle(const std::vector<long>& alpha) {
    long numer = 0, norm2 = 0;
    for (long a : alpha) {
        numer += a;
        norm2 += a * a;
    }
    return {numer, 3 * norm2};
}

}  // namespace h3
