#include <h3/poly.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace h3 {

int VariableSpace::index_of(const std::string& n) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (name(i) == n) return static_cast<int>(i);
    return -1;
}

namespace {
const VariableSpace* make_space(std::vector<std::string> v, std::vector<std::string> p) {
    return new VariableSpace{std::move(v), std::move(p)};
}
}  // namespace

const VariableSpace* VariableSpace::x3() {
    static const VariableSpace* s = make_space({"x1", "x2", "x3"}, {});
    return s;
}
const VariableSpace* VariableSpace::tau3() {
    static const VariableSpace* s = make_space({"t1", "t2", "t3"}, {});
    return s;
}
const VariableSpace* VariableSpace::tau3_nuom() {
    static const VariableSpace* s = make_space({"t1", "t2", "t3"}, {"nu", "om"});
    return s;
}
const VariableSpace* VariableSpace::tau1() {
    static const VariableSpace* s = make_space({"t1"}, {});
    return s;
}
const VariableSpace* VariableSpace::tau1_nuom() {
    static const VariableSpace* s = make_space({"t1"}, {"nu", "om"});
    return s;
}

bool MonoOrder::operator()(const Mono& a, const Mono& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;  // lexicographically greater first
}

MultiPoly::MultiPoly(const VariableSpace* space) : space_(space) {}

MultiPoly MultiPoly::zero(const VariableSpace* space) { return MultiPoly(space); }

MultiPoly MultiPoly::constant(const VariableSpace* space, const Golden& c) {
    MultiPoly p(space);
    p.add_term(Mono(space->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const VariableSpace* space, std::size_t index) {
    MultiPoly p(space);
    Mono m(space->size(), 0);
    m.at(index) = 1;
    p.add_term(m, Golden(1));
    return p;
}

MultiPoly MultiPoly::variable(const VariableSpace* space, const std::string& name) {
    int i = space->index_of(name);
    if (i < 0) throw SpaceMismatch("no variable named " + name);
    return variable(space, static_cast<std::size_t>(i));
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree() == 0;
}

Golden MultiPoly::constant_value() const { return coeff(Mono(space_->size(), 0)); }

void MultiPoly::add_term(const Mono& m, const Golden& c) {
    if (m.size() != space_->size()) throw SpaceMismatch("monomial arity");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Golden MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Golden() : it->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
    return d;
}

unsigned MultiPoly::degree_in(std::size_t index) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.at(index));
    return d;
}

long MultiPoly::weighted_degree(const std::vector<long>& w) const {
    if (terms_.empty()) return -1;
    long best = 0;
    bool any = false;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (std::size_t i = 0; i < space_->var_count(); ++i) d += w.at(i) * m[i];
        best = any ? std::max(best, d) : d;
        any = true;
    }
    return best;
}

static void require_same_space(const MultiPoly& a, const MultiPoly& b) {
    if (a.space() != b.space()) throw SpaceMismatch("operands in different spaces");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(space_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_space(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_space(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    require_same_space(*this, o);
    MultiPoly out(space_);
    Mono sum(space_->size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ma[i] + mb[i];
            out.add_term(sum, ca * cb);
        }
    terms_.swap(out.terms_);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Golden& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = constant(space_, Golden(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

MultiPoly MultiPoly::differentiate(std::size_t var_index) const {
    if (var_index >= space_->var_count()) throw SpaceMismatch("not a variable slot");
    MultiPoly out(space_);
    for (const auto& [m, c] : terms_) {
        if (m[var_index] == 0) continue;
        Mono d = m;
        d[var_index] -= 1;
        out.add_term(d, c * Golden(static_cast<long>(m[var_index])));
    }
    return out;
}

Golden MultiPoly::eval(const std::vector<Golden>& point) const {
    if (point.size() != space_->size()) throw SpaceMismatch("evaluation point arity");
    Golden out;
    for (const auto& [m, c] : terms_) {
        Golden t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::substitute(const VariableSpace* target,
                                const std::vector<MultiPoly>& images) const {
    if (images.size() != space_->size()) throw SpaceMismatch("substitution arity");
    for (const auto& im : images)
        if (im.space() != target) throw SpaceMismatch("image in wrong space");
    // power tables per slot, filled incrementally up to the largest exponent used
    std::vector<std::vector<MultiPoly>> pows(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        pows[i].push_back(MultiPoly::constant(target, Golden(1)));
    MultiPoly out(target);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            while (pows[i].size() <= m[i]) pows[i].push_back(pows[i].back() * images[i]);
            t *= pows[i][m[i]];
        }
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::eval_params(const VariableSpace* target,
                                 const std::vector<Golden>& param_values) const {
    std::size_t nv = space_->var_count();
    if (target->size() != nv || param_values.size() != space_->size() - nv)
        throw SpaceMismatch("parameter evaluation arity");
    MultiPoly out(target);
    Mono head(nv);
    for (const auto& [m, c] : terms_) {
        Golden v = c;
        for (std::size_t i = nv; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) v *= param_values[i - nv];
        std::copy(m.begin(), m.begin() + nv, head.begin());
        out.add_term(head, v);
    }
    return out;
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& divisor) const {
    require_same_space(*this, divisor);
    if (divisor.is_zero()) throw DivisionByZero();
    MultiPoly rem = *this;
    MultiPoly quot(space_);
    const Mono lead_m = divisor.terms_.begin()->first;
    const Golden lead_c = divisor.terms_.begin()->second;
    while (!rem.is_zero()) {
        const Mono rm = rem.terms_.begin()->first;
        const Golden rc = rem.terms_.begin()->second;
        Mono q(rm.size());
        for (std::size_t i = 0; i < rm.size(); ++i) {
            if (rm[i] < lead_m[i]) throw NonDivisible("leading term not divisible");
            q[i] = rm[i] - lead_m[i];
        }
        Golden qc = rc / lead_c;
        quot.add_term(q, qc);
        MultiPoly piece(space_);
        piece.add_term(q, qc);
        rem -= piece * divisor;
        // the graded-lex leading term strictly decreases, so this terminates
        if (!rem.is_zero() && !MonoOrder()(rm, rem.terms_.begin()->first))
            throw NonDivisible("remainder does not decrease");
    }
    return quot;
}

namespace {

void render_mono(std::ostringstream& os, const VariableSpace* sp, const Mono& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        os << '*' << sp->name(i);
        if (m[i] > 1) os << '^' << m[i];
    }
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << h3::str(c) << ')';
        render_mono(os, space_, m);
    }
    return os.str();
}

namespace {

// one factor: "name" or "name^e"
void parse_factor(const VariableSpace* sp, const std::string& f, Mono& m) {
    auto caret = f.find('^');
    std::string name = f.substr(0, caret);
    unsigned e = caret == std::string::npos
                     ? 1u
                     : static_cast<unsigned>(std::stoul(f.substr(caret + 1)));
    int idx = sp->index_of(name);
    if (idx < 0) throw SpaceMismatch("unknown variable " + name);
    m.at(static_cast<std::size_t>(idx)) += e;
}

}  // namespace

MultiPoly parse_poly(const VariableSpace* space, const std::string& text) {
    MultiPoly out(space);
    if (text == "0") return out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') throw Error("parse: expected coefficient at: " + text.substr(pos));
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos) throw Error("parse: unterminated coefficient");
        Golden c = parse_golden(text.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        Mono m(space->size(), 0);
        while (pos < text.size() && text[pos] == '*') {
            std::size_t end = pos + 1;
            while (end < text.size() && text[end] != '*' && text[end] != ' ') ++end;
            parse_factor(space, text.substr(pos + 1, end - pos - 1), m);
            pos = end;
        }
        out.add_term(m, c);
        if (pos < text.size()) {
            if (text.compare(pos, 3, " + ") != 0)
                throw Error("parse: expected ' + ' at: " + text.substr(pos));
            pos += 3;
        }
    }
    return out;
}

MultiPoly transport(const MultiPoly& p, const VariableSpace* target) {
    const VariableSpace* src = p.space();
    std::vector<int> slot(src->size(), -1);
    for (std::size_t i = 0; i < src->size(); ++i) slot[i] = target->index_of(src->name(i));
    MultiPoly out(target);
    for (const auto& [m, c] : p.terms()) {
        Mono img(target->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (slot[i] < 0)
                throw SpaceMismatch("transport: no variable named " + src->name(i));
            img[static_cast<std::size_t>(slot[i])] = m[i];
        }
        out.add_term(img, c);
    }
    return out;
}

}  // namespace h3
