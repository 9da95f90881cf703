#include <h3/golden.hpp>

#include <sstream>

namespace h3 {

Golden Golden::phi_plus() { return Golden(rational(1, 2), rational(1, 2)); }
Golden Golden::phi_minus() { return Golden(rational(1, 2), rational(-1, 2)); }

Golden& Golden::operator+=(const Golden& o) {
    rat += o.rat;
    irr += o.irr;
    return *this;
}

Golden& Golden::operator-=(const Golden& o) {
    rat -= o.rat;
    irr -= o.irr;
    return *this;
}

Golden& Golden::operator*=(const Golden& o) {
    // (a + b*r5)(c + d*r5) = ac + 5bd + (ad + bc) r5
    Rational a = rat, b = irr;
    rat = a * o.rat + 5 * b * o.irr;
    irr = a * o.irr + b * o.rat;
    return *this;
}

Golden Golden::inv() const {
    Rational n = norm();  // nonzero for nonzero elements: sqrt5 is irrational
    if (n == 0) throw DivisionByZero();
    return Golden(rat / n, -irr / n);
}

Golden& Golden::operator/=(const Golden& o) { return *this *= o.inv(); }

int Golden::sign() const {
    int sr = sgn(rat), si = sgn(irr);
    if (si == 0) return sr;
    if (sr == 0) return si;
    if (sr == si) return sr;
    // opposite signs: compare rat^2 with 5*irr^2, the larger magnitude wins
    int c = cmp(rat * rat, 5 * irr * irr);
    return c == 0 ? 0 : (c > 0 ? sr : si);
}

std::string str(const Golden& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    if (g.irr == 0) return str(g.rat);
    if (g.rat == 0) {
        if (g.irr == 1) return "r5";
        if (g.irr == -1) return "-r5";
        return str(g.irr) + "*r5";
    }
    os << str(g.rat);
    Rational mag = abs(g.irr);
    os << (sgn(g.irr) > 0 ? " + " : " - ");
    if (mag == 1) os << "r5";
    else os << str(mag) << "*r5";
    return os.str();
}

namespace {

// one signed term: "p/q", "r5", "p/q*r5"
Golden parse_term(const std::string& t) {
    if (t == "r5") return Golden::sqrt5();
    if (t == "-r5") return -Golden::sqrt5();
    auto star = t.find("*r5");
    if (star != std::string::npos)
        return Golden(Rational(0), parse_rational(t.substr(0, star)));
    return Golden(parse_rational(t));
}

}  // namespace

Golden parse_golden(const std::string& s) {
    // terms are joined by binary " + " / " - "; a leading '-' binds to the first term
    Golden out;
    std::size_t pos = 0;
    bool negate = false;
    while (pos <= s.size()) {
        std::size_t plus = s.find(" + ", pos);
        std::size_t minus = s.find(" - ", pos);
        std::size_t cut = std::min(plus, minus);
        std::string term = s.substr(pos, cut == std::string::npos ? cut : cut - pos);
        Golden v = parse_term(term);
        out += negate ? -v : v;
        if (cut == std::string::npos) break;
        negate = (cut == minus);
        pos = cut + 3;
    }
    return out;
}

}  // namespace h3
