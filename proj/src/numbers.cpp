#include <h3/numbers.hpp>

#include <sstream>

namespace h3 {

Rational rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        Rational r(s);
        r.canonicalize();
        return r;
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return rational(num, den);
}

std::string str(const Rational& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << '/' << r.get_den();
    return os.str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long to_long(const Rational& r) {
    if (!is_integer(r)) throw NonDivisible("not an integer: " + str(r));
    if (!r.get_num().fits_slong_p()) throw NonDivisible("out of long range: " + str(r));
    return r.get_num().get_si();
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace h3
