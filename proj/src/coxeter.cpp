#include <h3/coxeter.hpp>

#include <algorithm>
#include <set>

namespace h3 {

Mat3 Mat3::identity() {
    Mat3 m{};
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = Golden(1);
    return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            const Golden& v = a.at(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < 3; ++j) out.at(i, j) += v * b.at(k, j);
        }
    return out;
}

Vec3 Mat3::apply(const Vec3& v) const {
    Vec3 out{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out[i] += at(i, j) * v[j];
    return out;
}

Mat3 Mat3::transpose() const {
    Mat3 t{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) t.at(j, i) = at(i, j);
    return t;
}

Golden Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Golden Mat3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

namespace {

bool component_positive(const Golden& g) {
    return g.rat > 0 || (g.rat == 0 && g.irr > 0);
}

}  // namespace

LinearForm::LinearForm(Vec3 a) : alpha(std::move(a)) {
    for (const auto& c : alpha) {
        if (c.is_zero()) continue;
        if (!component_positive(c))
            for (auto& x : alpha) x = -x;
        break;
    }
}

Golden LinearForm::norm2() const {
    return alpha[0] * alpha[0] + alpha[1] * alpha[1] + alpha[2] * alpha[2];
}

MultiPoly LinearForm::poly() const {
    const VariableSpace* X = VariableSpace::x3();
    MultiPoly p(X);
    for (std::size_t i = 0; i < 3; ++i)
        p += alpha[i] * MultiPoly::variable(X, i);
    return p;
}

std::vector<LinearForm> positive_forms() {
    const Golden one(1), pp = Golden::phi_plus(), pm = Golden::phi_minus();
    std::vector<LinearForm> forms;
    forms.emplace_back(Vec3{one, Golden(), Golden()});
    forms.emplace_back(Vec3{Golden(), one, Golden()});
    forms.emplace_back(Vec3{Golden(), Golden(), one});
    const std::size_t perm[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& p : perm)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                Vec3 a{};
                a[p[0]] = one;
                a[p[1]] = s1 > 0 ? pp : -pp;
                a[p[2]] = s2 > 0 ? pm : -pm;
                forms.emplace_back(a);
            }
    return forms;
}

Mat3 reflection_of(const LinearForm& f) {
    Golden scale = Golden(2) / f.norm2();
    Mat3 r = Mat3::identity();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            r.at(i, j) -= scale * f.alpha[i] * f.alpha[j];
    return r;
}

Group Group::generate() {
    std::set<Mat3> seen;
    std::vector<Mat3> frontier;
    std::vector<Mat3> gens;
    for (const auto& f : positive_forms()) gens.push_back(reflection_of(f));
    seen.insert(Mat3::identity());
    frontier.push_back(Mat3::identity());
    while (!frontier.empty()) {
        std::vector<Mat3> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                Mat3 p = m * g;
                if (seen.insert(p).second) {
                    if (seen.size() > 120) throw ClosureOverflow("group closure exceeds 120");
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    if (seen.size() != 120) throw StructuralMismatch("group closure stopped short of 120");
    Group g;
    g.elements.assign(seen.begin(), seen.end());
    return g;
}

const Group& Group::instance() {
    static const Group g = generate();
    return g;
}

bool Group::contains(const Mat3& m) const {
    return std::binary_search(elements.begin(), elements.end(), m);
}

std::vector<Mat3> Group::reflections() const {
    std::vector<Mat3> out;
    for (const auto& m : elements)
        if (m.det() == Golden(-1) && m.trace() == Golden(1)) out.push_back(m);
    return out;
}

std::vector<Vec3> orbit(const Group& g, const Vec3& seed) {
    std::set<Vec3> pts;
    for (const auto& m : g.elements) pts.insert(m.apply(seed));
    return {pts.begin(), pts.end()};
}

std::size_t stabilizer_order(const Group& g, const Vec3& v) {
    std::size_t n = 0;
    for (const auto& m : g.elements)
        if (m.apply(v) == v) ++n;
    return n;
}

Vec3 weight1() { return {Golden(), Golden::phi_plus(), Golden(1)}; }
Vec3 weight2() { return {Golden(1), Golden::phi_plus() * Golden::phi_plus(), Golden()}; }
Vec3 weight3() { return {Golden(), Golden(2) * Golden::phi_plus(), Golden()}; }

MultiPoly act(const Mat3& g, const MultiPoly& p) {
    const VariableSpace* X = p.space();
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly row(X);
        for (std::size_t j = 0; j < 3; ++j)
            row += g.at(i, j) * MultiPoly::variable(X, j);
        images.push_back(std::move(row));
    }
    return p.substitute(X, images);
}

MultiPoly orbit_average(unsigned a, const std::vector<Vec3>& orb) {
    const VariableSpace* X = VariableSpace::x3();
    MultiPoly sum(X);
    for (const auto& w : orb) {
        MultiPoly dot(X);
        for (std::size_t i = 0; i < 3; ++i)
            dot += w[i] * MultiPoly::variable(X, i);
        sum += dot.pow(a);
    }
    return sum;
}

bool is_invariant(const Group& g, const MultiPoly& p) {
    // the 15 reflections generate the group, so fixing them fixes every element
    for (const auto& m : g.reflections())
        if (act(m, p) != p) return false;
    return true;
}

}  // namespace h3
