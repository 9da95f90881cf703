#pragma once

#include <h3/poly.hpp>

#include <array>

namespace h3 {

using Vec3 = std::array<Golden, 3>;

// 3x3 matrix over Q(sqrt 5), fixed size so group elements order and hash cheaply
struct Mat3 {
    std::array<Golden, 9> e;

    static Mat3 identity();
    Golden& at(std::size_t i, std::size_t j) { return e[3 * i + j]; }
    const Golden& at(std::size_t i, std::size_t j) const { return e[3 * i + j]; }

    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    Vec3 apply(const Vec3& v) const;
    Mat3 transpose() const;
    Golden det() const;
    Golden trace() const;

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.e == b.e; }
    friend bool operator<(const Mat3& a, const Mat3& b) { return a.e < b.e; }
};

// mirror form alpha.x; representative normalized so the leading nonzero
// coefficient is positive in the (rat, irr) component order
struct LinearForm {
    Vec3 alpha;

    explicit LinearForm(Vec3 a);
    Golden norm2() const;
    MultiPoly poly() const;  // alpha.x over x-space

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.alpha == b.alpha;
    }
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        return a.alpha < b.alpha;
    }
};

// the 15 mirrors: 3 coordinate planes, then 12 icosahedral forms
// x_i + (-1)^m1 phi+ x_j + (-1)^m2 phi- x_k over even permutations (i,j,k)
std::vector<LinearForm> positive_forms();

Mat3 reflection_of(const LinearForm& f);

struct Group {
    std::vector<Mat3> elements;  // sorted; exactly 120 entries

    // closure of the 15 reflections; ClosureOverflow if it grows past 120,
    // StructuralMismatch if it stops at any other size
    static Group generate();
    static const Group& instance();  // generated once, cached

    std::size_t order() const { return elements.size(); }
    bool contains(const Mat3& m) const;
    std::vector<Mat3> reflections() const;  // det -1, trace +1
};

std::vector<Vec3> orbit(const Group& g, const Vec3& seed);  // sorted, deduplicated
std::size_t stabilizer_order(const Group& g, const Vec3& v);

Vec3 weight1();  // (0, phi+, 1)   orbit 12
Vec3 weight2();  // (1, phi+^2, 0) orbit 20
Vec3 weight3();  // (0, 2phi+, 0)  orbit 30

// p(g x): substitute x_i -> sum_j g_ij x_j
MultiPoly act(const Mat3& g, const MultiPoly& p);

// t_a(x) = sum over the orbit of (w.x)^a
MultiPoly orbit_average(unsigned a, const std::vector<Vec3>& orb);

bool is_invariant(const Group& g, const MultiPoly& p);

}  // namespace h3
