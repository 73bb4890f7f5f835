#include <doctest.h>

#include "flaglab/chow.hpp"
#include "flaglab/delpezzo.hpp"

#include <random>

using namespace flaglab;
using namespace flaglab::delpezzo;

namespace {

Matrix random_invertible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        Matrix p(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) p(i, j) = d(rng);
        if (determinant(p) != 0) return p;
    }
}

Matrix shift(const Matrix& a, const Rational& l) {
    Matrix b = a;
    for (int i = 0; i < 3; ++i) b(i, i) += l;
    return b;
}

// Jordan-type representatives, all with det = 0.
std::vector<std::pair<Matrix, Kind>> crafted() {
    return {
        {Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}, Kind::Smooth},
        {Matrix{{0, 0, 0}, {0, 0, -2}, {0, 1, 0}}, Kind::Smooth},   // t (t^2 + 2)
        {Matrix{{0, 0, 0}, {0, 0, 2}, {0, 1, 0}}, Kind::Smooth},    // t (t^2 - 2)
        {Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}, Kind::A1},
        {Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 0}}, Kind::A1},
        {Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, Kind::A2},
        {Matrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}, Kind::ReducibleConicSmooth},
        {Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Kind::ReducibleConicSmooth},
        {Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}, Kind::ReducibleConicDegenerate},
        {Matrix{{1, 0, 0}, {2, 0, 0}, {3, 0, 0}}, Kind::ReducibleConicSmooth},
    };
}

// p(theta) reduced mod g.
UniPoly mod(const UniPoly& p, const UniPoly& g) { return divmod(p, g).second; }

// x ∥ A^T x at the points of an orbit, checked in Q[theta]/(g).
bool orbit_is_eigen(const Matrix& a, const SchemePoint& s) {
    const UniPoly& g = s.minimal_polynomial;
    std::array<UniPoly, 3> ax;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ax[i] = ax[i] + a(j, i) * s.coords[j];
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!mod(s.coords[i] * ax[j] - s.coords[j] * ax[i], g).is_zero()) return false;
    bool nonzero = false;
    for (auto& c : s.coords) nonzero |= !mod(c, g).is_zero();
    return nonzero;
}

}  // namespace

TEST_SUITE("delpezzo") {

TEST_CASE("normalize") {
    CHECK(normalize(Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}).a == Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    Matrix z{{-1, 0, 0}, {0, 0, 0}, {0, 0, 2}};
    CHECK(normalize(z).a == z);
    CHECK_THROWS_AS(normalize(Matrix{{0, 0, 2}, {1, 0, 0}, {0, 1, 0}}), std::domain_error);
    CHECK_THROWS_AS(normalize(Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("classify examples") {
    CHECK(classify({Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}}).kind == Kind::Smooth);
    CHECK(classify({Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}}).kind == Kind::A1);
    auto r = classify({Matrix{{1, 0, 0}, {2, 0, 0}, {3, 0, 0}}});
    CHECK(r.kind == Kind::ReducibleConicSmooth);
    // a_ij x_i y_j: (x0 + 2 x1 + 3 x2) y0
    CHECK(*r.line == Vector{1, 2, 3});
    CHECK(*r.point == Vector{1, 0, 0});
    CHECK_FALSE(r.boundary_flag);
    CHECK_THROWS_AS(classify({Matrix::identity(3)}), std::invalid_argument);
    CHECK_THROWS_AS(classify({Matrix(3, 3)}), std::invalid_argument);
}

TEST_CASE("crafted suite: kinds, witness, oracle") {
    for (auto& [a, kind] : crafted()) {
        CAPTURE(a.row(1));
        auto c = classify({a});
        CHECK(c.kind == kind);
        CHECK(c.boundary_flag == (kind == Kind::ReducibleConicDegenerate));
        if (kind == Kind::Smooth || kind == Kind::A1 || kind == Kind::A2) {
            CHECK(c.fiber_count == static_cast<int>(expected_pattern(kind).size()));
            auto s = blown_up_points({a});
            CHECK(s.pattern() == expected_pattern(kind));
            for (auto& pt : s.points) CHECK(orbit_is_eigen(a, pt));
        } else {
            CHECK_THROWS_AS(blown_up_points({a}), std::invalid_argument);
        }
    }
}

TEST_CASE("blown-up points of a diagonal matrix are the coordinate points") {
    auto s = blown_up_points({Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}});
    std::vector<Vector> pts;
    for (auto& p : s.points) {
        REQUIRE(p.rational_point);
        CHECK(p.multiplicity == 1);
        pts.push_back(*p.rational_point);
    }
    std::sort(pts.begin(), pts.end());
    CHECK(pts == std::vector<Vector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("A1 and A2 schemes: support and multiplicities") {
    auto s = blown_up_points({Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}});
    REQUIRE(s.points.size() == 2);
    for (auto& p : s.points) {
        REQUIRE(p.rational_point);
        // A^T e1 = 0, A^T e2 = e2: the double point is the kernel vector of A^T
        if (p.multiplicity == 2) CHECK(*p.rational_point == Vector{0, 1, 0});
        else CHECK(*p.rational_point == Vector{0, 0, 1});
    }
    auto t = blown_up_points({Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}});
    REQUIRE(t.points.size() == 1);
    CHECK(t.points[0].multiplicity == 3);
    CHECK(*t.points[0].rational_point == Vector{0, 0, 1});
}

TEST_CASE("random matrices: classification agrees with the point-scheme oracle") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-4, 4);
    int checked = 0;
    for (int t = 0; t < 60; ++t) {
        Matrix a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = d(rng);
        DelPezzoMatrix m;
        try {
            m = normalize(a);
        } catch (const std::domain_error&) {
            continue;
        }
        if (m.a.is_zero()) continue;
        auto c = classify(m);
        if (c.kind == Kind::ReducibleConicSmooth || c.kind == Kind::ReducibleConicDegenerate) continue;
        auto s = blown_up_points(m);
        CHECK(s.pattern() == expected_pattern(c.kind));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("classification invariant under conjugation and shifts") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> d(-20, 20);
    for (auto& [a, kind] : crafted()) {
        for (int t = 0; t < 5; ++t) {
            Matrix p = random_invertible(rng);
            Matrix b = p * a * inverse(p);
            CHECK(classify(normalize(b)).kind == kind);
            Matrix s = shift(a, make_rational(d(rng), 1 + rng() % 5));
            CHECK(classify(normalize(s)).kind == kind);
        }
    }
}

TEST_CASE("pic_restriction examples") {
    auto p = pic_restriction(SurfaceType::Smooth, 1, Side::Pi2);
    CHECK(p.image_h1 == std::vector<long>{2, -1, -1, -1});
    CHECK(p.image_h2 == std::vector<long>{1, 0, 0, 0});
    auto q = pic_restriction(SurfaceType::Smooth, 0, Side::Pi1);
    CHECK(q.basis == std::vector<std::string>{"C0", "f"});
    CHECK(q.image_h1 == std::vector<long>{0, 1});
    CHECK(q.image_h2 == std::vector<long>{1, 1});
    auto r = pic_restriction(SurfaceType::A1, 1, Side::Pi2);
    CHECK(r.image_h1 == std::vector<long>{2, -2, -1});
    CHECK(r.image_h2 == std::vector<long>{1, 0, 0});
    CHECK_THROWS_AS(pic_restriction(SurfaceType::Smooth, 2, Side::Pi1), std::invalid_argument);
    CHECK_THROWS_AS(pic_restriction(SurfaceType::Smooth, -1, Side::Pi2), std::invalid_argument);
}

TEST_CASE("pic_restriction is compatible with the Chow ring") {
    using chow::ChowClass;
    struct Case {
        SurfaceType type;
        long d;
        Side side;
    };
    std::vector<Case> cases;
    for (long d = 0; d <= 6; ++d) cases.push_back({SurfaceType::Smooth, d, Side::Pi2});
    cases.push_back({SurfaceType::Smooth, 0, Side::Pi1});
    cases.push_back({SurfaceType::Smooth, 1, Side::Pi1});
    for (auto t : {SurfaceType::A1, SurfaceType::A2})
        for (auto s : {Side::Pi1, Side::Pi2}) cases.push_back({t, 1, s});

    for (auto& c : cases) {
        auto p = pic_restriction(c.type, c.d, c.side);
        ChowClass surf = ChowClass::divisor(1, c.d);
        std::vector<Vector> img;
        for (auto* v : {&p.image_h1, &p.image_h2}) img.push_back(Vector(v->begin(), v->end()));
        std::array<ChowClass, 2> gens{ChowClass::H1(), ChowClass::H2()};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Rational on_s = dot(img[i], p.form * img[j]);
                CHECK(on_s == chow::degree(gens[i] * gens[j] * surf));
            }
        CHECK(p.form == p.form.transpose());
    }
}

}  // TEST_SUITE
