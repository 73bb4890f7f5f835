#include <doctest.h>

#include "flaglab/monad.hpp"
#include "flaglab/monad_io.hpp"
#include "flaglab/rng.hpp"

#include <cstdlib>
#include <map>

using namespace flaglab;
using namespace flaglab::monad;

namespace {

const MonadData& cached(int k, std::uint64_t seed)
{
    static std::map<std::pair<int, std::uint64_t>, MonadData> cache;
    auto it = cache.find({k, seed});
    if (it == cache.end()) it = cache.emplace(std::pair{k, seed}, search(k, seed, 500)).first;
    return it->second;
}

Vector cross3(const Vector& a, const Vector& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// k = 1: det A(p)^T J A(q) is linear in q.y once p and q.x are fixed, so a jumping
// conic through p has a rational second point.
std::optional<std::pair<FlagPoint, FlagPoint>> jumping_pair(const MonadData& m, std::mt19937_64& g)
{
    const FlagPoint p = random_flag_point(g, 9);
    const Vector qx = random_flag_point(g, 9).x;
    const Vector ap = m.x_columns[0] * p.x, bp = m.y_columns[0] * p.y, aq = m.x_columns[0] * qx;
    const Matrix jn = m.J * m.y_columns[0];
    const Rational c11 = dot(ap, m.J * aq), c21 = dot(bp, m.J * aq);
    Vector ell(3);
    for (std::size_t i = 0; i < 3; ++i) ell[i] = c11 * dot(bp, jn.col(i)) - c21 * dot(ap, jn.col(i));
    const Vector qy = cross3(qx, ell);
    if (is_zero(qy)) return std::nullopt;
    const FlagPoint q{qx, qy};
    if (!non_aligned(p, q) || dot(p.x, q.y) == 0 || dot(q.x, p.y) == 0) return std::nullopt;
    return std::pair{p, q};
}

}  // namespace

TEST_SUITE("monad") {

TEST_CASE("standard form is skew and non-degenerate")
{
    for (std::size_t n : {6u, 10u, 14u}) {
        const Matrix j = standard_form(n);
        CHECK(j.transpose() == Rational(-1) * j);
        CHECK(determinant(j) == 1);
    }
    CHECK_THROWS_AS(standard_form(5), std::invalid_argument);
}

TEST_CASE("flag points and rng")
{
    CHECK_NOTHROW(check_point({{1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS_AS(check_point({{1, 0, 0}, {1, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(check_point({{0, 0, 0}, {0, 1, 0}}), std::invalid_argument);
    auto g = substream(7, 3);
    for (int i = 0; i < 200; ++i) CHECK_NOTHROW(check_point(random_flag_point(g)));
    auto a = substream(1, 2), b = substream(1, 2), c = substream(2, 1);
    CHECK(a() == b());
    CHECK(substream(1, 2)() != c());
    auto u = substream(0, 0);
    for (int i = 0; i < 1000; ++i) {
        const long v = uniform_int(u, -3, 3);
        CHECK((v >= -3 && v <= 3));
    }
}

TEST_CASE("conic through two points")
{
    const FlagPoint p{{1, 0, 0}, {0, 1, 0}}, q{{0, 1, 0}, {1, 0, 1}};
    const ConicParam c = conic_through(p, q);
    CHECK(c.x_param == Matrix{{1, 0}, {0, 1}, {0, 0}});
    CHECK(c.y_param == Matrix{{0, 1}, {-1, 0}, {0, 1}});
    CHECK_NOTHROW(check_conic(c));
    CHECK_THROWS_AS(conic_through(p, p), std::invalid_argument);
    CHECK_THROWS_AS(conic_through(p, {{1, 0, 0}, {0, 0, 1}}), std::invalid_argument);
    // x_p . y_q = 0: the unique conic through them is singular.
    CHECK_THROWS_AS(conic_through(p, {{0, 0, 1}, {0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(conic_through(p, {{0, 1, 1}, {0, 1, -1}}), std::domain_error);

    auto g = substream(11, 0);
    for (int i = 0; i < 100; ++i) {
        const FlagPoint a = random_flag_point(g), b = random_flag_point(g);
        if (!non_aligned(a, b) || dot(a.x, b.y) == 0 || dot(b.x, a.y) == 0) continue;
        const ConicParam cc = conic_through(a, b);
        CHECK_NOTHROW(check_conic(cc));
        CHECK(cc.x_param.col(0) == a.x);
        CHECK(cc.x_param.col(1) == b.x);
        CHECK(is_zero(cross3(cc.y_param.col(0), a.y)));
        CHECK(cc.y_param.col(1) == b.y);
    }
}

TEST_CASE("searched monads validate")
{
    for (int k : {1, 2}) {
        const MonadData& m = cached(k, 0);
        const ValidationReport r = validate(m, 200, 1);
        CHECK(r.ok());
        CHECK(r.failures().empty());
        CHECK(r.h0 == 0);
        CHECK(r.h1 == static_cast<std::size_t>(2 * k - 2));
        CHECK(r.section_rank == m.dim_w());
    }
    const MonadData& m1 = cached(1, 0);
    CHECK(h0_twist(m1, 1, 0) == 3);
    CHECK(h0_twist(m1, 0, 1) == 3);
    CHECK_THROWS_AS(h0_twist(m1, -1, 0), std::invalid_argument);
}

TEST_CASE("different seeds give different monads")
{
    const MonadData& a = cached(1, 0);
    const MonadData& b = cached(1, 1);
    CHECK(validate(b, 100, 2).ok());
    CHECK((a.x_columns != b.x_columns || a.y_columns != b.y_columns));
}

TEST_CASE("h0 three ways")
{
    for (int k : {1, 2}) {
        const MonadData& m = cached(k, 0);
        const std::size_t from_sections = m.dim_w() - rank(section_map(m));
        CHECK(h0_twist(m, 0, 0) == from_sections);
        CHECK(6 * static_cast<std::size_t>(k) - rank(section_map(m)) == static_cast<std::size_t>(2 * k - 2));
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2 - a; ++b) {
                const TwistMaps t = twist_maps(m, a, b);
                if (t.lower.cols()) CHECK((t.upper * t.lower).is_zero());
            }
    }
}

TEST_CASE("h0 of twists is symmetric under the side swap for k = 1")
{
    const MonadData& m = cached(1, 0);
    CHECK(h0_twist(m, 2, 0) == h0_twist(m, 0, 2));
}

TEST_CASE("perturbation breaks the exact check")
{
    MonadData m = cached(1, 0);
    CHECK_FALSE(exact_check(m).has_value());
    m.y_columns[0](0, 0) += 1;
    const auto w = exact_check(m);
    REQUIRE(w.has_value());
    CHECK(w->a == 1);
    CHECK(w->b == 1);
    CHECK_FALSE(validate(m, 10, 0).ok());

    MonadData m2 = cached(2, 0);
    m2.x_columns[1](3, 2) += 1;
    const auto w2 = exact_check(m2);
    REQUIRE(w2.has_value());
    CHECK(w2->a + w2->b == 2);
}

TEST_CASE("zero columns fail injectivity everywhere")
{
    MonadData m;
    m.k = 1;
    m.J = standard_form(6);
    m.x_columns = {Matrix(6, 3)};
    m.y_columns = {Matrix(6, 3)};
    const ValidationReport r = validate(m, 50, 0);
    CHECK(r.exact_ok);
    CHECK(r.rank_failures == 50);
    CHECK(r.rank_witness.has_value());
    CHECK(r.h0 == 6);
    CHECK_FALSE(r.ok());
    CHECK_THROWS_AS(fiber(m, {{1, 0, 0}, {0, 1, 0}}), std::domain_error);
}

TEST_CASE("shape errors")
{
    MonadData m = cached(1, 0);
    m.J(0, 3) = 2;
    CHECK_THROWS_AS(validate(m, 1, 0), std::invalid_argument);
    m = cached(1, 0);
    m.J = Matrix(6, 6);
    CHECK_THROWS_AS(validate(m, 1, 0), std::invalid_argument);
    m = cached(1, 0);
    m.y_columns.clear();
    CHECK_THROWS_AS(validate(m, 1, 0), std::invalid_argument);
}

TEST_CASE("fibers are isotropic of corank two")
{
    for (int k : {1, 2}) {
        const MonadData& m = cached(k, 0);
        auto g = substream(5, static_cast<std::uint64_t>(k));
        for (int i = 0; i < 30; ++i) {
            const Fiber f = fiber(m, random_flag_point(g));
            CHECK(f.u.dim() == static_cast<std::size_t>(2 * k));
            CHECK(f.u_ann.dim() == static_cast<std::size_t>(2 * k + 2));
            CHECK(f.u_ann.contains(f.u));
        }
    }
}

TEST_CASE("splitting type: two formulas, oracle, symmetry")
{
    for (int k : {1, 2}) {
        const MonadData& m = cached(k, 0);
        auto g = substream(9, static_cast<std::uint64_t>(k));
        int checked = 0;
        while (checked < 40) {
            const FlagPoint p = random_flag_point(g), q = random_flag_point(g);
            if (!non_aligned(p, q) || dot(p.x, q.y) == 0 || dot(q.x, p.y) == 0) continue;
            ++checked;
            const std::size_t s = splitting_type(m, p, q);
            CHECK(s <= static_cast<std::size_t>(2 * k));
            CHECK(s == 2 * static_cast<std::size_t>(k) - pairing_rank(m, p, q));
            CHECK(s == splitting_type(m, q, p));
            CHECK(s == splitting_oracle(m, conic_through(p, q)));
        }
    }
    const MonadData& m = cached(1, 0);
    CHECK_THROWS_AS(splitting_type(m, {{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}, {0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("jumping conics are seen by the oracle")
{
    const MonadData& m = cached(1, 0);
    auto g = substream(13, 0);
    int found = 0;
    for (int i = 0; i < 200 && found < 10; ++i) {
        const auto pq = jumping_pair(m, g);
        if (!pq) continue;
        const auto& [p, q] = *pq;
        const std::size_t s = splitting_type(m, p, q);
        CHECK(s >= 1);
        CHECK(pairing_rank(m, p, q) < 2);
        CHECK(splitting_oracle(m, conic_through(p, q)) == s);
        ++found;
    }
    CHECK(found == 10);
}

TEST_CASE("jump scan")
{
    const MonadData& m = cached(1, 0);
    const ScanResult a = jump_scan(m, 100, 4);
    std::size_t total = 0;
    for (auto c : a.histogram) total += c;
    CHECK(total == 100);
    CHECK(a.histogram.size() == 3);
    CHECK(a.mode() == 0);
    CHECK(a.histogram[0] >= 90);

    setenv("FLAGLAB_THREADS", "1", 1);
    const ScanResult b = jump_scan(m, 100, 4);
    unsetenv("FLAGLAB_THREADS");
    CHECK(scan_csv(a) == scan_csv(b));
    CHECK(scan_csv(a) != scan_csv(jump_scan(m, 100, 5)));
}

TEST_CASE("json round trip")
{
    for (int k : {1, 2}) {
        const MonadData& m = cached(k, 0);
        const MonadData back = monad_from_json(nlohmann::json::parse(to_json(m).dump()));
        CHECK(back.k == m.k);
        CHECK(back.J == m.J);
        CHECK(back.x_columns == m.x_columns);
        CHECK(back.y_columns == m.y_columns);
    }
    CHECK_THROWS_AS(monad_from_json(nlohmann::json::parse(R"({"charge": 1})")), std::invalid_argument);
    CHECK_THROWS_AS(monad_from_json(nlohmann::json::parse(R"({"charge": 0, "x_columns": [], "y_columns": []})")),
                    std::invalid_argument);
    auto j = to_json(cached(1, 0));
    j["J"] = "other";
    CHECK_THROWS_AS(monad_from_json(j), std::invalid_argument);
}

}
