// One [PASS]/[FAIL] line per acceptance criterion. Exit status is the number of failures.

#include "flaglab/chow.hpp"
#include "flaglab/curves.hpp"
#include "flaglab/delpezzo.hpp"
#include "flaglab/graded.hpp"
#include "flaglab/moduli.hpp"
#include "flaglab/monad.hpp"
#include "flaglab/rng.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace flaglab;

namespace {

// Time limits in seconds.
constexpr double kAC1Limit = 1, kAC2Limit = 1, kAC4Limit = 10, kAC6SearchLimit = 60, kAC7Limit = 120, kAC9Limit = 5;
// AC7: minimum share of s = 0 over the k = 1 scan (artifact tolerance).
constexpr double kGenericShare = 0.90;
// AC9: lower bound on |h(t)| over the grid.
constexpr double kPathFloor = 0.01;

constexpr std::size_t kRandomDelPezzo = 200, kConjugations = 20, kShifts = 20;
constexpr std::size_t kPairs = 200, kScanConics = 500, kValidateSamples = 2000;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        if (pass) detail << " FAILED: ";
        else detail << "; ";
        detail << why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(const char* id, const char* name, const std::function<void(Outcome&)>& body, double limit = 0)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    if (limit > 0 && dt >= limit) {
        std::ostringstream w;
        w << "took " << dt << " s, limit " << limit << " s";
        o.fail(w.str());
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, " [%.2f s]", dt);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << " " << name << ":" << o.detail.str() << timing << std::endl;
    failures += !o.pass;
}

// Number of partitions of n, by the standard coin DP.
long partitions(long n)
{
    std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (long part = 1; part <= n; ++part)
        for (long s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p[static_cast<std::size_t>(n)];
}

Matrix random_matrix(std::mt19937_64& g, long range)
{
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = uniform_int(g, -range, range);
    return m;
}

Matrix random_invertible(std::mt19937_64& g)
{
    for (;;) {
        Matrix p = random_matrix(g, 3);
        if (determinant(p) != 0) return p;
    }
}

Matrix shifted(Matrix a, const Rational& l)
{
    for (std::size_t i = 0; i < 3; ++i) a(i, i) += l;
    return a;
}

// Every Jordan type, with random eigenvalues, conjugated by a random matrix; or a
// plain random matrix with a dependent row.
Matrix random_case(std::mt19937_64& g, std::size_t i)
{
    const long e1 = uniform_int(g, -5, 5), e2 = uniform_int(g, -5, 5), e3 = uniform_int(g, -5, 5);
    Matrix j;
    switch (i % 8) {
        case 0: j = Matrix{{e1, 0, 0}, {0, e2, 0}, {0, 0, e3}}; break;
        case 1: j = Matrix{{e1, 1, 0}, {0, e1, 0}, {0, 0, e2}}; break;
        case 2: j = Matrix{{e1, 1, 0}, {0, e1, 1}, {0, 0, e1}}; break;
        case 3: j = Matrix{{e1, 0, 0}, {0, e1, 0}, {0, 0, e2 == e1 ? e1 + 1 : e2}}; break;
        case 4: j = Matrix{{e1, 1, 0}, {0, e1, 0}, {0, 0, e1}}; break;
        case 5: j = Matrix{{e1, 0, 0}, {0, 0, e2 == 0 ? 1 : e2}, {0, 1, 0}}; break;
        default: {
            Matrix a = random_matrix(g, 4);
            for (std::size_t c = 0; c < 3; ++c) a(2, c) = e1 * a(0, c) + e2 * a(1, c);
            if (a.is_zero()) a(0, 1) = 1;
            return a;
        }
    }
    const Matrix p = random_invertible(g);
    return p * j * inverse(p);
}

bool is_reducible(delpezzo::Kind k)
{
    return k == delpezzo::Kind::ReducibleConicSmooth || k == delpezzo::Kind::ReducibleConicDegenerate;
}

}  // namespace

int main()
{
    std::cout << "flaglab acceptance (threads: " << worker_count() << ")" << std::endl;

    criterion("AC1", "basis counts", [](Outcome& o) {
        int ok = 0;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b) {
                const std::size_t n = graded::basis(a, b)->size();
                if (n == static_cast<std::size_t>((a + 1) * (b + 1) * (a + b + 2) / 2)) ++ok;
                else o.fail("(" + std::to_string(a) + "," + std::to_string(b) + ") has " + std::to_string(n));
            }
        o.detail << " " << ok << "/49 bidegrees in [0,6]^2 match (a+1)(b+1)(a+b+2)/2";
    }, kAC1Limit);

    criterion("AC2", "Riemann-Roch", [](Outcome& o) {
        int lines = 0, inst = 0;
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b) {
                const Rational alt(graded::line_bundle_cohomology(a, b).euler());
                const Rational rr = chow::euler_char(chow::ChernData::line_bundle(a, b));
                if (alt == rr && rr == chow::line_bundle_rr(a, b)) ++lines;
                else o.fail("line bundle (" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
        for (long k = 1; k <= 6; ++k)
            for (long a = -3; a <= 3; ++a)
                for (long b = -3; b <= 3; ++b) {
                    const long poly = a * a * b + a * b * b + a * a + b * b + 4 * a * b + 3 * a + 3 * b + 2 - k * (2 + a + b);
                    if (chow::euler_char(chow::twist_chern(chow::ChernData::instanton(k), a, b)) == poly) ++inst;
                    else o.fail("instanton k=" + std::to_string(k));
                }
        o.detail << " " << lines << "/169 line bundles, " << inst << "/294 instanton twists";
    }, kAC2Limit);

    criterion("AC3", "resolution Euler characteristics", [](Outcome& o) {
        using graded::Neighborhood;
        auto chi = [](Neighborhood n, long p = 1) { return graded::complex_euler(graded::neighborhood_resolution(n, p)); };
        int ok = 0, total = 0;
        auto expect = [&](const std::string& what, const Rational& got, long want) {
            ++total;
            if (got == want) ++ok;
            else o.fail(what + " = " + to_string(got) + ", expected " + std::to_string(want));
        };
        expect("chi(O_C)", chi(Neighborhood::Conic), 1);
        expect("chi(O_L)", chi(Neighborhood::Line), 1);
        for (long a = 1; a <= 5; ++a) expect("chi(O_C(1)) a=" + std::to_string(a), chi(Neighborhood::FirstNeighborhood, a), 3 - 2 * a);
        expect("chi(O_L(1))", chi(Neighborhood::LineFirstNeighborhood), 3);
        for (long m = 1; m <= 6; ++m) expect("thick m=" + std::to_string(m), chi(Neighborhood::LineThick, m), m);
        o.detail << " " << ok << "/" << total << " exact";
    });

    criterion("AC4", "del Pezzo classifier", [](Outcome& o) {
        using delpezzo::Kind;
        std::vector<Matrix> cases = {
            Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}, Matrix{{0, 0, 0}, {0, 0, -2}, {0, 1, 0}},
            Matrix{{0, 0, 0}, {0, 0, 2}, {0, 1, 0}}, Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 1}},
            Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 0}}, Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
            Matrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}, Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}},
            Matrix{{1, 0, 0}, {2, 0, 0}, {3, 0, 0}},
        };
        const std::size_t crafted = cases.size();
        auto g = substream(2024, 0);
        for (std::size_t i = 0; i < kRandomDelPezzo; ++i) cases.push_back(random_case(g, i));

        std::vector<std::string> errors(cases.size());
        std::vector<int> status(cases.size(), 0);  // 0 skipped, 1 checked with oracle, 2 checked without
        std::atomic<std::size_t> kinds[5] = {};
        parallel_for(cases.size(), [&](std::size_t c) {
            auto rg = substream(77, c);
            delpezzo::DelPezzoMatrix m;
            try {
                m = delpezzo::normalize(cases[c]);
            } catch (const std::domain_error&) {
                return;  // no rational eigenvalue: not a case the classifier handles
            }
            const auto cls = delpezzo::classify(m);
            ++kinds[static_cast<int>(cls.kind)];
            if (!is_reducible(cls.kind)) {
                if (delpezzo::blown_up_points(m).pattern() != delpezzo::expected_pattern(cls.kind)) {
                    errors[c] = "oracle disagrees on case " + std::to_string(c);
                    return;
                }
                status[c] = 1;
            } else {
                status[c] = 2;
            }
            for (std::size_t t = 0; t < kConjugations; ++t) {
                const Matrix p = random_invertible(rg);
                const auto conj = delpezzo::classify(delpezzo::normalize(inverse(p) * m.a * p));
                if (conj.kind != cls.kind || conj.boundary_flag != cls.boundary_flag) {
                    errors[c] = "conjugation changes case " + std::to_string(c);
                    return;
                }
            }
            for (std::size_t t = 0; t < kShifts; ++t) {
                const Rational l = make_rational(uniform_int(rg, -20, 20), uniform_int(rg, 1, 5));
                if (delpezzo::classify(delpezzo::normalize(shifted(m.a, l))).kind != cls.kind) {
                    errors[c] = "shift changes case " + std::to_string(c);
                    return;
                }
            }
        });
        std::size_t oracle = 0, applicable = 0;
        for (std::size_t c = 0; c < cases.size(); ++c) {
            if (!errors[c].empty()) o.fail(errors[c]);
            if (c < crafted && status[c] == 0 && errors[c].empty()) o.fail("crafted case " + std::to_string(c) + " skipped");
            oracle += status[c] == 1;
            applicable += status[c] != 0;
        }
        o.detail << " " << applicable << "/" << cases.size() << " applicable (" << crafted << " crafted), " << oracle
                 << " oracle-checked; kinds S/A1/A2/RS/RD = " << kinds[0] << "/" << kinds[1] << "/" << kinds[2] << "/"
                 << kinds[3] << "/" << kinds[4] << "; " << kConjugations << " conjugations + " << kShifts << " shifts each";
        for (int k = 0; k < 5; ++k)
            if (kinds[k] == 0) o.fail("kind " + delpezzo::kind_name(static_cast<Kind>(k)) + " never produced");
    }, kAC4Limit);

    criterion("AC5", "curve combinatorics", [](Outcome& o) {
        std::size_t configs = 0;
        for (long k = 1; k <= 12; ++k) {
            const auto all = curves::enumerate_multi_indices(k);
            if (static_cast<long>(all.size()) != partitions(k))
                o.fail("k=" + std::to_string(k) + ": " + std::to_string(all.size()) + " != p(k)");
            for (const auto& m : all)
                for (const auto& cfg : {curves::reduced_configuration(m), curves::merged_configuration(m)}) {
                    ++configs;
                    const auto n = curves::normal_bundle_cohomology(cfg);
                    if (curves::genus(cfg) != -k || n.h0 != 4 * k + 2 || n.h1 != 0)
                        o.fail("configuration " + m.to_string());
                }
            if (curves::hilbert_component_lower_bound(k) != k) o.fail("lower bound k=" + std::to_string(k));
        }
        o.detail << " p(k) for k<=12, " << configs << " configurations with genus -k, h0(N)=4k+2, h1(N)=0";
    });

    std::vector<monad::MonadData> monads;
    criterion("AC6", "monad search", [&](Outcome& o) {
        double worst = 0;
        for (int k : {1, 2})
            for (std::uint64_t seed = 0; seed <= 4; ++seed) {
                const auto t0 = std::chrono::steady_clock::now();
                monad::MonadData m = monad::search(k, seed, 500);
                const double dt = seconds_since(t0);
                worst = std::max(worst, dt);
                const std::string tag = "k=" + std::to_string(k) + " seed=" + std::to_string(seed);
                if (dt >= kAC6SearchLimit) o.fail(tag + " search took " + std::to_string(dt) + " s");
                const auto r = monad::validate(m, kValidateSamples, seed + 100);
                if (!r.ok()) {
                    for (const auto& f : r.failures()) o.fail(tag + ": " + f);
                }
                if (r.h1 != static_cast<std::size_t>(2 * k - 2)) o.fail(tag + ": h1 = " + std::to_string(r.h1));
                if (k == 1 && (monad::h0_twist(m, 1, 0) != 3 || monad::h0_twist(m, 0, 1) != 3))
                    o.fail(tag + ": h0(E(h_i)) != 3");
                monads.push_back(std::move(m));
            }
        o.detail << " " << monads.size() << " monads (k=1,2; seeds 0-4) with exact A^T J A = 0, rank 2k at "
                 << kValidateSamples << " points, h0 = 0, h1 = 2k-2; h0(E(h_i)) = 3 for k=1; slowest search "
                 << worst << " s";
    });

    criterion("AC7", "splitting-type coherence", [&](Outcome& o) {
        if (monads.empty()) {
            o.fail("no monads from AC6");
            return;
        }
        std::size_t agree = 0, total = 0, worst_share_num = kScanConics, k1_scans = 0;
        for (std::size_t mi = 0; mi < monads.size(); ++mi) {
            const auto& m = monads[mi];
            const std::size_t twok = 2 * static_cast<std::size_t>(m.k);
            std::vector<std::string> errors(kPairs);
            parallel_for(kPairs, [&](std::size_t i) {
                auto g = substream(500 + mi, i);
                monad::FlagPoint p, q;
                do {
                    p = monad::random_flag_point(g);
                    q = monad::random_flag_point(g);
                } while (!monad::non_aligned(p, q) || dot(p.x, q.y) == 0 || dot(q.x, p.y) == 0);
                const std::size_t s = monad::splitting_type(m, p, q);
                const std::size_t rk = monad::pairing_rank(m, p, q);
                const std::size_t oracle = monad::splitting_oracle(m, monad::conic_through(p, q));
                const std::size_t back = monad::splitting_type(m, q, p);
                if (s > twok || s != twok - rk || s != oracle || s != back)
                    errors[i] = "monad " + std::to_string(mi) + " pair " + std::to_string(i) + ": s=" + std::to_string(s) +
                                " 2k-rank=" + std::to_string(twok - rk) + " oracle=" + std::to_string(oracle) +
                                " swapped=" + std::to_string(back);
            });
            for (const auto& e : errors) {
                ++total;
                if (e.empty()) ++agree;
                else o.fail(e);
            }
            if (m.k == 1) {
                const auto scan = monad::jump_scan(m, kScanConics, 900 + mi);
                ++k1_scans;
                const double share = static_cast<double>(scan.histogram[0]) / kScanConics;
                worst_share_num = std::min(worst_share_num, scan.histogram[0]);
                if (scan.mode() != 0 || share < kGenericShare)
                    o.fail("monad " + std::to_string(mi) + ": mode " + std::to_string(scan.mode()) + ", share of s=0 " +
                           std::to_string(share));
            }
        }
        o.detail << " " << agree << "/" << total << " pairs agree (type = oracle = 2k - rank, symmetric, <= 2k); "
                 << k1_scans << " k=1 scans of " << kScanConics << " conics, min share of s=0 "
                 << static_cast<double>(worst_share_num) / kScanConics << " (>= " << kGenericShare << ")";
    }, kAC7Limit);

    criterion("AC8", "moduli tables", [](Outcome& o) {
        for (long k = 2; k <= 50; ++k) {
            const auto t = moduli::dimension_table(k);
            if (t.ext1 != 8 * k - 3 || *t.dim_MI_s_prime != 7 + 2 * k || *t.dim_MI_s_doubleprime != 4 * k + 4 ||
                *t.dim_MI_i != 5 * k + 2)
                o.fail("k=" + std::to_string(k));
        }
        const auto t2 = moduli::dimension_table(2);
        if (t2.ext1 != 13 || *t2.dim_MI_s_prime != 11 || *t2.dim_MI_s_doubleprime != 12 || *t2.dim_MI_i != 12)
            o.fail("k=2 row");
        for (long k = 1; k <= 50; ++k)
            if (moduli::elliptic_family_dimension(k) != 4 * k + 12 || 4 * k + 12 != 2 * (2 * k + 6))
                o.fail("elliptic k=" + std::to_string(k));
        o.detail << " k in [2,50] reproduced from decompositions; k=2 row (" << t2.ext1 << "," << *t2.dim_MI_s_prime << ","
                 << *t2.dim_MI_s_doubleprime << "," << *t2.dim_MI_i << "); elliptic family 4k+12";
    });

    criterion("AC9", "path witness", [](Outcome& o) {
        const auto w = moduli::path_witness(10000);
        if (!(w.min_abs_lower > kPathFloor)) o.fail("|h| lower bound " + std::to_string(w.min_abs_lower));
        if (!w.endpoints_exact) o.fail("endpoint values");
        if (!w.imaginary_nonzero) o.fail("Im h contains 0 inside (0,1)");
        if (!w.endpoint_swap_verified) o.fail("endpoint matrices");
        o.detail << " 10^4 grid points, rigorous min |h| >= " << w.min_abs_lower << " (> " << kPathFloor
                 << "), h(0) = 1, h(1) = -1 exact, Im h != 0 on (0,1)";
    }, kAC9Limit);

    std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << failures << " of 9 criteria failed)" << std::endl;
    return failures;
}
