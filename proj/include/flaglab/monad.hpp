#pragma once

#include "flaglab/matrix.hpp"
#include "flaglab/rational.hpp"
#include "flaglab/subspace.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace flaglab::monad {

// A point of F: x in P2, y in the dual P2, x.y = 0.
struct FlagPoint {
    Vector x, y;
};

// Throws std::invalid_argument unless x, y are nonzero triples with x.y = 0.
void check_point(const FlagPoint& p);

// Distinct images under both projections.
bool non_aligned(const FlagPoint& p, const FlagPoint& q);

// x(s,t) = x_param (s,t)^T, y(s,t) = y_param (s,t)^T; both 3x2.
struct ConicParam {
    Matrix x_param, y_param;
};

// Throws std::invalid_argument unless x(s,t).y(s,t) vanishes identically and both
// parametrizations have rank 2.
void check_conic(const ConicParam& c);

// W has dimension 4k+2. Columns 0..k-1 are x-columns, k..2k-1 are y-columns; each
// is a (4k+2)x3 matrix M with entry r of the column equal to the linear form
// sum_j M(r,j) x_j (resp. y_j).
struct MonadData {
    int k = 0;
    Matrix J;
    std::vector<Matrix> x_columns;
    std::vector<Matrix> y_columns;

    std::size_t dim_w() const { return static_cast<std::size_t>(4 * k + 2); }
};

// [[0, I], [-I, 0]] of size n (n even).
Matrix standard_form(std::size_t n);

// Shape constraints; J skew and non-singular. Throws std::invalid_argument.
void check_shape(const MonadData& m);

// A(p), of size (4k+2) x 2k.
Matrix evaluate(const MonadData& m, const FlagPoint& p);

// A nonzero entry of A^T J A, computed in the graded ring.
struct FormWitness {
    std::size_t i = 0, j = 0;
    int a = 0, b = 0;
    std::string form;
};

std::optional<FormWitness> exact_check(const MonadData& m);

// w -> (w^T J a^m, w^T J b^n) on constant sections, a 6k x (4k+2) matrix.
Matrix section_map(const MonadData& m);

struct ValidationReport {
    bool exact_ok = false;
    std::optional<FormWitness> exact_witness;
    std::size_t samples = 0;
    std::size_t rank_failures = 0;
    std::optional<FlagPoint> rank_witness;
    std::size_t h0 = 0;             // via h0_twist(m, 0, 0)
    std::size_t section_rank = 0;   // rank of section_map
    std::size_t h1 = 0;             // 6k - section_rank

    bool ok() const { return exact_ok && rank_failures == 0 && h0 == 0; }
    std::vector<std::string> failures() const;
};

ValidationReport validate(const MonadData& m, std::size_t samples, std::uint64_t seed);

struct Fiber {
    Subspace u;      // column span of A(p)
    Subspace u_ann;  // its annihilator under J
};

// Throws std::domain_error if rank A(p) < 2k.
Fiber fiber(const MonadData& m, const FlagPoint& p);

// The conic x = s x_p + t x_q, y = mu s y_p + t y_q through p and q.
// Throws std::invalid_argument for aligned points, std::domain_error for a singular conic.
ConicParam conic_through(const FlagPoint& p, const FlagPoint& q);

// dim(U_p^ann cap U_q). Throws std::invalid_argument for aligned points.
std::size_t splitting_type(const MonadData& m, const FlagPoint& p, const FlagPoint& q);

// rank A(p)^T J A(q).
std::size_t pairing_rank(const MonadData& m, const FlagPoint& p, const FlagPoint& q);

// s with E|_C = O(-s) + O(s), from graded kernels of the monad restricted to C.
std::size_t splitting_oracle(const MonadData& m, const ConicParam& c);

// The two maps of sections of the display twisted by (a,b):
// lower: H1 x B(a-1,b) + H2 x B(a,b-1) -> W x B(a,b); upper: W x B(a,b) -> H1* x B(a+1,b) + H2* x B(a,b+1).
struct TwistMaps {
    Matrix lower, upper;
};

TwistMaps twist_maps(const MonadData& m, int a, int b);

// h0(E(a h1 + b h2)) for a, b >= 0; std::invalid_argument otherwise.
std::size_t h0_twist(const MonadData& m, int a, int b);

// Integer coordinates in [-range, range]; never returns a degenerate point.
FlagPoint random_flag_point(std::mt19937_64& g, long range = 50);

// Throws std::runtime_error with failure counts after max_attempts.
MonadData search(int k, std::uint64_t seed, std::size_t max_attempts);

struct ScanRow {
    std::size_t index = 0;
    FlagPoint p, q;
    std::size_t s = 0;
};

struct ScanResult {
    std::vector<std::size_t> histogram;  // keys 0..2k
    std::vector<ScanRow> rows;

    std::size_t mode() const;
};

ScanResult jump_scan(const MonadData& m, std::size_t n_conics, std::uint64_t seed);

}  // namespace flaglab::monad
