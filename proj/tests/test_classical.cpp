// Matrix models: the Springer-type evaluation for projective space, the
// birational modification for one-point blow-ups, and membership in the
// determinantal models, cross-checked on sampled moment-fiber points.

#include "symtoric/classical.hpp"
#include "symtoric/fan_library.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <random>
#include <vector>

using namespace symtoric;

namespace {

std::vector<Rat> random_vector(std::mt19937& rng, std::size_t len) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Rat> v(len);
    for (auto& e : v) e = Rat(d(rng));
    return v;
}

// A random point of the incidence variety: project y off x.
std::pair<std::vector<Rat>, std::vector<Rat>> incidence_point(std::mt19937& rng, std::size_t n) {
    std::vector<Rat> x;
    Rat xx(0);
    while (xx == 0) {
        x = random_vector(rng, n + 1);
        xx = 0;
        for (const Rat& e : x) xx += e * e;
    }
    std::vector<Rat> y = random_vector(rng, n + 1);
    Rat xy(0);
    for (std::size_t i = 0; i <= n; ++i) xy += x[i] * y[i];
    for (std::size_t i = 0; i <= n; ++i) y[i] -= xy / xx * x[i];
    return {x, y};
}

// A random solution of M w = 0 via the reduced row echelon form: free
// coordinates get random nonzero values, pivot coordinates are solved for.
std::vector<Rat> kernel_sample(RatMatrix m, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(1, 5);
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Rat> w(m.cols(), Rat(0));
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) w[c] = Rat(d(rng) * (rng() % 2 ? 1 : -1));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Rat acc(0);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!is_pivot[c]) acc += m(i, c) * w[c];
        w[pivots[i]] = -acc;
    }
    return w;
}

// The moment constraints on the fiber coordinates over a fixed base point:
// one row per class-group coordinate, entries A_{j,rho} x_rho.
RatMatrix moment_constraints(const ExactSequenceData& esd, const std::vector<Rat>& x) {
    RatMatrix m(esd.pic_rank(), esd.ray_count());
    for (std::size_t j = 0; j < esd.pic_rank(); ++j)
        for (std::size_t r = 0; r < esd.ray_count(); ++r) m(j, r) = Rat(esd.a(j, r)) * x[r];
    return m;
}

}  // namespace

TEST_CASE("springer evaluation: rank one traceless matrices from incidence points") {
    std::mt19937 rng(4242);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            auto [x, y] = incidence_point(rng, n);
            RatMatrix z = springer_eval_pn(n, x, y);
            REQUIRE(trace(z) == 0);
            REQUIRE(rank_at_most_one(z));
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; j <= n; ++j) REQUIRE(z(i, j) == x[i] * y[j]);
        }
    }
}

TEST_CASE("springer evaluation rejects bad input") {
    std::vector<Rat> e0 = {Rat(1), Rat(0)};
    REQUIRE_THROWS_AS(springer_eval_pn(1, e0, e0), precondition_error);  // <x,y> = 1
    REQUIRE_THROWS_AS(springer_eval_pn(2, e0, e0), input_error);         // wrong length
}

TEST_CASE("rank and trace helpers") {
    RatMatrix two(2, 2);
    two(0, 0) = 1;
    two(1, 1) = -1;
    REQUIRE_FALSE(rank_at_most_one(two));
    REQUIRE(trace(two) == 0);
    RatMatrix zero(3, 3);
    REQUIRE(rank_at_most_one(zero));
}

TEST_CASE("blow-up modification: formula, membership, and preconditions") {
    std::mt19937 rng(99);
    for (std::size_t n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            auto [x, y] = incidence_point(rng, n);
            RatMatrix z = springer_eval_pn(n, x, y);
            RatMatrix out = nu_eval_blowup(n, z);
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; j <= n; ++j) {
                    if (j == n && i < n) {
                        REQUIRE(out(i, j) == -z(n, n) * z(i, n));
                    } else {
                        REQUIRE(out(i, j) == z(i, j));
                    }
                }
            // the modified point lies on the one-point blow-up model
            REQUIRE(determinantal_membership(n, n, out));
        }
    }

    RatMatrix traceful(3, 3);
    traceful(0, 0) = 1;
    REQUIRE_THROWS_AS(nu_eval_blowup(2, traceful), precondition_error);
    RatMatrix rank2(3, 3);
    rank2(0, 0) = 1;
    rank2(1, 1) = -1;
    REQUIRE_THROWS_AS(nu_eval_blowup(2, rank2), precondition_error);
    REQUIRE_THROWS_AS(nu_eval_blowup(3, rank2), input_error);
}

TEST_CASE("determinantal membership: positives from sampled moment fibers") {
    struct Case {
        std::size_t n, k;
        const char* fan;
    };
    for (const Case& c : {Case{2, 2, "bl1p2"}, Case{3, 3, "bl1p3"}, Case{3, 2, "bl2p3"}}) {
        INFO("n = " << c.n << ", k = " << c.k);
        ExactSequenceData esd = build_exact_sequence(builtin_fan(c.fan));
        std::mt19937 rng(1000 + static_cast<unsigned>(c.n * 10 + c.k));
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Rat> x = random_vector(rng, esd.ray_count());
            std::vector<Rat> w = kernel_sample(moment_constraints(esd, x), rng);
            RatMatrix z = blowup_model_matrix(c.n, c.k, x, w);
            REQUIRE(trace(z) == 0);
            REQUIRE(determinantal_membership(c.n, c.k, z));
        }
    }
}

TEST_CASE("determinantal membership: negatives and input checks") {
    // nonzero trace fails
    RatMatrix diag(3, 3);
    diag(0, 0) = 1;
    REQUIRE_FALSE(determinantal_membership(2, 3, diag));
    // traceless rank two fails for pure rank membership (k = n+1)
    RatMatrix rank2(3, 3);
    rank2(0, 1) = 1;
    rank2(1, 0) = 1;
    rank2(0, 0) = 1;
    rank2(1, 1) = -1;
    REQUIRE_FALSE(determinantal_membership(2, 3, rank2));
    // the springer image always passes the pure rank test
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto [x, y] = incidence_point(rng, 3);
        REQUIRE(determinantal_membership(3, 4, springer_eval_pn(3, x, y)));
    }
    // a point passing for k = n need not come from the unmodified cone:
    // the diagonal substitution changes the equations
    RatMatrix modified(2, 2);
    modified(0, 0) = Rat(4);
    modified(1, 1) = Rat(-4);
    modified(0, 1) = Rat(1);
    modified(1, 0) = Rat(-64);
    // trace 0; with m(1,1) = -16 the minor is 4*(-16) - 1*(-64) = 0
    REQUIRE(determinantal_membership(1, 1, modified));
    REQUIRE_FALSE(determinantal_membership(1, 2, modified));

    REQUIRE_THROWS_AS(determinantal_membership(2, 0, diag), input_error);
    REQUIRE_THROWS_AS(determinantal_membership(2, 4, diag), input_error);
    REQUIRE_THROWS_AS(determinantal_membership(3, 2, diag), input_error);  // size mismatch
}

TEST_CASE("blow-up model matrix: shape and input checks") {
    // k = n+1 means nothing is blown up: plain outer product x w
    std::vector<Rat> x = {Rat(2), Rat(3), Rat(5)};
    std::vector<Rat> w = {Rat(7), Rat(11), Rat(13)};
    RatMatrix z = blowup_model_matrix(2, 3, x, w);
    for (std::size_t a = 0; a <= 2; ++a)
        for (std::size_t b = 0; b <= 2; ++b) REQUIRE(z(a, b) == x[a] * w[b]);

    // one blown-up center: off-diagonal entries pick up exceptional factors
    std::vector<Rat> x4 = {Rat(2), Rat(3), Rat(5), Rat(7)};
    std::vector<Rat> w4 = {Rat(1), Rat(2), Rat(3), Rat(4)};
    RatMatrix z4 = blowup_model_matrix(2, 2, x4, w4);
    REQUIRE(z4(0, 1) == x4[0] * w4[1]);            // neither blown up
    REQUIRE(z4(0, 2) == x4[0] * w4[2] * x4[3]);    // column center blown up
    REQUIRE(z4(2, 0) == x4[2] * w4[0] * w4[3]);    // row center blown up
    REQUIRE(z4(2, 2) == x4[2] * w4[2]);            // diagonal stays plain

    REQUIRE_THROWS_AS(blowup_model_matrix(2, 0, x4, w4), input_error);
    REQUIRE_THROWS_AS(blowup_model_matrix(2, 2, x, w4), input_error);
}
