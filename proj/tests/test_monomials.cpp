// Enumeration of torus-invariant monomials by fiber degree, the two
// equivalent invariance predicates, and the fiber-solution cache.

#include "symtoric/fan_library.hpp"
#include "symtoric/monomials.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace symtoric;

namespace {

MonomialEnumerator make(const std::string& name) {
    Fan f = builtin_fan(name);
    return MonomialEnumerator(build_exact_sequence(f), select_sigma1(f));
}

InvariantMonomial mono(std::vector<int> s, std::vector<int> t) {
    InvariantMonomial m;
    m.s_exp = std::move(s);
    m.t_exp = std::move(t);
    return m;
}

}  // namespace

TEST_CASE("projective line monomial counts") {
    MonomialEnumerator en = make("p1");
    SECTION("reduced scheme: 2p+1 monomials per degree, no relations to quotient") {
        REQUIRE(en.of_degree(PresentationKind::R, 0).size() == 1);
        REQUIRE(en.of_degree(PresentationKind::R, 1).size() == 3);
        REQUIRE(en.of_degree(PresentationKind::R, 2).size() == 5);
        auto deg1 = en.of_degree(PresentationKind::R, 1);
        std::set<std::vector<int>> s_exps;
        for (const auto& m : deg1) {
            REQUIRE(m.t_exp == std::vector<int>{1, 0});
            s_exps.insert(m.s_exp);
        }
        REQUIRE(s_exps == std::set<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    }
    SECTION("moment scheme: one extra monomial per fiber variable") {
        REQUIRE(en.of_degree(PresentationKind::Rprime, 1).size() == 4);
    }
}

TEST_CASE("projective spaces: (n+1)^2 moment monomials in degree one") {
    for (std::size_t n = 1; n <= 4; ++n) {
        MonomialEnumerator en = make("p" + std::to_string(n));
        auto monos = en.of_degree(PresentationKind::Rprime, 1);
        REQUIRE(monos.size() == (n + 1) * (n + 1));
        for (const auto& m : monos) {
            int s_total = 0, t_total = 0;
            for (int e : m.s_exp) s_total += e;
            for (int e : m.t_exp) t_total += e;
            REQUIRE(s_total == 1);
            REQUIRE(t_total == 1);
        }
    }
}

TEST_CASE("one-point blow-up of the plane: frozen degree-one monomial sets") {
    MonomialEnumerator en = make("bl1p2");

    SECTION("moment scheme has exactly the eight known monomials") {
        auto monos = en.of_degree(PresentationKind::Rprime, 1);
        std::set<InvariantMonomial> got(monos.begin(), monos.end());
        std::set<InvariantMonomial> want = {
            mono({1, 0, 0, 0}, {1, 0, 0, 0}),  // x0 w0
            mono({0, 1, 0, 0}, {1, 0, 0, 0}),  // x1 w0
            mono({1, 0, 0, 0}, {0, 1, 0, 0}),  // x0 w1
            mono({0, 1, 0, 0}, {0, 1, 0, 0}),  // x1 w1
            mono({1, 0, 0, 1}, {0, 0, 1, 0}),  // x0 x3 w2
            mono({0, 1, 0, 1}, {0, 0, 1, 0}),  // x1 x3 w2
            mono({0, 0, 1, 0}, {0, 0, 1, 0}),  // x2 w2
            mono({0, 0, 0, 1}, {0, 0, 0, 1}),  // x3 w3
        };
        REQUIRE(got == want);
    }
    SECTION("reduced scheme has seven") {
        REQUIRE(en.of_degree(PresentationKind::R, 1).size() == 7);
    }
}

TEST_CASE("invariance predicates agree: kernel test vs weight accumulation") {
    for (const auto& name : {"p1", "p2", "bl1p2", "p1xp1", "f2"}) {
        INFO("fan " << name);
        Fan f = builtin_fan(name);
        ExactSequenceData esd = build_exact_sequence(f);
        SignedRayPairing pairing = select_sigma1(f);
        std::size_t bign = f.ray_count();

        // exhaustive scan over exponent vectors with entries <= 2
        std::vector<int> s(bign, 0), t(bign, 0);
        long long checked = 0;
        auto scan = [&](auto&& self, std::size_t pos) -> void {
            if (pos == 2 * bign) {
                for (auto scheme : {PresentationKind::R, PresentationKind::Rprime}) {
                    // the reduced scheme has no fiber variables off sigma1
                    if (scheme == PresentationKind::R) {
                        bool off = false;
                        for (std::size_t r = 0; r < bign; ++r)
                            if (t[r] && !pairing.in_sigma1(r)) off = true;
                        if (off) continue;
                    }
                    ++checked;
                    REQUIRE(invariant_by_kernel(esd, pairing, scheme, s, t) ==
                            invariant_by_weights(esd, pairing, scheme, s, t));
                }
                return;
            }
            for (int e = 0; e <= 2; ++e) {
                (pos < bign ? s[pos] : t[pos - bign]) = e;
                self(self, pos + 1);
            }
            (pos < bign ? s[pos] : t[pos - bign]) = 0;
        };
        scan(scan, 0);
        REQUIRE(checked > 0);
    }
}

TEST_CASE("enumerated monomials are invariant and complete in low degree") {
    Fan f = builtin_fan("bl1p2");
    ExactSequenceData esd = build_exact_sequence(f);
    SignedRayPairing pairing = select_sigma1(f);
    MonomialEnumerator en(esd, pairing);

    for (auto scheme : {PresentationKind::R, PresentationKind::Rprime}) {
        for (int p = 0; p <= 2; ++p) {
            auto monos = en.of_degree(scheme, p);
            std::set<InvariantMonomial> listed(monos.begin(), monos.end());
            REQUIRE(listed.size() == monos.size());  // no duplicates
            for (const auto& m : monos) {
                REQUIRE(invariant_by_kernel(esd, pairing, scheme, m.s_exp, m.t_exp));
                int total = 0;
                for (int e : m.t_exp) total += e;
                REQUIRE(total == p);
            }
            // completeness against a brute-force scan with entries <= 4
            std::size_t bign = f.ray_count();
            std::vector<int> s(bign, 0), t(bign, 0);
            auto scan = [&](auto&& self, std::size_t pos) -> void {
                if (pos == 2 * bign) {
                    int total = 0;
                    for (int e : t) total += e;
                    if (total != p) return;
                    if (scheme == PresentationKind::R)
                        for (std::size_t r = 0; r < bign; ++r)
                            if (t[r] && !pairing.in_sigma1(r)) return;
                    if (invariant_by_kernel(esd, pairing, scheme, s, t))
                        REQUIRE(listed.count(mono(s, t)) == 1);
                    return;
                }
                for (int e = 0; e <= 4; ++e) {
                    (pos < bign ? s[pos] : t[pos - bign]) = e;
                    self(self, pos + 1);
                }
                (pos < bign ? s[pos] : t[pos - bign]) = 0;
            };
            scan(scan, 0);
        }
    }
}

TEST_CASE("fiber solutions are lexicographically sorted and cached") {
    MonomialEnumerator en = make("bl1p2");
    std::vector<Int> cls = {Int(2), Int(0)};
    auto first = en.fiber_solutions(cls);
    REQUIRE(std::is_sorted(first->begin(), first->end()));
    for (const auto& sol : *first) {
        // A sol = cls for A = [[1,1,1,0],[-1,-1,0,1]]
        REQUIRE(Int(sol[0]) + sol[1] + sol[2] == 2);
        REQUIRE(-Int(sol[0]) - sol[1] + sol[3] == 0);
        for (int e : sol) REQUIRE(e >= 0);
    }
    auto second = en.fiber_solutions(cls);
    REQUIRE(first.get() == second.get());  // memoized, same block
}

TEST_CASE("enumerator refuses a non-complete configuration") {
    // kernel of A = [1, -1] meets the positive orthant: fibers are infinite
    ExactSequenceData esd;
    esd.b = IntMatrix(2, 1);
    esd.b(0, 0) = 1;
    esd.b(1, 0) = 1;
    esd.a = IntMatrix(1, 2);
    esd.a(0, 0) = 1;
    esd.a(0, 1) = -1;
    esd.pivot_rays = {0};
    SignedRayPairing pairing;
    pairing.sigma1 = {0, 1};
    pairing.opposite.resize(2);
    REQUIRE_THROWS_AS(MonomialEnumerator(esd, pairing), precondition_error);
}
