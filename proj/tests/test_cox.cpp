// The four graded Cox-ring presentations: variables, bidegrees, relations,
// and the comparison maps between them.

#include "symtoric/cox.hpp"
#include "symtoric/fan_library.hpp"
#include "symtoric/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace symtoric;

namespace {

struct Setup {
    ExactSequenceData esd;
    SignedRayPairing pairing;
};

Setup setup(const std::string& name) {
    Fan f = builtin_fan(name);
    return {build_exact_sequence(f), select_sigma1(f)};
}

std::string render_block(const std::string& name, PresentationKind kind) {
    Setup s = setup(name);
    GradedPresentation pres = cox_presentation(s.esd, s.pairing, kind);
    std::ostringstream os;
    os << "[" << name << " " << to_string(kind) << "]\n";
    for (const auto& rel : pres.relations) os << "relation " << render_polynomial(pres, rel) << "\n";
    for (const auto& id : pres.identifications)
        os << "identify y" << id.eliminated << " = -y" << id.kept << "\n";
    return os.str();
}

}  // namespace

TEST_CASE("projective line: free reduced presentation") {
    Setup s = setup("p1");
    GradedPresentation pres = cox_presentation(s.esd, s.pairing, PresentationKind::R);
    REQUIRE(pres.t_rays == std::vector<std::size_t>{0});
    REQUIRE(pres.relations.empty());
    REQUIRE(pres.identifications.size() == 1);
    REQUIRE(pres.s_degree[0].cls == std::vector<Int>{Int(1)});
    REQUIRE(pres.s_degree[1].cls == std::vector<Int>{Int(1)});
    // y pairs both antipodal rays: degree -a_0 - a_1 = -2, fiber 1
    REQUIRE(pres.t_degree[0].cls == std::vector<Int>{Int(-2)});
    REQUIRE(pres.t_degree[0].fiber == 1);
}

TEST_CASE("projective spaces: moment presentation has one relation of n+1 unit terms") {
    for (std::size_t n = 1; n <= 4; ++n) {
        Setup s = setup("p" + std::to_string(n));
        GradedPresentation pres = cox_presentation(s.esd, s.pairing, PresentationKind::Rprime);
        REQUIRE(pres.relations.size() == 1);
        REQUIRE(pres.relations[0].size() == n + 1);
        for (const auto& term : pres.relations[0]) REQUIRE(term.coeff == 1);
        // w_rho has degree (-a_rho, 1)
        for (std::size_t t = 0; t < pres.t_degree.size(); ++t) {
            REQUIRE(pres.t_degree[t].cls == std::vector<Int>{Int(-1)});
            REQUIRE(pres.t_degree[t].fiber == 1);
        }
    }
}

TEST_CASE("blow-up moment relations follow the rows of A") {
    Setup s = setup("bl1p2");
    GradedPresentation pres = cox_presentation(s.esd, s.pairing, PresentationKind::Rprime);
    REQUIRE(pres.relations.size() == 2);
    REQUIRE(render_polynomial(pres, pres.relations[0]) == "x0*w0 + x1*w1 + x2*w2");
    REQUIRE(render_polynomial(pres, pres.relations[1]) == "-x0*w0 - x1*w1 + x3*w3");
}

TEST_CASE("rendered presentations match the golden file") {
    std::ifstream in(GOLDEN_DIR "/presentations.txt");
    REQUIRE(in.good());
    std::stringstream want;
    want << in.rdbuf();

    std::ostringstream got;
    got << render_block("p2", PresentationKind::R);
    got << render_block("p2", PresentationKind::Rprime);
    got << render_block("bl1p2", PresentationKind::R);
    got << render_block("bl1p2", PresentationKind::Rtilde);
    got << render_block("bl1p2", PresentationKind::Rprime);
    got << render_block("bl1p2", PresentationKind::RtildePrime);
    got << render_block("p1xp1", PresentationKind::R);
    got << render_block("p1xp1", PresentationKind::Rprime);
    REQUIRE(got.str() == want.str());
}

TEST_CASE("all relations are bihomogeneous on every built-in fan") {
    for (const auto& name : builtin_fan_names()) {
        Setup s = setup(name);
        for (auto kind : {PresentationKind::R, PresentationKind::Rtilde, PresentationKind::Rprime,
                          PresentationKind::RtildePrime}) {
            INFO("fan " << name << " kind " << to_string(kind));
            GradedPresentation pres = cox_presentation(s.esd, s.pairing, kind);
            REQUIRE(relations_bihomogeneous(pres));
        }
    }
}

TEST_CASE("variable bidegrees: base = divisor class, fiber sums to the dual") {
    for (const auto& name : {"p2", "bl1p3", "f2"}) {
        Setup s = setup(name);
        GradedPresentation pres = cox_presentation(s.esd, s.pairing, PresentationKind::Rprime);
        for (std::size_t r = 0; r < pres.n_rays; ++r) {
            REQUIRE(pres.s_degree[r].cls == s.esd.divisor_class(r));
            REQUIRE(pres.s_degree[r].fiber == 0);
            // x_rho w_rho always has bidegree (0, 1)
            PresMonomial m;
            m.s_exp.assign(pres.n_rays, 0);
            m.t_exp.assign(pres.t_rays.size(), 0);
            m.s_exp[r] = 1;
            m.t_exp[pres.t_index_of_ray(r)] = 1;
            Bidegree d = pres.degree_of(m);
            for (const auto& c : d.cls) REQUIRE(c == 0);
            REQUIRE(d.fiber == 1);
        }
    }
}

TEST_CASE("comparison map: w variables map to monomials of the same bidegree") {
    Setup s = setup("bl1p2");
    GradedPresentation primed = cox_presentation(s.esd, s.pairing, PresentationKind::RtildePrime);
    GradedPresentation tilde = cox_presentation(s.esd, s.pairing, PresentationKind::Rtilde);
    for (std::size_t r = 0; r < primed.t_rays.size(); ++r) {
        PresMonomial m;
        m.s_exp.assign(primed.n_rays, 0);
        m.t_exp.assign(primed.t_rays.size(), 0);
        m.t_exp[r] = 1;
        PresMonomial image = phi_bar_image(s.pairing, m);
        REQUIRE(primed.degree_of(m) == tilde.degree_of(image));
    }
}

TEST_CASE("antipodal reduction to the reduced presentation") {
    Setup s = setup("bl1p2");
    GradedPresentation r_pres = cox_presentation(s.esd, s.pairing, PresentationKind::R);

    // x2*x3*y3 reduces to -x2*x3*y2 (ray 3 = -ray 2 is eliminated)
    PresMonomial tilde_mono;
    tilde_mono.s_exp = {0, 0, 1, 1};
    tilde_mono.t_exp = {0, 0, 0, 1};  // per-ray fiber exponents of Rtilde
    SignedPresMonomial red = reduce_to_r(s.pairing, r_pres, tilde_mono);
    REQUIRE(red.sign == -1);
    REQUIRE(red.mono.s_exp == std::vector<int>{0, 0, 1, 1});
    REQUIRE(red.mono.t_exp == std::vector<int>{0, 0, 1});

    // even exponent: sign +1
    tilde_mono.t_exp = {0, 0, 0, 2};
    red = reduce_to_r(s.pairing, r_pres, tilde_mono);
    REQUIRE(red.sign == 1);
    REQUIRE(red.mono.t_exp == std::vector<int>{0, 0, 2});

    // sigma1 fiber exponents pass through unchanged
    tilde_mono.t_exp = {1, 0, 1, 0};
    red = reduce_to_r(s.pairing, r_pres, tilde_mono);
    REQUIRE(red.sign == 1);
    REQUIRE(red.mono.t_exp == std::vector<int>{1, 0, 1});
}

TEST_CASE("identifications exist exactly for paired sigma1 rays") {
    for (const auto& name : builtin_fan_names()) {
        Setup s = setup(name);
        GradedPresentation pres = cox_presentation(s.esd, s.pairing, PresentationKind::R);
        std::size_t paired = 0;
        for (auto r : s.pairing.sigma1)
            if (s.pairing.opposite[r]) ++paired;
        REQUIRE(pres.identifications.size() == paired);
        for (const auto& id : pres.identifications) {
            REQUIRE(s.pairing.opposite[id.kept] == id.eliminated);
            REQUIRE(s.pairing.in_sigma1(id.kept));
            REQUIRE_FALSE(s.pairing.in_sigma1(id.eliminated));
        }
    }
}
