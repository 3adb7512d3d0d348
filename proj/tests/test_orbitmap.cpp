#include "cblock/alcove.hpp"
#include "cblock/error.hpp"
#include "cblock/orbitmap.hpp"

#include <doctest.h>

using namespace cblock;

namespace {

OrbitData fold(Family f, int r, const char* sigma) {
    RootSystem rs = build_root_system(LieType::make(f, r));
    return orbit_algebra(rs, DiagramAutomorphism::named(rs, sigma));
}

std::vector<OrbitData> all_foldings() {
    return {fold(Family::A, 2, "flip"), fold(Family::A, 3, "flip"), fold(Family::A, 4, "flip"),
            fold(Family::A, 5, "flip"), fold(Family::D, 4, "flip"), fold(Family::D, 5, "flip"),
            fold(Family::D, 4, "d4rot"), fold(Family::E, 6, "flip")};
}

}  // namespace

TEST_CASE("folding table") {
    CHECK(fold(Family::A, 3, "flip").orbit_rs.type() == LieType::make(Family::B, 2));
    CHECK(fold(Family::A, 5, "flip").orbit_rs.type() == LieType::make(Family::B, 3));
    CHECK(fold(Family::D, 4, "d4rot").orbit_rs.type() == LieType::make(Family::G, 2));
    CHECK(fold(Family::D, 5, "flip").orbit_rs.type() == LieType::make(Family::C, 4));
    CHECK(fold(Family::E, 6, "flip").orbit_rs.type() == LieType::make(Family::F, 4));
    // C1 is A1 as a root system; the folding label keeps the C.
    OrbitData a2 = fold(Family::A, 2, "flip");
    CHECK(a2.label == "C1");
    CHECK(a2.orbit_rs.rank() == 1);
    CHECK(a2.is_A2n);
    CHECK(fold(Family::A, 4, "flip").orbit_rs.type() == LieType::make(Family::C, 2));
    CHECK(fold(Family::A, 4, "flip").label == "C2");
    for (const auto& od : all_foldings()) {
        if (od.orbit_rs.rank() == 1) continue;
        CAPTURE(od.label);
        CHECK(od.orbit_rs.type().name() == od.label);
    }
}

TEST_CASE("automorphism validation") {
    RootSystem a3 = build_root_system(LieType::make(Family::A, 3));
    CHECK(DiagramAutomorphism::named(a3, "flip").order() == 2);
    CHECK_THROWS_AS(DiagramAutomorphism::named(a3, "d4rot"), InvalidInput);
    CHECK_THROWS_AS(DiagramAutomorphism::named(a3, "spin"), InvalidInput);
    CHECK_THROWS_AS(orbit_algebra(a3, DiagramAutomorphism::from_permutation({1, 0, 2})), InvalidInput);
    CHECK_THROWS_AS(DiagramAutomorphism::from_permutation({0, 0, 1}), InvalidInput);
    RootSystem b3 = build_root_system(LieType::make(Family::B, 3));
    CHECK_THROWS_AS(DiagramAutomorphism::named(b3, "flip"), InvalidInput);
    RootSystem d4 = build_root_system(LieType::make(Family::D, 4));
    CHECK(DiagramAutomorphism::named(d4, "d4rot").order() == 3);
}

TEST_CASE("trivial sigma gives back g") {
    RootSystem b2 = build_root_system(LieType::make(Family::B, 2));
    OrbitData od = orbit_algebra(b2, DiagramAutomorphism::trivial(2));
    CHECK(od.orbit_rs.cartan() == b2.cartan());
    CHECK(iota(od, Weight{3, 1}) == Weight{3, 1});
    // long-root lattice of B2: alpha_1 and 2 alpha_2
    IntMatrix want = hermite_basis({b2.simple_root(0).coords, (2 * b2.simple_root(1)).coords});
    CHECK(q_sigma_lattice(od, LatticeContext::twisted) == want);
    CHECK(q_sigma_lattice(od, LatticeContext::untwisted) == want);
}

TEST_CASE("iota on weights") {
    OrbitData a3 = fold(Family::A, 3, "flip");
    CHECK(iota(a3, Weight{1, 0, 1}) == Weight{1, 0});
    CHECK(iota(a3, Weight{0, 0, 0}) == Weight{0, 0});
    CHECK_THROWS_AS(iota(a3, Weight{1, 0, 0}), InvalidInput);
    for (const auto& od : all_foldings()) {
        CHECK(iota(od, od.base.rho()) == od.orbit_rs.rho());
        for (std::size_t o = 0; o < od.orbit_rs.rank(); ++o) {
            Weight e = Weight::zero(od.orbit_rs.rank());
            e[o] = 1;
            Weight back = iota_inverse(od, e);
            for (std::size_t i = 0; i < od.base.rank(); ++i) CHECK(back[i] == (od.orbit_of[i] == o ? 1 : 0));
            CHECK(iota(od, back) == e);
        }
    }
}

TEST_CASE("orbit root images") {
    OrbitData a2 = fold(Family::A, 2, "flip");
    CHECK(iota_root_images(a2) == std::vector<IntVec>{{2, 2}});
    OrbitData a3 = fold(Family::A, 3, "flip");
    CHECK(iota_root_images(a3) == std::vector<IntVec>{{1, 0, 1}, {0, 1, 0}});
    // each image is sigma-invariant and maps to the simple root of g_sigma
    for (const auto& od : all_foldings()) {
        auto imgs = iota_root_images(od);
        for (std::size_t o = 0; o < imgs.size(); ++o)
            CHECK(iota(od, od.base.root_coords_to_weight(imgs[o])) == od.orbit_rs.simple_root(o));
    }
}

TEST_CASE("orbit Cartan matrix against the orbit-size rule") {
    // The rule |i| a_ij read off one adjacent pair matches whenever no two
    // adjacent orbits both have two nodes.
    for (const auto& od : all_foldings()) {
        const auto t = od.base.type();
        if (t.family == Family::E || (t.family == Family::A && t.rank >= 5)) continue;
        CAPTURE(od.label);
        CHECK(case_formula_cartan(od) == od.orbit_rs.cartan());
    }
    // With two adjacent size-two orbits (A5, E6) it counts the edge twice in
    // both directions, which is not a finite-type Cartan matrix.
    for (const auto& od : {fold(Family::A, 5, "flip"), fold(Family::E, 6, "flip")}) {
        CAPTURE(od.label);
        CHECK(case_formula_cartan(od) != od.orbit_rs.cartan());
        CHECK_THROWS_AS(RootSystem::from_cartan(case_formula_cartan(od)), InvalidInput);
    }
}

TEST_CASE("pairing compatibility of iota and iota-check") {
    for (const auto& od : all_foldings()) {
        CAPTURE(od.label);
        for (const auto& lam : level_weights(od.base, 3, &od.autom).sigma_invariant) {
            Weight il = iota(od, lam);
            for (std::size_t k = 0; k < od.base.positive_roots().size(); ++k) {
                const IntVec& y = od.base.positive_coroots()[k];
                Int lhs = 0, rhs = 0;
                for (std::size_t i = 0; i < lam.size(); ++i) lhs += lam[i] * y[i];
                IntVec iy = iota_check(od, y);
                for (std::size_t o = 0; o < il.size(); ++o) rhs += il[o] * iy[o];
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("highest root correspondence") {
    OrbitData a3 = fold(Family::A, 3, "flip");
    auto h = highest_root_correspondence(a3);
    const RootSystem& b2 = a3.orbit_rs;
    CHECK(h.iota_theta == b2.positive_root_weights()[b2.highest_short_index()]);
    // theta_sigma^vee is the highest coroot, the coroot of the highest short root
    CHECK(h.iota_check_theta_check == b2.positive_coroots()[b2.highest_short_index()]);

    OrbitData a2 = fold(Family::A, 2, "flip");
    auto h2 = highest_root_correspondence(a2);
    CHECK(h2.iota_check_theta_check == IntVec{2});
    // iota(theta) = theta_sigma / 2
    CHECK(2 * h2.iota_theta == a2.orbit_rs.theta());

    OrbitData a4 = fold(Family::A, 4, "flip");
    auto h4 = highest_root_correspondence(a4);
    CHECK(2 * h4.iota_theta == a4.orbit_rs.theta());
    // for A_2n the image is twice the coroot of the highest (long) root of C_n
    IntVec twice = a4.orbit_rs.comarks();
    for (auto& v : twice) v *= 2;
    CHECK(h4.iota_check_theta_check == twice);

    OrbitData d4 = fold(Family::D, 4, "d4rot");
    const auto& g2 = d4.orbit_rs;
    CHECK(highest_root_correspondence(d4).iota_check_theta_check == g2.positive_coroots()[g2.highest_short_index()]);
    CHECK_THROWS_AS(highest_root_correspondence(orbit_algebra(a3.base, DiagramAutomorphism::trivial(3))),
                    InvalidInput);
}

TEST_CASE("bijection of level sets when g is not A_2n") {
    for (const auto& od : all_foldings()) {
        if (od.is_A2n) continue;
        for (Int l = 0; l <= 4; ++l) {
            std::vector<Weight> img;
            for (const auto& w : level_weights(od.base, l, &od.autom).sigma_invariant) img.push_back(iota(od, w));
            std::sort(img.begin(), img.end());
            // dominant weights of g_sigma bounded by the highest coroot
            const RootSystem& gs = od.orbit_rs;
            const IntVec& hc = gs.positive_coroots()[gs.highest_short_index()];
            std::vector<Weight> target;
            Weight w = Weight::zero(gs.rank());
            while (true) {
                Int p = 0;
                for (std::size_t i = 0; i < w.size(); ++i) p += w[i] * hc[i];
                if (p <= l) target.push_back(w);
                std::size_t i = 0;
                while (i < w.size() && w[i] == l) w[i++] = 0;
                if (i == w.size()) break;
                ++w[i];
            }
            std::sort(target.begin(), target.end());
            CAPTURE(od.label);
            CAPTURE(l);
            CHECK(img == target);
        }
    }
}

TEST_CASE("lattice of the twisted torus") {
    // A3 -> B2: the root lattice of B2
    OrbitData a3 = fold(Family::A, 3, "flip");
    CHECK(q_sigma_lattice(a3, LatticeContext::twisted) == hermite_basis(a3.orbit_rs.cartan()));
    // A2 -> C1: the weight lattice
    OrbitData a2 = fold(Family::A, 2, "flip");
    CHECK(q_sigma_lattice(a2, LatticeContext::twisted) == IntMatrix{{1}});
    // A4 -> C2: P_sigma = half the long-root lattice
    OrbitData a4 = fold(Family::A, 4, "flip");
    CHECK(std::llabs(determinant(q_sigma_lattice(a4, LatticeContext::twisted))) == 1);
    IntMatrix ql = long_root_lattice(a4.orbit_rs);
    for (auto& row : ql)
        for (auto& v : row) CHECK(v % 2 == 0);
    // untwisted context: long-root lattice of g_sigma
    CHECK(q_sigma_lattice(a3, LatticeContext::untwisted) == long_root_lattice(a3.orbit_rs));
}
