#include <doctest.h>

#include <random>

#include "kmoduli/errors.hpp"
#include "kmoduli/surface.hpp"

using namespace kmoduli;

namespace {

CohClass random_class(const SurfaceModel& s, std::mt19937_64& rng, int degree = -1) {
    CohClass c = CohClass::zero(s);
    auto r = [&] { return Rat(static_cast<long>(rng() % 9) - 4); };
    if (degree == -1 || degree == 0) c.d0 = r();
    if (degree == -1 || degree == 1)
        for (auto& q : c.d1) q = r();
    if (degree == -1 || degree == 2)
        for (auto& q : c.d2) q = r();
    if (degree == -1 || degree == 3)
        for (auto& q : c.d3) q = r();
    if (degree == -1 || degree == 4) c.d4 = r();
    return c;
}

bool same(const CohClass& a, const CohClass& b) {
    CohClass d = b;
    d *= Rat(-1);
    d += a;
    return d.is_zero();
}

} // namespace

TEST_CASE("builtin models") {
    SurfaceModel p2 = build_surface("P2");
    CHECK(p2.h2_rank == 1);
    CHECK(p2.intersection_form == IntMat{{1}});
    CHECK(p2.canonical_class == std::vector<Int>{-3});
    CHECK(p2.euler_number == 3);
    CHECK(p2.todd2 == 1);
    CHECK(p2.todd1 == RatVec{ratio(3, 2)});

    SurfaceModel k3 = build_surface("K3");
    CHECK(k3.h2_rank == 22);
    CHECK(k3.k_square() == 0);
    CHECK(k3.todd2 == 2);

    SurfaceModel ab = build_surface("Abelian");
    CHECK(ab.b1 == 4);
    CHECK(ab.h2_rank == 6);
    CHECK(ab.todd2 == 0);
    CHECK(ab.has_odd_products());

    SurfaceModel f2 = build_surface("F2");
    CHECK(f2.k_square() == 8);
    CHECK(f2.todd2 == 1);

    SurfaceModel ruled = build_surface("Ruled(2,1)");
    CHECK(ruled.b1 == 4);
    CHECK(ruled.todd2 == Rat(-1)); // chi(O) = 1 - g
    CHECK(ruled.euler_number == -4);

    CHECK_THROWS_AS(build_surface("bogus"), validation_error);
}

TEST_CASE("every builtin pairing is unimodular") {
    for (const char* name :
         {"P2", "P1xP1", "F0", "F1", "F3", "K3", "Abelian", "Ruled(0,1)", "Ruled(2,0)", "Ruled(3,2)"}) {
        SurfaceModel s = build_surface(name);
        Int d = det(s.intersection_form);
        CHECK((d == 1 || d == -1));
        if (s.b1 > 0) {
            Int od = det(s.odd_pairing);
            CHECK((od == 1 || od == -1));
        }
    }
}

TEST_CASE("custom spec ingestion") {
    SurfaceModel s = surface_from_json_text(R"({
        "name": "custom-quadric",
        "b1": 0,
        "intersection_form": [[0, 1], [1, 0]],
        "odd_pairing": [],
        "canonical_class": [-2, -2],
        "euler_number": 4
    })");
    CHECK(s.name == "custom-quadric");
    CHECK(s.todd2 == 1);

    // det = 2 rejected
    CHECK_THROWS_WITH_AS(surface_from_json_text(R"({
        "name": "bad", "b1": 0,
        "intersection_form": [[2]],
        "canonical_class": [0],
        "euler_number": 12
    })"),
                         doctest::Contains("unimodular"), validation_error);

    // 12 does not divide K^2 + e
    CHECK_THROWS_WITH_AS(surface_from_json_text(R"({
        "name": "bad", "b1": 0,
        "intersection_form": [[1]],
        "canonical_class": [-3],
        "euler_number": 4
    })"),
                         doctest::Contains("divisible by 12"), validation_error);

    CHECK_THROWS_AS(surface_from_json_text("not json"), validation_error);
    CHECK_THROWS_AS(surface_from_json_text(R"({"name":"x"})"), validation_error);
}

TEST_CASE("blow-up bookkeeping") {
    SurfaceModel p2 = build_surface("P2");
    BlowUpResult b = blow_up(p2);
    CHECK(b.surface.h2_rank == 2);
    CHECK(b.surface.intersection_form == IntMat{{1, 0}, {0, -1}});
    CHECK(b.surface.canonical_class == std::vector<Int>{-3, 1});
    CHECK(b.surface.euler_number == 4);
    CHECK(b.surface.todd2 == 1); // chi(O) preserved
    CHECK(b.exceptional_index == 1);

    BlowUpResult b2 = blow_up(b.surface);
    CHECK(b2.surface.h2_rank == 3);
    Int d = det(b2.surface.intersection_form);
    CHECK((d == 1 || d == -1));
    CHECK(b2.surface.todd2 == 1);

    SurfaceModel ab = build_surface("Abelian");
    BlowUpResult ba = blow_up(ab);
    CHECK(ba.surface.todd2 == ab.todd2);
    CHECK(ba.surface.has_odd_products());
}

TEST_CASE("cup products and integration") {
    SurfaceModel p2 = build_surface("P2");
    CohClass h = CohClass::zero(p2);
    h.d2[0] = 1;
    CohClass hh = cup(p2, h, h);
    CHECK(hh.d4 == 1);
    CHECK(integrate(p2, hh) == 1);
    CHECK(integrate(p2, h) == 0);

    BlowUpResult b = blow_up(p2);
    CohClass e = CohClass::zero(b.surface);
    e.d2[1] = 1;
    CHECK(integrate(b.surface, cup(b.surface, e, e)) == -1);

    SurfaceModel ab = build_surface("Abelian");
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        CohClass a = random_class(ab, rng, 1);
        CHECK(cup(ab, a, a).is_zero());
    }
    CHECK_THROWS_AS(cup(p2, h, CohClass::zero(b.surface)), validation_error);
}

TEST_CASE("todd classes and chi(O)") {
    SurfaceModel p2 = build_surface("P2");
    CohClass td = todd(p2);
    CHECK(td.d0 == 1);
    CHECK(td.d2[0] == ratio(3, 2));
    CHECK(td.d4 == 1);
    CHECK(integrate(p2, td) == 1);

    SurfaceModel k3 = build_surface("K3");
    CHECK(integrate(k3, todd(k3)) == 2);
    SurfaceModel ab = build_surface("Abelian");
    CHECK(integrate(ab, todd(ab)) == 0);
    for (long g = 0; g <= 3; ++g) {
        SurfaceModel r = build_surface("Ruled(" + std::to_string(g) + ",1)");
        CHECK(integrate(r, todd(r)) == Rat(1 - g));
    }

    for (const char* name : {"P2", "P1xP1", "K3"}) {
        SurfaceModel s = build_surface(name);
        BlowUpResult b = blow_up(s);
        CHECK(integrate(b.surface, todd(b.surface)) == integrate(s, todd(s)));
    }
}

TEST_CASE("cup is associative and graded-commutative") {
    std::mt19937_64 rng(17);
    for (const char* name : {"P2", "P1xP1", "Abelian", "Ruled(2,1)"}) {
        SurfaceModel s = build_surface(name);
        for (int i = 0; i < 120; ++i) {
            CohClass a = random_class(s, rng), b = random_class(s, rng), c = random_class(s, rng);
            CHECK(same(cup(s, cup(s, a, b), c), cup(s, a, cup(s, b, c))));
        }
        for (int i = 0; i < 120; ++i) {
            int da = static_cast<int>(rng() % 5), db = static_cast<int>(rng() % 5);
            CohClass a = random_class(s, rng, da), b = random_class(s, rng, db);
            CohClass ba = cup(s, b, a);
            if (da % 2 == 1 && db % 2 == 1) ba *= Rat(-1);
            CHECK(same(cup(s, a, b), ba));
        }
    }
}
