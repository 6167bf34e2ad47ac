#include <catch2/catch_amalgamated.hpp>

#include "bisetkit/bgroups.hpp"
#include "bisetkit/group_spec.hpp"
#include "bisetkit/homomorphisms.hpp"
#include "bisetkit/lattice.hpp"
#include "oracles.hpp"

using namespace bisetkit;

namespace {
Group G(const std::string& spec) { return parse_group_spec(spec); }

// First subgroup in canonical lattice order with the given order and
// cyclicity flag.
Subgroup sub_by_order(const Group& g, int order, bool want_cyclic) {
    const SubgroupLattice& lat = lattice_of(g);
    for (int i = 0; i < lat.size(); ++i) {
        if (lat.at(i).order() != order) continue;
        if (lat.is_cyclic_sub(i) != want_cyclic) continue;
        return lat.at(i);
    }
    FAIL("no subgroup of order " << order << " in " << g.name());
    return Subgroup{g, ElemSet::single(g.order(), 0)};
}
}  // namespace

TEST_CASE("B-group membership of the standard small groups") {
    for (const char* spec : {"C1", "S3", "S4", "A4", "V4", "C2xC2", "Elem(3,2)"}) {
        INFO(spec);
        CHECK(is_b_group(G(spec)));
    }
    for (const char* spec : {"C2", "C3", "C4", "C5", "C6", "C8", "C12", "Q8", "D8",
                             "C2xC4", "Q8xC3", "D8xC3", "S3xC5"}) {
        INFO(spec);
        CHECK_FALSE(is_b_group(G(spec)));
    }
}

TEST_CASE("largest B-group quotients of the standard small groups") {
    SECTION("cyclic groups collapse to the trivial group") {
        for (const char* spec : {"C2", "C3", "C4", "C6", "C8", "C12"}) {
            INFO(spec);
            CHECK(beta(G(spec)).order() == 1);
        }
    }
    SECTION("a B-group is its own largest B-group quotient") {
        for (const char* spec : {"C1", "S3", "S4", "A4", "V4", "Elem(3,2)"}) {
            INFO(spec);
            Group g = G(spec);
            CHECK(isomorphic(beta(g), g));
        }
    }
    SECTION("the two nonabelian groups of order 8 collapse to the Klein group") {
        Group v4 = G("V4");
        CHECK(isomorphic(beta(G("Q8")), v4));
        CHECK(isomorphic(beta(G("D8")), v4));
    }
    SECTION("a coprime cyclic direct factor never survives") {
        CHECK(isomorphic(beta(G("Q8xC3")), G("V4")));
        CHECK(isomorphic(beta(G("D8xC3")), G("V4")));
        CHECK(isomorphic(beta(G("S3xC5")), G("S3")));
        CHECK(beta(G("C2xC3")).order() == 1);
    }
    SECTION("idempotence") {
        for (const char* spec : {"C6", "S3", "Q8", "A4", "S4", "C12", "Q8xC3"}) {
            INFO(spec);
            Group b = beta(G(spec));
            CHECK(isomorphic(beta(b), b));
        }
    }
}

TEST_CASE("m-numbers detect exactly when the largest B-group quotient survives") {
    // For every normal subgroup N: m_{G,N} is nonzero precisely when G/N still
    // has the same largest B-group quotient as G itself.
    for (const char* spec :
         {"C2", "C3", "V4", "C6", "S3", "Q8", "D8", "C12", "A4", "S4", "Q8xC3"}) {
        INFO(spec);
        Group g = G(spec);
        const SubgroupLattice& lat = lattice_of(g);
        Group bg = beta(g);
        for (int i = 0; i < lat.size(); ++i) {
            if (!lat.is_normal(i)) continue;
            INFO("normal subgroup order " << lat.at(i).order());
            const bool m_nonzero = !lat.m_of_normal(i).is_zero();
            Group q = quotient(g, lat.at(i)).group;
            CHECK(m_nonzero == isomorphic(bg, beta(q)));
        }
    }
}

TEST_CASE("the largest B-group quotient is a p-group exactly for p-elementary groups") {
    const std::pair<const char*, int> cases[] = {
        {"C6", 2},    {"C6", 3},     {"C6", 5},  {"S3", 2},  {"S3", 3},
        {"Q8", 2},    {"Q8", 3},     {"A4", 2},  {"A4", 3},  {"S4", 2},
        {"C12", 2},   {"C12", 3},    {"V4", 2},  {"V4", 3},  {"Elem(3,2)", 3},
        {"Q8xC3", 2}, {"Q8xC3", 3},  {"D8xC3", 2}, {"S3xC5", 5}, {"C8", 2},
    };
    for (const auto& [spec, p] : cases) {
        INFO(spec << " at p=" << p);
        Group g = G(spec);
        CHECK(is_power_of(beta(g).order(), p) == is_p_elementary(g, p));
    }
}

TEST_CASE("closed form for m-numbers of elementary abelian groups") {
    SECTION("spot values") {
        CHECK(m_elementary_closed(2, 1, 0) == BRational(1));
        CHECK(m_elementary_closed(2, 1, 1) == rat(1, 2));
        CHECK(m_elementary_closed(3, 1, 1) == rat(2, 3));
        CHECK(m_elementary_closed(5, 1, 1) == rat(4, 5));
        CHECK(m_elementary_closed(7, 1, 1) == rat(6, 7));
        CHECK(m_elementary_closed(2, 2, 1) == BRational(0));
        CHECK(m_elementary_closed(2, 2, 2) == BRational(0));
        CHECK(m_elementary_closed(3, 2, 1) == BRational(0));
        CHECK(m_elementary_closed(2, 3, 0) == BRational(1));
        CHECK(m_elementary_closed(2, 3, 1) == BRational(-1));
        CHECK(m_elementary_closed(2, 3, 2) == BRational(0));
        CHECK(m_elementary_closed(2, 3, 3) == BRational(0));
        CHECK(m_elementary_closed(2, 4, 1) == BRational(-3));
        CHECK(m_elementary_closed(2, 4, 2) == BRational(3));
        CHECK(m_elementary_closed(2, 4, 3) == BRational(0));
        CHECK(m_elementary_closed(3, 3, 1) == BRational(-2));
    }
    SECTION("agrees with the lattice sum on every subgroup") {
        const std::tuple<const char*, int, int> cases[] = {
            {"C2", 2, 1},        {"C3", 3, 1},        {"Elem(2,2)", 2, 2},
            {"Elem(3,2)", 3, 2}, {"Elem(2,3)", 2, 3}, {"Elem(2,4)", 2, 4},
        };
        for (const auto& [spec, p, n] : cases) {
            INFO(spec);
            Group g = G(spec);
            const SubgroupLattice& lat = lattice_of(g);
            for (int i = 0; i < lat.size(); ++i) {
                int k = 0, order = lat.at(i).order();
                while (order > 1) {
                    order /= p;
                    ++k;
                }
                INFO("subgroup of rank " << k);
                CHECK(lat.m_of_normal(i) == m_elementary_closed(p, n, k));
            }
        }
    }
}

TEST_CASE("m-numbers of a p-group factor through its Frattini quotient") {
    for (const char* spec : {"C4", "C8", "C9", "Q8", "D8", "C2xC4", "Elem(2,3)",
                             "Elem(3,2)", "D16", "Q16", "C4xC4"}) {
        INFO(spec);
        Group g = G(spec);
        const int p = prime_power_base(g.order());
        REQUIRE(p != 0);
        const ElemSet phi = frattini_set_pgroup(g, p);
        QuotientResult fq = quotient(g, Subgroup{g, phi});
        const SubgroupLattice& lat = lattice_of(g);
        for (int i = 0; i < lat.size(); ++i) {
            if (!lat.is_normal(i)) continue;
            ElemSet image(fq.group.order());
            for (int e : g.set_product(lat.at(i).members, phi).members())
                image.set(fq.proj[e]);
            INFO("normal subgroup order " << lat.at(i).order());
            CHECK(lat.m_of_normal(i) == m_number(fq.group, Subgroup{fq.group, image}));
        }
    }
}

TEST_CASE("counting simultaneous complements in p-groups") {
    SECTION("rank-two elementary abelian values") {
        for (int p : {2, 3}) {
            Group g = p == 2 ? G("V4") : G("Elem(3,2)");
            const SubgroupLattice& lat = lattice_of(g);
            for (int i = 0; i < lat.size(); ++i)
                for (int j = 0; j < lat.size(); ++j) {
                    if (lat.at(i).order() != p || lat.at(j).order() != p) continue;
                    Int got = count_common_complements(g, lat.at(i), lat.at(j));
                    CHECK(got == Int(i == j ? p : p - 1));
                }
            Subgroup whole{g, ElemSet::full(g.order())};
            Subgroup one{g, ElemSet::single(g.order(), 0)};
            CHECK(count_common_complements(g, whole, whole) == Int(1));
            CHECK(count_common_complements(g, one, one) == Int(1));
        }
    }
    SECTION("rank-three elementary abelian values") {
        Group g = G("Elem(2,3)");
        const SubgroupLattice& lat = lattice_of(g);
        for (int i = 0; i < lat.size(); ++i)
            for (int j = 0; j < lat.size(); ++j) {
                if (lat.at(i).order() != lat.at(j).order()) continue;
                Int got = count_common_complements(g, lat.at(i), lat.at(j));
                if (lat.at(i).order() == 2) CHECK(got == Int(i == j ? 4 : 2));
                if (lat.at(i).order() == 4) CHECK(got == Int(i == j ? 4 : 2));
            }
    }
    SECTION("formula matches exhaustive search over every admissible pair") {
        for (const char* spec : {"C4", "C8", "C9", "V4", "Elem(3,2)", "Elem(2,3)",
                                 "C2xC4", "Q8", "D8", "C4xC4"}) {
            INFO(spec);
            Group g = G(spec);
            const int p = prime_power_base(g.order());
            const ElemSet phi = frattini_set_pgroup(g, p);
            const SubgroupLattice& lat = lattice_of(g);
            int admissible = 0;
            for (int i = 0; i < lat.size(); ++i) {
                if (!lat.is_normal(i) || (lat.at(i).members & phi).count() != 1) continue;
                for (int j = 0; j < lat.size(); ++j) {
                    if (!lat.is_normal(j) || lat.at(j).order() != lat.at(i).order()) continue;
                    if ((lat.at(j).members & phi).count() != 1) continue;
                    ++admissible;
                    Int got = count_common_complements(g, lat.at(i), lat.at(j));
                    long long want = oracles::true_common_complement_count(
                        g, lat.at(i).members, lat.at(j).members);
                    CHECK(got == Int(want));
                }
            }
            CHECK(admissible >= 1);
        }
    }
    SECTION("precondition violations are rejected") {
        Group s3 = G("S3");
        Subgroup a3{s3, s3.derived_set()};
        CHECK_THROWS_AS(count_common_complements(s3, a3, a3), precondition_error);

        Group d8 = G("D8");
        const SubgroupLattice& lat = lattice_of(d8);
        int reflection = -1, center = -1;
        for (int i = 0; i < lat.size(); ++i) {
            if (lat.at(i).order() != 2) continue;
            (lat.is_normal(i) ? center : reflection) = i;
        }
        REQUIRE(reflection >= 0);
        REQUIRE(center >= 0);
        CHECK_THROWS_AS(count_common_complements(d8, lat.at(reflection), lat.at(reflection)),
                        precondition_error);
        // the center sits inside the Frattini subgroup of D8
        CHECK_THROWS_AS(count_common_complements(d8, lat.at(center), lat.at(center)),
                        precondition_error);

        Group v4 = G("V4");
        Subgroup one{v4, ElemSet::single(4, 0)};
        Subgroup line = sub_by_order(v4, 2, true);
        CHECK_THROWS_AS(count_common_complements(v4, one, line), precondition_error);

        Group other = G("V4");
        Subgroup foreign{other, ElemSet::single(4, 0)};
        CHECK_THROWS_AS(count_common_complements(v4, foreign, foreign), precondition_error);
    }
}

TEST_CASE("splitting off the elementary part of a p-group quotient") {
    SECTION("Klein group splits a line off cleanly") {
        Group v4 = G("V4");
        ElementarySplit s = elementary_split(v4, sub_by_order(v4, 2, true));
        CHECK(s.elementary.order() == 2);
        CHECK(s.complement.order() == 2);
        CHECK(isomorphic(s.whole, v4));
    }
    SECTION("the squares inside a cyclic group contribute nothing elementary") {
        Group c4 = G("C4");
        ElementarySplit s = elementary_split(c4, sub_by_order(c4, 2, true));
        CHECK(s.elementary.order() == 1);
        CHECK(s.complement.order() == 2);
        CHECK(s.whole.order() == 2);
    }
    SECTION("center of the quaternion group is swallowed whole") {
        Group q8 = G("Q8");
        ElementarySplit s = elementary_split(q8, Subgroup{q8, q8.center_set()});
        CHECK(s.elementary.order() == 1);
        CHECK(s.complement.order() == 4);
        CHECK(isomorphic(s.complement, G("V4")));
        CHECK(isomorphic(s.whole, G("V4")));
    }
    SECTION("rotation subgroup of the dihedral group of order 8") {
        Group d8 = G("D8");
        ElementarySplit s = elementary_split(d8, sub_by_order(d8, 4, true));
        CHECK(s.elementary.order() == 2);
        CHECK(s.complement.order() == 2);
        CHECK(isomorphic(s.whole, G("V4")));
    }
    SECTION("plane inside the rank-three elementary abelian group") {
        Group e8 = G("Elem(2,3)");
        const SubgroupLattice& lat = lattice_of(e8);
        int plane = -1;
        for (int i = 0; i < lat.size() && plane < 0; ++i)
            if (lat.at(i).order() == 4) plane = i;
        REQUIRE(plane >= 0);
        ElementarySplit s = elementary_split(e8, lat.at(plane));
        CHECK(isomorphic(s.elementary, G("V4")));
        CHECK(s.complement.order() == 2);
        CHECK(isomorphic(s.whole, e8));
    }
    SECTION("cyclic subgroup of order 4 in the direct product C4xC2") {
        Group g = G("C2xC4");
        const SubgroupLattice& lat = lattice_of(g);
        for (int i = 0; i < lat.size(); ++i) {
            if (lat.at(i).order() != 4 || !lat.is_cyclic_sub(i)) continue;
            ElementarySplit s = elementary_split(g, lat.at(i));
            CHECK(s.elementary.order() == 2);
            CHECK(s.complement.order() == 2);
            CHECK(isomorphic(s.whole, G("V4")));
        }
    }
    SECTION("precondition violations are rejected") {
        Group s3 = G("S3");
        CHECK_THROWS_AS(elementary_split(s3, Subgroup{s3, s3.derived_set()}),
                        precondition_error);
        Group d8 = G("D8");
        const SubgroupLattice& lat = lattice_of(d8);
        for (int i = 0; i < lat.size(); ++i)
            if (lat.at(i).order() == 2 && !lat.is_normal(i)) {
                CHECK_THROWS_AS(elementary_split(d8, lat.at(i)), precondition_error);
                break;
            }
        Group other = G("Q8");
        CHECK_THROWS_AS(elementary_split(d8, Subgroup{other, other.center_set()}),
                        precondition_error);
    }
}
