#include <catch2/catch_amalgamated.hpp>

#include "bisetkit/group_spec.hpp"
#include "bisetkit/homomorphisms.hpp"
#include "bisetkit/lattice.hpp"
#include "oracles.hpp"

using namespace bisetkit;

namespace {
Group G(const std::string& spec) { return parse_group_spec(spec); }

int index_by_order_unique(const SubgroupLattice& lat, int order) {
    int found = -1;
    for (int i = 0; i < lat.size(); ++i)
        if (lat.at(i).order() == order) {
            REQUIRE(found == -1);
            found = i;
        }
    REQUIRE(found >= 0);
    return found;
}
}  // namespace

TEST_CASE("lattice shape of the standard small groups") {
    {
        const SubgroupLattice& lat = lattice_of(G("S3"));
        CHECK(lat.size() == 6);
        CHECK(lat.class_count() == 4);
        CHECK(lat.at(lat.bottom()).order() == 1);
        CHECK(lat.at(lat.top()).order() == 6);
        CHECK(lat.is_normal(lat.bottom()));
        CHECK(lat.is_normal(lat.top()));
        int c3 = index_by_order_unique(lat, 3);
        CHECK(lat.is_normal(c3));
        CHECK(lat.is_cyclic_sub(c3));
    }
    {
        const SubgroupLattice& lat = lattice_of(G("V4"));
        CHECK(lat.size() == 5);
        CHECK(lat.class_count() == 5);  // abelian: every subgroup its own class
    }
    {
        const SubgroupLattice& lat = lattice_of(G("Q8"));
        CHECK(lat.size() == 6);
        CHECK(lat.class_count() == 6);  // all subgroups normal
        for (int i = 0; i < lat.size(); ++i) CHECK(lat.is_normal(i));
    }
    {
        const SubgroupLattice& lat = lattice_of(G("D8"));
        CHECK(lat.size() == 10);
        CHECK(lat.class_count() == 8);
    }
    {
        const SubgroupLattice& lat = lattice_of(G("S4"));
        CHECK(lat.size() == 30);
        CHECK(lat.class_count() == 11);
    }
    {
        const SubgroupLattice& lat = lattice_of(G("A4"));
        CHECK(lat.size() == 10);
        CHECK(lat.class_count() == 5);
    }
    {
        const SubgroupLattice& lat = lattice_of(G("Elem(2,3)"));
        CHECK(lat.size() == 16);  // 1 + 7 + 7 + 1
        CHECK(lat.class_count() == 16);
    }
}

TEST_CASE("lattice bookkeeping: order, containment, conjugation, normalizers") {
    for (const char* s : {"S3", "D8", "A4", "C12", "Q8"}) {
        Group g = G(s);
        const SubgroupLattice& lat = lattice_of(g);
        INFO(s);

        // canonical order: ascending size, then member-list order
        for (int i = 0; i + 1 < lat.size(); ++i) {
            bool ordered =
                lat.at(i).order() < lat.at(i + 1).order() ||
                (lat.at(i).order() == lat.at(i + 1).order() &&
                 lat.at(i).members.set_less(lat.at(i + 1).members));
            CHECK(ordered);
        }

        for (int i = 0; i < lat.size(); ++i) {
            CHECK(lat.find(lat.at(i).members) == i);
            CHECK(lat.leq(i, lat.top()));
            CHECK(lat.leq(lat.bottom(), i));

            // normalizer contains the subgroup; conjugation permutes the class
            CHECK(lat.at(i).members.subset_of(lat.normalizer(i)));
            CHECK(g.is_subgroup_set(lat.normalizer(i)));
            for (int gx = 0; gx < g.order(); ++gx) {
                int j = lat.conjugate_index(i, gx);
                CHECK(lat.class_of(j) == lat.class_of(i));
                CHECK(lat.at(j).order() == lat.at(i).order());
            }

            // class size equals the index of the normalizer
            int cls = lat.class_of(i);
            CHECK(static_cast<long long>(lat.classes()[cls].size()) *
                      lat.normalizer(i).count() ==
                  g.order());
        }

        // class representatives are the minimal member of each class
        for (int c = 0; c < lat.class_count(); ++c) {
            int r = lat.class_rep(c);
            for (int m : lat.classes()[c]) CHECK(r <= m);
        }
    }
}

TEST_CASE("Mobius values of the subgroup poset") {
    {
        const SubgroupLattice& lat = lattice_of(G("S3"));
        CHECK(lat.mobius(lat.bottom(), lat.top()) == 3);
        int c3 = index_by_order_unique(lat, 3);
        CHECK(lat.mobius(c3, lat.top()) == -1);
        CHECK(lat.mobius(lat.bottom(), c3) == -1);
        CHECK(lat.mobius(lat.top(), lat.top()) == 1);
    }
    CHECK(lattice_of(G("V4")).mobius(0, 4) == 2);
    {
        const SubgroupLattice& lat = lattice_of(G("A4"));
        CHECK(lat.mobius(lat.bottom(), lat.top()) == 4);
        int v4 = index_by_order_unique(lat, 4);
        CHECK(lat.mobius(v4, lat.top()) == -1);
        // order-2 subgroups sit only under V4: mu to the top vanishes
        for (int i = 0; i < lat.size(); ++i)
            if (lat.at(i).order() == 2) CHECK(lat.mobius(i, lat.top()) == 0);
    }
    {
        // groups with non-trivial Frattini subgroup have mu(1, G) = 0
        for (const char* s : {"Q8", "D8", "C4", "C9", "C12"})
            CHECK(lattice_of(G(s)).mobius(0, lattice_of(G(s)).top()) == 0);
    }
    CHECK_THROWS_AS(lattice_of(G("S3")).mobius(1, 2), precondition_error);
}

TEST_CASE("Mobius satisfies the defining sum identity on every interval") {
    for (const char* s : {"S3", "D8", "Q8", "A4", "C12", "S4", "Elem(2,3)", "C2xC6"}) {
        const SubgroupLattice& lat = lattice_of(G(s));
        INFO(s);
        for (int i = 0; i < lat.size(); ++i)
            for (int j = 0; j < lat.size(); ++j) {
                if (!lat.leq(i, j)) continue;
                long long sum = 0;
                for (int z = 0; z < lat.size(); ++z)
                    if (lat.leq(i, z) && lat.leq(z, j)) sum += lat.mobius(i, z);
                CHECK(sum == (i == j ? 1 : 0));
            }
    }
}

TEST_CASE("Mobius of the normal-subgroup poset") {
    {
        // in Q8 every subgroup is normal, but the posets still differ only
        // by which chains exist; on the full interval both agree here
        const SubgroupLattice& lat = lattice_of(G("Q8"));
        CHECK(lat.mobius_normal(lat.bottom(), lat.top()) ==
              lat.mobius(lat.bottom(), lat.top()));
    }
    {
        // in S3 the normal poset is the chain 1 < C3 < S3
        const SubgroupLattice& lat = lattice_of(G("S3"));
        int c3 = index_by_order_unique(lat, 3);
        CHECK(lat.mobius_normal(lat.bottom(), lat.top()) == 0);
        CHECK(lat.mobius_normal(c3, lat.top()) == -1);
        CHECK(lat.mobius_normal(lat.bottom(), c3) == -1);
    }
    {
        // in A4 the normal poset is the chain 1 < V4 < A4
        const SubgroupLattice& lat = lattice_of(G("A4"));
        int v4 = index_by_order_unique(lat, 4);
        CHECK(lat.mobius_normal(lat.bottom(), v4) == -1);
        CHECK(lat.mobius_normal(lat.bottom(), lat.top()) == 0);
    }
    CHECK_THROWS_AS(lattice_of(G("S3")).mobius_normal(1, lattice_of(G("S3")).top()),
                    precondition_error);
}

TEST_CASE("m-numbers of cyclic groups") {
    // for C_p: m = 1 at the trivial subgroup, 1 - 1/p at the whole group
    for (int p : {2, 3, 5}) {
        Group g = G("C" + std::to_string(p));
        const SubgroupLattice& lat = lattice_of(g);
        CHECK(lat.m_of_normal(lat.bottom()) == BRational(1));
        CHECK(lat.m_of_normal(lat.top()) == BRational(1) - BRational(1, p));
    }
    // frozen values for C6 at N = 1, C2, C3, C6
    const SubgroupLattice& lat = lattice_of(G("C6"));
    REQUIRE(lat.size() == 4);
    CHECK(lat.m_of_normal(0) == BRational(1));
    CHECK(lat.m_of_normal(1) == BRational(1, 2));
    CHECK(lat.m_of_normal(2) == BRational(2, 3));
    CHECK(lat.m_of_normal(3) == BRational(1, 3));
}

TEST_CASE("frozen m-number values of the non-abelian anchors") {
    {
        const SubgroupLattice& lat = lattice_of(G("S3"));
        int c3 = index_by_order_unique(lat, 3);
        CHECK(lat.m_of_normal(lat.bottom()) == BRational(1));
        CHECK(lat.m_of_normal(c3) == BRational(0));
        CHECK(lat.m_of_normal(lat.top()) == BRational(0));
    }
    {
        const SubgroupLattice& lat = lattice_of(G("A4"));
        int v4 = index_by_order_unique(lat, 4);
        CHECK(lat.m_of_normal(lat.bottom()) == BRational(1));
        CHECK(lat.m_of_normal(v4) == BRational(0));
        CHECK(lat.m_of_normal(lat.top()) == BRational(0));
    }
    {
        // m_number wrapper with explicit subgroup values
        Group s3 = G("S3");
        CHECK(m_number(s3, Subgroup{s3, s3.derived_set()}) == BRational(0));
        CHECK(m_number(s3, Subgroup{s3, ElemSet::single(6, 0)}) == BRational(1));
        // non-normal argument is rejected
        bool threw = false;
        for (int x = 1; x < 6; ++x)
            if (s3.element_order(x) == 2) {
                try {
                    m_number(s3, Subgroup{s3, s3.closure_of({x})});
                } catch (const precondition_error&) {
                    threw = true;
                }
                break;
            }
        CHECK(threw);
    }
}

TEST_CASE("m-numbers are multiplicative over direct products") {
    // m for (G1 x G2, N1 x N2) equals the product of the factor values
    Group c2 = G("C2"), c3 = G("C3");
    Group c6 = direct_product(c2, c3);
    const SubgroupLattice& lat = lattice_of(c6);

    // build N1 x N2 masks from factor masks
    auto embed = [&](bool n1_full, bool n2_full) {
        ElemSet s(6);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 3; ++b) {
                if ((a == 0 || n1_full) && (b == 0 || n2_full)) s.set(a * 3 + b);
            }
        return s;
    };
    BRational m_c2_1(1), m_c2_c2 = BRational(1) - BRational(1, 2);
    BRational m_c3_1(1), m_c3_c3 = BRational(1) - BRational(1, 3);
    CHECK(lat.m_of_normal(lat.find(embed(false, false))) == m_c2_1 * m_c3_1);
    CHECK(lat.m_of_normal(lat.find(embed(true, false))) == m_c2_c2 * m_c3_1);
    CHECK(lat.m_of_normal(lat.find(embed(false, true))) == m_c2_1 * m_c3_c3);
    CHECK(lat.m_of_normal(lat.find(embed(true, true))) == m_c2_c2 * m_c3_c3);
}

TEST_CASE("p-elementary class representatives") {
    {
        const SubgroupLattice& lat = lattice_of(G("S3"));
        auto reps = p_elementary_class_reps(lat, 2);
        // 1, C2, C3 are 2-elementary; S3 is not
        std::vector<int> orders;
        for (int r : reps) orders.push_back(lat.at(r).order());
        CHECK(orders == std::vector<int>{1, 2, 3});
    }
    {
        const SubgroupLattice& lat = lattice_of(G("S4"));
        auto reps = p_elementary_class_reps(lat, 2);
        // frozen: 1, two C2 classes, C3, two V4 classes, C4, D8
        REQUIRE(reps.size() == 8);
        std::vector<int> orders;
        for (int r : reps) orders.push_back(lat.at(r).order());
        CHECK(orders == std::vector<int>{1, 2, 2, 3, 4, 4, 4, 8});
    }
    {
        const SubgroupLattice& lat = lattice_of(G("A4"));
        auto reps = p_elementary_class_reps(lat, 2);
        REQUIRE(reps.size() == 4);  // 1, C2, C3, V4
        std::vector<int> orders;
        for (int r : reps) orders.push_back(lat.at(r).order());
        CHECK(orders == std::vector<int>{1, 2, 3, 4});
    }
}

TEST_CASE("sections up to conjugacy match the union-find oracle") {
    auto always = [](const Subgroup&, const Subgroup&) { return true; };
    auto oracle_always = [](const Group&, const ElemSet&, const ElemSet&) { return true; };

    for (const char* s : {"S3", "C6", "D8", "Q8", "A4", "V4", "C2xC2xC2"}) {
        Group g = G(s);
        INFO(s);
        CHECK(static_cast<int>(sections_up_to_conjugacy(g, always).size()) ==
              oracles::section_class_count(g, oracle_always));
    }

    // frozen counts: S3 has 8 section classes, V4 has 12
    CHECK(sections_up_to_conjugacy(G("S3"), always).size() == 8);
    CHECK(sections_up_to_conjugacy(G("V4"), always).size() == 12);

    // a conjugation-invariant predicate: top subgroup is cyclic
    auto cyclic_top = [](const Subgroup& t, const Subgroup&) {
        return set_is_cyclic(t.parent, t.members);
    };
    auto oracle_cyclic_top = [](const Group& g, const ElemSet& t, const ElemSet&) {
        return set_is_cyclic(g, t);
    };
    for (const char* s : {"S3", "D8", "A4"}) {
        Group g = G(s);
        INFO(s);
        CHECK(static_cast<int>(sections_up_to_conjugacy(g, cyclic_top).size()) ==
              oracles::section_class_count(g, oracle_cyclic_top));
    }

    // every reported section is valid, and reported pairs are pairwise
    // non-conjugate
    Group g = G("S4");
    auto secs = sections_up_to_conjugacy(g, always);
    for (const Section& sec : secs) {
        CHECK(sec.bottom.members.subset_of(sec.top.members));
        CHECK(g.normal_under(sec.bottom.members, sec.top.members));
    }
    for (std::size_t i = 0; i < secs.size(); ++i)
        for (std::size_t j = i + 1; j < secs.size(); ++j) {
            bool conjugate = false;
            for (int gx = 0; gx < g.order() && !conjugate; ++gx)
                conjugate = g.conj_set(gx, secs[i].top.members) == secs[j].top.members &&
                            g.conj_set(gx, secs[i].bottom.members) == secs[j].bottom.members;
            CHECK_FALSE(conjugate);
        }
}
