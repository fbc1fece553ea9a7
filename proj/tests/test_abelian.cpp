#include "doctest.h"

#include "qcohom/abelian.hpp"

#include <random>

using namespace qcohom;

TEST_CASE("invariant factor canonical form") {
    FinAbGroup g = FinAbGroup::from_diagonal({Int(1), Int(2), Int(6), Int(0)}, 5);
    CHECK(g.free_rank == 2);
    CHECK(g.torsion == std::vector<Int>{Int(2), Int(6)});
    CHECK(g.to_string() == "Z^2 + Z/2 + Z/6");

    FinAbGroup s = direct_sum(FinAbGroup::cyclic(4), FinAbGroup::cyclic(6));
    CHECK(s.torsion == std::vector<Int>{Int(2), Int(12)});

    CHECK(FinAbGroup::cyclic(1).is_zero());
}

TEST_CASE("json round trip") {
    FinAbGroup g{2, {Int(2)}};
    CHECK(g.to_json() == "{\"free_rank\":2,\"torsion\":[2]}");
    CHECK(FinAbGroup::from_json(g.to_json()) == g);
    CHECK(FinAbGroup::from_json("{\"free_rank\":0,\"torsion\":[]}") == FinAbGroup::zero());
    CHECK_THROWS_AS(FinAbGroup::from_json("{\"free_rank\":0,\"torsion\":[4,2]}"), Error);
}

TEST_CASE("kernel, image, cokernel of multiplication by 2") {
    FinAbGroup z = FinAbGroup::free(1);
    GroupHom times2(z, z, IntMatrix(1, 1, {Int(2)}));
    CHECK(hom_kernel(times2).is_zero());
    CHECK(hom_cokernel(times2) == FinAbGroup::cyclic(2));
    CHECK(hom_image(times2) == FinAbGroup::free(1));
}

TEST_CASE("image of Z -> Z/4 sending 1 to 2") {
    GroupHom h(FinAbGroup::free(1), FinAbGroup::cyclic(4), IntMatrix(1, 1, {Int(2)}));
    CHECK(hom_image(h) == FinAbGroup::cyclic(2));
    CHECK(hom_kernel(h) == FinAbGroup::free(1));
    CHECK(hom_cokernel(h) == FinAbGroup::cyclic(2));
}

TEST_CASE("hom validation rejects torsion violations") {
    // Z/2 -> Z cannot send the generator to 1.
    CHECK_THROWS_AS(GroupHom(FinAbGroup::cyclic(2), FinAbGroup::free(1), IntMatrix(1, 1, {Int(1)})),
                    Error);
    // Z/2 -> Z/4 must land in the 2-torsion.
    CHECK_THROWS_AS(GroupHom(FinAbGroup::cyclic(2), FinAbGroup::cyclic(4), IntMatrix(1, 1, {Int(1)})),
                    Error);
    CHECK_NOTHROW(GroupHom(FinAbGroup::cyclic(2), FinAbGroup::cyclic(4), IntMatrix(1, 1, {Int(2)})));
}

TEST_CASE("fiber product of the two reductions Z -> Z/2") {
    GroupHom red(FinAbGroup::free(1), FinAbGroup::cyclic(2), IntMatrix(1, 1, {Int(1)}));
    FiberProduct fp = fiber_product(red, red);
    CHECK(fp.group == FinAbGroup::free(2));
    // Projections satisfy f∘pr_a = g∘pr_b.
    GroupHom left = red.compose(fp.pr_a);
    GroupHom right = red.compose(fp.pr_b);
    CHECK(left.matrix.mod(2) == right.matrix.mod(2));
}

TEST_CASE("fiber product of identities is the diagonal") {
    GroupHom id = GroupHom::identity(FinAbGroup::free(1));
    FiberProduct fp = fiber_product(id, id);
    CHECK(fp.group == FinAbGroup::free(1));
}

TEST_CASE("fiber product with a zero source") {
    GroupHom f = GroupHom::zero(FinAbGroup::zero(), FinAbGroup::cyclic(2));
    GroupHom g = GroupHom::identity(FinAbGroup::cyclic(2));
    FiberProduct fp = fiber_product(f, g);
    CHECK(fp.group.is_zero());
}

TEST_CASE("fiber product rejects mismatched targets") {
    GroupHom f = GroupHom::identity(FinAbGroup::free(1));
    GroupHom g = GroupHom::identity(FinAbGroup::cyclic(2));
    CHECK_THROWS_AS(fiber_product(f, g), Error);
}

TEST_CASE("fiber product against the identity recovers the source") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<FinAbGroup> sources = {FinAbGroup::free(2), direct_sum(FinAbGroup::free(1), FinAbGroup::cyclic(4)),
                                       FinAbGroup::cyclic(6), FinAbGroup::zero()};
    std::vector<FinAbGroup> targets = {FinAbGroup::cyclic(2), FinAbGroup::free(1),
                                       direct_sum(FinAbGroup::cyclic(2), FinAbGroup::cyclic(2))};
    for (const FinAbGroup& src : sources)
        for (const FinAbGroup& tgt : targets) {
            // Build a random valid hom by scaling columns to respect orders.
            IntMatrix m(tgt.generator_count(), src.generator_count());
            for (std::size_t j = 0; j < src.generator_count(); ++j)
                for (std::size_t i = 0; i < tgt.generator_count(); ++i) {
                    Int d = src.generator_order(j);
                    Int e = tgt.generator_order(i);
                    Int x = dist(rng);
                    if (d != 0) {
                        if (e == 0)
                            x = 0;
                        else
                            x = x * (e / boost::multiprecision::gcd(e, d));
                    }
                    m.at(i, j) = e == 0 ? x : Int(x % e);
                }
            GroupHom f(src, tgt, m);
            FiberProduct fp = fiber_product(f, GroupHom::identity(tgt));
            CHECK(fp.group == src);
        }
}

TEST_CASE("subquotient bookkeeping") {
    // K = Z^2, L = <(2,0),(0,3)>: Z/2 + Z/3 = Z/6.
    IntMatrix k = IntMatrix::identity(2);
    IntMatrix l(2, 2, {Int(2), Int(0), Int(0), Int(3)});
    Subquotient sq(k, l);
    CHECK(sq.group() == FinAbGroup::cyclic(6));
    std::vector<Int> gen = sq.generator(0);
    std::vector<Int> c = sq.coords(gen);
    CHECK(c == std::vector<Int>{Int(1)});
    CHECK(sq.is_zero_class({Int(2), Int(3)}));
    CHECK(!sq.is_zero_class({Int(1), Int(0)}));
}

TEST_CASE("induced hom bijectivity") {
    // Z^2/<(0,2)> -> Z^2/<(0,2)> by the identity matrix: bijective.
    IntMatrix k = IntMatrix::identity(2);
    IntMatrix l(1, 2, {Int(0), Int(2)});
    Subquotient a(k, l), b(k, l);
    GroupHom h = induced_hom(a, b, IntMatrix::identity(2));
    CHECK(h.is_bijective());
    // Multiplication by 2 on the free part: injective on free, kills torsion.
    GroupHom h2 = induced_hom(a, b, IntMatrix::diagonal({Int(2), Int(2)}));
    CHECK(!h2.is_surjective());
    CHECK(!h2.is_injective());
}
