#include <doctest.h>

#include "multiproj/points.hpp"

#include "multiproj/monomials.hpp"
#include "test_util.hpp"

using namespace multiproj;
using namespace testutil;

TEST_CASE("normalize scales each factor to a leading 1") {
    const Dims d({1, 1});
    CHECK(int_point(d, {{2, 4}, {3, 3}}) == int_point(d, {{1, 2}, {1, 1}}));
    CHECK(int_point(d, {{0, 5}, {1, 0}}) == int_point(d, {{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(int_point(d, {{0, 0}, {1, 1}}), ZeroFactor);
    CHECK_THROWS_AS(int_point(d, {{1, 2, 3}, {1, 1}}), ArityError);
}

TEST_CASE("normalize is idempotent and projectively invariant") {
    Rng rng(31337);
    const Dims d({2, 1});
    for (int trial = 0; trial < 40; ++trial) {
        const PointSet x = random_point_set(rng, d, 1);
        const MultiPoint& p = x.points[0];
        CHECK(normalize(p.coords, d) == p);

        std::vector<std::vector<Rational>> scaled = p.coords;
        for (auto& f : scaled)
            for (auto& c : f)
                c *= make_rational(-7, 3);
        CHECK(normalize(scaled, d) == p);
    }
}

TEST_CASE("parse_point_set accepts the documented format") {
    const PointSet x = parse_point_set("# two points\n"
                                       "dims: 1 1\n"
                                       "\n"
                                       "1,1|1,1\n"
                                       " 1 , 2 | 1 , 2 \n");
    CHECK(x.dims == Dims({1, 1}));
    CHECK(x.size() == 2);
    CHECK(x.points[1] == int_point(Dims({1, 1}), {{1, 2}, {1, 2}}));

    const PointSet y = parse_point_set("dims: 1\n-1,1/2\n3,4\n");
    CHECK(y.dims == Dims({1}));
    CHECK(y.points[0].coords[0] == std::vector<Rational>{1, make_rational(-1, 2)});
}

TEST_CASE("parse_point_set rejects malformed input") {
    CHECK_THROWS_AS(parse_point_set(""), SyntaxError);
    CHECK_THROWS_AS(parse_point_set("1,1|1,1\n"), SyntaxError);       // missing header
    CHECK_THROWS_AS(parse_point_set("dims: 0 1\n1|1,1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_point_set("dims: 1 1\n"), EmptySet);
    CHECK_THROWS_AS(parse_point_set("dims: 1 1\n1,1\n"), ArityError); // one factor only
    CHECK_THROWS_AS(parse_point_set("dims: 1 1\n1,1,1|1,1\n"), ArityError);
    CHECK_THROWS_AS(parse_point_set("dims: 1 1\n1,x|1,1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_point_set("dims: 1 1\n1,1/0|1,1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_point_set("dims: 1 1\n0,0|1,1\n"), ZeroFactor);
    CHECK_THROWS_AS(parse_point_set("dims: 1 1\n1,1|1,1\n2,2|2,2\n"), DuplicatePoint);
}

TEST_CASE("parse reports duplicates after canonicalization") {
    CHECK_THROWS_AS(parse_point_set("dims: 1 1\n1,2|1,3\n2,4|5,15\n"), DuplicatePoint);
}

TEST_CASE("format_point_set round-trips") {
    const PointSet x = grid13();
    const PointSet back = parse_point_set(format_point_set(x));
    CHECK(back.dims == x.dims);
    CHECK(back.points == x.points);
}

TEST_CASE("projection sizes of the 13-point grid") {
    const PointSet x = grid13();
    CHECK(projection(x, 0).size() == 6);
    CHECK(projection(x, 1).size() == 4);

    PointSet single{Dims({1, 1}), {int_point(Dims({1, 1}), {{1, 5}, {1, 7}})}};
    CHECK(projection(single, 0).size() == 1);
    CHECK(projection(single, 1).size() == 1);
}

TEST_CASE("fibers partition the set") {
    const PointSet x = grid13();
    const std::vector<Fiber> f1 = fibers(x, 0);
    REQUIRE(f1.size() == 6);
    std::vector<int> sizes;
    for (const Fiber& f : f1)
        sizes.push_back(f.residual.size());
    CHECK(sizes == std::vector<int>{1, 4, 1, 2, 2, 3});

    const std::vector<Fiber> fa = fibers(cross4a(), 0);
    std::vector<int> sa;
    for (const Fiber& f : fa)
        sa.push_back(f.residual.size());
    CHECK(sa == std::vector<int>{1, 2, 1});

    PointSet single{Dims({1, 1}), {int_point(Dims({1, 1}), {{1, 5}, {1, 7}})}};
    CHECK(fibers(single, 1).size() == 1);
    CHECK(fibers(single, 1)[0].residual.size() == 1);

    PointSet p1{Dims({1}), {int_point(Dims({1}), {{1, 5}})}};
    CHECK_THROWS_AS(fibers(p1, 0), NotAProduct);
    CHECK_THROWS_AS(fiber_partition(p1, 0), NotAProduct);
}

TEST_CASE("fiber partitions") {
    const PointSet x = grid13();
    CHECK(fiber_partition(x, 0) == Partition({4, 3, 2, 2, 1, 1}));
    CHECK(fiber_partition(x, 1) == Partition({4, 3, 3, 3}));
    CHECK(fiber_partition(cross4a(), 0) == Partition({2, 1, 1}));
    CHECK(fiber_partition(cross4b(), 0) == Partition({2, 1, 1}));
}

TEST_CASE("fiber sizes sum to s for every factor") {
    Rng rng(90125);
    for (const Dims& d : {Dims({1, 1}), Dims({2, 1}), Dims({1, 1, 1})}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::uniform_int_distribution<int> size(1, 9);
            const PointSet x = random_point_set(rng, d, size(rng));
            for (int i = 0; i < d.factor_count(); ++i) {
                const Partition part = fiber_partition(x, i);
                CHECK(part.sum() == x.size());
                CHECK(part.size() == projection(x, i).size());
            }
        }
    }
}

TEST_CASE("point ideal generators") {
    const Dims d({1, 1});
    const MultiPoint p = int_point(d, {{1, 2}, {1, 3}});
    const std::vector<MultiForm> gens = point_ideal_generators(p);
    REQUIRE(gens.size() == 2);
    CHECK(to_string(gens[0], d) == "-2*x0 + x1");
    CHECK(to_string(gens[1], d) == "-3*y0 + y1");

    const MultiPoint q = int_point(d, {{0, 1}, {1, 0}});
    const std::vector<MultiForm> qgens = point_ideal_generators(q);
    REQUIRE(qgens.size() == 2);
    CHECK(to_string(qgens[0], d) == "x0");
    CHECK(to_string(qgens[1], d) == "y1");
}

TEST_CASE("generators vanish at their point and separate from any other") {
    Rng rng(777001);
    for (const Dims& d : {Dims({1, 1}), Dims({2, 1}), Dims({1, 1, 1}), Dims({3})}) {
        for (int trial = 0; trial < 20; ++trial) {
            const PointSet x = random_point_set(rng, d, 2);
            const MultiPoint& p = x.points[0];
            const MultiPoint& q = x.points[1];

            int nonzero_at_q = 0;
            int expected = 0;
            for (int i = 0; i < d.factor_count(); ++i)
                expected += d[i];
            const std::vector<MultiForm> gens = point_ideal_generators(p);
            CHECK(static_cast<int>(gens.size()) == expected);
            for (const MultiForm& g : gens) {
                CHECK(evaluate(g, p) == 0);
                if (evaluate(g, q) != 0)
                    ++nonzero_at_q;
            }
            CHECK(nonzero_at_q > 0);
        }
    }
}
