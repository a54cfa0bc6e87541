#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxpizza/rootsys.hpp"

using namespace coxpizza;

TEST_CASE("type string parsing") {
    auto a3 = parse_type("A3");
    CHECK(a3.rank() == 3);
    CHECK(a3.matrix[0][1] == 3);
    CHECK(a3.matrix[1][2] == 3);
    CHECK(a3.matrix[0][2] == 2);
    CHECK(a3.description() == "A3");

    auto i7 = parse_type("I2(7)");
    CHECK(i7.rank() == 2);
    CHECK(i7.matrix[0][1] == 7);

    auto prod = parse_type("B3xA1");
    CHECK(prod.rank() == 4);
    CHECK(prod.factors.size() == 2);
    CHECK(prod.matrix[0][3] == 2);

    // aliases share the Coxeter matrix
    CHECK(parse_type("G2").matrix == parse_type("I2(6)").matrix);
    CHECK(parse_type("B2").matrix == parse_type("I2(4)").matrix);
    CHECK(parse_type("C3").matrix == parse_type("B3").matrix);
    // graph-level identifications
    CHECK(parse_type("D3").factors[0].tag() == "A3");
    CHECK(parse_type("I2(3)").factors[0].tag() == "A2");
    CHECK(parse_type("D2").factors.size() == 2);

    CHECK_THROWS_AS(parse_type("Q3"), ParseError);
    CHECK_THROWS_AS(parse_type("A3x"), ParseError);
    CHECK_THROWS_AS(parse_type("E9"), RankError);
    CHECK_THROWS_AS(parse_type("I2(1)"), RankError);
}

TEST_CASE("group orders") {
    CHECK(parse_type("A3").groupOrder() == 24);
    CHECK(parse_type("B3").groupOrder() == 48);
    CHECK(parse_type("D4").groupOrder() == 192);
    CHECK(parse_type("H3").groupOrder() == 120);
    CHECK(parse_type("H4").groupOrder() == 14400);
    CHECK(parse_type("F4").groupOrder() == 1152);
    CHECK(parse_type("E6").groupOrder() == 51840);
    CHECK(parse_type("I2(7)").groupOrder() == 14);
    CHECK(parse_type("A2xA1").groupOrder() == 12);
}

TEST_CASE("canonical root counts") {
    CHECK(RootSystem::canonical("A2").rootCount() == 6);
    CHECK(RootSystem::canonical("A3").rootCount() == 12);
    CHECK(RootSystem::canonical("B3").rootCount() == 18);
    CHECK(RootSystem::canonical("D4").rootCount() == 24);
    CHECK(RootSystem::canonical("F4").rootCount() == 48);
    CHECK(RootSystem::canonical("H3").rootCount() == 30);
    CHECK(RootSystem::canonical("H4").rootCount() == 120);
    CHECK(RootSystem::canonical("E6").rootCount() == 72);
    CHECK(RootSystem::canonical("I2(7)").rootCount() == 14);
    CHECK(RootSystem::canonical("A2xA1").rootCount() == 8);
}

TEST_CASE("canonical roots are unit vectors and reflection-stable") {
    for (const char* t : {"A3", "B3", "H3", "I2(5)"}) {
        auto rs = RootSystem::canonical(t);
        auto one = Scalar(rs.context(), Rational(1));
        for (int i = 0; i < rs.rootCount(); ++i) {
            CHECK(rs.innerRoots(i, i) == one);
            // s_alpha maps the root set to itself
            auto p = rs.reflectionPerm(i);
            CHECK(static_cast<int>(p.size()) == rs.rootCount());
        }
        // negation pairing
        for (int i = 0; i < rs.rootCount(); ++i) CHECK(rs.negate(rs.negate(i)) == i);
    }
}

TEST_CASE("positive definiteness of the canonical form") {
    for (const char* t : {"A3", "B3", "H3", "H4", "F4", "I2(12)"}) {
        auto rs = RootSystem::canonical(t);
        // leading principal minors of the Gram matrix are positive
        for (int k = 1; k <= rs.rank(); ++k) {
            SMat sub(k, zeroVec(rs.context(), k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = rs.gram()[i][j];
            CHECK(detSign(sub) == 1);
        }
    }
}

TEST_CASE("bourbaki coordinates") {
    auto b2 = RootSystem::bourbaki("B2");
    CHECK(b2.rootCount() == 8);
    CHECK(b2.positiveCount() == 4);
    auto a3 = RootSystem::bourbaki("A3");
    CHECK(a3.rootCount() == 12);
    CHECK(a3.dim() == 4);
    auto d4 = RootSystem::bourbaki("D4");
    CHECK(d4.rootCount() == 24);
    auto f4 = RootSystem::bourbaki("F4");
    CHECK(f4.rootCount() == 48);
    auto g2 = RootSystem::bourbaki("G2");
    CHECK(g2.rootCount() == 12);
    auto e6 = RootSystem::bourbaki("E6");
    CHECK(e6.rootCount() == 72);
    auto e7 = RootSystem::bourbaki("E7");
    CHECK(e7.rootCount() == 126);
    auto e8 = RootSystem::bourbaki("E8");
    CHECK(e8.rootCount() == 240);
    CHECK_THROWS_AS(RootSystem::bourbaki("H3"), UnsupportedType);

    // |Phi+| matches the canonical count for crystallographic types
    CHECK(RootSystem::bourbaki("B3").positiveCount() ==
          RootSystem::canonical("B3").positiveCount());
    CHECK(f4.positiveCount() == RootSystem::canonical("F4").positiveCount());
}

TEST_CASE("group enumeration") {
    auto a3 = RootSystem::canonical("A3");
    CHECK(a3.group().size() == 24);
    auto i7 = RootSystem::canonical("I2(7)");
    CHECK(i7.group().size() == 14);
    auto h3 = RootSystem::canonical("H3");
    CHECK(h3.group().size() == 120);
    auto e6 = RootSystem::canonical("E6");
    CHECK_THROWS_AS(e6.group(), GroupTooLarge);
}

TEST_CASE("length, determinant and the action") {
    auto rs = RootSystem::canonical("A3");
    const Group& g = rs.group();
    int longest = -1;
    for (std::size_t w = 0; w < g.size(); ++w) {
        // length equals the number of positive roots sent negative
        int inversions = 0;
        for (int p = 0; p < rs.positiveCount(); ++p)
            if (!rs.isPositive(g.act(static_cast<int>(w), p))) ++inversions;
        CHECK(inversions == g.length(static_cast<int>(w)));
        if (g.length(static_cast<int>(w)) == rs.positiveCount()) longest = static_cast<int>(w);
    }
    CHECK(longest >= 0);
    CHECK(g.length(longest) == 6);
    // identity acts trivially
    for (int p = 0; p < rs.rootCount(); ++p) CHECK(g.act(0, p) == p);
    // reflections have det -1
    for (int p = 0; p < rs.positiveCount(); ++p)
        CHECK(g.det(rs.reflectionElement(p)) == -1);
    // det is multiplicative
    for (int w1 : {1, 5, 11, 17}) {
        for (int w2 : {2, 7, 13, 23}) {
            int prod = g.multiply(w1, w2);
            CHECK(g.det(prod) == g.det(w1) * g.det(w2));
        }
    }
    // the permutation action commutes with negation
    for (std::size_t w = 0; w < g.size(); ++w)
        for (int p = 0; p < rs.rootCount(); ++p)
            CHECK(g.act(static_cast<int>(w), rs.negate(p)) ==
                  rs.negate(g.act(static_cast<int>(w), p)));
}

TEST_CASE("word application matches the permutation") {
    auto rs = RootSystem::canonical("B3");
    const Group& g = rs.group();
    for (std::size_t w = 0; w < g.size(); w += 7) {
        for (int p = 0; p < rs.rootCount(); p += 5) {
            SVec img = rs.applyElement(static_cast<int>(w), rs.root(p));
            CHECK(rs.findRoot(img) == g.act(static_cast<int>(w), p));
        }
    }
}

TEST_CASE("parabolic subsystems") {
    auto a3 = RootSystem::canonical("A3");
    auto sub = a3.parabolic({0, 1});
    CHECK(sub.rootCount() == 6); // A2 inside A3
    CHECK(sub.system().description() == "A2");
    for (int i = 0; i < sub.rootCount(); ++i) {
        int par = sub.parentRoots()[i];
        CHECK(a3.isPositive(par) == sub.isPositive(i));
    }
    auto empty = a3.parabolic({});
    CHECK(empty.rootCount() == 0);

    auto b3 = RootSystem::canonical("B3");
    auto sub2 = b3.parabolic({1, 2});
    CHECK(sub2.system().description() == "B2");
    CHECK(sub2.rootCount() == 8);
    auto split = b3.parabolic({0, 2});
    CHECK(split.system().factors.size() == 2);
    CHECK(split.rootCount() == 4);
}
