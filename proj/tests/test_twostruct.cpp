#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxpizza/complex.hpp"
#include "coxpizza/twostruct.hpp"

using namespace coxpizza;

namespace {

int sumOfSigns(const char* type) {
    auto rs = RootSystem::canonical(type);
    auto all = enumerate_two_structures(rs);
    int sum = 0;
    for (const auto& ts : all) sum += epsilon(rs, ts);
    return sum;
}

} // namespace

TEST_CASE("seed types per irreducible family") {
    auto seedTag = [](const char* type) {
        auto rs = RootSystem::canonical(type);
        return seed_two_structure(rs).typeTag();
    };
    CHECK(seedTag("A1") == "A1");
    CHECK(seedTag("A2") == "A1");
    CHECK(seedTag("A3") == "A1^2");
    CHECK(seedTag("A4") == "A1^2");
    CHECK(seedTag("A5") == "A1^3");
    CHECK(seedTag("B2") == "B2");
    CHECK(seedTag("B3") == "A1xB2");
    CHECK(seedTag("B4") == "B2^2");
    CHECK(seedTag("D4") == "A1^4");
    CHECK(seedTag("D5") == "A1^4");
    CHECK(seedTag("F4") == "B2^2");
    CHECK(seedTag("G2") == "A1^2");
    CHECK(seedTag("H3") == "A1^3");
    CHECK(seedTag("H4") == "A1^4");
    CHECK(seedTag("E6") == "A1^4");
    CHECK(seedTag("E7") == "A1^7");
    CHECK(seedTag("E8") == "A1^8");
    CHECK(seedTag("I2(5)") == "A1");
    CHECK(seedTag("I2(7)") == "A1");
    CHECK(seedTag("I2(8)") == "I2(8)");
    CHECK(seedTag("I2(12)") == "B2");
    CHECK(seedTag("I2(6)") == "A1^2");
    CHECK(seedTag("B2xA2") == "A1xB2");
}

TEST_CASE("seeds pass the 2-structure check where the group is enumerable") {
    for (const char* type : {"A3", "A4", "B3", "D4", "F4", "H3", "I2(8)", "I2(12)", "A2xA1"}) {
        auto rs = RootSystem::canonical(type);
        auto seed = seed_two_structure(rs);
        auto check = is_two_structure(rs, seed.lines);
        INFO(type, ": ", check.reason);
        CHECK(check.ok);
    }
}

TEST_CASE("B2 has exactly one 2-structure (brute-force subset oracle)") {
    auto rs = RootSystem::canonical("B2");
    // brute force: all negation-closed subsets = subsets of the 4 lines
    int found = 0;
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<int> lines;
        for (int l = 0; l < 4; ++l)
            if ((mask >> l) & 1) lines.push_back(l);
        if (is_two_structure(rs, lines).ok) ++found;
    }
    CHECK(found == 1);
    CHECK(enumerate_two_structures(rs).size() == 1);
}

TEST_CASE("A2 singletons are 2-structures (stabilizer scan oracle)") {
    auto rs = RootSystem::canonical("A2");
    for (int l = 0; l < 3; ++l) CHECK(is_two_structure(rs, {l}).ok);
    CHECK(enumerate_two_structures(rs).size() == 3);
}

TEST_CASE("A3: a single A1 pair is not a 2-structure") {
    auto rs = RootSystem::canonical("A3");
    // simple root alpha_1 = e1-e2; the reflection in the orthogonal root
    // e3-e4 fixes it and has det -1
    int line = rs.positiveIndex(rs.simpleRoot(0));
    auto check = is_two_structure(rs, {line});
    CHECK(!check.ok);
    CHECK(check.witnessElement >= 0);
}

TEST_CASE("2-structure counts") {
    CHECK(enumerate_two_structures(RootSystem::canonical("A3")).size() == 3);
    CHECK(enumerate_two_structures(RootSystem::canonical("A4")).size() == 15);
    CHECK(enumerate_two_structures(RootSystem::canonical("B3")).size() == 3);
    CHECK(enumerate_two_structures(RootSystem::canonical("I2(5)")).size() == 5);
    CHECK(enumerate_two_structures(RootSystem::canonical("I2(8)")).size() == 1);
    CHECK(enumerate_two_structures(RootSystem::canonical("I2(12)")).size() == 3);
    // type H: the orthogonal frames (5 octahedra in the icosahedron)
    CHECK(enumerate_two_structures(RootSystem::canonical("H3")).size() == 5);
}

TEST_CASE("all 2-structures of an irreducible system share one type tag") {
    for (const char* type : {"A4", "B3", "D4", "H3", "I2(12)"}) {
        auto rs = RootSystem::canonical(type);
        auto all = enumerate_two_structures(rs);
        std::set<std::string> tags;
        std::set<int> ranks;
        for (const auto& ts : all) {
            tags.insert(ts.typeTag());
            ranks.insert(ts.rank());
        }
        CHECK(tags.size() == 1);
        CHECK(ranks.size() == 1);
    }
}

TEST_CASE("sum of signs equals 1") {
    CHECK(sumOfSigns("A1") == 1);
    CHECK(sumOfSigns("A2") == 1);
    CHECK(sumOfSigns("A3") == 1);
    CHECK(sumOfSigns("B2") == 1);
    CHECK(sumOfSigns("B3") == 1);
    CHECK(sumOfSigns("I2(5)") == 1);
    CHECK(sumOfSigns("I2(7)") == 1);
    CHECK(sumOfSigns("I2(9)") == 1);
    CHECK(sumOfSigns("I2(11)") == 1);
    CHECK(sumOfSigns("H3") == 1);
    CHECK(sumOfSigns("A2xA1") == 1);
}

TEST_CASE("epsilon is independent of the theta choices") {
    for (const char* type : {"B3", "I2(8)", "F4", "A3"}) {
        auto rs = RootSystem::canonical(type);
        auto all = enumerate_two_structures(rs);
        for (const auto& ts : all) {
            int expected = epsilon(rs, ts);
            std::vector<int> order(ts.components.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
            int rank2 = 0;
            for (const auto& c : ts.components)
                if (c.rank() == 2) ++rank2;
            do {
                for (int choiceMask = 0; choiceMask < (1 << rank2); ++choiceMask) {
                    std::vector<int> choices;
                    for (int b = 0; b < rank2; ++b) choices.push_back((choiceMask >> b) & 1);
                    auto theta = theta_sequence(rs, ts, order, choices);
                    int corr = 0;
                    for (const auto& f : rs.system().factors) {
                        if (f.isA2nOddN()) ++corr;
                        if (f.isI2OddCorrection()) ++corr;
                    }
                    int val = (corr % 2 ? -1 : 1) * detWTheta(rs, theta);
                    CHECK(val == expected);
                }
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }
}

TEST_CASE("rank-2 components admit exactly two valid theta pairs") {
    for (const char* type : {"B2", "I2(8)", "B3"}) {
        auto rs = RootSystem::canonical(type);
        auto seed = seed_two_structure(rs);
        for (const auto& comp : seed.components) {
            if (comp.rank() != 2) continue;
            CHECK(validThetaPairs(rs, comp).size() == 2);
        }
    }
}

TEST_CASE("epsilon equals the stabilizer-quotient oracle") {
    for (const char* type : {"A3", "A4", "B3", "I2(7)", "I2(8)", "I2(12)", "H3", "A2xA1"}) {
        auto rs = RootSystem::canonical(type);
        auto all = enumerate_two_structures(rs);
        for (const auto& ts : all) {
            Rational oracle = epsilon_stabilizer_oracle(rs, ts);
            CHECK(oracle == Rational(epsilon(rs, ts)));
        }
    }
}

TEST_CASE("|W(phi)| / |W_1(phi)| equals |T(Phi)|") {
    for (const char* type : {"A3", "B3", "H3", "I2(12)", "I2(7)"}) {
        auto rs = RootSystem::canonical(type);
        auto all = enumerate_two_structures(rs);
        auto [wAll, w1] = stabilizer_counts(rs, all[0]);
        CHECK(wAll % w1 == 0);
        CHECK(static_cast<std::size_t>(wAll / w1) == all.size());
    }
}

TEST_CASE("orbit closure and sign equivariance under the group action") {
    for (const char* type : {"A3", "B3", "I2(8)"}) {
        auto rs = RootSystem::canonical(type);
        const Group& g = rs.group();
        auto all = enumerate_two_structures(rs);
        std::set<std::vector<int>> tset;
        for (const auto& ts : all) tset.insert(ts.lines);
        for (const auto& ts : all) {
            for (int w = 0; w < static_cast<int>(g.size()); w += 3) {
                auto img = actOnLines(rs, w, ts.lines);
                CHECK(tset.count(img) == 1);
                // if w(phi+) stays positive, the sign transforms by det(w)
                bool positive = true;
                for (int l : ts.lines)
                    if (!rs.isPositive(g.act(w, l))) positive = false;
                if (positive) {
                    TwoStructure wts;
                    wts.lines = img;
                    wts.components = *decomposeComponents(rs, img);
                    CHECK(epsilon(rs, wts) == g.det(w) * epsilon(rs, ts));
                }
            }
        }
    }
}

TEST_CASE("chamber restriction Z_phi") {
    auto rs = RootSystem::canonical("A2");
    auto fp = FacePoset::full(rs);
    int b = fp.fundamentalChamber();
    for (const auto& ts : enumerate_two_structures(rs)) {
        // Z_phi(B) = B_phi (all-plus on the lines of phi)
        SignVec zb = fp.restrictSign(b, ts.lines);
        for (std::size_t p = 0; p < ts.lines.size(); ++p) CHECK(zb.at(static_cast<int>(p)) == 1);
        // the chamber adjacent to B across the phi hyperplane restricts to -B_phi
        int line = ts.lines[0];
        int pos = fp.positionOfRoot(line);
        for (int t : fp.chambers()) {
            if (fp.separationCount(b, t) != 1) continue;
            if ((fp.separationMask(b, t) >> pos & 1) == 0) continue;
            CHECK(fp.restrictSign(t, ts.lines).at(0) == -1);
        }
    }
}

TEST_CASE("orthogonal set counts (Table-style oracle values)") {
    auto h3 = RootSystem::canonical("H3");
    CHECK(orthogonal_set_count(h3, 1) == 30);
    CHECK(orthogonal_set_count(h3, 2) == 60);
    CHECK(orthogonal_set_count(h3, 3) == 40);
    auto f4 = RootSystem::bourbaki("F4");
    CHECK(orthogonal_set_count(f4, 1, Rational(1)) == 24);  // short roots
    CHECK(orthogonal_set_count(f4, 4, Rational(1)) == 48);
    CHECK(orthogonal_set_count(f4, 4, Rational(2)) == 48);  // long roots
    auto a3 = RootSystem::canonical("A3");
    CHECK(orthogonal_set_count(a3, 1) == 12);
}

TEST_CASE("residual counts (Lemma-style case table)") {
    auto check = [](const char* type) {
        auto rs = RootSystem::canonical(type);
        auto ts = seed_two_structure(rs);
        return residual_count_check(rs, ts);
    };
    auto a4 = check("A4");
    CHECK(a4.residual == 8);
    CHECK(a4.pass);
    auto i12 = check("I2(12)");
    CHECK(i12.residual == 8);
    CHECK(i12.pass);
    auto a1 = check("A1");
    CHECK(a1.residual == 0);
    CHECK(a1.pass);
    for (const char* type : {"A2", "A3", "A5", "B2", "B3", "B4", "D4", "F4", "G2", "H3",
                             "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "I2(9)", "I2(10)",
                             "I2(11)"}) {
        CHECK(check(type).pass);
    }
}
