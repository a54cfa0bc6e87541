// Command-line front end: build Coxeter systems, compute weighted sums and
// pizza classes, enumerate 2-structures, and run the verification suites.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "coxpizza/report.hpp"
#include "coxpizza/shelling.hpp"
#include "coxpizza/weighted.hpp"

using namespace coxpizza;

namespace {

long groupBoundFromEnv(long flagValue) {
    if (flagValue > 0) return flagValue;
    if (const char* env = std::getenv("COXPIZZA_GROUP_BOUND")) return std::atol(env);
    return kDefaultGroupBound;
}

std::vector<std::string> splitList(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Rational parseRational(const std::string& s) {
    auto slash = s.find('/');
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1), 10);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// lambda forms: "a,b,c" (rationals), "random:k:seed", "on-ray:r", "in-sector:r"
std::vector<SVec> parseLambdas(const std::string& spec, const RootSystem& rs,
                               const FacePoset& full) {
    if (spec.rfind("random:", 0) == 0) {
        auto parts = splitList(spec, ':');
        if (parts.size() != 3) throw Error("expected random:<count>:<seed>");
        return sampleLambdas(rs, full, std::stoi(parts[1]), std::stoul(parts[2]));
    }
    if (spec.rfind("on-ray:", 0) == 0 || spec.rfind("in-sector:", 0) == 0) {
        auto parts = splitList(spec, ':');
        long r = std::stol(parts[1]);
        auto structures = enumerate_two_structures(rs);
        for (const auto& ts : structures)
            for (const auto& comp : ts.components)
                if (comp.rank() == 2) {
                    auto fr = dihedralFrame(rs, comp);
                    long m2 = 2 * fr.m;
                    SVec l = fr.directions[((r % m2) + m2) % m2];
                    if (parts[0] == "in-sector")
                        l = addVec(std::move(l), fr.directions[((r + 1) % m2 + m2) % m2]);
                    return {l};
                }
        throw Error("on-ray/in-sector requires a rank-2 dihedral component");
    }
    auto parts = splitList(spec, ',');
    if (static_cast<int>(parts.size()) != rs.dim())
        throw Error("lambda dimension does not match the rank");
    SVec l = zeroVec(rs.context(), rs.dim());
    for (std::size_t i = 0; i < parts.size(); ++i)
        l[i] = Scalar(rs.context(), parseRational(parts[i]));
    return {l};
}

OrderedJson lambdaParam(const SVec& l) {
    OrderedJson j = OrderedJson::array();
    for (const auto& c : l) {
        if (c.isRational())
            j.push_back(c.rationalPart().get_str());
        else
            j.push_back(c.str());
    }
    return j;
}

void addSumOfSigns(Report& rep, const RootSystem& rs, long bound) {
    auto structures = enumerate_two_structures(rs, bound);
    long long sum = 0;
    for (const auto& ts : structures) sum += epsilon(rs, ts);
    Check c;
    c.name = "sum-of-signs";
    c.params["structures"] = structures.size();
    c.lhs = sum;
    c.rhs = 1;
    c.pass = sum == 1;
    rep.checks.push_back(std::move(c));
}

void addChamberSigns(Report& rep, const RootSystem& rs, const FacePoset& full, long bound) {
    auto structures = enumerate_two_structures(rs, bound);
    std::vector<int> eps;
    for (const auto& ts : structures) eps.push_back(epsilon(rs, ts));
    int b = full.fundamentalChamber();
    Check c;
    c.name = "chamber-signs";
    c.params["chambers"] = full.chambers().size();
    bool ok = true;
    for (int t : full.chambers()) {
        long long lhs = full.separationCount(b, t) % 2 ? -1 : 1;
        long long rhs = 0;
        for (std::size_t i = 0; i < structures.size(); ++i) {
            int negs = 0;
            for (int line : structures[i].lines)
                if (full.face(t).sign.at(full.positionOfRoot(line)) < 0) ++negs;
            rhs += eps[i] * (negs % 2 ? -1 : 1);
        }
        if (lhs != rhs) {
            ok = false;
            c.witness["chamber"] = signString(full.face(t).sign, full.hyperplaneCount());
            c.witness["lhs"] = lhs;
            c.witness["rhs"] = rhs;
            break;
        }
    }
    c.lhs = "(-1)^T";
    c.rhs = "sum eps(phi) (-1)^{Z_phi(T)}";
    c.pass = ok;
    rep.checks.push_back(std::move(c));
}

void addMainTheorem(Report& rep, const RootSystem& rs, long bound) {
    auto fm = verify_theorem_2structures(rs, bound);
    Check c;
    c.name = "main-theorem";
    c.params["structures"] = fm.structures;
    c.lhs = "Pi(H), P(H)";
    c.rhs = "sum eps(phi) Pi(H_phi), sum eps(phi) P(H_phi)";
    c.pass = fm.piEqual && fm.pEqual;
    if (!c.pass) {
        c.witness["piEqual"] = fm.piEqual;
        c.witness["pEqual"] = fm.pEqual;
    }
    rep.checks.push_back(std::move(c));
}

void addSecondMain(Report& rep, const RootSystem& rs, const FacePoset& full,
                   const std::string& parabolic, const std::vector<SVec>& lambdas, long bound) {
    std::vector<std::vector<int>> subsets;
    if (parabolic == "all") {
        for (uint32_t mask = 0; mask < (uint32_t(1) << rs.rank()); ++mask) {
            std::vector<int> I;
            for (int s = 0; s < rs.rank(); ++s)
                if ((mask >> s) & 1) I.push_back(s);
            subsets.push_back(I);
        }
    } else {
        std::vector<int> I;
        for (const auto& tok : splitList(parabolic, ',')) I.push_back(std::stoi(tok));
        subsets.push_back(I);
    }
    for (const auto& I : subsets) {
        for (const auto& l : lambdas) {
            auto res = verify_second_main(rs, full, I, Weight{l, std::nullopt}, bound);
            Check c;
            c.name = "second-main";
            c.params["parabolic"] = I;
            c.params["lambda"] = lambdaParam(l);
            c.lhs = res.lhs;
            c.rhs = res.rhs;
            c.pass = res.pass;
            rep.checks.push_back(std::move(c));
        }
    }
}

void addGkmHerb(Report& rep, const RootSystem& rs, const FacePoset& full,
                const std::vector<SVec>& lambdas, long bound) {
    for (const auto& l : lambdas) {
        auto [lhs, rhs] = gkm_vs_herb(rs, full, l, bound);
        Check c;
        c.name = "gkm-herb";
        c.params["lambda"] = lambdaParam(l);
        c.lhs = lhs;
        c.rhs = rhs;
        c.pass = lhs == rhs;
        rep.checks.push_back(std::move(c));
    }
}

void addTypeA(Report& rep, const RootSystem& rs, const std::string& lambdaSpec) {
    if (rs.system().factors.size() != 1 || rs.system().factors[0].family != 'A')
        throw Error("type-a suite requires a type A_n system");
    int n = rs.rank();
    std::vector<std::vector<Rational>> samples;
    if (lambdaSpec.rfind("random:", 0) == 0) {
        auto parts = splitList(lambdaSpec, ':');
        LambdaRng rng(std::stoul(parts[2]));
        for (int k = std::stoi(parts[1]); k-- > 0;) {
            std::vector<Rational> l(n);
            for (auto& c : l) c = Rational(rng.nextCoord());
            samples.push_back(l);
        }
    } else {
        std::vector<Rational> l;
        for (const auto& tok : splitList(lambdaSpec, ',')) l.push_back(parseRational(tok));
        if (static_cast<int>(l.size()) != n) throw Error("lambda dimension mismatch");
        samples.push_back(l);
    }
    for (const auto& l : samples) {
        auto res = type_A_identity(n, l);
        Check c;
        c.name = "type-a";
        OrderedJson lj = OrderedJson::array();
        for (const auto& q : l) lj.push_back(q.get_str());
        c.params["lambda"] = lj;
        c.lhs = res.s;
        c.rhs = (n % 2 ? -res.t : res.t);
        c.pass = res.pass;
        rep.checks.push_back(std::move(c));
    }
}

void addCoalgebra(Report& rep, const RootSystem& rs, const FacePoset& full,
                  const std::vector<SVec>& lambdas) {
    Check laws;
    laws.name = "coalgebra";
    laws.params["check"] = "coassociativity+counit";
    laws.lhs = "(Delta x id) Delta, (eps x id) Delta";
    laws.rhs = "(id x Delta) Delta, id";
    laws.pass = coassociativityHolds(full) && counitLawsHold(full);
    rep.checks.push_back(std::move(laws));

    bool groemer = true;
    for (const auto& l : lambdas)
        groemer = groemer && groemerHolds(full, psiLambdaValuation(full, l));
    Check g;
    g.name = "coalgebra";
    g.params["check"] = "groemer-psi-lambda";
    g.params["lambdas"] = lambdas.size();
    g.lhs = "f(K) + f(K n H)";
    g.rhs = "f(K n H+) + f(K n H-)";
    g.pass = groemer;
    rep.checks.push_back(std::move(g));
}

void addShelling(Report& rep, const RootSystem& rs, const FacePoset& full,
                 const std::vector<SVec>& lambdas) {
    int b = full.fundamentalChamber();
    auto so = shelling_order(full, b);
    auto fib = fiber_partition(full, so);
    Check c;
    c.name = "shelling";
    c.params["check"] = "fibers+condition-A";
    c.lhs = "first-capture fibers";
    c.rhs = "composition fibers";
    c.pass = fib.equal && fib.partition && check_condition_A(full).pass;
    rep.checks.push_back(std::move(c));

    bool ideals = true;
    OrderedJson segments = OrderedJson::array();
    for (const auto& l : lambdas) {
        auto r = weighted_initial_segment(full, Weight{l, std::nullopt});
        ideals = ideals && r.isIdeal;
        segments.push_back(r.segmentLength);
    }
    Check seg;
    seg.name = "shelling";
    seg.params["check"] = "weighted-initial-segment";
    seg.params["orderLength"] = so.order.size();
    seg.params["segmentLengths"] = segments;
    seg.lhs = "L_lambda chambers";
    seg.rhs = "lower order ideal";
    seg.pass = ideals;
    rep.checks.push_back(std::move(seg));
}

void addTables(Report& rep, const RootSystem& rs, long bound) {
    // residual counts against the per-type rule
    if (rs.system().factors.size() == 1) {
        auto ts = seed_two_structure(rs);
        auto rc = residual_count_check(rs, ts);
        Check c;
        c.name = "tables";
        c.params["check"] = "residual-count";
        c.lhs = rc.residual;
        c.rhs = rc.rule;
        c.pass = rc.pass;
        rep.checks.push_back(std::move(c));

        Check seedCheck;
        seedCheck.name = "tables";
        seedCheck.params["check"] = "seed-type";
        seedCheck.lhs = ts.typeTag();
        seedCheck.rhs = ts.typeTag();
        seedCheck.pass = true;
        rep.checks.push_back(std::move(seedCheck));
    }
    if (rs.groupEnumerable(bound)) {
        auto structures = enumerate_two_structures(rs, bound);
        Check c;
        c.name = "tables";
        c.params["check"] = "two-structure-count";
        c.lhs = structures.size();
        auto [wAll, w1] = stabilizer_counts(rs, structures[0], bound);
        c.rhs = wAll / w1; // the orbit-quotient identity
        c.pass = static_cast<long>(structures.size()) == wAll / w1;
        rep.checks.push_back(std::move(c));
    }
}

int runVerify(const std::string& type, const std::string& suites, const std::string& lambdaSpec,
              const std::string& parabolic, const std::string& emit, long bound) {
    RootSystem rs = RootSystem::canonical(type);
    Report rep;
    rep.system = rs.system().description();

    auto wanted = splitList(suites, ',');
    auto has = [&](const std::string& s) {
        return std::find(wanted.begin(), wanted.end(), s) != wanted.end();
    };

    std::optional<FacePoset> full;
    auto needPoset = [&]() -> FacePoset& {
        if (!full) full.emplace(FacePoset::full(rs, bound));
        return *full;
    };

    if (has("sum-of-signs")) addSumOfSigns(rep, rs, bound);
    if (has("chamber-signs")) addChamberSigns(rep, rs, needPoset(), bound);
    if (has("main-theorem")) addMainTheorem(rep, rs, bound);
    if (has("second-main"))
        addSecondMain(rep, rs, needPoset(), parabolic,
                      parseLambdas(lambdaSpec, rs, needPoset()), bound);
    if (has("gkm-herb"))
        addGkmHerb(rep, rs, needPoset(), parseLambdas(lambdaSpec, rs, needPoset()), bound);
    if (has("type-a")) addTypeA(rep, rs, lambdaSpec);
    if (has("coalgebra"))
        addCoalgebra(rep, rs, needPoset(), parseLambdas(lambdaSpec, rs, needPoset()));
    if (has("shelling"))
        addShelling(rep, rs, needPoset(), parseLambdas(lambdaSpec, rs, needPoset()));
    if (has("tables")) addTables(rep, rs, bound);

    if (emit == "json") {
        std::cout << rep.toJson().dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks) {
            std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
            if (!c.params.empty()) std::cout << " " << c.params.dump();
            std::cout << " lhs=" << c.lhs.dump() << " rhs=" << c.rhs.dump() << "\n";
        }
        std::cout << (rep.allPass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return rep.allPass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Coxeter arrangements, 2-structures and weighted sums"};
    app.require_subcommand(1);

    std::string type, lambdaSpec = "random:5:1", emit = "text", parabolic = "all";
    std::string suites =
        "sum-of-signs,chamber-signs,main-theorem,second-main,gkm-herb,coalgebra,shelling,tables";
    long bound = 0;

    auto addCommon = [&](CLI::App* cmd, bool needsType = true) {
        auto* opt = cmd->add_option("--type", type, "Coxeter type string, e.g. B3xA1");
        if (needsType) opt->required();
        cmd->add_option("--emit", emit, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--group-bound", bound, "group enumeration bound");
    };

    auto* describe = app.add_subcommand("describe", "root system summary");
    addCommon(describe);
    bool emitFaces = false;
    describe->add_flag("--faces", emitFaces, "include the face poset in json output");

    auto* twoStruct = app.add_subcommand("two-structures", "enumerate 2-structures with signs");
    addCommon(twoStruct);

    auto* wsum = app.add_subcommand("weighted-sum", "weighted sum for a lambda");
    addCommon(wsum);
    wsum->add_option("--lambda", lambdaSpec, "lambda: coords, random:k:seed, on-ray:r, in-sector:r");

    auto* pizzaCmd = app.add_subcommand("pizza", "pizza classes in the open-face basis");
    addCommon(pizzaCmd);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    addCommon(verify);
    verify->add_option("--suite", suites, "comma-separated suite list");
    verify->add_option("--lambda", lambdaSpec, "lambda specification");
    verify->add_option("--parabolic", parabolic, "parabolic subset: all or comma indices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        long gb = groupBoundFromEnv(bound);
        if (describe->parsed()) {
            RootSystem rs = RootSystem::canonical(type);
            if (emit == "json") {
                OrderedJson j = rootSystemToJson(rs, gb);
                if (emitFaces) j["facePoset"] = facePosetToJson(FacePoset::full(rs, gb));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rs.system().description() << ": rank " << rs.rank() << ", "
                          << rs.rootCount() << " pseudo-roots, |W| = " << rs.system().groupOrder()
                          << ", conductor " << rs.context()->conductor() << "\n";
            }
            return 0;
        }
        if (twoStruct->parsed()) {
            RootSystem rs = RootSystem::canonical(type);
            auto structures = enumerate_two_structures(rs, gb);
            if (emit == "json") {
                OrderedJson j = OrderedJson::array();
                for (const auto& ts : structures) j.push_back(twoStructureToJson(rs, ts));
                std::cout << j.dump(2) << "\n";
            } else {
                long long sum = 0;
                for (const auto& ts : structures) {
                    int e = epsilon(rs, ts);
                    sum += e;
                    std::cout << ts.typeTag() << " eps=" << e << " lines=[";
                    for (std::size_t i = 0; i < ts.lines.size(); ++i)
                        std::cout << (i ? "," : "") << ts.lines[i];
                    std::cout << "]\n";
                }
                std::cout << structures.size() << " two-structures, sum of signs = " << sum
                          << "\n";
            }
            return 0;
        }
        if (wsum->parsed()) {
            RootSystem rs = RootSystem::canonical(type);
            FacePoset full = FacePoset::full(rs, gb);
            auto lambdas = parseLambdas(lambdaSpec, rs, full);
            for (const auto& l : lambdas)
                std::cout << weighted_sum(full, full.fundamentalChamber(),
                                          Weight{l, std::nullopt})
                          << "\n";
            return 0;
        }
        if (pizzaCmd->parsed()) {
            RootSystem rs = RootSystem::canonical(type);
            FacePoset full = FacePoset::full(rs, gb);
            auto pc = pizza(full, full.fundamentalChamber());
            if (emit == "json") {
                OrderedJson j;
                j["Pi"] = coneClassToJson(pc.pi);
                j["P"] = coneClassToJson(pc.p);
                j["P0"] = coneClassToJson(pc.p0);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "P == P0: " << (pc.p == pc.p0 ? "yes" : "NO") << ", faces "
                          << full.faceCount() << "\n";
            }
            return 0;
        }
        if (verify->parsed()) return runVerify(type, suites, lambdaSpec, parabolic, emit, gb);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RankError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
