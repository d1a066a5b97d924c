// Acceptance gate: one line per criterion, exit code = number of failures.
//
// Criteria 1 and 2 assert a distance of 3 for the 8-qubit subsystem surface
// code cell. The dressed distance of that cell is 2 (the boundary Z string
// times an adjacent Z triangle is a weight-2 undetectable error, and an
// exhaustive search over every boundary-operator assignment shows no
// distance-3 realization of the cell exists). Those two criteria therefore
// fail on their distance component and pass on everything else; see the
// project notes for the full derivation.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sls/builders.hpp"
#include "sls/io.hpp"
#include "sls/sim.hpp"
#include "sls/surgery.hpp"

using namespace sls;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (!note.empty()) note += "; ";
        note += what;
    }
};

PauliOperator embed(const PauliOperator& p, std::size_t n, const std::vector<std::size_t>& map) {
    BitVec x(n), z(n);
    for (std::size_t q = 0; q < p.n(); ++q) {
        if (p.x_bit(q)) x.set(map[q]);
        if (p.z_bit(q)) z.set(map[q]);
    }
    return PauliOperator(n, std::move(x), std::move(z), p.phase_exp());
}

MergeResult corpus_merge(const SubsystemCode& a, const SubsystemCode& b, bool ancillas) {
    CodeAnalysis an_a = analyze(a), an_b = analyze(b);
    auto la = boundary_logical(a, an_a, Side::Right, 0, 'Z');
    auto lb = boundary_logical(b, an_b, Side::Left, 0, 'Z');
    if (!la || !lb) throw std::runtime_error("boundary logical not found");
    return build_merged_code(MergeSpec{a, b, *la, *lb, ancillas});
}

bool spans_equal(const std::vector<PauliOperator>& a, const std::vector<PauliOperator>& b,
                 std::size_t n) {
    Gf2Space sa(2 * n), sb(2 * n);
    for (const auto& p : a) sa.add(p.symplectic());
    for (const auto& p : b) sb.add(p.symplectic());
    if (sa.rank() != sb.rank()) return false;
    for (const auto& p : a)
        if (!sb.contains(p.symplectic())) return false;
    for (const auto& p : b)
        if (!sa.contains(p.symplectic())) return false;
    return true;
}

// 1. SSC unit cell: (8,1,1,3) and the displayed stabilizer group.
Outcome criterion1() {
    Outcome out;
    SubsystemCode ssc = build_subsystem_surface_code(3);
    CodeAnalysis an = analyze(ssc);
    out.require(an.params.n == 8 && an.params.k == 1 && an.params.g == 1, "(n,k,g) != (8,1,1)");

    const auto& g = ssc.gauge_generators;    // G1..G4 then S1..S4
    std::vector<PauliOperator> displayed = {g[4], g[5], g[6], g[7], (g[0] * g[3]).unsigned_rep(),
                                            (g[1] * g[2]).unsigned_rep()};
    out.require(spans_equal(an.stabilizer_generators, displayed, ssc.n),
                "center differs from <S1..S4, G1G4, G2G3>");

    auto d = distance(ssc, an, 7);
    out.require(d == 3, "dressed distance is " + std::to_string(d.value_or(0)) +
                            ", not 3 (weight-2 dressed logical Z(1,3)Z(3,2) exists; "
                            "no distance-3 assignment of the cell exists)");
    return out;
}

// 2. Merged SSC: delta_g, [[16,1,4,d]], d = 3, displayed merged stabilizers.
Outcome criterion2() {
    Outcome out;
    MergeResult mr = corpus_merge(build_subsystem_surface_code(3),
                                  build_subsystem_surface_code(3), false);
    out.require(mr.delta_g == 2, "delta_g != 2");
    CodeAnalysis an = analyze(mr.merged);
    out.require(an.params.n == 16 && an.params.k == 1 && an.params.g == 4,
                "(n,k,g) != (16,1,4)");

    auto d = distance(mr.merged, an, 4);
    out.require(d >= 2, "merged distance below the Lemma 1 bound min(d_A,d_B)");
    out.require(d == 3, "oracle distance is " + std::to_string(d.value_or(0)) +
                            ", not 3 (inputs have dressed distance 2, and the bound is "
                            "relative: d_M >= min(d_A,d_B) = 2 holds)");

    // the five displayed merged stabilizers: S1^A, S4^B, G2^A G3^A S1^B,
    // S4^A G2^B G3^B, Z_L^A Z_L^B
    const std::size_t n = mr.merged.n;
    const auto& ga = mr.spec.code_a.gauge_generators;
    const auto& gb = mr.spec.code_b.gauge_generators;
    std::vector<PauliOperator> five = {
        embed(ga[4], n, mr.a_to_merged),
        embed(gb[7], n, mr.b_to_merged),
        (embed(ga[1] * ga[2], n, mr.a_to_merged) * embed(gb[4], n, mr.b_to_merged)).unsigned_rep(),
        (embed(ga[7], n, mr.a_to_merged) * embed(gb[1] * gb[2], n, mr.b_to_merged)).unsigned_rep(),
        mr.joint_logical.unsigned_rep(),
    };
    Gf2Space centre(2 * n);
    for (const auto& c : an.stabilizer_generators) centre.add(c.symplectic());
    for (std::size_t i = 0; i < five.size(); ++i)
        out.require(centre.contains(five[i].symplectic()),
                    "displayed stabilizer " + std::to_string(i + 1) + " not in the center");
    return out;
}

// 3. Ledger law on the three corpus merges.
Outcome criterion3() {
    Outcome out;
    struct Case {
        SubsystemCode a, b;
        bool anc;
    };
    Case cases[] = {
        {build_subsystem_surface_code(3), build_subsystem_surface_code(3), false},
        {build_surface_code(3), build_color_code(3), true},
        {build_bacon_shor(3, 3), build_bacon_shor(3, 3), false},
    };
    for (auto& c : cases) {
        MergeResult mr = corpus_merge(c.a, c.b, c.anc);
        CodeAnalysis an_a = analyze(c.a), an_b = analyze(c.b), an_m = analyze(mr.merged);
        std::string tag = c.a.name + "+" + c.b.name + ": ";
        out.require(an_m.params.k == an_a.params.k + an_b.params.k - 1, tag + "k law");
        // ancillas itemize to zero extra gauge qubits (one qubit + one
        // independent X generator each, cancelling in g = rank - n + k)
        out.require(an_m.params.g == an_a.params.g + an_b.params.g + mr.delta_g, tag + "g law");
        out.require(an_m.params.n == c.a.n + c.b.n + mr.ancilla_qubits.size(), tag + "n law");
    }
    return out;
}

// 4. Lemma 2 witnesses, with the paper pair for the merged SSC.
Outcome criterion4() {
    Outcome out;
    struct Case {
        SubsystemCode a, b;
        bool anc;
    };
    Case cases[] = {
        {build_subsystem_surface_code(3), build_subsystem_surface_code(3), false},
        {build_surface_code(3), build_color_code(3), true},
        {build_bacon_shor(3, 3), build_bacon_shor(3, 3), false},
    };
    for (auto& c : cases) {
        MergeResult mr = corpus_merge(c.a, c.b, c.anc);
        std::vector<std::pair<PauliOperator, PauliOperator>> witnesses;
        try {
            witnesses = verify_lemma2(mr);
        } catch (const std::exception& e) {
            out.require(false, c.a.name + "+" + c.b.name + ": " + e.what());
            continue;
        }
        out.require(witnesses.size() == mr.delta_g,
                    c.a.name + "+" + c.b.name + ": witness count");
    }

    MergeResult ssc = corpus_merge(build_subsystem_surface_code(3),
                                   build_subsystem_surface_code(3), false);
    auto witnesses = verify_lemma2(ssc);
    const std::size_t n = ssc.merged.n;
    const auto& ga = ssc.spec.code_a.gauge_generators;
    const auto& gb = ssc.spec.code_b.gauge_generators;
    PauliOperator s1b = embed(gb[4], n, ssc.b_to_merged);    // S1 on patch B
    PauliOperator s4a = embed(ga[7], n, ssc.a_to_merged);    // S4 on patch A
    Gf2Space centre(2 * n);
    for (const auto& c : center(ssc.merged)) centre.add(c.symplectic());
    auto equiv = [&](const PauliOperator& w, const PauliOperator& ref) {
        return centre.contains((w * ref).symplectic());
    };
    out.require(witnesses.size() == 2 && equiv(witnesses[0].second, s1b) &&
                    equiv(witnesses[1].second, s4a),
                "merged-ssc witnesses differ from (S1^B, S4^A) mod stabilizer");
    return out;
}

// 5. m1 sharpness of the joint logical, 100 seeds, all corpus merges.
Outcome criterion5() {
    Outcome out;
    struct Case {
        SubsystemCode a, b;
        bool anc;
    };
    Case cases[] = {
        {build_subsystem_surface_code(3), build_subsystem_surface_code(3), false},
        {build_surface_code(3), build_color_code(3), true},
        {build_bacon_shor(3, 3), build_bacon_shor(3, 3), false},
    };
    for (auto& c : cases) {
        MergeResult mr = corpus_merge(c.a, c.b, c.anc);
        CodeAnalysis an_m = analyze(mr.merged);
        for (uint64_t seed = 1; seed <= 100; ++seed) {
            StabilizerState st = encode_product(mr, Eigenstate::Xp, Eigenstate::Xp, seed);
            MergeRun run = run_merge_schedule(st, mr, an_m, 2);
            if (st.expectation(mr.joint_logical) != run.m1) {
                out.require(false, c.a.name + "+" + c.b.name + ": joint logical not sharp at seed " +
                                       std::to_string(seed));
                break;
            }
        }
    }
    return out;
}

// 6. Teleportation CC(3) -> SC(3), six states, 100 seeds each, exact triples.
Outcome criterion6() {
    Outcome out;
    MergeResult mr = corpus_merge(build_color_code(3), build_surface_code(3), true);
    for (Eigenstate e : kAllEigenstates)
        for (uint64_t seed = 1; seed <= 100; ++seed) {
            TeleportReport rep = teleport(mr, e, seed, 2);
            if (!rep.pass) {
                out.require(false, "state " + to_string(e) + " seed " + std::to_string(seed));
                return out;
            }
        }
    return out;
}

// 7. Weight-1 errors detectable or gauge; bounded locality growth.
Outcome criterion7() {
    Outcome out;
    struct Case {
        SubsystemCode a, b;
        bool anc;
    };
    Case cases[] = {
        {build_subsystem_surface_code(3), build_subsystem_surface_code(3), false},
        {build_surface_code(3), build_color_code(3), true},
    };
    for (auto& c : cases) {
        MergeResult mr = corpus_merge(c.a, c.b, c.anc);
        CodeAnalysis an = analyze(mr.merged);
        Gf2Space gauge_span(2 * mr.merged.n);
        for (const auto& g : mr.merged.gauge_generators) gauge_span.add(g.symplectic());
        for (std::size_t q = 0; q < mr.merged.n; ++q)
            for (char letter : {'X', 'Y', 'Z'}) {
                PauliOperator e = PauliOperator::single(mr.merged.n, q, letter);
                bool in_gauge = gauge_span.contains(e.symplectic());
                bool detected = false;
                for (const auto& s : an.stabilizer_generators) detected |= !e.commutes_with(s);
                if (!in_gauge && !detected) {
                    out.require(false, c.a.name + "+" + c.b.name + ": silent weight-1 error " +
                                           e.to_string());
                }
            }
        int r_before = std::max(interaction_range(c.a), interaction_range(c.b));
        out.require(interaction_range(mr.merged) <= r_before + 2,
                    c.a.name + "+" + c.b.name + ": interaction range grew by more than 2");
    }
    return out;
}

// 8. Bacon-Shor closure: merged 3x3 pair equals the 6x3 code.
Outcome criterion8() {
    Outcome out;
    MergeResult mr = corpus_merge(build_bacon_shor(3, 3), build_bacon_shor(3, 3), false);
    out.require(gauge_groups_equal_after_seam_collapse(mr, build_bacon_shor(6, 3)),
                "gauge groups differ under the seam relabeling");
    return out;
}

// 9. Oracle soundness: distance vs full enumeration (n <= 5), GF(2) vs brute span.
Outcome criterion9() {
    Outcome out;
    std::mt19937 rng(90210);

    auto brute_distance = [](const SubsystemCode& code,
                             const CodeAnalysis& an) -> std::optional<std::size_t> {
        Gf2Space gauge_span(2 * code.n);
        for (const auto& g : code.gauge_generators) gauge_span.add(g.symplectic());
        std::optional<std::size_t> best;
        for (unsigned long long rep = 1; rep < (1ull << (2 * code.n)); ++rep) {
            BitVec v(2 * code.n);
            for (std::size_t b = 0; b < 2 * code.n; ++b)
                if ((rep >> b) & 1) v.set(b);
            PauliOperator p = PauliOperator::from_symplectic(code.n, v);
            bool central = true;
            for (const auto& s : an.stabilizer_generators)
                if (!p.commutes_with(s)) central = false;
            if (!central || gauge_span.contains(v)) continue;
            if (!best || p.weight() < *best) best = p.weight();
        }
        return best;
    };

    int tested = 0;
    while (tested < 40) {
        std::size_t n = 2 + rng() % 4;
        SubsystemCode code;
        code.n = n;
        for (std::size_t i = 0, m = 1 + rng() % 4; i < m; ++i) {
            BitVec x(n), z(n);
            for (std::size_t q = 0; q < n; ++q) {
                if (rng() & 1) x.set(q);
                if (rng() & 1) z.set(q);
            }
            code.gauge_generators.emplace_back(n, std::move(x), std::move(z), 0);
        }
        std::optional<CodeAnalysis> an;
        try {
            an = analyze(code);
        } catch (const InvalidCodeError&) {
            continue;
        }
        if (an->params.k == 0) continue;
        ++tested;
        if (distance(code, *an, n) != brute_distance(code, *an)) {
            out.require(false, "distance oracle mismatch on a random n=" + std::to_string(n) +
                                   " code");
            break;
        }
    }

    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 6;
        BinaryMatrix m(cols);
        for (std::size_t r = 0; r < rows; ++r) {
            BitVec v(cols);
            for (std::size_t cbit = 0; cbit < cols; ++cbit)
                if (rng() & 1) v.set(cbit);
            m.add_row(std::move(v));
        }
        std::set<std::vector<uint64_t>> span;
        for (unsigned mask = 0; mask < (1u << rows); ++mask) {
            BitVec acc(cols);
            for (std::size_t r = 0; r < rows; ++r)
                if ((mask >> r) & 1) acc ^= m.row(r);
            span.insert(acc.words());
        }
        if (span.size() != (std::size_t(1) << m.rank())) {
            out.require(false, "rank disagrees with brute-force span size");
            break;
        }
    }
    return out;
}

// 10. CLI determinism: equal seeds give byte-identical reports.
Outcome criterion10() {
    Outcome out;
#ifndef SLS_CLI_PATH
    out.require(false, "CLI path not configured");
    return out;
#else
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "sls_acceptance";
    fs::create_directories(dir);
    auto sh = [&](const std::string& args) {
        std::string cmd = std::string(SLS_CLI_PATH) + " " + args;
        return std::system(cmd.c_str());
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    std::string cc = (dir / "cc.json").string(), sc = (dir / "sc.json").string();
    out.require(sh("build --family color --size 3 -o " + cc) == 0, "build cc failed");
    out.require(sh("build --family surface --size 3 -o " + sc) == 0, "build sc failed");
    std::string base = "teleport --code-a " + cc + " --code-b " + sc +
                       " --ancillas --seed 7 -o ";
    out.require(sh(base + (dir / "t1.json").string()) == 0, "teleport run 1 failed");
    out.require(sh(base + (dir / "t2.json").string()) == 0, "teleport run 2 failed");
    out.require(slurp(dir / "t1.json") == slurp(dir / "t2.json"),
                "teleport reports differ between equal-seed runs");
    std::string vbase = "verify --code-a " + cc + " --code-b " + sc + " --ancillas -o ";
    out.require(sh(vbase + (dir / "v1.json").string()) == 0, "verify run 1 failed");
    out.require(sh(vbase + (dir / "v2.json").string()) == 0, "verify run 2 failed");
    out.require(slurp(dir / "v1.json") == slurp(dir / "v2.json"),
                "verify reports differ between runs");
    return out;
#endif
}

}  // namespace

int main() {
    struct Entry {
        const char* what;
        std::function<Outcome()> run;
    };
    Entry entries[] = {
        {"ssc unit cell (8,1,1,3) and displayed center", criterion1},
        {"merged ssc delta_g=2, [[16,1,4,3]], displayed stabilizers", criterion2},
        {"ledger law k and g on all corpus merges", criterion3},
        {"lemma 2 witnesses, paper pair for merged ssc", criterion4},
        {"joint logical sharp to m1, 100 seeds, all merges", criterion5},
        {"teleportation cc->sc, 6 states x 100 seeds, exact", criterion6},
        {"weight-1 errors gauge-or-detected, bounded locality", criterion7},
        {"bacon-shor 3x3 merge equals the 6x3 code", criterion8},
        {"oracle soundness vs brute force", criterion9},
        {"cli determinism: byte-identical reports", criterion10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < std::size(entries); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = entries[i].run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2zu [%s] %s (%.2fs)%s%s\n", i + 1, out.pass ? "PASS" : "FAIL",
                    entries[i].what, secs, out.note.empty() ? "" : " -- ", out.note.c_str());
        failures += !out.pass;
    }
    if (failures)
        std::printf("%d criterion(s) red; see the distance analysis in the project notes\n",
                    failures);
    return failures;
}
