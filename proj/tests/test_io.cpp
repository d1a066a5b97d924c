#include <doctest.h>

#include <string>

#include "sls/builders.hpp"
#include "sls/io.hpp"

using namespace sls;

namespace {

std::size_t count_substr(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

MergeResult corpus_merge() {
    SubsystemCode a = build_color_code(3);
    SubsystemCode b = build_surface_code(3);
    CodeAnalysis an_a = analyze(a), an_b = analyze(b);
    auto la = boundary_logical(a, an_a, Side::Right, 0, 'Z');
    auto lb = boundary_logical(b, an_b, Side::Left, 0, 'Z');
    REQUIRE(la);
    REQUIRE(lb);
    return build_merged_code(MergeSpec{a, b, *la, *lb, true});
}

}  // namespace

TEST_CASE("code json round-trip preserves the analysis") {
    for (const auto& code : {build_surface_code(3), build_color_code(3),
                             build_subsystem_surface_code(3), build_bacon_shor(3, 3)}) {
        CAPTURE(code.name);
        SubsystemCode back = code_from_json(code_to_json(code));
        CHECK(back.n == code.n);
        CHECK(back.name == code.name);
        REQUIRE(back.gauge_generators.size() == code.gauge_generators.size());
        for (std::size_t i = 0; i < code.gauge_generators.size(); ++i)
            CHECK(back.gauge_generators[i] == code.gauge_generators[i]);
        REQUIRE(back.geometry.has_value());
        CHECK(back.geometry->positions() == code.geometry->positions());

        CodeAnalysis a = analyze(code), b = analyze(back);
        CHECK(a.params.n == b.params.n);
        CHECK(a.params.k == b.params.k);
        CHECK(a.params.g == b.params.g);
    }
}

TEST_CASE("reports serialize deterministically") {
    MergeResult mr = corpus_merge();
    MergedParamsReport params = verify_merged_parameters(mr, 4);
    auto witnesses = verify_lemma2(mr);
    std::string once = dump_report(merge_report_json(mr, params, witnesses));
    std::string twice = dump_report(merge_report_json(mr, params, witnesses));
    CHECK(once == twice);
    CHECK(once.back() == '\n');
}

TEST_CASE("merge report carries the contract fields") {
    MergeResult mr = corpus_merge();
    MergedParamsReport params = verify_merged_parameters(mr, 4);
    auto witnesses = verify_lemma2(mr);
    nlohmann::json j = merge_report_json(mr, params, witnesses);
    CHECK(j.contains("ledger"));
    CHECK(j["ledger"].contains("n"));
    CHECK(j["ledger"].contains("k"));
    CHECK(j["ledger"].contains("g"));
    CHECK(j["ledger"].contains("d"));
    CHECK(j.contains("delta_g"));
    CHECK(j.contains("lemma2"));
    CHECK(j["locality"].contains("r_before"));
    CHECK(j["locality"].contains("r_after"));
    CHECK(j["ok"].get<bool>());
}

TEST_CASE("teleport report schema") {
    MergeResult mr = corpus_merge();
    TeleportReport rep = teleport(mr, Eigenstate::Zp, 1, 2);
    nlohmann::json j = teleport_report_json(rep);
    for (const char* key : {"seed", "input_label", "m1", "m2", "ancilla_outcomes", "correction",
                            "final_expectations", "pass"})
        CHECK(j.contains(key));
    CHECK(j["input_label"] == "Z+");
    CHECK(j["pass"].get<bool>());
    CHECK(j["final_expectations"]["Z"] == 1);
}

TEST_CASE("svg rendering of the subsystem surface code") {
    SubsystemCode ssc = build_subsystem_surface_code(3);
    std::string svg = render_svg(ssc);
    CHECK(svg.find("<svg") == 0);
    CHECK(count_substr(svg, "<polygon") == 4);           // the four triangles
    CHECK(count_substr(svg, "<line") == 4);              // the four boundary pairs
    CHECK(count_substr(svg, "r=\"5\"") == 8);            // one dot per qubit
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(render_svg(ssc) == svg);
}

TEST_CASE("svg highlights the requested qubits") {
    MergeResult mr = corpus_merge();
    std::string svg = render_svg(mr.merged, mr.ancilla_qubits);
    CHECK(count_substr(svg, "#d0309c") == mr.ancilla_qubits.size());
}

TEST_CASE("svg of an empty lattice is still a frame") {
    SubsystemCode empty;
    empty.n = 0;
    empty.geometry = Lattice2D(2, 2);
    std::string svg = render_svg(empty);
    CHECK(svg.find("<rect") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("malformed code files are rejected") {
    nlohmann::json j = code_to_json(build_surface_code(3));
    j["gauge_generators"][0] = "+XX";    // wrong length
    CHECK_THROWS(code_from_json(j));
}
