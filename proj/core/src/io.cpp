#include "sls/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sls {

using nlohmann::json;

json code_to_json(const SubsystemCode& code) {
    json j;
    j["name"] = code.name;
    j["n"] = code.n;
    json gens = json::array();
    for (const auto& g : code.gauge_generators) gens.push_back(g.to_string());
    j["gauge_generators"] = gens;
    if (code.geometry) {
        j["width"] = code.geometry->width();
        j["height"] = code.geometry->height();
        json coords = json::array();
        for (Coord c : code.geometry->positions()) coords.push_back(json::array({c.row, c.col}));
        j["coordinates"] = coords;
    }
    return j;
}

SubsystemCode code_from_json(const json& j) {
    SubsystemCode code;
    code.name = j.value("name", "");
    code.n = j.at("n").get<std::size_t>();
    for (const auto& s : j.at("gauge_generators")) {
        PauliOperator p = PauliOperator::parse(s.get<std::string>());
        if (p.n() != code.n) throw DimensionError("generator length does not match n");
        code.gauge_generators.push_back(std::move(p));
    }
    if (j.contains("coordinates")) {
        Lattice2D lat(j.at("width").get<int>(), j.at("height").get<int>());
        for (const auto& c : j.at("coordinates"))
            lat.place(Coord{c.at(0).get<int>(), c.at(1).get<int>()});
        if (lat.n_qubits() != code.n) throw DimensionError("coordinate count does not match n");
        code.geometry = std::move(lat);
    }
    return code;
}

json analysis_to_json(const CodeAnalysis& analysis) {
    json j;
    j["params"] = json::array({analysis.params.n, analysis.params.k, analysis.params.g,
                               analysis.params.d ? json(*analysis.params.d) : json(nullptr)});
    j["s"] = analysis.s();
    json stab = json::array();
    for (const auto& s : analysis.stabilizer_generators) stab.push_back(s.to_string());
    j["stabilizer"] = stab;
    auto pairs = [](const std::vector<OperatorPair>& ps) {
        json a = json::array();
        for (const auto& p : ps) a.push_back(json::array({p.x_like.to_string(), p.z_like.to_string()}));
        return a;
    };
    j["logical_pairs"] = pairs(analysis.logical_pairs);
    j["gauge_pairs"] = pairs(analysis.gauge_pairs);
    return j;
}

json merge_report_json(const MergeResult& result, const MergedParamsReport& params,
                       const std::vector<std::pair<PauliOperator, PauliOperator>>& witnesses) {
    json j;
    j["ledger"] = {{"n", params.n},
                   {"k", params.k},
                   {"g", params.g},
                   {"s", params.s},
                   {"d", params.d_merged ? json(*params.d_merged) : json(nullptr)},
                   {"d_min", params.d_min}};
    j["delta_g"] = result.delta_g;
    j["ancillas"] = params.ancillas;
    json ops = json::array();
    for (const auto& m : result.merging_operators) ops.push_back(m.to_string());
    j["merging_operators"] = ops;
    json w = json::array();
    for (std::size_t i : result.merging_generator_indices) w.push_back(i + 1);
    j["merging_generators"] = w;
    j["joint_logical"] = result.joint_logical.to_string();
    json lem = json::array();
    for (const auto& [g, s] : witnesses)
        lem.push_back({{"generator", g.to_string()}, {"stabilizer", s.to_string()}});
    j["lemma2"] = lem;
    j["locality"] = {{"r_before", params.r_before}, {"r_after", params.r_after}};
    j["ok"] = params.ok;
    j["violations"] = params.violations;
    return j;
}

json teleport_report_json(const TeleportReport& report) {
    json j;
    j["seed"] = report.seed;
    j["input_label"] = to_string(report.input);
    j["m1"] = report.m1;
    j["m2"] = report.m2;
    j["ancilla_outcomes"] = report.ancilla_outcomes;
    j["correction"] = report.correction;
    j["frame"] = report.frame.to_string();
    j["final_expectations"] = {{"X", report.final_x}, {"Y", report.final_y}, {"Z", report.final_z}};
    j["pass"] = report.pass;
    return j;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string polygon_points(const std::vector<Coord>& coords, int scale) {
    // Order vertices by angle around the centroid so the polygon is simple.
    double cr = 0, cc = 0;
    for (Coord c : coords) {
        cr += c.row;
        cc += c.col;
    }
    cr /= coords.size();
    cc /= coords.size();
    std::vector<Coord> sorted = coords;
    std::sort(sorted.begin(), sorted.end(), [&](Coord a, Coord b) {
        return std::atan2(a.row - cr, a.col - cc) < std::atan2(b.row - cr, b.col - cc);
    });
    std::ostringstream os;
    for (Coord c : sorted) os << c.col * scale << "," << c.row * scale << " ";
    std::string s = os.str();
    if (!s.empty()) s.pop_back();
    return s;
}

}  // namespace

std::string render_svg(const SubsystemCode& code, const std::vector<std::size_t>& highlight) {
    if (!code.geometry) throw std::invalid_argument("render needs coordinates");
    const Lattice2D& lat = *code.geometry;
    const int scale = 40;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (lat.width() + 1) * scale
        << "\" height=\"" << (lat.height() + 1) * scale << "\" version=\"1.1\">\n";
    svg << "<rect x=\"1\" y=\"1\" width=\"" << (lat.width() + 1) * scale - 2 << "\" height=\""
        << (lat.height() + 1) * scale - 2 << "\" fill=\"white\" stroke=\"black\"/>\n";

    for (const auto& g : code.gauge_generators) {
        std::vector<Coord> support;
        bool has_x = false, has_z = false;
        for (std::size_t q = 0; q < code.n; ++q) {
            if (!g.x_bit(q) && !g.z_bit(q)) continue;
            support.push_back(lat.position(q));
            has_x |= g.x_bit(q);
            has_z |= g.z_bit(q);
        }
        if (support.empty()) continue;
        const char* fill = has_x && has_z ? "#b07cc6" : has_x ? "#e08080" : "#7c9fd0";
        if (support.size() == 1) {
            svg << "<circle cx=\"" << support[0].col * scale << "\" cy=\"" << support[0].row * scale
                << "\" r=\"12\" fill=\"" << fill << "\" fill-opacity=\"0.5\"/>\n";
        } else if (support.size() == 2) {
            svg << "<line x1=\"" << support[0].col * scale << "\" y1=\"" << support[0].row * scale
                << "\" x2=\"" << support[1].col * scale << "\" y2=\"" << support[1].row * scale
                << "\" stroke=\"" << fill << "\" stroke-width=\"10\" stroke-opacity=\"0.6\"/>\n";
        } else {
            svg << "<polygon points=\"" << polygon_points(support, scale) << "\" fill=\"" << fill
                << "\" fill-opacity=\"0.5\" stroke=\"" << fill << "\"/>\n";
        }
    }

    for (std::size_t q = 0; q < lat.n_qubits(); ++q) {
        Coord c = lat.position(q);
        bool hl = std::find(highlight.begin(), highlight.end(), q) != highlight.end();
        svg << "<circle cx=\"" << c.col * scale << "\" cy=\"" << c.row * scale
            << "\" r=\"5\" fill=\"" << (hl ? "#d0309c" : "black") << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace sls
