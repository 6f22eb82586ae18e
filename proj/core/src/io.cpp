#include "lrc/io.hpp"

#include <fstream>

namespace lrc {

using nlohmann::json;

json code_to_json(const LinearCode& code) {
    json rows = json::array();
    for (std::size_t r = 0; r < code.k(); ++r) rows.push_back(code.gen().row(r));
    return json{{"q", code.field().modulus()}, {"n", code.n()}, {"k", code.k()}, {"gen", rows}};
}

LinearCode code_from_json(const json& j) {
    const std::uint64_t q = j.at("q").get<std::uint64_t>();
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::size_t k = j.at("k").get<std::size_t>();
    const Field field(q);
    const auto& rows = j.at("gen");
    if (rows.size() != k) throw DimensionMismatch("gen row count != k");
    std::vector<std::uint64_t> entries;
    entries.reserve(k * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw DimensionMismatch("gen row length != n");
        for (const auto& e : row) entries.push_back(e.get<std::uint64_t>());
    }
    return LinearCode(field, FieldMatrix(field, k, n, std::move(entries)));
}

json certificate_to_json(const RepairCertificate& cert) {
    json sets = json::array();
    for (const auto& s : cert.repair_sets) {
        json one = json::array();
        for (auto i : s) one.push_back(i + 1);
        sets.push_back(one);
    }
    return json{{"i", cert.coordinate + 1},
                {"r", cert.r},
                {"delta", cert.delta},
                {"sets", sets},
                {"coeffs", cert.coefficients}};
}

RepairCertificate certificate_from_json(const json& j) {
    RepairCertificate cert;
    const std::size_t i1 = j.at("i").get<std::size_t>();
    if (i1 < 1) throw InvalidParams("certificate coordinate must be 1-based");
    cert.coordinate = i1 - 1;
    cert.r = j.at("r").get<std::size_t>();
    cert.delta = j.at("delta").get<std::size_t>();
    for (const auto& s : j.at("sets")) {
        std::vector<std::size_t> set;
        for (const auto& e : s) {
            const std::size_t v = e.get<std::size_t>();
            if (v < 1) throw InvalidParams("repair-set coordinates are 1-based");
            set.push_back(v - 1);
        }
        cert.repair_sets.push_back(std::move(set));
    }
    cert.coefficients = j.at("coeffs").get<std::vector<std::vector<std::uint64_t>>>();
    return cert;
}

json distance_check_to_json(const DistanceCheckReport& report) {
    json out{{"pass", report.pass},
             {"subsets_checked", report.subsets_checked},
             {"exhaustive", report.exhaustive}};
    if (!report.exhaustive) out["miss_bound"] = report.miss_bound;
    if (report.witness) {
        json w = json::array();
        for (auto i : *report.witness) w.push_back(i + 1);
        out["witness"] = w;
    }
    return out;
}

json construction_report_to_json(const ConstructionReport& report) {
    json out{{"schema", "lrc-construct-v1"},
             {"kind", report.kind},
             {"code", code_to_json(report.code)},
             {"parity_ok", report.parity_ok},
             {"rank_ok", report.rank_ok},
             {"d_target", report.d_target},
             {"verification", distance_check_to_json(report.distance)},
             {"retries", report.retries_used},
             {"seed", report.seed},
             {"rng", report.rng_id},
             {"q_threshold", report.q_threshold},
             {"field_below_threshold", report.field_below_threshold}};
    if (report.block_layout) {
        const auto& layout = *report.block_layout;
        json blocks = json::array();
        for (const auto& b : layout.blocks) {
            json groups = json::array();
            for (const auto& g : b.groups) {
                json one = json::array();
                for (auto i : g) one.push_back(i + 1);
                groups.push_back(one);
            }
            blocks.push_back(json{{"head", b.head + 1}, {"groups", groups}});
        }
        out["layout"] = json{{"type", "block"}, {"k", layout.k}, {"r", layout.r}, {"delta", layout.delta},
                             {"blocks", blocks}};
    }
    if (report.grid_layout)
        out["layout"] = json{{"type", "grid"}, {"r", report.grid_layout->r}, {"n", report.grid_layout->n}};
    return out;
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return code_from_json(j);
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace lrc
