#include "serialize.hpp"

#include <sstream>

#include "grlie/errors.hpp"

namespace grlie::cli {

namespace {

long long to_i64(const Int& v) {
    // torsion factors and ranks stay tiny at desk scale; guard anyway
    if (v > Int(9223372036854775807LL) || v < Int(-9223372036854775807LL))
        throw Error("integer too large for serialization");
    return v.convert_to<long long>();
}

nlohmann::ordered_json torsion_to_json(const std::vector<Int>& torsion) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Int& t : torsion) arr.push_back(to_i64(t));
    return arr;
}

}  // namespace

std::string torsion_to_string(const std::vector<Int>& torsion) {
    std::ostringstream out;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i > 0) out << ",";
        out << torsion[i];
    }
    return out.str();
}

nlohmann::ordered_json table_to_json(const HilbertTable& table) {
    nlohmann::ordered_json j;
    j["family"] = table.meta.family;
    j["params"] = {{"genus", table.meta.genus},
                   {"strands", table.meta.strands},
                   {"punctures", table.meta.punctures}};
    j["alphabet_order"] = table.alphabet_order;
    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        nlohmann::ordered_json row;
        row["d"] = static_cast<int>(i) + 1;
        row["free_rank"] = table.rows[i].free_rank;
        row["torsion"] = torsion_to_json(table.rows[i].torsion);
        degrees.push_back(std::move(row));
    }
    j["degrees"] = std::move(degrees);
    return j;
}

HilbertTable table_from_json(const nlohmann::json& j) {
    HilbertTable table;
    table.meta.family = j.at("family").get<std::string>();
    const auto& params = j.at("params");
    table.meta.genus = params.at("genus").get<int>();
    table.meta.strands = params.at("strands").get<int>();
    table.meta.punctures = params.at("punctures").get<int>();
    table.alphabet_order = j.at("alphabet_order").get<std::vector<std::string>>();
    for (const auto& row : j.at("degrees")) {
        AbelianInvariants inv;
        inv.free_rank = row.at("free_rank").get<int>();
        for (const auto& t : row.at("torsion")) inv.torsion.emplace_back(t.get<long long>());
        table.rows.push_back(std::move(inv));
    }
    return table;
}

std::string table_to_tsv(const HilbertTable& table) {
    std::ostringstream out;
    out << "d\tfree_rank\ttorsion\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        out << (i + 1) << "\t" << table.rows[i].free_rank << "\t"
            << torsion_to_string(table.rows[i].torsion) << "\n";
    return out.str();
}

nlohmann::ordered_json compare_to_json(const ComparisonReport& report) {
    nlohmann::ordered_json j;
    j["left"] = table_to_json(report.left);
    j["right"] = table_to_json(report.right);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json row;
        row["d"] = r.degree;
        row["free_rank_equal"] = r.free_rank_equal;
        row["torsion_equal"] = r.torsion_equal;
        rows.push_back(std::move(row));
    }
    j["degrees"] = std::move(rows);
    j["all_free_ranks_equal"] = report.all_free_ranks_equal();
    j["all_torsion_equal"] = report.all_torsion_equal();
    return j;
}

std::string compare_to_tsv(const ComparisonReport& report) {
    std::ostringstream out;
    out << "d\tleft_free_rank\tright_free_rank\tfree_rank_equal\tleft_torsion\tright_torsion\t"
           "torsion_equal\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        const auto& l = report.left.rows[i];
        const auto& rr = report.right.rows[i];
        out << r.degree << "\t" << l.free_rank << "\t" << rr.free_rank << "\t"
            << (r.free_rank_equal ? "true" : "false") << "\t" << torsion_to_string(l.torsion)
            << "\t" << torsion_to_string(rr.torsion) << "\t"
            << (r.torsion_equal ? "true" : "false") << "\n";
    }
    return out.str();
}

nlohmann::ordered_json exactness_to_json(const ExactnessReport& report) {
    nlohmann::ordered_json j;
    j["genus"] = report.genus;
    j["strands"] = report.strands;
    j["max_degree"] = report.max_degree;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json row;
        row["d"] = r.degree;
        row["total_rank"] = r.total_rank;
        row["base_rank"] = r.base_rank;
        row["fiber_rank"] = r.fiber_rank;
        row["defect"] = r.defect;
        row["total_torsion"] = torsion_to_json(r.total_torsion);
        row["base_torsion"] = torsion_to_json(r.base_torsion);
        row["fiber_torsion"] = torsion_to_json(r.fiber_torsion);
        rows.push_back(std::move(row));
    }
    j["degrees"] = std::move(rows);
    j["all_defects_zero"] = report.all_defects_zero();
    return j;
}

std::string exactness_to_tsv(const ExactnessReport& report) {
    std::ostringstream out;
    out << "d\ttotal_rank\tbase_rank\tfiber_rank\tdefect\ttotal_torsion\tbase_torsion\t"
           "fiber_torsion\n";
    for (const auto& r : report.rows)
        out << r.degree << "\t" << r.total_rank << "\t" << r.base_rank << "\t" << r.fiber_rank
            << "\t" << r.defect << "\t" << torsion_to_string(r.total_torsion) << "\t"
            << torsion_to_string(r.base_torsion) << "\t" << torsion_to_string(r.fiber_torsion)
            << "\n";
    return out.str();
}

}  // namespace grlie::cli
