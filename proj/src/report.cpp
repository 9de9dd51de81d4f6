#include "eil/report.hpp"

#include <fstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

#include "json.hpp"

namespace eil {

namespace {

using nlohmann::ordered_json;

ordered_json value_json(const CheckValue& v) {
    if (std::holds_alternative<long long>(v)) return std::get<long long>(v);
    if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
    return nullptr;
}

ordered_json outcome_json(const CheckOutcome& o, const ReportFormatOptions& options) {
    ordered_json j;
    j["check_id"] = o.check_id;
    j["graph_id"] = o.graph_id;
    j["params"] = o.params;
    j["status"] = to_string(o.status);
    j["lhs"] = value_json(o.lhs);
    j["rhs"] = value_json(o.rhs);
    j["witness"] = ordered_json::object();
    for (const auto& [k, v] : o.witness) j["witness"][k] = v;
    j["field_char"] = o.field_char;
    j["sampled"] = o.sampled;
    if (options.include_timing) j["elapsed_ms"] = o.elapsed_ms;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string witness_text(const CheckOutcome& o) {
    std::string out;
    for (const auto& [k, v] : o.witness) out += (out.empty() ? "" : " ") + k + "=" + v;
    return out;
}

}  // namespace

std::string report_json(const VerificationReport& report, const ReportFormatOptions& options) {
    ordered_json j;
    j["corpus"] = report.corpus;
    j["field_char"] = report.field_chars;
    j["seed"] = report.seed;
    j["checks"] = report.checks;
    j["outcomes"] = ordered_json::array();
    for (const auto& o : report.outcomes) j["outcomes"].push_back(outcome_json(o, options));
    j["summary"] = {{"holds", report.summary.holds},
                    {"fails", report.summary.fails},
                    {"not_applicable", report.summary.not_applicable},
                    {"sampled", report.summary.sampled}};
    j["findings"] = ordered_json::array();
    for (const auto& f : report.findings) {
        j["findings"].push_back(
            {{"check_id", f.check_id}, {"graph_id", f.graph_id}, {"params", f.params}, {"detail", f.detail}});
    }
    j["truncated"] = report.truncated;
    j["graphs_skipped"] = report.graphs_skipped;
    return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& report, const ReportFormatOptions& options) {
    std::string out = "check_id,graph_id,params,status,lhs,rhs,field_char,sampled,witness";
    if (options.include_timing) out += ",elapsed_ms";
    out += "\n";
    for (const auto& o : report.outcomes) {
        out += csv_field(o.check_id) + "," + csv_field(o.graph_id) + "," + csv_field(o.params) + "," +
               to_string(o.status) + "," + csv_field(to_string(o.lhs)) + "," + csv_field(to_string(o.rhs)) + "," +
               std::to_string(o.field_char) + "," + (o.sampled ? "1" : "0") + "," + csv_field(witness_text(o));
        if (options.include_timing) out += "," + std::to_string(o.elapsed_ms);
        out += "\n";
    }
    return out;
}

std::string report_text(const VerificationReport& report) {
    std::string fields;
    for (int f : report.field_chars) fields += (fields.empty() ? "" : ",") + std::to_string(f);
    std::string checks;
    for (const auto& c : report.checks) checks += (checks.empty() ? "" : ",") + c;
    std::string out = "holds=" + std::to_string(report.summary.holds) +
                      " fails=" + std::to_string(report.summary.fails) +
                      " not_applicable=" + std::to_string(report.summary.not_applicable) +
                      " sampled=" + std::to_string(report.summary.sampled) +
                      " findings=" + std::to_string(report.findings.size()) +
                      " truncated=" + (report.truncated ? "1" : "0") + " field_char=" + fields + " checks=" + checks +
                      " seed=" + std::to_string(report.seed) + "\n";
    for (const auto& o : report.outcomes) {
        if (o.status != Status::fails) continue;
        out += "fail check=" + o.check_id + " graph6=" + o.graph_id + " field_char=" + std::to_string(o.field_char) +
               " lhs=" + to_string(o.lhs) + " rhs=" + to_string(o.rhs);
        if (!o.params.empty()) out += " " + o.params;
        out += "\n";
    }
    for (const auto& f : report.findings) {
        out += "finding check=" + f.check_id + " graph6=" + f.graph_id + " detail=\"" + f.detail + "\"\n";
    }
    return out;
}

std::string validate_report_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) return "not valid JSON";
    if (!j.is_object()) return "top level is not an object";
    const auto need = [&](const nlohmann::json& obj, const char* key, auto predicate,
                          const std::string& where) -> std::string {
        if (!obj.contains(key)) return where + "missing '" + key + "'";
        if (!predicate(obj.at(key))) return where + "'" + key + "' has the wrong type";
        return "";
    };
    const auto is_string = [](const nlohmann::json& v) { return v.is_string(); };
    const auto is_unsigned = [](const nlohmann::json& v) { return v.is_number_unsigned(); };
    const auto is_array = [](const nlohmann::json& v) { return v.is_array(); };
    const auto is_bool = [](const nlohmann::json& v) { return v.is_boolean(); };
    const auto is_value = [](const nlohmann::json& v) { return v.is_null() || v.is_number_integer() || v.is_string(); };
    for (auto problem : {need(j, "corpus", is_string, ""), need(j, "field_char", is_array, ""),
                         need(j, "seed", is_unsigned, ""), need(j, "checks", is_array, ""),
                         need(j, "outcomes", is_array, ""), need(j, "findings", is_array, ""),
                         need(j, "truncated", is_bool, ""),
                         need(j, "summary", [](const nlohmann::json& v) { return v.is_object(); }, "")}) {
        if (!problem.empty()) return problem;
    }
    std::size_t counts[3] = {0, 0, 0};
    for (std::size_t k = 0; k < j["outcomes"].size(); ++k) {
        const auto& o = j["outcomes"][k];
        const std::string where = "outcome " + std::to_string(k) + ": ";
        if (!o.is_object()) return where + "not an object";
        for (auto problem :
             {need(o, "check_id", is_string, where), need(o, "graph_id", is_string, where),
              need(o, "params", is_string, where), need(o, "status", is_string, where), need(o, "lhs", is_value, where),
              need(o, "rhs", is_value, where), need(o, "field_char", is_unsigned, where),
              need(o, "sampled", is_bool, where),
              need(o, "witness", [](const nlohmann::json& v) { return v.is_object(); }, where)}) {
            if (!problem.empty()) return problem;
        }
        const std::string status = o["status"];
        if (status == "holds") {
            ++counts[0];
        } else if (status == "fails") {
            ++counts[1];
            if (o["witness"].empty()) return where + "failure without a witness";
        } else if (status == "not_applicable") {
            ++counts[2];
            continue;
        } else {
            return where + "unknown status '" + status + "'";
        }
        if (o["lhs"].is_null() || o["rhs"].is_null()) return where + "lhs/rhs missing on an applicable outcome";
    }
    const auto& s = j["summary"];
    const char* names[3] = {"holds", "fails", "not_applicable"};
    for (int k = 0; k < 3; ++k) {
        if (auto problem = need(s, names[k], is_unsigned, "summary: "); !problem.empty()) return problem;
        if (s[names[k]].get<std::size_t>() != counts[k]) return std::string("summary ") + names[k] + " disagrees with outcomes";
    }
    return "";
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
    auto temp = path;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + temp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write to " + temp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::filesystem::remove(temp);
        throw std::runtime_error("cannot move report into " + path.string() + ": " + ec.message());
    }
}

}  // namespace eil
