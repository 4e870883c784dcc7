#include "cpchart/report.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "cpchart/errors.hpp"

namespace cpchart {
namespace {

std::string upper(const char* s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

std::string fmt_ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Status status_from(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "indeterminate") return Status::indeterminate;
    throw std::runtime_error("unknown status '" + s + "' in report");
}

}  // namespace

void emit_text(const CheckReport& rep, std::ostream& out) {
    out << "manifest: " << rep.manifest_path << "\n";
    out << "seed: " << rep.seed << "  samples: " << rep.samples << "\n\n";
    for (const CheckResult& c : rep.checks) {
        out << "[" << upper(to_string(c.status)) << "] " << c.name << "  (" << fmt_ms(c.elapsed_ms)
            << " ms)\n";
        if (c.max_residual) out << "  max |residual| = " << fmt_sci(*c.max_residual) << "\n";
        if (c.max_probe_error) out << "  probe error    = " << fmt_sci(*c.max_probe_error) << "\n";
        for (const Witness& w : c.witnesses)
            out << "  witness " << w.location << ": " << w.expression << "\n";
        for (const std::string& n : c.notes) out << "  note: " << n << "\n";
    }
    out << "\nOVERALL: " << upper(to_string(rep.overall)) << "\n";
}

std::string emit_structured(const CheckReport& rep) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["manifest"] = rep.manifest_path;
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    j["overall"] = to_string(rep.overall);
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : rep.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = to_string(c.status);
        jc["witnesses"] = nlohmann::ordered_json::array();
        for (const Witness& w : c.witnesses)
            jc["witnesses"].push_back({{"location", w.location}, {"expression", w.expression}});
        jc["notes"] = c.notes;
        if (c.max_residual) jc["max_residual"] = *c.max_residual;
        if (c.max_probe_error) jc["max_probe_error"] = *c.max_probe_error;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

CheckReport parse_structured(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != 1)
        throw std::runtime_error("unsupported report schema");
    CheckReport rep;
    rep.manifest_path = j.at("manifest").get<std::string>();
    rep.seed = j.at("seed").get<uint64_t>();
    rep.samples = j.at("samples").get<int>();
    rep.overall = status_from(j.at("overall").get<std::string>());
    for (const auto& jc : j.at("checks")) {
        CheckResult c;
        c.name = jc.at("name").get<std::string>();
        c.status = status_from(jc.at("status").get<std::string>());
        for (const auto& jw : jc.at("witnesses"))
            c.witnesses.push_back(
                {jw.at("location").get<std::string>(), jw.at("expression").get<std::string>()});
        c.notes = jc.at("notes").get<std::vector<std::string>>();
        if (jc.contains("max_residual")) c.max_residual = jc["max_residual"].get<double>();
        if (jc.contains("max_probe_error")) c.max_probe_error = jc["max_probe_error"].get<double>();
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace cpchart
