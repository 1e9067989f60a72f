#include "sympencil/io.hpp"

#include <fstream>

#include "sympencil/errors.hpp"

namespace sympencil {

namespace {

int require_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw FormatError(std::string("expected integer field \"") + key + "\"");
    }
    return j.at(key).get<int>();
}

ComplexMatrix matrix_from_json(const Json& j, const char* key, int rows, int cols) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw FormatError(std::string("expected array field \"") + key + "\"");
    }
    const Json& m = j.at(key);
    if (static_cast<int>(m.size()) != rows) {
        throw FormatError(std::string(key) + ": expected " + std::to_string(rows) + " rows, got " +
                          std::to_string(m.size()));
    }
    ComplexMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = m.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw FormatError(std::string(key) + ": row " + std::to_string(i) + " does not have " +
                              std::to_string(cols) + " entries");
        }
        for (int k = 0; k < cols; ++k) {
            out(i, k) = complex_from_json(row.at(static_cast<std::size_t>(k)));
        }
    }
    return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(complex_to_json(m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormatError("expected a complex number as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Pencil pencil_from_json(const Json& j) {
    if (!j.is_object()) {
        throw FormatError("pencil must be a JSON object");
    }
    const int n = require_int(j, "n");
    const int m = require_int(j, "m");
    if (n < 0 || m < 0) {
        throw FormatError("pencil dimensions must be nonnegative");
    }
    return Pencil(matrix_from_json(j, "A", n, m), matrix_from_json(j, "B", n, m));
}

Json pencil_to_json(const Pencil& p) {
    return Json{{"n", p.rows()}, {"m", p.cols()}, {"A", matrix_to_json(p.a())}, {"B", matrix_to_json(p.b())}};
}

StructureDescriptor descriptor_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array()) {
        throw FormatError("descriptor must be an object with a \"blocks\" array");
    }
    DescriptorLevel level = DescriptorLevel::Orbit;
    if (j.contains("level")) {
        const std::string s = j.at("level").is_string() ? j.at("level").get<std::string>() : "";
        if (s == "bundle") {
            level = DescriptorLevel::Bundle;
        } else if (s != "orbit") {
            throw FormatError("descriptor level must be \"orbit\" or \"bundle\"");
        }
    }
    std::vector<CanonicalBlock> blocks;
    for (const Json& b : j.at("blocks")) {
        if (!b.is_object() || !b.contains("type") || !b.at("type").is_string()) {
            throw FormatError("block must be an object with a string \"type\"");
        }
        const std::string type = b.at("type").get<std::string>();
        if (type == "M") {
            blocks.emplace_back(MinimalPair{require_int(b, "d")});
        } else if (type == "J") {
            if (!b.contains("mu")) {
                throw FormatError("J block needs \"mu\"");
            }
            blocks.emplace_back(JordanFinite{require_int(b, "size"), complex_from_json(b.at("mu"))});
        } else if (type == "Jinf") {
            blocks.emplace_back(JordanInfinite{require_int(b, "size")});
        } else {
            throw FormatError("unknown block type \"" + type + "\"");
        }
    }
    try {
        return StructureDescriptor(std::move(blocks), level);
    } catch (const PencilError& e) {
        throw FormatError(std::string("invalid descriptor: ") + e.what());
    }
}

Json descriptor_to_json(const StructureDescriptor& d) {
    Json blocks = Json::array();
    const StructureDescriptor canonical = d.sorted();
    for (const auto& b : canonical.blocks()) {
        if (const auto* m = std::get_if<MinimalPair>(&b)) {
            blocks.push_back({{"type", "M"}, {"d", m->d}});
        } else if (const auto* jf = std::get_if<JordanFinite>(&b)) {
            blocks.push_back({{"type", "J"}, {"size", jf->size}, {"mu", complex_to_json(jf->mu)}});
        } else {
            blocks.push_back({{"type", "Jinf"}, {"size", std::get<JordanInfinite>(b).size}});
        }
    }
    return Json{{"level", d.level() == DescriptorLevel::Bundle ? "bundle" : "orbit"},
                {"blocks", std::move(blocks)},
                {"text", d.to_string()}};
}

Json partition_to_json(const IntegerPartition& p) { return Json(p.parts()); }

Json obstruction_to_json(const Obstruction& o) {
    Json j{{"kind", to_string(o.kind)}, {"a", o.container_a}, {"a_prime", o.candidate_a}};
    if (o.kind == ObstructionKind::MinimalIndexMajorization) {
        j["candidate_epsilon"] = partition_to_json(o.candidate_weyr);
        j["container_epsilon"] = partition_to_json(o.container_weyr);
    } else if (o.kind == ObstructionKind::SimpleEigenvalueMultiplicity) {
        j["demanded_simple"] = o.demanded_simple;
        j["available_simple"] = o.available_simple;
    }
    return j;
}

Json report_to_json(const ExperimentReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"seed", f.seed}, {"kind", to_string(f.kind)}, {"diagnosis", f.diagnosis}});
    }
    return Json{{"name", r.name},
                {"trials", r.trials},
                {"successes", r.successes},
                {"success_rate", r.success_rate()},
                {"passed", r.all_passed()},
                {"failures", std::move(failures)},
                {"tolerances", r.tolerances},
                {"notes", r.notes},
                {"wall_time_s", r.wall_time_s}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

}  // namespace sympencil
