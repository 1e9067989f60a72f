#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sympencil/canonical.hpp"
#include "sympencil/experiments.hpp"
#include "sympencil/order.hpp"
#include "sympencil/pencil.hpp"

namespace sympencil {

using Json = nlohmann::json;

/// {"n": rows, "m": cols, "A": [[[re, im], ...], ...], "B": ...}.
/// Throws FormatError on ragged rows, size mismatches or non-numeric entries.
Pencil pencil_from_json(const Json& j);
Json pencil_to_json(const Pencil& p);

/// {"level": "orbit"|"bundle", "blocks": [{"type": "M", "d": 1}, ...]}.
StructureDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const StructureDescriptor& d);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json partition_to_json(const IntegerPartition& p);
Json obstruction_to_json(const Obstruction& o);
Json report_to_json(const ExperimentReport& r);

/// Parses a whole file; FormatError on I/O or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace sympencil
