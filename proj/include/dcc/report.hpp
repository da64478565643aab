#pragma once

// Structured documents read and written by the command-line tool. Every
// document is JSON; non-finite numbers are written as the strings "inf",
// "-inf" and "nan" and read back the same way.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dcc/certify.hpp"
#include "dcc/common.hpp"
#include "dcc/counterexample.hpp"
#include "dcc/gorny.hpp"
#include "dcc/sequences.hpp"

namespace dcc::report {

using Json = nlohmann::json;

Json number(double v);
double read_number(const Json& j);

Json to_json(const ConditionReport& r);
ConditionReport condition_report_from_json(const Json& j);

/// Sequence spec: {"kind": "gevrey"|"nlogn"|"explicit", "s"?, "logs"?, "n_max"}.
struct SequenceSpec {
  FamilySpec family;
  int n_max = 0;
};

SequenceSpec sequence_spec_from_json(const Json& j);
Json to_json(const SequenceSpec& spec);

/// Bounds document: an array of [order, ln F] pairs, optionally wrapped as
/// {"bounds": [...]}.
std::vector<std::pair<long, double>> bounds_from_json(const Json& j);
Json bounds_to_json(const std::vector<std::pair<long, double>>& bounds);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const CounterexampleCert& cert);
CounterexampleCert counterexample_from_json(const Json& j);

Json to_json(const GornyCheck& check);

/// Reads a whole file as JSON; throws InvalidArgument on I/O or parse errors.
Json read_file(const std::filesystem::path& path);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace dcc::report
