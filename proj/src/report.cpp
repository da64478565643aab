#include "dcc/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace dcc::report {

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == kPosInf) return "inf";
  if (v == kNegInf) return "-inf";
  return v;
}

double read_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return kPosInf;
    if (s == "-inf") return kNegInf;
    if (s == "nan") return std::nan("");
  }
  throw InvalidArgument("expected a number, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<double> numbers(const Json& arr) {
  if (!arr.is_array()) throw InvalidArgument("expected an array of numbers");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(read_number(v));
  return out;
}

Json numbers_to_json(const std::vector<double>& xs) {
  Json arr = Json::array();
  for (double x : xs) arr.push_back(number(x));
  return arr;
}

}  // namespace

Json to_json(const ConditionReport& r) {
  Json j{{"condition", r.condition}, {"holds", r.holds}, {"margin", number(r.margin)}};
  j["first_violation"] = r.first_violation ? Json(*r.first_violation) : Json(nullptr);
  return j;
}

ConditionReport condition_report_from_json(const Json& j) {
  ConditionReport r;
  r.condition = field(j, "condition").get<std::string>();
  r.holds = field(j, "holds").get<bool>();
  r.margin = read_number(field(j, "margin"));
  if (const auto& fv = field(j, "first_violation"); !fv.is_null()) {
    r.first_violation = fv.get<std::vector<long>>();
  }
  return r;
}

SequenceSpec sequence_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("sequence spec must be an object");
  const auto kind = field(j, "kind").get<std::string>();
  SequenceSpec out;
  if (kind == "gevrey") {
    out.family = Gevrey{j.contains("s") ? read_number(j.at("s")) : 1.0};
  } else if (kind == "nlogn") {
    out.family = NLogN{};
  } else if (kind == "explicit") {
    out.family = Explicit{numbers(field(j, "logs"))};
  } else {
    throw InvalidArgument("unknown sequence kind '" + kind + "'");
  }
  if (j.contains("n_max")) {
    out.n_max = field(j, "n_max").get<int>();
  } else if (const auto* ex = std::get_if<Explicit>(&out.family)) {
    out.n_max = static_cast<int>(ex->logs.size()) - 1;
  } else {
    throw InvalidArgument("missing field 'n_max'");
  }
  return out;
}

Json to_json(const SequenceSpec& spec) {
  Json j{{"n_max", spec.n_max}};
  std::visit(
      [&j](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Gevrey>) {
          j["kind"] = "gevrey";
          j["s"] = number(fam.s);
        } else if constexpr (std::is_same_v<T, NLogN>) {
          j["kind"] = "nlogn";
        } else {
          j["kind"] = "explicit";
          j["logs"] = numbers_to_json(fam.logs);
        }
      },
      spec.family);
  return j;
}

std::vector<std::pair<long, double>> bounds_from_json(const Json& j) {
  const Json& arr = j.is_object() ? field(j, "bounds") : j;
  if (!arr.is_array()) throw InvalidArgument("bounds document must be an array of [order, log_F]");
  std::vector<std::pair<long, double>> out;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2) {
      throw InvalidArgument("each bound must be an [order, log_F] pair");
    }
    out.emplace_back(pair[0].get<long>(), read_number(pair[1]));
  }
  return out;
}

Json bounds_to_json(const std::vector<std::pair<long, double>>& bounds) {
  Json arr = Json::array();
  for (const auto& [order, value] : bounds) arr.push_back(Json::array({order, number(value)}));
  return arr;
}

Json to_json(const Certificate& cert) {
  Json env = Json::array();
  for (const auto& e : cert.envelope) {
    env.push_back(Json::array({e.order, number(e.log_bound),
                               e.log_simplified ? number(*e.log_simplified) : Json(nullptr)}));
  }
  return Json{{"c0", cert.c0},
              {"c", number(cert.c)},
              {"length", number(cert.length)},
              {"m0", number(cert.m0)},
              {"log_C1", number(cert.log_C1)},
              {"log_K", number(cert.log_K)},
              {"envelope", env},
              {"full_coverage", cert.full_coverage},
              {"c1_dominates", cert.c1_dominates}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.c0 = field(j, "c0").get<long>();
  cert.c = read_number(field(j, "c"));
  cert.length = read_number(field(j, "length"));
  cert.m0 = read_number(field(j, "m0"));
  cert.log_C1 = read_number(field(j, "log_C1"));
  cert.log_K = read_number(field(j, "log_K"));
  cert.full_coverage = field(j, "full_coverage").get<bool>();
  cert.c1_dominates = field(j, "c1_dominates").get<bool>();
  for (const auto& row : field(j, "envelope")) {
    EnvelopeEntry e{.order = row.at(0).get<long>(), .log_bound = read_number(row.at(1))};
    if (row.size() > 2 && !row.at(2).is_null()) e.log_simplified = read_number(row.at(2));
    cert.envelope.push_back(e);
  }
  return cert;
}

Json to_json(const CounterexampleCert& cert) {
  return Json{{"d", cert.d}, {"i", cert.i}, {"log_m", numbers_to_json(cert.log_m)}};
}

CounterexampleCert counterexample_from_json(const Json& j) {
  CounterexampleCert cert;
  cert.d = field(j, "d").get<std::vector<long>>();
  cert.i = field(j, "i").get<std::vector<long>>();
  cert.log_m = numbers(field(j, "log_m"));
  cert.log_N.assign(cert.log_m.size() + 1, 0.0);
  for (std::size_t k = 0; k < cert.log_m.size(); ++k) {
    cert.log_N[k + 1] = cert.log_N[k] + cert.log_m[k];
  }
  return cert;
}

Json to_json(const GornyCheck& check) {
  return Json{{"lhs", number(check.lhs)}, {"rhs", number(check.rhs)}, {"holds", check.holds}};
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("cannot parse '" + path.string() + "': " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dcc::report
