#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "dcc/report.hpp"

using namespace dcc;
using report::Json;

TEST_CASE("non-finite numbers round-trip as strings") {
  CHECK(report::number(kPosInf) == "inf");
  CHECK(report::number(kNegInf) == "-inf");
  CHECK(report::number(NAN) == "nan");
  CHECK(report::read_number(Json("inf")) == kPosInf);
  CHECK(report::read_number(Json("-inf")) == kNegInf);
  CHECK(std::isnan(report::read_number(Json("nan"))));
  CHECK(report::read_number(report::number(0.1)) == 0.1);
  CHECK_THROWS_AS(report::read_number(Json("pi")), InvalidArgument);
}

TEST_CASE("condition reports") {
  ConditionReport r{.condition = "(A)", .holds = false, .first_violation = std::vector<long>{2, 3, 4},
                    .margin = -0.25};
  const auto back = report::condition_report_from_json(report::to_json(r));
  CHECK(back.condition == "(A)");
  CHECK_FALSE(back.holds);
  CHECK(back.first_violation == r.first_violation);
  CHECK(back.margin == -0.25);

  const ConditionReport ok{.condition = "(C)"};
  const auto j = report::to_json(ok);
  CHECK(j["margin"] == "inf");
  CHECK(j["first_violation"].is_null());
  CHECK(report::condition_report_from_json(j).margin == kPosInf);
}

TEST_CASE("sequence specs") {
  const auto g = report::sequence_spec_from_json(Json::parse(R"({"kind":"gevrey","s":2,"n_max":50})"));
  CHECK(std::get<Gevrey>(g.family).s == 2.0);
  CHECK(g.n_max == 50);
  const auto e = report::sequence_spec_from_json(Json::parse(R"({"kind":"explicit","logs":[0,1,3]})"));
  CHECK(std::get<Explicit>(e.family).logs.size() == 3);
  const auto rt = report::sequence_spec_from_json(report::to_json(g));
  CHECK(std::get<Gevrey>(rt.family).s == 2.0);
  CHECK_THROWS_AS(report::sequence_spec_from_json(Json::parse(R"({"kind":"weird"})")), InvalidArgument);
}

TEST_CASE("bounds documents") {
  const auto bare = report::bounds_from_json(Json::parse("[[2, 1.5], [4, 3.0]]"));
  CHECK(bare.size() == 2);
  CHECK(bare[1].first == 4);
  const auto wrapped = report::bounds_from_json(Json::parse(R"({"bounds": [[2, "-inf"]]})"));
  CHECK(wrapped[0].second == kNegInf);
  CHECK(report::bounds_from_json(report::bounds_to_json(bare)) == bare);
  CHECK_THROWS_AS(report::bounds_from_json(Json::parse("[[2]]")), InvalidArgument);
}

TEST_CASE("certificate round trip") {
  const LogSequence g = build_sequence(Gevrey{1.0}, 20);
  const GapSequence d({2, 4, 8, 16});
  SparseBounds F;
  for (long order : d.orders()) F.entries.emplace_back(order, g[order]);
  const Certificate cert = certify_membership(g, d, F, 1.0, 1.0, std::vector<double>{0.0, 0.0});
  const Certificate back = report::certificate_from_json(report::to_json(cert));
  CHECK(back.c0 == cert.c0);
  CHECK(back.log_K == cert.log_K);
  CHECK(back.log_C1 == cert.log_C1);
  REQUIRE(back.envelope.size() == cert.envelope.size());
  for (std::size_t t = 0; t < cert.envelope.size(); ++t) {
    CHECK(back.envelope[t].order == cert.envelope[t].order);
    CHECK(back.envelope[t].log_bound == cert.envelope[t].log_bound);
    CHECK(back.envelope[t].log_simplified == cert.envelope[t].log_simplified);
  }
  CHECK(report::dump(report::to_json(back)) == report::dump(report::to_json(cert)));
}

TEST_CASE("counterexample round trip") {
  const auto de = double_exponential_oracle();
  const CounterexampleCert cert = construct_counterexample(de, 2, 3);
  const CounterexampleCert back = report::counterexample_from_json(report::to_json(cert));
  CHECK(back.d == cert.d);
  CHECK(back.i == cert.i);
  CHECK(back.log_m == cert.log_m);
  REQUIRE(back.log_N.size() == cert.log_N.size());
  for (std::size_t n = 0; n < cert.log_N.size(); ++n) {
    CHECK(back.log_N[n] == doctest::Approx(cert.log_N[n]).epsilon(1e-15));
  }
  CHECK(verify_counterexample(back, de).holds);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "dcclass_report_test.json";
  {
    std::ofstream f(path);
    f << report::dump(Json{{"b", 1}, {"a", "inf"}});
  }
  const Json j = report::read_file(path);
  CHECK(j["b"] == 1);
  CHECK(report::dump(j).back() == '\n');
  CHECK(report::dump(j).find("\"a\"") < report::dump(j).find("\"b\""));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(report::read_file(path), InvalidArgument);
}
