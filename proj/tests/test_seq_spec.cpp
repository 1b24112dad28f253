#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "orlicz/errors.hpp"
#include "orlicz/seq_spec.hpp"
#include "orlicz/weight_sequence.hpp"
#include "test_util.hpp"

using namespace orlicz;

TEST_CASE("inline grammar covers all families with defaults") {
  const SequenceSpec g = parse_spec_string("gevrey:s=1");
  CHECK(g.family == "gevrey");
  CHECK(g.params.at("s") == 1.0);
  CHECK(g.horizon == 256);

  const SequenceSpec q = parse_spec_string("qgevrey:q=2,n=2,horizon=1024");
  CHECK(q.family == "qgevrey");
  CHECK(q.params.at("q") == 2.0);
  CHECK(q.params.at("n") == 2.0);
  CHECK(q.horizon == 1024);

  const SequenceSpec e = parse_spec_string("explicit:lq=0;0.5;1.25");
  CHECK(e.family == "explicit");
  CHECK(e.horizon == 3);
  CHECK(e.log_quotients == std::vector<double>{0.0, 0.5, 1.25});
}

TEST_CASE("inline grammar rejects malformed input") {
  CHECK_THROWS_AS(parse_spec_string(""), InvalidParameter);
  CHECK_THROWS_AS(parse_spec_string("nosuch:s=1"), InvalidParameter);
  CHECK_THROWS_AS(parse_spec_string("gevrey:t=1"), InvalidParameter);
  CHECK_THROWS_AS(parse_spec_string("gevrey:s=abc"), InvalidParameter);
  CHECK_THROWS_AS(parse_spec_string("gevrey:s=1,s=2"), InvalidParameter);
  CHECK_THROWS_AS(parse_spec_string("gevrey:s=1,horizon=2.5"), InvalidParameter);
  CHECK_THROWS_AS(parse_spec_string("explicit:lq=0;0.5,horizon=3"), HorizonMismatch);
}

TEST_CASE("float formatter round-trips every double bit-for-bit") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> mant(-30.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = mant(rng) * std::exp(mant(rng) / 4.0);
    const double back = std::strtod(fmt_double(x).c_str(), nullptr);
    CHECK(back == x);
  }
  CHECK(fmt_double(0.0) == "0");
}

TEST_CASE("exported quotients re-import as the identical sequence") {
  const WeightSequence src = testutil::qgevrey(2.0, 2.0, 32);
  std::string lq_list;
  for (std::size_t j = 1; j <= src.horizon(); ++j) {
    if (j > 1) lq_list += ';';
    lq_list += fmt_double(src.log_quotients()[j]);
  }
  const SequenceSpec spec = parse_spec_string("explicit:lq=" + lq_list);
  const WeightSequence back = make_sequence(spec);
  REQUIRE(back.horizon() == src.horizon());
  for (std::size_t j = 1; j <= src.horizon(); ++j)
    CHECK(back.log_quotients()[j] == src.log_quotients()[j]);
}

TEST_CASE("json spec files round-trip and reject unknown fields") {
  SequenceSpec spec;
  spec.family = "explicit";
  spec.log_quotients = {0.0, 1.0 / 3.0, 0.7071067811865476, 1.1, 1.2, 1.3, 1.4, 1.5};
  spec.horizon = spec.log_quotients.size();

  const std::string path = "spec_roundtrip_tmp.json";
  {
    std::ofstream out(path);
    out << spec_to_json(spec);
  }
  const SequenceSpec back = parse_spec_string("@" + path);
  CHECK(back.family == spec.family);
  CHECK(back.horizon == spec.horizon);
  CHECK(back.log_quotients == spec.log_quotients);

  {
    std::ofstream out(path);
    out << "{\"family\":\"gevrey\",\"horizon\":16,\"params\":{\"s\":1.0},\"extra\":1}";
  }
  CHECK_THROWS_AS(parse_spec_string("@" + path), InvalidParameter);

  {
    std::ofstream out(path);
    out << "{\"family\":\"gevrey\",\"horizon\":16,\"params\":{\"zz\":1.0}}";
  }
  CHECK_THROWS_AS(parse_spec_string("@" + path), InvalidParameter);

  std::remove(path.c_str());
}

TEST_CASE("json round-trip of gevrey spec is field-identical") {
  const SequenceSpec spec = parse_spec_string("gevrey:s=0.30000000000000004,horizon=32");
  const std::string path = "spec_gevrey_tmp.json";
  {
    std::ofstream out(path);
    out << spec_to_json(spec);
  }
  const SequenceSpec back = parse_spec_string("@" + path);
  CHECK(back.family == spec.family);
  CHECK(back.horizon == spec.horizon);
  CHECK(back.params.at("s") == spec.params.at("s"));
  std::remove(path.c_str());
}
