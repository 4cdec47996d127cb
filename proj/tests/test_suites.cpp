#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include <noncomm/suites.hpp>

#include "test_helpers.hpp"

using namespace noncomm;

TEST_CASE("every named suite passes at a reduced trial count") {
  SuiteParams p;
  p.trials = 10;
  for (const auto& name : suite_names()) {
    const auto report = run_suite(name, p);
    INFO(render_text(report));
    CHECK(report.all_pass());
  }
}

TEST_CASE("unknown suites are usage errors") {
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteParams{}), UnsupportedError);
}

TEST_CASE("reports are deterministic under a fixed seed") {
  SuiteParams p;
  p.trials = 15;
  p.seed = 42;
  for (const std::string name : {"bn-invariants", "phi-isomorphism"}) {
    const auto a = run_suite(name, p);
    const auto b = run_suite(name, p);
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a).dump() == render_json(b).dump());
  }
}

TEST_CASE("rendered reports carry the contract fields") {
  SuiteParams p;
  p.trials = 5;
  p.n = 2;
  const auto report = run_suite("dn-invariants", p);
  const std::string text = render_text(report);
  CHECK(text.rfind("SUITE dn-invariants", 0) == 0);
  CHECK(text.find("CHECK orbit-round-trip PASS") != std::string::npos);
  CHECK(text.find("RESULT PASS") != std::string::npos);
  CHECK(text.find("NOTE") != std::string::npos);

  const Json j = render_json(report);
  CHECK(j.at("suite") == "dn-invariants");
  CHECK(j.at("checks").is_array());
  CHECK(j.at("params").at("n") == "2");
}

TEST_CASE("decompose service round-trips a power sum") {
  const std::string in_path = "suite_dec_in.json";
  const std::string out_path = "suite_dec_out.json";
  LaurentPoly<Rational> f(2);
  f.add_term({2, 0}, Rational(1));
  f.add_term({-2, 0}, Rational(1));
  f.add_term({0, 2}, Rational(1));
  f.add_term({0, -2}, Rational(1));
  test_helpers::write_file(in_path, laurent_to_json(f).dump(2) + "\n");

  std::ostringstream out, err;
  const int code = decompose_file(Basis::BMinus, in_path, out_path, out, err);
  CHECK(code == 0);
  CHECK(out.str().find("CERTIFIED") != std::string::npos);

  Json written = Json::parse(test_helpers::read_file(out_path));
  const auto dec = decomposition_from_json(written, 2);
  CHECK(dec.terms == std::map<std::vector<int>, Rational>{
                         {{2, 0}, Rational(1)}, {{0, 1}, Rational(-2)}, {{0, 0}, Rational(4)}});
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
}

TEST_CASE("decompose service rejects non-invariant input with code one") {
  const std::string in_path = "suite_dec_bad.json";
  test_helpers::write_file(
      in_path, laurent_to_json(LaurentPoly<Rational>::variable(2, 0)).dump(2) + "\n");
  std::ostringstream out, err;
  CHECK(decompose_file(Basis::BMinus, in_path, "unused.json", out, err) == 1);
  // reduction strips the dominant head x1; the monomial left in front is x2
  CHECK(err.str().find("offending monomial x2") != std::string::npos);
  std::remove(in_path.c_str());
}

TEST_CASE("decompose service rejects malformed input with code two") {
  const std::string in_path = "suite_dec_syntax.json";
  test_helpers::write_file(in_path, "{not json");
  std::ostringstream out, err;
  CHECK(decompose_file(Basis::BMinus, in_path, "unused.json", out, err) == 2);
  test_helpers::write_file(in_path, "{\"nvars\": 2}");
  CHECK(decompose_file(Basis::BMinus, in_path, "unused.json", out, err) == 2);
  CHECK(decompose_file(Basis::BMinus, "missing_file.json", "unused.json", out, err) == 2);
  std::remove(in_path.c_str());
}

TEST_CASE("reynolds service projects onto invariants") {
  const std::string in_path = "suite_rey_in.json";
  const std::string out_path = "suite_rey_out.json";
  test_helpers::write_file(
      in_path, laurent_to_json(LaurentPoly<Rational>::variable(2, 0)).dump(2) + "\n");
  std::ostringstream out, err;
  const int code =
      reynolds_file({Family::B, 2}, Action::TorusMinus, in_path, out_path, out, err);
  CHECK(code == 0);
  const auto g = laurent_rational_from_json(Json::parse(test_helpers::read_file(out_path)));
  const auto s = bn_generators(2, Sign::Minus);
  CHECK(g == Rational(1, 4) * s[0]);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
}
