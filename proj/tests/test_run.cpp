#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sstream>

#include "jlm/errors.hpp"
#include "jlm/run.hpp"

using namespace jlm;

namespace {

constexpr const char* kThreePhoton =
    "# three-photon setup\n"
    "omega_e = 1\n"
    "omega_c = 1/3\n"
    "lambda = 0.03\n"
    "rwa = false\n"
    "order = 2\n"
    "n_max = 15\n";

std::string run_expand(const RunConfig& config, int expected_exit = 0) {
  std::ostringstream out, diag;
  const int code = cmd_expand(config, out, diag);
  REQUIRE(code == expected_exit);
  return out.str();
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig config = parse_config_text(kThreePhoton);
  CHECK(config.model.omega_e == 1);
  CHECK(config.model.omega_c == Rational{1, 3});
  CHECK(config.model.lambda == 0.03);
  CHECK_FALSE(config.model.rwa);
  CHECK(config.order == 2);
  CHECK(config.numerics.n_max == 15);
  CHECK(config.format == "text");

  // λ accepts a rational spelling too
  const RunConfig alt = parse_config_text("omega_e=1\nomega_c=1/3\nlambda=3/100\n");
  CHECK(alt.model.lambda == 0.03);
}

TEST_CASE("config rejection paths") {
  CHECK_THROWS_AS(parse_config_text("omega_e=abc\nomega_c=1\nlambda=0\n"), ConfigError);
  // decimals are rejected for frequencies, resonance tests must stay exact
  CHECK_THROWS_AS(parse_config_text("omega_e=0.5\nomega_c=1\nlambda=0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("omega_e=1\nomega_c=1/3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("omega_e=1\nomega_c=1/3\nlambda=0\nbogus=1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("omega_e=1\nomega_c=1/3\nlambda=0\norder=3\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("omega_e=1\nomega_c=1/3\nlambda=0\nformat=xml\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text("omega_e=-1\nomega_c=1/3\nlambda=0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("omega_e=1\nomega_c=1/3\nlambda=0\nn_max=0\n"),
                  ConfigError);
}

TEST_CASE("expand emits the pinned first-order terms") {
  RunConfig config = parse_config_text(kThreePhoton);
  config.order = 1;
  config.format = "json";
  const std::string text = run_expand(config);
  const auto doc = nlohmann::json::parse(text);

  REQUIRE(doc.at("resonant_terms").size() == 1);
  const auto& term = doc.at("resonant_terms").at(0);
  CHECK(term.at("atomic_label") == "σz");
  CHECK(term.at("coeff_num") == "9");
  CHECK(term.at("coeff_den") == "4");
  CHECK(term.at("coeff_im_num") == "0");
  CHECK(term.at("lambda_power") == 2);
  CHECK(term.at("omega_power") == -1);
  CHECK(term.at("sqrt_factor") == 1);
  REQUIRE(term.at("bosonic").size() == 2);
  CHECK(term.at("bosonic").at(0).at("m") == 0);
  CHECK(term.at("bosonic").at(0).at("n") == 0);
  CHECK(term.at("bosonic").at(0).at("weight") == "1/2");
  CHECK(term.at("bosonic").at(1).at("m") == 1);
  CHECK(term.at("bosonic").at(1).at("n") == 1);
  CHECK(term.at("bosonic").at(1).at("weight") == "1");

  CHECK(doc.at("discarded_terms").size() == 4);
  CHECK(doc.at("audit").at("identity_dropped").size() == 1);
}

TEST_CASE("expand emits the pinned second-order term") {
  RunConfig config = parse_config_text(kThreePhoton);
  config.format = "json";
  const std::string text = run_expand(config);
  const auto doc = nlohmann::json::parse(text);

  bool found = false;
  for (const auto& term : doc.at("resonant_terms")) {
    if (term.at("atomic_label") != "σ+") continue;
    found = true;
    CHECK(term.at("coeff_num") == "-9");
    CHECK(term.at("coeff_den") == "4");
    CHECK(term.at("lambda_power") == 3);
    CHECK(term.at("omega_power") == -2);
    REQUIRE(term.at("bosonic").size() == 1);
    CHECK(term.at("bosonic").at(0).at("m") == 0);
    CHECK(term.at("bosonic").at(0).at("n") == 3);
    CHECK(term.at("bosonic").at(0).at("weight") == "1");
  }
  CHECK(found);
}

TEST_CASE("emitted coefficients round-trip to the same canonical form") {
  RunConfig config = parse_config_text(kThreePhoton);
  config.format = "json";
  for (const int order : {0, 1, 2}) {
    config.order = order;
    const EffectiveCorrection corr = build_correction(config.model, order);
    const std::string text = correction_to_json(config.model, corr);
    CHECK(expr_from_json(text, "resonant_terms") == corr.resonant_terms);
    CHECK(expr_from_json(text, "identity_dropped") == corr.identity_dropped);
    const auto doc = nlohmann::json::parse(text);
    REQUIRE(doc.at("discarded_terms").size() == corr.discarded_terms.size());
    for (size_t k = 0; k < corr.discarded_terms.size(); ++k) {
      const auto& entry = doc.at("discarded_terms").at(k);
      CHECK(expr_from_json_terms(entry.at("terms").dump()) == corr.discarded_terms[k].first);
      CHECK(rational_from_string(entry.at("detuning").get<std::string>()) ==
            corr.discarded_terms[k].second);
    }
  }
}

TEST_CASE("output is byte-deterministic") {
  RunConfig config = parse_config_text(kThreePhoton);
  config.format = "json";
  CHECK(run_expand(config) == run_expand(config));
  config.format = "text";
  CHECK(run_expand(config) == run_expand(config));

  std::ostringstream a, b, diag;
  REQUIRE(cmd_opspace(config, 0.25, true, a, diag) == 0);
  REQUIRE(cmd_opspace(config, 0.25, true, b, diag) == 0);
  CHECK(a.str() == b.str());
}

TEST_CASE("expand warns when the dispersive assumption is strained") {
  RunConfig config =
      parse_config_text("omega_e=1\nomega_c=999/1000\nlambda=0.1\norder=1\n");
  std::ostringstream out, diag;
  REQUIRE(cmd_expand(config, out, diag) == 0);
  CHECK(diag.str().find("dispersive assumption") != std::string::npos);

  RunConfig fine = parse_config_text(kThreePhoton);
  std::ostringstream out2, diag2;
  REQUIRE(cmd_expand(fine, out2, diag2) == 0);
  CHECK(diag2.str().empty());
}

TEST_CASE("opspace csv output") {
  RunConfig config = parse_config_text(kThreePhoton);
  config.format = "csv";
  std::ostringstream out, diag;
  REQUIRE(cmd_opspace(config, 0.5, false, out, diag) == 0);
  CHECK(out.str().find("section,i,j,value") != std::string::npos);
  CHECK(out.str().find("omega_prime,,,") != std::string::npos);
}

TEST_CASE("expand reports degeneracies with exit code 2") {
  RunConfig config = parse_config_text("omega_e=1\nomega_c=1\nlambda=0.01\norder=1\n");
  std::ostringstream out, diag;
  CHECK(cmd_expand(config, out, diag) == 2);
  CHECK(diag.str().find("composite") != std::string::npos);
}

TEST_CASE("verify passes at the default three-photon setup") {
  RunConfig config = parse_config_text(kThreePhoton);
  config.format = "json";
  std::ostringstream out, diag;
  REQUIRE(cmd_verify(config, out, diag) == 0);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc.at("pass") == true);
  CHECK(doc.at("relative_error").get<double>() < 0.05);
  CHECK(doc.at("contrast").get<double>() > 0.9);
  CHECK(doc.at("omega_c_star").get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("verify handles a flat trajectory as an informative failure") {
  RunConfig config = parse_config_text("omega_e=1\nomega_c=1/3\nlambda=0\nn_max=6\n");
  std::ostringstream out, diag;
  CHECK(cmd_verify(config, out, diag) == 3);
  CHECK(out.str().find("no oscillation") != std::string::npos);
}

TEST_CASE("verify reports leakage at exit code 3") {
  RunConfig config = parse_config_text("omega_e=1\nomega_c=1/3\nlambda=0.2\nn_max=3\n");
  std::ostringstream out, diag;
  CHECK(cmd_verify(config, out, diag) == 3);
  CHECK(diag.str().find("n_max") != std::string::npos);
}

TEST_CASE("render output") {
  const RunConfig config = parse_config_text(kThreePhoton);
  std::ostringstream out, diag;
  REQUIRE(cmd_render(config, 0, out, diag) == 0);
  CHECK(out.str().find("g →(absorb, δ=ω_c−ω_e)→ e") != std::string::npos);
  CHECK(out.str().find("4 composite operators, 4 diagrams") != std::string::npos);

  std::ostringstream first, diag1;
  REQUIRE(cmd_render(config, 1, first, diag1) == 0);
  CHECK(first.str().find("|g><g|⊗a†a") != std::string::npos);   // Stark loop
  CHECK(first.str().find("LEFT") != std::string::npos);
  CHECK(first.str().find("RIGHT") != std::string::npos);

  std::ostringstream third, diag3;
  REQUIRE(cmd_render(config, 3, third, diag3) == 0);
  CHECK(third.str().find("enumeration only") != std::string::npos);

  std::ostringstream bad, diag_bad;
  CHECK(cmd_render(config, 7, bad, diag_bad) == 1);
}
