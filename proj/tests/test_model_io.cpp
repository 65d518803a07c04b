#include <random>

#include <doctest.h>
#include <json.hpp>

#include "fairmatch/instance_io.hpp"
#include "fairmatch/satisfaction.hpp"
#include "test_util.hpp"

using namespace fairmatch;

namespace {
const char* kCasePath = FAIRMATCH_DATA_DIR "/case_study.json";
}

TEST_CASE("the bundled case study loads with its documented shape") {
  const auto inst = io::load_instance(kCasePath);
  CHECK(inst.num_shippers() == 8);
  CHECK(inst.num_carriers() == 10);
  CHECK(inst.gamma == doctest::Approx(0.2));
  CHECK(inst.eta_lo == doctest::Approx(0.75));
  CHECK(inst.eta_hi == doctest::Approx(1.0));
  CHECK(inst.big_m == doctest::Approx(1e6));
  REQUIRE(inst.has_matrices());
  CHECK((*inst.alpha)(0, 3) == doctest::Approx(0.94));
  CHECK((*inst.beta)(3, 0) == doctest::Approx(0.78));
  REQUIRE(inst.reliability_shipper_score.has_value());
  CHECK((*inst.reliability_shipper_score)(1, 3) == doctest::Approx(1.41));
}

TEST_CASE("degenerate and malformed documents are rejected with field names") {
  const char* no_shippers = R"({
    "shippers": [], "carriers": [{"id":1}],
    "weights": {"shipper": [0,0,0,0,0,0,0,0,1], "carrier": [0,0,0,0,0,0,0,0,1]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0]
  })";
  CHECK_THROWS_WITH_AS(io::instance_from_text(no_shippers),
                       "shippers: list is empty", validation_error);

  const char* bad_weights = R"({
    "shippers": [{"id":1}], "carriers": [{"id":1}],
    "weights": {"shipper": [0.5,0.6,0,0,0,0,0,0,0], "carrier": [0,0,0,0,0,0,0,0,1]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0],
    "satisfaction_alpha": [[1.0]], "satisfaction_beta": [[1.0]]
  })";
  try {
    io::instance_from_text(bad_weights);
    FAIL("expected a validation error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("weights.shipper[1]") != std::string::npos);
    CHECK(std::string(e.what()).find("expected 1") != std::string::npos);
  }

  // attribute slots must carry zero weight
  const char* attr_weight = R"({
    "shippers": [{"id":1}], "carriers": [{"id":1}],
    "weights": {"shipper": [0,0,0,0.5,0,0,0,0,0.5], "carrier": [0,0,0,0,0,0,0,0,1]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0],
    "satisfaction_alpha": [[1.0]], "satisfaction_beta": [[1.0]]
  })";
  CHECK_THROWS_AS(io::instance_from_text(attr_weight), validation_error);
}

namespace {

std::string base_doc(const std::string& gamma, const std::string& eta) {
  return R"({
    "shippers": [{"id":1}], "carriers": [{"id":1}],
    "weights": {"shipper": [0,0,0,0,0,0,0,0,1], "carrier": [0,0,0,0,0,0,0,0,1]},
    "gamma": )" + gamma + R"(, "eta_interval": )" + eta + R"(,
    "satisfaction_alpha": [[1.0]], "satisfaction_beta": [[1.0]]
  })";
}

}  // namespace

TEST_CASE("scalar range validation") {
  CHECK_NOTHROW(io::instance_from_text(base_doc("0.2", "[0.75, 1.0]")));
  CHECK_THROWS_AS(io::instance_from_text(base_doc("0.0", "[0.75, 1.0]")),
                  validation_error);
  CHECK_THROWS_AS(io::instance_from_text(base_doc("1.0", "[0.75, 1.0]")),
                  validation_error);
  CHECK_THROWS_AS(io::instance_from_text(base_doc("0.2", "[0.0, 1.0]")),
                  validation_error);
  CHECK_THROWS_AS(io::instance_from_text(base_doc("0.2", "[1.0, 0.75]")),
                  validation_error);
}

TEST_CASE("matrix dimension mismatches name the block") {
  const char* bad_beta = R"({
    "shippers": [{"id":1},{"id":2}], "carriers": [{"id":1},{"id":2}],
    "weights": {"shipper": [0,0,0,0,0,0,0,0,1], "carrier": [0,0,0,0,0,0,0,0,1]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0],
    "satisfaction_alpha": [[1.0, 0.5],[0.5, 1.0]],
    "satisfaction_beta": [[1.0, 0.5]]
  })";
  try {
    io::instance_from_text(bad_beta);
    FAIL("expected a validation error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("satisfaction_beta") != std::string::npos);
  }
}

TEST_CASE("reliability accepts fuzzy pairs and rejects invalid ones") {
  const char* good = R"({
    "shippers": [{"id":1}], "carriers": [{"id":1}],
    "weights": {"shipper": [0,0,0,0,0,0,0,0,1], "carrier": [0,0,0,0,0,0,0,0,1]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0],
    "reliability_shipper": [[{"mu": 0.6, "nu": 0.3}]],
    "reliability_carrier": [[0.8]],
    "satisfaction_alpha": [[1.0]], "satisfaction_beta": [[1.0]]
  })";
  const auto inst = io::instance_from_text(good);
  REQUIRE(inst.reliability_shipper_ifn.has_value());
  CHECK((*inst.reliability_shipper_ifn)[0][0].hesitation() ==
        doctest::Approx(0.1));

  const char* bad = R"({
    "shippers": [{"id":1}], "carriers": [{"id":1}],
    "weights": {"shipper": [0,0,0,0,0,0,0,0,1], "carrier": [0,0,0,0,0,0,0,0,1]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0],
    "reliability_shipper": [[{"mu": 0.8, "nu": 0.5}]],
    "satisfaction_alpha": [[1.0]], "satisfaction_beta": [[1.0]]
  })";
  CHECK_THROWS_AS(io::instance_from_text(bad), validation_error);
}

TEST_CASE("profile invariants: intervals, parameters, preference duplicates") {
  const char* dup_pref = R"({
    "shippers": [{"id":1, "indicators": {"A8": "east"}}],
    "carriers": [{"id":1, "indicators": {"B8": {"sequence": ["east","east"], "tau": 1.0, "tolerable": false}}}],
    "weights": {"shipper": [0,0,0,0,0,0,0,0,1], "carrier": [0,0,0,0,0,0,0,0.5,0.5]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0],
    "satisfaction_alpha": [[1.0]], "satisfaction_beta": [[1.0]]
  })";
  CHECK_THROWS_AS(io::instance_from_text(dup_pref), validation_error);

  const char* bad_interval = R"({
    "shippers": [{"id":1, "indicators": {"A1": {"interval": [4, 1], "theta": 0.5, "tolerable": true}}}],
    "carriers": [{"id":1}],
    "weights": {"shipper": [0.5,0,0,0,0,0,0,0,0.5], "carrier": [0,0,0,0,0,0,0,0,1]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0],
    "satisfaction_alpha": [[1.0]], "satisfaction_beta": [[1.0]]
  })";
  CHECK_THROWS_AS(io::instance_from_text(bad_interval), validation_error);

  const char* bad_theta = R"({
    "shippers": [{"id":1, "indicators": {"A1": {"interval": [1, 4], "theta": 1.5, "tolerable": true}}}],
    "carriers": [{"id":1}],
    "weights": {"shipper": [0.5,0,0,0,0,0,0,0,0.5], "carrier": [0,0,0,0,0,0,0,0,1]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0],
    "satisfaction_alpha": [[1.0]], "satisfaction_beta": [[1.0]]
  })";
  CHECK_THROWS_AS(io::instance_from_text(bad_theta), validation_error);
}

TEST_CASE("round trip: serialize then parse reproduces the document") {
  const auto inst = io::load_instance(kCasePath);
  const std::string text = io::instance_to_text(inst);
  const auto again = io::instance_from_text(text);
  CHECK(io::instance_to_text(again) == text);
  CHECK(again.alpha == inst.alpha);
  CHECK(again.beta == inst.beta);
  CHECK(again.gamma == inst.gamma);
  CHECK(again.weights_shipper == inst.weights_shipper);
  CHECK(again.weights_carrier == inst.weights_carrier);
}

TEST_CASE("round trip holds on randomly generated matrix instances") {
  std::mt19937 rng(97);
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<std::size_t> md(1, 4), nd(1, 5);
    const std::size_t m = md(rng);
    const std::size_t n = std::max(m, nd(rng));
    auto inst = testutil::matrix_instance(testutil::random_matrix(rng, m, n),
                                          testutil::random_matrix(rng, n, m));
    const std::string text = io::instance_to_text(inst);
    const auto again = io::instance_from_text(text);
    CHECK(io::instance_to_text(again) == text);
  }
}

TEST_CASE("indicator profiles survive the round trip") {
  const char* doc = R"({
    "shippers": [{"id":1, "indicators": {
      "A1": {"interval": [1, 4], "theta": 0.5, "tolerable": false},
      "A2": {"value": 50, "omega": 0.4, "tolerable": true},
      "A3": {"code": "box", "phi": 0.3, "tolerable": true},
      "A4": 5.5, "A7": "hub_a", "A8": "east"
    }}],
    "carriers": [{"id":1, "indicators": {
      "B1": 2, "B2": {"value": 45, "omega": 0.5, "tolerable": false},
      "B3": "box", "B4": 9.0, "B7": "hub_a",
      "B8": {"sequence": ["east", "west"], "tau": 1.0, "tolerable": false}
    }}],
    "weights": {"shipper": [0.3,0.3,0.2,0,0,0,0,0,0.2], "carrier": [0,0.5,0,0,0,0,0,0.25,0.25]},
    "gamma": 0.2, "eta_interval": [0.75, 1.0],
    "reliability_shipper": [[0.9]], "reliability_carrier": [[0.8]]
  })";
  const auto inst = io::instance_from_text(doc);
  CHECK_FALSE(inst.has_matrices());
  const std::string text = io::instance_to_text(inst);
  const auto again = io::instance_from_text(text);
  CHECK(io::instance_to_text(again) == text);

  const auto [alpha, beta] = satisfaction::aggregate(inst);
  const auto [alpha2, beta2] = satisfaction::aggregate(again);
  CHECK(alpha == alpha2);
  CHECK(beta == beta2);
}

TEST_CASE("scheme documents carry pairs, metrics, and rounded mirrors") {
  MatchingScheme s;
  s.pairs = {{0, 3}, {1, 0}, {2, 9}};
  s.f1 = 2.53;
  s.f2 = 2.63;
  s.u1 = 0.8622754491;
  s.s1 = 0.8622754491;
  s.u2 = 0.879032;
  s.s2 = 0.879032;
  s.eta = 0.980937;
  const std::string text = io::scheme_to_text(s);
  const auto doc = nlohmann::json::parse(text);
  REQUIRE(doc.at("pairs").size() == 3);
  CHECK(doc.at("pairs")[0] == nlohmann::json({1, 4}));
  CHECK(doc.at("pairs")[1] == nlohmann::json({2, 1}));
  CHECK(doc.at("pairs")[2] == nlohmann::json({3, 10}));
  CHECK(doc.at("s1") == doctest::Approx(0.8622754491));
  CHECK(doc.at("rounded").at("s1") == doctest::Approx(0.86));
  CHECK(doc.at("rounded").at("s2") == doctest::Approx(0.88));
  CHECK(doc.at("rounded").at("eta") == doctest::Approx(0.98));
  CHECK(io::scheme_to_text(s) == text);

  MatchingScheme empty;
  const auto edoc = nlohmann::json::parse(io::scheme_to_text(empty));
  CHECK(edoc.at("pairs").empty());
}

TEST_CASE("the bundled scenario file equals the built-in parameters") {
  const auto p = io::load_game_params(FAIRMATCH_DATA_DIR "/array1.json");
  const auto builtin = evogame::array1();
  CHECK(p.C_I == builtin.C_I);
  CHECK(p.sigma1 == builtin.sigma1);
  CHECK(p.alpha_s == builtin.alpha_s);
  CHECK(p.D_G == builtin.D_G);
  CHECK(p.eta == builtin.eta);
  CHECK(p.R_I_hi == builtin.R_I_hi);
}

TEST_CASE("game parameter documents") {
  const char* doc = R"({
    "C_I": 5, "C_P": 5, "sigma1": 1.0, "sigma2": 0.2, "h": 0.1, "f": 0.1,
    "W_I": 20, "W_P": 20, "Q_I": 10, "Q_P": 10,
    "q1": 0.4, "q2": 0.6, "p1": 0.4, "p2": 0.6,
    "R_I_hi": 35, "R_I_lo": 25, "R_I": 30, "R_P_hi": 35, "R_P_lo": 25, "R_P": 30,
    "u_I": 0.7, "u_P": 0.7, "alpha": 0.6, "beta": 0.6,
    "S_I": 10, "S_P": 10, "D_G": 3, "F_G_I": 10, "F_G_P": 10, "eta": 0.7
  })";
  const auto p = io::game_params_from_text(doc);
  CHECK(p.alpha_s == doctest::Approx(0.6));
  CHECK(p.D_G == doctest::Approx(3.0));

  const char* bad = R"({
    "C_I": 5, "C_P": 5, "sigma1": 1.0, "sigma2": 0.2, "h": 0.1, "f": 0.1,
    "W_I": 20, "W_P": 20, "Q_I": 10, "Q_P": 10,
    "q1": 0.5, "q2": 0.6, "p1": 0.4, "p2": 0.6,
    "R_I_hi": 35, "R_I_lo": 25, "R_I": 30, "R_P_hi": 35, "R_P_lo": 25, "R_P": 30,
    "u_I": 0.7, "u_P": 0.7, "alpha": 0.6, "beta": 0.6,
    "S_I": 10, "S_P": 10, "D_G": 3, "F_G_I": 10, "F_G_P": 10, "eta": 0.7
  })";
  CHECK_THROWS_AS(io::game_params_from_text(bad), validation_error);
}
