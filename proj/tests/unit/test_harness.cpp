#include <algorithm>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "lweid/harness.hpp"

using namespace lweid;
using lweid::test::seed_of;

namespace {

Params zk_params() {
  Params p;
  p.n = 24;
  p.m = 12;
  p.q = 31;
  p.sigma = 2.0;
  p.rounds = 4;
  return p;
}

double min_p(const std::vector<ZkStatResult>& results) {
  double out = 1.0;
  for (const auto& r : results) out = std::min(out, r.p);
  return out;
}

}  // namespace

TEST_CASE("completeness: every honest session accepts") {
  Params p = zk_params();
  CompletenessReport stern = completeness_suite(p, SchemeId::Stern, 200, seed_of("comp-s"));
  CHECK(stern.trials == 200);
  CHECK(stern.all_accepted());

  CompletenessReport cve = completeness_suite(p, SchemeId::Cve, 200, seed_of("comp-c"));
  CHECK(cve.all_accepted());

  CompletenessReport empty = completeness_suite(p, SchemeId::Stern, 0, seed_of("comp-0"));
  CHECK(empty.trials == 0);
  CHECK(empty.all_accepted());
}

TEST_CASE("soundness estimate brackets the theoretical rates") {
  Params p = zk_params();
  SoundnessEstimate stern = estimate_soundness(p, SchemeId::Stern, 4000, 1, seed_of("snd-s"));
  CHECK(stern.theoretical == doctest::Approx(2.0 / 3.0));
  CHECK(stern.ci.low <= stern.theoretical);
  CHECK(stern.ci.high >= stern.theoretical);

  SoundnessEstimate cve = estimate_soundness(p, SchemeId::Cve, 4000, 1, seed_of("snd-c"));
  CHECK(cve.theoretical == doctest::Approx(16.0 / 31.0));
  CHECK(cve.ci.low <= cve.theoretical);
  CHECK(cve.ci.high >= cve.theoretical);

  // multi-round trials square the per-round error
  SoundnessEstimate two = estimate_soundness(p, SchemeId::Stern, 4000, 2, seed_of("snd-2"));
  CHECK(two.theoretical == doctest::Approx(4.0 / 9.0));
  CHECK(two.ci.low <= two.theoretical);
  CHECK(two.ci.high >= two.theoretical);

  // interval width shrinks roughly like trials^-1/2
  SoundnessEstimate coarse = estimate_soundness(p, SchemeId::Stern, 1000, 1, seed_of("snd-w"));
  double coarse_width = coarse.ci.high - coarse.ci.low;
  double fine_width = stern.ci.high - stern.ci.low;
  CHECK(fine_width < coarse_width);
  CHECK(fine_width == doctest::Approx(coarse_width / 2.0).epsilon(0.25));
}

TEST_CASE("zk proxy: real and simulated rounds are statistically close") {
  Params p = zk_params();
  for (SchemeId scheme : {SchemeId::Stern, SchemeId::Cve}) {
    ZkExperiment exp = zk_experiment(p, scheme, 2500, seed_of("zk"), false);
    REQUIRE(exp.real.size() == 2500);
    REQUIRE(exp.simulated.size() == 2500);
    for (const auto& t : exp.real) CHECK(t.verdict == 1);
    auto results = zk_stat_test(p, exp.real, exp.simulated);
    CHECK(results.size() >= 5);
    CHECK(min_p(results) > 0.01);
  }
}

TEST_CASE("zk proxy is symmetric in its arguments") {
  Params p = zk_params();
  ZkExperiment exp = zk_experiment(p, SchemeId::Stern, 800, seed_of("sym"), false);
  auto ab = zk_stat_test(p, exp.real, exp.simulated);
  auto ba = zk_stat_test(p, exp.simulated, exp.real);
  REQUIRE(ab.size() == ba.size());
  for (size_t i = 0; i < ab.size(); ++i) {
    CHECK(ab[i].statistic == ba[i].statistic);
    CHECK(ab[i].p == doctest::Approx(ba[i].p));
    CHECK(ab[i].n_real == ba[i].n_sim);
  }
}

TEST_CASE("zk proxy: split-halves calibration control") {
  Params p = zk_params();
  ZkExperiment exp = zk_experiment(p, SchemeId::Cve, 3000, seed_of("halves"), false);
  std::vector<RoundTranscript> first(exp.real.begin(), exp.real.begin() + 1500);
  std::vector<RoundTranscript> second(exp.real.begin() + 1500, exp.real.end());
  CHECK(min_p(zk_stat_test(p, first, second)) > 0.01);
}

TEST_CASE("zk proxy: broken simulator is flagged hard") {
  Params p = zk_params();
  for (SchemeId scheme : {SchemeId::Stern, SchemeId::Cve}) {
    ZkExperiment exp = zk_experiment(p, scheme, 2500, seed_of("broken"), true);
    auto results = zk_stat_test(p, exp.real, exp.simulated);
    CHECK(min_p(results) < 1e-6);
    // the permutation marginal is the statistic that must catch it
    auto it = std::find_if(results.begin(), results.end(),
                           [](const ZkStatResult& r) { return r.statistic == "perm_first_source"; });
    REQUIRE(it != results.end());
    CHECK(it->p < 1e-6);
  }
}

TEST_CASE("zk proxy input validation") {
  Params p = zk_params();
  ZkExperiment stern = zk_experiment(p, SchemeId::Stern, 50, seed_of("val"), false);
  ZkExperiment cve = zk_experiment(p, SchemeId::Cve, 50, seed_of("val2"), false);
  CHECK_THROWS_AS(zk_stat_test(p, stern.real, cve.real), std::invalid_argument);
  CHECK_THROWS_AS(zk_stat_test(p, {}, stern.real), std::invalid_argument);
}

TEST_CASE("report rendering") {
  Params p = zk_params();
  ZkExperiment exp = zk_experiment(p, SchemeId::Stern, 300, seed_of("render"), false);
  auto results = zk_stat_test(p, exp.real, exp.simulated);
  std::string table = render_zk_table(results);
  std::string csv = render_zk_csv(results);
  CHECK(table.find("challenge") != std::string::npos);
  CHECK(csv.find("statistic,n_real,n_sim,chi2,dof,p") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == long(results.size()) + 1);
}
