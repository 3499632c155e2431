#include <doctest.h>

#include <set>

#include "ckhopf/suite.hpp"

using namespace ckhopf;

TEST_CASE("affine specializations") {
  for (int n : {2, 3, 4}) {
    std::vector<KVector> ks = affine_specializations(n);
    CHECK(ks.size() == static_cast<std::size_t>(n == 2 ? 3 : n == 3 ? 9 : 27));
    std::set<std::string> labels;
    for (const auto& k : ks) {
      CHECK(k.affine());
      CHECK(is_numeric(k));
      labels.insert(k.label());
    }
    CHECK(labels.size() == ks.size());
  }
  CHECK_FALSE(is_numeric(KVector::symbolic(3)));
}

TEST_CASE("check selection") {
  CHECK(all_checks(KVector::symbolic(2)).size() == check_names().size());
  std::vector<std::string> three = all_checks(KVector::symbolic(3), false);
  CHECK(std::find(three.begin(), three.end(), "dual2") == three.end());
  CHECK(std::find(three.begin(), three.end(), "galilei") == three.end());
  SuiteConfig cfg;
  CHECK_THROWS_AS(run_check("nope", KVector::symbolic(2), cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_check("dual2", KVector::symbolic(3), cfg), std::invalid_argument);
  cfg.basis = "classical";
  CHECK_THROWS_AS(run_check("hopf", KVector::symbolic(2), cfg), std::invalid_argument);
  CHECK(run_check("jacobi", KVector::parse(3, "-1,0"), cfg).all_pass());
}

TEST_CASE("sweep is deterministic across thread counts") {
  SuiteConfig cfg;
  cfg.samples = 50;
  cfg.max_degree = 4;
  VerificationReport one = sweep(3, {"jacobi", "confluence", "hopf"}, cfg, 1);
  VerificationReport four = sweep(3, {"jacobi", "confluence", "hopf"}, cfg, 4);
  CHECK(one.all_pass());
  CHECK(one.to_json(true) == four.to_json(true));
}
