#include <doctest.h>

#include "ckhopf/bicross.hpp"
#include "ckhopf/physkit.hpp"
#include "ckhopf/presentation.hpp"

using namespace ckhopf;

namespace {

void require_pass(const VerificationReport& rep) {
  INFO(rep.summary());
  CHECK(rep.size() > 0);
  CHECK(rep.all_pass());
}

}  // namespace

TEST_CASE("presentation round trip") {
  std::vector<HopfPtr> hs = {build_deformed_new(KVector::symbolic(3)), build_deformed_old(KVector::symbolic(2)),
                             to_physical(*build_deformed_new(preset("poincare_1").k), preset("poincare_1").basis),
                             build_dual_n2(KVector::symbolic(2)).product};
  for (const HopfPtr& h : hs) {
    INFO(h->id());
    nlohmann::json j = presentation_to_json(*h);
    HopfPtr back = presentation_from_json(nlohmann::json::parse(j.dump()));
    require_pass(compare_hopf(*back, *h, "roundtrip"));
    CHECK(presentation_to_json(*back) == j);
  }
  // plain algebra: no coalgebra fields
  AlgebraPtr a = build_classical_ck(KVector::symbolic(3, false));
  nlohmann::json j = presentation_to_json(*a);
  CHECK_FALSE(j.contains("coproduct"));
  HopfPtr back = presentation_from_json(j);
  CHECK_FALSE(back->complete());
  require_pass(compare_algebras(*back->algebra(), *a, "roundtrip"));
}

TEST_CASE("corrupted presentations") {
  nlohmann::json j = presentation_to_json(*build_deformed_new(KVector::symbolic(2)));
  nlohmann::json bad = j;
  bad["antipode"]["J12"] = "-J12";
  CHECK_FALSE(check_hopf(*presentation_from_json(bad)).all_pass());

  bad = j;
  bad["generators"][0]["kind"] = "Q";
  CHECK_THROWS_AS(presentation_from_json(bad), std::runtime_error);
  bad = j;
  bad.erase("rules");
  CHECK_THROWS_AS(presentation_from_json(bad), std::runtime_error);
  bad = j;
  bad["coproduct"]["P1"] = "E^-2 (x) Q7";
  CHECK_THROWS(presentation_from_json(bad));
}
