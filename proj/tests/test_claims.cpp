#include <doctest.h>

#include <stdexcept>

#include "dualhs/claims.hpp"

using namespace dualhs;

namespace {

const Field kFields[] = {Field::rationals(), Field::prime(kDefaultPrime)};

RingPtr ring(const std::vector<std::string>& vars, const std::string& rels, const Field& f) {
  const auto sig = RingSignature::make(vars, f);
  return QuotientRing::make(sig, parse_poly_list(rels, sig));
}

FreeVector vec(const std::string& text, const RingPtr& r) {
  return FreeVector::from_polynomials(r->signature(), parse_poly_list(text, r->signature()));
}

FPModule example_module(const RingPtr& r) {
  return submodule_presentation(r, {vec("x, -y", r), vec("x + y, x", r)});
}

ClaimInstance instance(const FPModule& m, IdealPtr ideal = nullptr) {
  return {m.ring(), m, ideal ? ideal : maximal_ideal(m.ring())};
}

std::string summary(const VerificationReport& rep) {
  std::string out = rep.claim + " " + rep.verdict + " " + rep.error;
  for (const auto& c : rep.checks)
    out += "\n  " + c.name + ": " + c.lhs.dump() + " vs " + c.rhs.dump() + (c.ok ? "" : "  FAILED");
  return out + "\n  " + rep.quantities.dump();
}

}  // namespace

TEST_CASE("registry") {
  CHECK(claim_registry().size() == 18);
  CHECK(claim_info("SEC63").arguments == ClaimArguments::ring_only);
  CHECK(claim_info("THM42").arguments == ClaimArguments::module_only);
  CHECK_THROWS_AS(claim_info("THM99"), std::invalid_argument);
  CHECK_THROWS_AS(verify("C0E0", ClaimInstance{}), std::invalid_argument);
}

TEST_CASE("quadric example") {
  for (const Field& f : kFields) {
    const auto R = ring({"x", "y"}, "x^2 + x*y + y^2", f);
    const auto M = example_module(R);

    const auto c0 = verify("C0E0", instance(M));
    CHECK(c0.verdict == "pass");
    CHECK(c0.checks[0].lhs == 2);
    CHECK(c0.checks[0].rhs == 2);

    const auto t57 = verify("THM57", instance(M));
    INFO(summary(t57));
    CHECK(t57.verdict == "pass");
    CHECK(t57.quantities["r"] == 1);
    CHECK(t57.quantities["e0"] == 2);
    CHECK(t57.quantities["phi"] == 2);
    CHECK(t57.quantities["c1"] == 0);

    const auto t42 = verify("THM42", instance(M));
    CHECK(t42.verdict == "pass");
    CHECK(t42.quantities["free"] == false);
    CHECK(t42.quantities["eps1_leading"] == 2);

    // The remaining claims that apply to a one-dimensional instance.
    for (const char* id : {"DUALMULT", "DEGBOUNDS", "PROP33", "COR34", "PROP41", "PROP53", "COR56",
                           "PROP59", "THM61", "PROP64", "DELTA"}) {
      const auto rep = verify(id, instance(M));
      INFO(summary(rep));
      CHECK(rep.verdict == "pass");
    }
    const auto p64 = verify("PROP64", instance(M));
    CHECK(p64.quantities["tail"]["t^r/(1-t) matches"] == true);
  }
}

TEST_CASE("free modules") {
  for (const Field& f : kFields) {
    for (const auto& R : {ring({"x", "y"}, "x^2 + x*y + y^2", f), ring({"x", "y"}, "", f)}) {
      const auto F = FPModule::free(R, 3);
      const auto rep = verify("THM42", instance(F));
      INFO(summary(rep));
      CHECK(rep.verdict == "pass");
      CHECK(rep.quantities["free"] == true);
      CHECK(rep.quantities["eps1_degree"] == "-inf");
      CHECK(verify("C0E0", instance(F)).verdict == "pass");
    }
  }
}

TEST_CASE("parameter ideals") {
  for (const Field& f : kFields) {
    const auto P = ring({"x", "y"}, "", f);
    const auto rep = verify("EX25", instance(FPModule::free(P, 1)));
    INFO(summary(rep));
    CHECK(rep.verdict == "pass");
    CHECK(rep.checks[0].lhs == Json({1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66}));

    const auto R = ring({"x", "y"}, "x^2 + x*y + y^2", f);
    const auto J = make_ideal(R, {R->variable(0)});
    const auto ex = verify("EX25", instance(example_module(R), J));
    INFO(summary(ex));
    CHECK(ex.verdict == "pass");
    CHECK(ex.quantities["l(M/JM)"] == 2);
  }
}

TEST_CASE("Artinian claims") {
  for (const Field& f : kFields) {
    const auto S = ring({"x", "y"}, "x^2, y^2", f);
    const auto k = FPModule::residue_field(S);

    const auto s51 = verify("SEC51", instance(k));
    INFO(summary(s51));
    CHECK(s51.verdict == "pass");
    CHECK(s51.quantities["r"] == 2);
    CHECK(s51.quantities["e0"] == 1);
    CHECK(s51.quantities["alpha"] == Json({1, 2}));
    CHECK(s51.quantities["c1"] == -1);
    CHECK(s51.quantities["f"] == "1 + t - t^2");

    const auto s63 = verify("SEC63", ClaimInstance{S, std::nullopt, nullptr});
    INFO(summary(s63));
    CHECK(s63.verdict == "pass");
    CHECK(s63.quantities["bass"] == Json({1, 2}));
    CHECK(s63.quantities["tail"]["t^r/(1-t) matches"] == true);
    CHECK(s63.quantities["tail"]["t^(r+1)/(1-t) matches"] == false);

    CHECK(verify("MATLIS", instance(k)).verdict == "pass");
    CHECK(verify("MATLIS", instance(FPModule::free(S, 2))).verdict == "pass");
    CHECK(verify("C0E0", instance(k)).verdict == "pass");
  }
}

TEST_CASE("unmet hypotheses are inconclusive") {
  for (const Field& f : kFields) {
    const auto R = ring({"x", "y"}, "x^2 + x*y + y^2", f);
    const auto M = example_module(R);
    // m needs two generators but d = 1.
    const auto ex = verify("EX25", instance(M));
    CHECK(ex.verdict == "inconclusive");
    CHECK(ex.error.find("parameter ideal") != std::string::npos);
    CHECK(verify("SEC51", instance(M)).verdict == "inconclusive");

    // Not Gorenstein: the socle of k[x,y]/(x,y)^2 is two-dimensional.
    const auto T = ring({"x", "y"}, "x^2, x*y, y^2", f);
    const auto m = verify("MATLIS", instance(FPModule::residue_field(T)));
    CHECK(m.verdict == "inconclusive");
    CHECK(m.error.find("Gorenstein") != std::string::npos);

    // k is not maximal Cohen-Macaulay over a one-dimensional ring.
    CHECK(verify("C0E0", instance(FPModule::residue_field(R))).verdict == "inconclusive");
    // The Ulrich check rejects R itself (e0 = 2, mu = 1).
    CHECK(verify("PROP64", instance(FPModule::free(R, 1))).verdict == "inconclusive");
  }
}

TEST_CASE("surface instance") {
  for (const Field& f : kFields) {
    const auto S = ring({"x", "y", "z"}, "x^2 + y^2 + z^2", f);
    const auto M = syzygy_module(syzygy_module(FPModule::residue_field(S)));
    for (const char* id : {"COR34", "PROP33", "PROP41", "DEGBOUNDS", "THM42", "PROP53", "THM57"}) {
      const auto rep = verify(id, instance(M));
      INFO(summary(rep));
      CHECK(rep.verdict == "pass");
    }
  }
}
