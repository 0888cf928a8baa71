#include <braidcert/certify.hpp>

#include <gtest/gtest.h>

using namespace braidcert;

namespace {

CertifyOptions options(int s) {
  CertifyOptions o;
  o.strands = s;
  return o;
}

const CheckResult* find_result(const Certificate& c, const std::string& name) {
  for (const auto& r : c.results)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace

TEST(Certify, FiveStrands) {
  const auto c = certify(options(5));
  EXPECT_EQ(c.path, "full");
  EXPECT_EQ(c.dim, 10);
  ASSERT_TRUE(c.irrep.has_value());
  EXPECT_EQ(c.irrep->shape, Partition({3, 1, 1, 1}));
  EXPECT_EQ(c.tableaux.size(), 11u);
  EXPECT_EQ(c.elements_checked, 120u);
  EXPECT_EQ(c.verdict, kVerdictCertified);
  for (const auto& r : c.results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  EXPECT_FALSE(c.obstruction.has_value());
}

TEST(Certify, FourStrandsTakesP4Path) {
  auto opt = options(4);
  opt.p4_levels = 6;
  const auto c = certify(opt);
  EXPECT_EQ(c.path, "p4");
  ASSERT_TRUE(c.p4.has_value());
  EXPECT_EQ(c.p4->bound, 32);
  EXPECT_EQ(c.verdict, kVerdictP4);
  const auto j = to_json(c);
  EXPECT_EQ(j.at("p4").at("bounds_by_level").at("2").get<int>(), 2);
  EXPECT_EQ(j.at("p4").at("bounds_by_level").at("6").get<int>(), 32);
}

TEST(Certify, ThreeStrandsOutOfScope) {
  const auto c = certify(options(3));
  EXPECT_EQ(c.path, "out_of_scope");
  EXPECT_EQ(c.verdict, kVerdictOutOfScope);
  EXPECT_FALSE(c.falsified());
  EXPECT_FALSE(c.note.empty());
}

TEST(Certify, RejectsBadStrandCounts) {
  EXPECT_THROW(certify(options(2)), std::invalid_argument);
  EXPECT_THROW(certify(options(15)), std::invalid_argument);
  auto opt = options(8);
  opt.sample = 0;
  EXPECT_THROW(certify(opt), std::invalid_argument);
  EXPECT_THROW(parse_check("bogus"), std::invalid_argument);
}

TEST(Certify, StembridgeOnlyIsPartial) {
  auto opt = options(6);
  opt.checks = parse_check("stembridge");
  const auto c = certify(opt);
  EXPECT_EQ(c.verdict, "PARTIAL: selected checks passed");
  EXPECT_EQ(c.tableaux.size(), 15u);
  EXPECT_TRUE(c.trace_table.empty());
  EXPECT_FALSE(c.irrep.has_value());
  EXPECT_EQ(c.checks_run, (std::vector<std::string>{"stembridge"}));
}

TEST(Certify, SampledRunsAreReproducible) {
  auto opt = options(9);
  opt.sample = 40;
  opt.seed = 7;
  const auto a = to_json(certify(opt)).dump(2);
  const auto b = to_json(certify(opt)).dump(2);
  EXPECT_EQ(a, b);
  opt.seed = 8;
  EXPECT_NE(to_json(certify(opt)).dump(2), a);
}

TEST(Certify, TwelveStrandsSolvesObstructionFromTraces) {
  auto opt = options(12);
  opt.sample = 5;
  const auto c = certify(opt);
  EXPECT_EQ(c.verdict, kVerdictCertified);
  ASSERT_TRUE(c.obstruction.has_value());
  EXPECT_EQ(c.obstruction->measured_rhs, (std::array<BigInt, 5>{220, 85, 22, 4, 40}));
  EXPECT_TRUE(c.obstruction->result.contradiction);
}

TEST(Certify, DeterministicJson) {
  EXPECT_EQ(to_json(certify(options(6))).dump(2), to_json(certify(options(6))).dump(2));
}

TEST(Certify, VerifyRoundTrip) {
  const auto j = Json::parse(to_json(certify(options(6))).dump());
  const auto v = verify_certificate(j);
  EXPECT_EQ(v.verdict, kVerdictCertified);
  const auto* r = find_result(v, "stored_entries_revalidate");
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(r->passed);

  auto sopt = options(9);
  sopt.sample = 30;
  sopt.seed = 3;
  const auto sampled = to_json(certify(sopt));
  const auto reloaded = verify_certificate(Json::parse(sampled.dump()));
  EXPECT_EQ(reloaded.verdict, kVerdictCertified);
  EXPECT_EQ(reloaded.elements_checked, certify(sopt).elements_checked);

  EXPECT_EQ(verify_certificate(to_json(certify(options(4)))).verdict, kVerdictP4);
}

TEST(Certify, VerifyDetectsTamperedEntries) {
  auto j = to_json(certify(options(6)));
  auto tableaux = j;
  tableaux["tableaux"][2]["descents"][0] = 4;
  EXPECT_TRUE(verify_certificate(tableaux).falsified());

  auto det = j;
  det["det_entries"][1]["det"] = 1;
  EXPECT_TRUE(verify_certificate(det).falsified());
}

TEST(Certify, EverySingleSignFlipIsFalsified) {
  const int s = 5;
  const auto base = GeneratorSet::build(s);
  const auto opt = options(s);
  ASSERT_EQ(run_pipeline(base, opt).verdict, kVerdictCertified);

  auto check = [&](const GeneratorSet& g, const std::string& what) {
    const auto c = run_pipeline(g, opt);
    EXPECT_TRUE(c.falsified()) << what;
  };
  for (std::size_t k = 0; k < base.pair_omega.size(); ++k)
    for (int i = 0; i < base.pair_omega[k].dim(); ++i) {
      auto g = base;
      g.pair_omega[k] = g.pair_omega[k].with_flipped_sign(i);
      check(g, "pair omega_" + std::to_string(k + 1) + " column " + std::to_string(i));
    }
  for (std::size_t k = 0; k < base.triple_omega.size(); ++k)
    for (int i = 0; i < base.triple_omega[k].dim(); ++i) {
      auto g = base;
      g.triple_omega[k] = g.triple_omega[k].with_flipped_sign(i);
      check(g, "triple omega_" + std::to_string(k + 1) + " column " + std::to_string(i));
    }
  for (int i = 0; i < base.pair_epsilon.dim(); ++i) {
    auto g = base;
    g.pair_epsilon = g.pair_epsilon.with_flipped_sign(i);
    check(g, "pair epsilon column " + std::to_string(i));
  }
  for (int i = 0; i < base.triple_epsilon.dim(); ++i) {
    auto g = base;
    g.triple_epsilon = g.triple_epsilon.with_flipped_sign(i);
    check(g, "triple epsilon column " + std::to_string(i));
  }
}

TEST(Certify, StoredGeneratorSignFlipFalsifiesOnReload) {
  const auto j = to_json(certify(options(5)));
  auto bad = j;
  auto& entry = bad["generators"]["triple_omega"][1]["map"][3];
  entry[2] = -entry[2].get<int>();
  EXPECT_TRUE(verify_certificate(bad).falsified());
}

TEST(Certify, TextOutputMentionsVerdict) {
  const auto text = to_text(certify(options(5)));
  EXPECT_NE(text.find("verdict: " + std::string(kVerdictCertified)), std::string::npos);
  EXPECT_NE(text.find("identified shape: (3,1,1,1)"), std::string::npos);
}
