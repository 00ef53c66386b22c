#include <gtest/gtest.h>

#include "bp2/audit.hpp"

using namespace bp2;

TEST(Audit, ThreeVertices) {
  const AuditReport r = audit(3, 3);
  EXPECT_EQ(r.claim("L1").checked, 8u);
  EXPECT_EQ(r.claim("L1").agreements, 8u);
  const ClaimTally& complete = r.claim("T-verify-complete");
  EXPECT_EQ(complete.checked, 1u);
  EXPECT_EQ(complete.agreements, 1u);
  EXPECT_EQ(r.claim("T-seq").agreements, 1u);
  EXPECT_TRUE(r.asserted_claims_hold());
}

TEST(Audit, FiveVerticesSound) {
  const AuditReport r = audit(5, 5);
  const ClaimTally& sound = r.claim("T-verify-sound");
  EXPECT_TRUE(sound.counterexamples.empty());
  EXPECT_GT(sound.checked, 0u);
  EXPECT_EQ(r.claim("L1").checked, 1024u);
  EXPECT_TRUE(r.asserted_claims_hold());
}

TEST(Audit, TalliesAreConsistent) {
  const AuditReport r = audit(1, 5);
  for (const ClaimTally& c : r.claims) {
    EXPECT_EQ(c.agreements + c.counterexamples.size(), c.checked) << c.id;
    EXPECT_TRUE(std::is_sorted(c.counterexamples.begin(), c.counterexamples.end())) << c.id;
  }
  EXPECT_EQ(r.claim("L1").checked, 1u + 2 + 8 + 64 + 1024);
}

TEST(Audit, DeterministicAcrossParallelism) {
  const AuditReport a = audit(3, 6, 1);
  const AuditReport b = audit(3, 6, 4);
  EXPECT_EQ(format_report(a), format_report(b));
}

TEST(Audit, ReportListsCounterexamples) {
  const AuditReport r = audit(6, 6);
  const std::string text = format_report(r);
  const ClaimTally& seq = r.claim("T-seq");
  ASSERT_FALSE(seq.counterexamples.empty());
  EXPECT_NE(text.find("# T-seq counterexamples (" + std::to_string(seq.counterexamples.size()) + ")"),
            std::string::npos);
  EXPECT_NE(text.find("\n" + seq.counterexamples.front() + "\n"), std::string::npos);
}

TEST(Audit, Errors) {
  EXPECT_THROW(audit(0, 3), InputError);
  EXPECT_THROW(audit(4, 3), InputError);
  EXPECT_THROW(audit(3, 9), CapacityError);
  EXPECT_THROW(AuditReport{}.claim("nope"), InputError);
}
