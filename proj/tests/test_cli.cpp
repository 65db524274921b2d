#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pointed/cli.hpp"

using namespace pointed;

namespace {

std::string data_file(const std::string& name) { return std::string(POINTED_DATA_DIR) + "/" + name + ".datum"; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CommandResult run(CommandResult (*cmd)(const std::string&, const std::string&, const CliOptions&), const std::string& name, const CliOptions& opt = {}) {
    return cmd(slurp(data_file(name)), name, opt);
}

CliOptions with_threads(unsigned t) {
    CliOptions o;
    o.exec.threads = t;
    return o;
}

}  // namespace

TEST(Cli, CheckEchoRoundTrips) {
    for (const std::string name : {"taft3", "a1_q5", "a2_q3", "a1xa1_linked", "a1xa1_unlinked", "b2_q5", "a2_q19"}) {
        const auto first = run(cmd_check, name);
        ASSERT_EQ(first.exit_code, 0) << name << "\n" << first.report.to_kv();
        const std::string text = datum_text_from_report(first.report);
        const auto second = cmd_check(text, name, {});
        EXPECT_EQ(first.report.to_kv(), second.report.to_kv()) << name;
        // the writer's output reads back to the same datum
        const auto f = parse_datum_file(text, name);
        const Datum d = datum_from_file(f);
        const auto third = cmd_check(write_datum_file(d, linking_from_file(f, d)), name, {});
        EXPECT_EQ(first.report.to_kv(), third.report.to_kv()) << name;
    }
}

TEST(Cli, CheckDescribesTheDatum) {
    const auto r = run(cmd_check, "a2_q3").report;
    EXPECT_EQ(r.get("dynkin.type"), "A_2");
    EXPECT_EQ(r.get("cartan"), "[[2,-1],[-1,2]]");
    EXPECT_EQ(r.get("positive_roots.count"), "3");
    EXPECT_EQ(r.get("expected_dimension"), "243");
    EXPECT_EQ(run(cmd_check, "a1xa1_unlinked").report.get("linkable_pairs"), "1-2");
}

TEST(Cli, JsonAndKvCarryTheSameEntries) {
    const auto r = run(cmd_check, "a1xa1_linked").report;
    const auto j = nlohmann::ordered_json::parse(r.to_json());
    ASSERT_EQ(j.size(), r.entries().size());
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
        EXPECT_EQ(key, r.entries()[k].first);
        EXPECT_EQ(value.get<std::string>(), r.entries()[k].second);
        ++k;
    }
}

TEST(Cli, ParseErrorsCarryPositions) {
    const auto r = cmd_check("[group]\norders = 3\n[vertex]\ng = 1\nchi = 1 2\n", "in.datum");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(r.report.get("error.kind"), "parse");
    EXPECT_EQ(r.report.get("error.message").rfind("in.datum:5:", 0), 0u) << r.report.get("error.message");

    const auto junk = cmd_check("[group]\norders = 3\nwhat = 1\n", "in.datum");
    EXPECT_EQ(junk.exit_code, 2);
    EXPECT_EQ(junk.report.get("error.message").rfind("in.datum:3:", 0), 0u) << junk.report.get("error.message");

    const auto lam = cmd_lift("[group]\norders = 3 3\n[vertex]\ng = 1 0\nchi = 1 0\n[vertex]\ng = 1 1\nchi = 2 0\n[link]\ni = 1\nj = 2\nlambda = 1 +\n", "in.datum");
    EXPECT_EQ(lam.exit_code, 2);
    EXPECT_EQ(lam.report.get("error.message").rfind("in.datum:12:", 0), 0u) << lam.report.get("error.message");
}

TEST(Cli, ValidationErrorsExitTwo) {
    // chi_1(g_1) = 1
    const auto r = cmd_check("[group]\norders = 3 3\n[vertex]\ng = 1 0\nchi = 0 1\n", "in.datum");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(r.report.get("error.kind"), "invalid-datum");
}

TEST(Cli, InvalidLinkingExitsThree) {
    const std::string text = "[group]\norders = 3 3\n[vertex]\ng = 1 0\nchi = 2 1\n[vertex]\ng = 0 1\nchi = 0 2\n[link]\ni = 1\nj = 2\nlambda = 1\n";
    for (auto cmd : {cmd_lift, cmd_link}) {
        const auto r = cmd(text, "in.datum", {});
        EXPECT_EQ(r.exit_code, 3);
        EXPECT_EQ(r.report.get("error.kind"), "invalid-linking");
        EXPECT_NE(r.report.get("error.message").find("not linkable"), std::string::npos);
    }
}

TEST(Cli, NicholsMatchesAndTruncates) {
    const auto r = run(cmd_nichols, "a1_q5");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.report.get("nichols.dims"), "1 1 1 1 1");
    EXPECT_EQ(r.report.get("nichols.total"), "5");
    EXPECT_EQ(r.report.get("verdict"), "MATCH");
    EXPECT_EQ(r.report.get("degree.5"), "0 0 MATCH");

    const auto a2 = run(cmd_nichols, "a2_q3");
    EXPECT_EQ(a2.report.get("nichols.dims"), "1 2 4 4 5 4 4 2 1");
    EXPECT_EQ(a2.report.get("pbw.total"), "27");

    CliOptions small;
    small.exec.budget = 16;
    const auto t = run(cmd_nichols, "a2_q3", small);
    EXPECT_EQ(t.exit_code, 4);
    EXPECT_EQ(t.report.get("verdict"), "TRUNCATED");
    EXPECT_EQ(t.report.get("nichols.dims"), "1 2 4 4 5");  // theta^4 = 16 is within the budget
    EXPECT_EQ(t.report.get("nichols.truncated"), "true");

    CliOptions low;
    low.max_degree = 3;
    const auto partial = run(cmd_nichols, "a2_q3", low);
    EXPECT_EQ(partial.exit_code, 0);
    EXPECT_EQ(partial.report.get("complete"), "false");
}

TEST(Cli, LiftVerifiesKnownDimensions) {
    for (const auto& [name, total] : std::vector<std::pair<std::string, std::string>>{{"taft3", "9"}, {"a1xa1_linked", "81"}, {"a1xa1_unlinked", "81"}}) {
        const auto r = run(cmd_lift, name);
        EXPECT_EQ(r.exit_code, 0) << r.report.to_kv();
        EXPECT_EQ(r.report.get("total"), total);
        EXPECT_EQ(r.report.get("verdict"), "VERIFIED");
    }
    const auto linked = run(cmd_lift, "a1xa1_linked").report;
    EXPECT_EQ(linked.get("relation.7"), "linking: a1 a2 - z^2 a2 a1 = (1)(1 - g1 g2): -1 + g(2,1) + x1x2 + (1 + z^1) x2x1");
}

TEST(Cli, LiftBelowTheTopDegreeIsNotStabilized) {
    CliOptions o;
    o.max_degree = 2;
    const auto r = run(cmd_lift, "taft3", o);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.report.get("verdict"), "NOT_STABILIZED");
}

TEST(Cli, LiftBudgetGivesPartialReport) {
    CliOptions o;
    o.exec.budget = 100;
    const auto r = run(cmd_lift, "a1xa1_linked", o);
    EXPECT_EQ(r.exit_code, 4);
    EXPECT_EQ(r.report.get("verdict"), "TRUNCATED");
    EXPECT_TRUE(r.report.has("lift.D.1.total"));
}

TEST(Cli, DeterministicAcrossThreads) {
    for (const std::string name : {"a2_q3", "a1xa1_linked", "taft3"}) {
        const auto n1 = run(cmd_nichols, name, with_threads(1)), n4 = run(cmd_nichols, name, with_threads(4));
        EXPECT_EQ(n1.report.to_kv(), n4.report.to_kv());
        EXPECT_EQ(n1.report.to_json(), n4.report.to_json());
        const auto l1 = run(cmd_lift, name, with_threads(1)), l4 = run(cmd_lift, name, with_threads(4));
        EXPECT_EQ(l1.report.to_kv(), l4.report.to_kv());
        EXPECT_EQ(l1.exit_code, l4.exit_code);
    }
}

TEST(Cli, EnumerateCounts) {
    CliOptions o;
    o.p = 3;
    o.theta_max = 2;
    o.links = true;
    const auto r = cmd_enumerate(o);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.report.get("count.theta.1"), "4");
    EXPECT_EQ(r.report.get("bound_capped"), "false");
    EXPECT_TRUE(r.report.has("row.1"));
    CliOptions none;
    EXPECT_EQ(cmd_enumerate(none).exit_code, 2);
}

TEST(Cli, HypothesesAndLink) {
    CliOptions o;
    o.p = 19;
    const auto h = run(cmd_hypotheses, "a2_q19", o).report;
    EXPECT_EQ(h.get("hypothesis.thm_main_applicable"), "true");
    const auto h3 = run(cmd_hypotheses, "a2_q3").report;
    EXPECT_EQ(h3.get("hypothesis.serre_lift_ok"), "false");
    EXPECT_EQ(h3.get("hypothesis.serre_lift_ok.reason.1").rfind("N_I ≠ 3", 0), 0u);

    const auto l = run(cmd_link, "a1xa1_linked").report;
    EXPECT_EQ(l.get("pair.1.2"), "linkable");
    EXPECT_EQ(l.get("linkings.count"), "2");
    const auto a2 = run(cmd_link, "a2_q3").report;
    EXPECT_EQ(a2.get("pair.1.2").rfind("not linkable", 0), 0u);
}
