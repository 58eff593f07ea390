#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>

#include "rank_cli.hpp"
#include "totalrank/graph_io.hpp"
#include "totalrank/pagerank.hpp"
#include <json.hpp>

namespace totalrank::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("totalrank_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
        graph_ = write("graph.el", "# small test graph\n0 1\n1 2\n2 0\n2 1 2\n3 0\n0 3 0.5\n4 2\n");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }

    std::vector<std::pair<std::size_t, double>> parse_tsv(const std::string& text) {
        std::vector<std::pair<std::size_t, double>> rows;
        std::istringstream in(text);
        std::size_t node;
        double score;
        while (in >> node >> score) rows.emplace_back(node, score);
        return rows;
    }

    fs::path dir_;
    std::string graph_;
};

TEST_F(CliTest, Stats) {
    const auto r = run({"stats", graph_});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("nodes\t5\n"), std::string::npos);
    EXPECT_NE(r.out.find("edges\t7\n"), std::string::npos);
    EXPECT_NE(r.out.find("dangling\t0\n"), std::string::npos);
    EXPECT_NE(r.out.find("column_sums\tok\n"), std::string::npos);

    const auto dangling = run({"stats", write("d.el", "0 1\n%nodes 3\n")});
    EXPECT_NE(dangling.out.find("dangling\t2\n"), std::string::npos);
}

TEST_F(CliTest, PagerankTsvMatchesDenseSolve) {
    const auto r = run({"pagerank", graph_, "--alpha", "0.85", "--tol", "1e-10"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_tsv(r.out);
    ASSERT_EQ(rows.size(), 5u);

    std::ifstream in(graph_);
    const auto g = parse_edge_list(in);
    const auto o0 = StochasticVector::uniform(5);
    const auto ref = dense_solve(to_dense(build_transition(g, o0)), o0, DampingFactor(0.85));
    double sum = 0.0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto [node, score] = rows[k];
        EXPECT_NEAR(score, ref.vector[node], 1e-10);
        if (k > 0) EXPECT_GE(rows[k - 1].second, score);
        sum += score;
    }
    EXPECT_NEAR(sum, 1.0, 1e-8);

    const auto dense = run({"pagerank", graph_, "--alpha", "0.85", "--method", "dense"});
    EXPECT_EQ(dense.code, 0);
    EXPECT_EQ(parse_tsv(dense.out).size(), 5u);
}

TEST_F(CliTest, TieBreakByIndex) {
    const auto r = run({"pagerank", write("c.el", "0 1\n1 0\n"), "--alpha", "0.5"});
    EXPECT_EQ(r.out, "0\t0.5\n1\t0.5\n");
}

TEST_F(CliTest, TotalrankMethods) {
    const auto series = run({"totalrank", graph_});
    const auto quad = run({"totalrank", graph_, "--method", "quadrature"});
    ASSERT_EQ(series.code, 0) << series.err;
    ASSERT_EQ(quad.code, 0) << quad.err;
    const auto a = parse_tsv(series.out);
    const auto b = parse_tsv(quad.out);
    ASSERT_EQ(a.size(), b.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].first, b[k].first);
        EXPECT_NEAR(a[k].second, b[k].second, 1e-4);
        sum += a[k].second;
    }
    EXPECT_NEAR(sum, 1.0, 1e-8);

    const auto raw = run({"totalrank", graph_, "--tol", "0.01", "--no-renormalize"});
    double raw_sum = 0.0;
    for (const auto& [node, score] : parse_tsv(raw.out)) raw_sum += score;
    EXPECT_NEAR(raw_sum, 1.0 - 0.01, 1e-10);
}

TEST_F(CliTest, TeleportFile) {
    const auto r = run({"pagerank", graph_, "--alpha", "0.5", "--teleport", write("t.txt", "1\n0\n0\n0\n0\n")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_tsv(r.out).front().first, 0u);
    const auto bad = run({"pagerank", graph_, "--alpha", "0.5", "--teleport", write("t2.txt", "1\n1\n")});
    EXPECT_EQ(bad.code, 1);
}

TEST_F(CliTest, CompareTextAndJson) {
    const auto text = run({"compare", graph_, "--methods", "series,quadrature", "--tol", "1e-5"});
    ASSERT_EQ(text.code, 0) << text.err;
    EXPECT_NE(text.out.find("kendall_tau     1\n"), std::string::npos) << text.out;

    const auto js = run({"compare", graph_, "--methods", "power,dense", "--json", "--top-k", "3"});
    ASSERT_EQ(js.code, 0) << js.err;
    const auto j = nlohmann::json::parse(js.out);
    EXPECT_EQ(j["kendall_tau"].get<double>(), 1.0);
    EXPECT_EQ(j["top_k"].get<int>(), 3);
    EXPECT_LT(j["l1_distance"].get<double>(), 1e-8);
    // stable key order
    EXPECT_LT(js.out.find("\"methods\""), js.out.find("\"kendall_tau\""));
    EXPECT_LT(js.out.find("\"kendall_tau\""), js.out.find("\"l1_distance\""));
}

TEST_F(CliTest, VerifyPassesAndIsDeterministic) {
    const auto a = run({"verify", "--n", "5", "--trials", "3", "--seed", "99"});
    const auto b = run({"verify", "--n", "5", "--trials", "3", "--seed", "99"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("PASS  closed-form"), std::string::npos);
    const auto js = run({"verify", "--json", "--trials", "2"});
    EXPECT_TRUE(nlohmann::json::parse(js.out)["passed"].get<bool>());
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);
    EXPECT_EQ(run({"pagerank", graph_}).code, 1);  // --alpha missing
    EXPECT_EQ(run({"stats", (dir_ / "missing.el").string()}).code, 1);
    EXPECT_EQ(run({"stats", write("bad.el", "0 x\n")}).code, 1);
    EXPECT_EQ(run({"stats", write("empty.el", "")}).code, 1);
    EXPECT_EQ(run({"compare", graph_, "--methods", "series"}).code, 1);
    EXPECT_EQ(run({"compare", graph_, "--methods", "series,magic"}).code, 1);
    EXPECT_EQ(run({"pagerank", graph_, "--alpha", "1.5"}).code, 2);
    EXPECT_EQ(run({"totalrank", graph_, "--tol", "1e-9"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, ParseErrorMentionsLine) {
    const auto r = run({"stats", write("bad.el", "0 1\n1 y\n")});
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(FormatScore, TwelveSignificantDigitsLocaleIndependent) {
    EXPECT_EQ(format_score(0.5), "0.5");
    EXPECT_EQ(format_score(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_score(2.0 / 3.0), "0.666666666667");
    EXPECT_EQ(format_score(1e-20), "1e-20");
    try {
        std::locale::global(std::locale("de_DE.UTF-8"));
    } catch (const std::runtime_error&) {
    }
    EXPECT_EQ(format_score(0.25), "0.25");
    std::locale::global(std::locale::classic());
}

}  // namespace
}  // namespace totalrank::cli
