#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int exit = -1;
    std::string out;
    Json json() const { return Json::parse(out); }
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

Run run(const std::string& args)
{
    const std::string cmd = std::string(ARRFACTOR_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) {
        ADD_FAILURE() << "popen failed";
        return {};
    }
    Run r;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) {
        r.out.append(buf, n);
    }
    const int status = pclose(p);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path()
            / ("arrfactor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text)
    {
        const auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, InfoG333)
{
    const auto r = run("info --catalog " + quote("G(3,3,3)"));
    ASSERT_EQ(r.exit, 0);
    const auto j = r.json();
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["hyperplanes"], 9);
    EXPECT_EQ(j["rank"], 3);
    EXPECT_EQ(j["integer_roots"], Json::parse("[1,4,4]"));
    EXPECT_EQ(j["flats_by_rank"], Json::parse("[1,9,12,1]"));
}

TEST_F(Cli, InfoBooleanAndG24)
{
    EXPECT_EQ(run("info --catalog boolean:3").json()["integer_roots"], Json::parse("[1,1,1]"));
    const auto g24 = run("info --catalog G24").json();
    EXPECT_EQ(g24["hyperplanes"], 21);
    EXPECT_EQ(g24["integer_roots"], Json::parse("[1,9,11]"));
}

TEST_F(Cli, CheckVerdictsAndExitCodes)
{
    const auto yes = run("check nice --catalog " + quote("G(3,3,3)"));
    EXPECT_EQ(yes.exit, 0);
    const auto j = yes.json();
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["property"], "nice");
    EXPECT_EQ(j["answer"], "yes");
    EXPECT_EQ(j["certificate"]["blocks"], Json::parse("[[0],[1,2,3,6],[4,5,7,8]]"));
    EXPECT_TRUE(j["fingerprint"].is_string());
    EXPECT_TRUE(j["timing_ms"].is_number());

    const auto no = run("check nice --catalog H3");
    EXPECT_EQ(no.exit, 1);
    EXPECT_EQ(no.json()["answer"], "no");
    EXPECT_TRUE(no.json()["certificate"].is_null());

    EXPECT_EQ(run("check indfactored --catalog " + quote("G(3,3,3)")).exit, 1);
    EXPECT_EQ(run("check supersolvable --catalog " + quote("G(3,3,3)")).exit, 1);
    EXPECT_EQ(run("check supersolvable --catalog B:3").exit, 0);

    const auto budget = run("check nice --budget 2 --catalog " + quote("G(3,3,4)"));
    EXPECT_EQ(budget.exit, 3);
    EXPECT_EQ(budget.json()["answer"], "undecided");
}

TEST_F(Cli, UsageAndParseErrorsExitTwo)
{
    EXPECT_EQ(run("check nice --catalog " + quote("G(3,3)")).exit, 2);
    EXPECT_EQ(run("check nice --file /nonexistent/file").exit, 2);
    EXPECT_EQ(run("check colorful --catalog H3").exit, 2);
    EXPECT_EQ(run("check nice").exit, 2);
    EXPECT_EQ(run("check nice --catalog H3 --file " + write("a.txt", "dim 1 conductor 1\n1\n")).exit, 2);
    EXPECT_EQ(run("info --file " + write("bad.txt", "dim 2 conductor 1\n1 2 3\n")).exit, 2);
    EXPECT_EQ(run("").exit, 2);
    EXPECT_EQ(run("verify-paper --only nosuch").exit, 2);
    EXPECT_EQ(run("check nice --catalog H3 --partition " + write("p.json", "{not json")).exit, 2);
}

TEST_F(Cli, EveryYesCertificateReverifiesInAFreshProcess)
{
    struct Case {
        std::string property;
        std::string catalog;
    };
    for (const auto& c : std::vector<Case>{{"nice", "G(3,3,3)"},
                                           {"nice", "G(4,2,3)"},
                                           {"supersolvable", "B:3"},
                                           {"indfactored", "G(4,2,3)"},
                                           {"indfree", "B:3"},
                                           {"hereditary-nice", "G(4,4,3)"}}) {
        const auto first = run("check " + c.property + " --catalog " + quote(c.catalog));
        ASSERT_EQ(first.exit, 0) << c.property << " " << c.catalog;
        const auto cert = write("cert.json", first.json()["certificate"].dump());
        const auto again = run("check " + c.property + " --catalog " + quote(c.catalog) + " --certificate " + cert);
        EXPECT_EQ(again.exit, 0) << c.property << " " << c.catalog;
        EXPECT_EQ(again.json()["stats"]["mode"], "verify");
        // a certificate for a different arrangement must not verify
        const auto other = run("check " + c.property + " --catalog H3 --certificate " + cert);
        EXPECT_NE(other.exit, 0) << c.property;
    }
}

TEST_F(Cli, SuppliedPartitionIsVerifiedNotSearched)
{
    const auto good = write("good.json", R"({"kind":"nice-partition","hyperplanes":9,"blocks":[[0],[1,2,3,6],[4,5,7,8]]})");
    const auto r = run("check nice --catalog " + quote("G(3,3,3)") + " --partition " + good);
    EXPECT_EQ(r.exit, 0);
    EXPECT_EQ(r.json()["stats"]["mode"], "verify");
    const auto bad = write("bad.json", "[[0,1,2],[3,4,5],[6,7,8]]");
    const auto b = run("check nice --catalog " + quote("G(3,3,3)") + " --partition " + bad);
    EXPECT_EQ(b.exit, 1);
    EXPECT_EQ(b.json()["reason"], "supplied partition is not nice");
    const auto wrong_size = write("w.json", "[[0],[1]]");
    EXPECT_EQ(run("check nice --catalog " + quote("G(3,3,3)") + " --partition " + wrong_size).exit, 2);
}

TEST_F(Cli, ExportThenLoadFromFile)
{
    const auto path = (dir_ / "g25.txt").string();
    ASSERT_EQ(run("export --catalog G25 --output " + path).exit, 0);
    const auto from_file = run("info --file " + path).json();
    const auto from_catalog = run("info --catalog G25").json();
    EXPECT_EQ(from_file["fingerprint"], from_catalog["fingerprint"]);
    EXPECT_EQ(from_file["char_poly"], from_catalog["char_poly"]);
    EXPECT_EQ(run("check nice --file " + path).exit, 1);
}

TEST_F(Cli, OutputIsDeterministic)
{
    auto strip = [](Json j) {
        j.erase("timing_ms");
        return j.dump();
    };
    const auto a = run("check nice --catalog " + quote("G(4,4,3)"));
    const auto b = run("check nice --catalog " + quote("G(4,4,3)"));
    EXPECT_EQ(strip(a.json()), strip(b.json()));
}

TEST_F(Cli, VerifyOnlyGrr3EchoesThePartition)
{
    const auto r = run("verify-paper --only grr3");
    EXPECT_EQ(r.exit, 0);
    EXPECT_NE(r.out.find("PASS grr3"), std::string::npos);
    EXPECT_NE(r.out.find("({0}, {1,2,3,6}, {4,5,7,8})"), std::string::npos);
}

TEST_F(Cli, ListNamesTheCatalog)
{
    const auto r = run("list");
    EXPECT_EQ(r.exit, 0);
    for (std::string name : {"G(3,3,3)", "H3", "G31", "boolean:3"}) {
        EXPECT_NE(r.out.find(name), std::string::npos) << name;
    }
}
