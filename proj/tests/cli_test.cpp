#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = wt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto o = run(args);
    auto doc = nlohmann::json::parse(o.out);
    EXPECT_EQ(doc["status"]["exit_code"].get<int>(), o.code);
    return doc;
}

}  // namespace

TEST(Cli, SeqClassify) {
    const auto o = run({"seq", "classify", "3,3,2,1,1"});
    EXPECT_EQ(o.code, wt::cli::ok);
    EXPECT_NE(o.out.find("weakly_threshold: true"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("m: 3"), std::string::npos);
    EXPECT_NE(o.out.find("deltas: 1,0,0"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"seq", "classify", "1,1,1"}).code, wt::cli::not_graphic);
    EXPECT_EQ(run({"seq", "classify", "x,y"}).code, wt::cli::parse_error);
    EXPECT_EQ(run({"seq", "realize", "2,2,2,2"}).code, wt::cli::not_in_class);
    EXPECT_EQ(run({"graph", "recognize", "n=4;edges=0-1,1-2,2-3,3-0"}).code, wt::cli::not_in_class);
    EXPECT_EQ(run({"oracle", "--max-n", "8"}).code, wt::cli::size_bound);
    EXPECT_EQ(run({"enumerate", "--n", "20", "--what", "graphs"}).code, wt::cli::size_bound);
    EXPECT_EQ(run({"ferrers", "3,1,0"}).code, wt::cli::not_graphic);
    EXPECT_EQ(run({"bogus"}).code, wt::cli::parse_error);
    EXPECT_EQ(run({}).code, wt::cli::parse_error);
    const auto bad = run({"graph", "classify", "n=3;edges=0-5"});
    EXPECT_EQ(bad.code, wt::cli::parse_error);
    EXPECT_NE(bad.err.find("error:"), std::string::npos);
}

TEST(Cli, SeqDecomposeAndRealize) {
    const auto d = run({"seq", "decompose", "7,7,3,3,3,3,2,1,1"});
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("heads: [2,2;1,1] [;0]"), std::string::npos) << d.out;
    EXPECT_NE(d.out.find("tail: 1,1,1,1"), std::string::npos);
    const auto p = run({"seq", "decompose", "3,2,2,1"});
    EXPECT_NE(p.out.find("heads: [0;] [;0] [0;]"), std::string::npos) << p.out;
    const auto r = run({"seq", "realize", "3,3,2,1,1"});
    EXPECT_NE(r.out.find("seed=K1;ops=SP4"), std::string::npos) << r.out;
}

TEST(Cli, GraphCommands) {
    const auto c4 = run({"graph", "recognize", "n=4;edges=0-1,1-2,2-3,3-0"});
    EXPECT_NE(c4.out.find("witness: C4"), std::string::npos) << c4.out;
    const auto p4 = run({"graph", "recognize", "--g6", "Ch"});
    EXPECT_EQ(p4.code, 0);
    EXPECT_NE(p4.out.find("script: seed=P4;ops="), std::string::npos) << p4.out;
    const auto paw = run({"graph", "decompose", "n=4;edges=0-1,0-2,1-2,0-3"});
    EXPECT_EQ(paw.code, 0);
    EXPECT_NE(paw.out.find("heads: [0;] [;0] [0;]"), std::string::npos) << paw.out;
    const auto comp = run({"graph", "complement", "n=3;edges=0-1"});
    EXPECT_NE(comp.out.find("n=3;edges=0-2,1-2"), std::string::npos) << comp.out;
    EXPECT_EQ(run({"graph", "classify", "--g6", "C~"}).code, 0);
}

TEST(Cli, JsonReports) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"seq", "classify", "3,3,2,1,1"},
             {"seq", "classify", "1,1,1"},
             {"graph", "recognize", "n=4;edges=0-1,1-2,2-3,3-0"},
             {"enumerate", "--n", "4", "--what", "sequences"},
             {"ferrers", "2,2,1,1"}}) {
        const auto doc = run_json(args);
        ASSERT_TRUE(doc.is_object());
        std::set<std::string> keys;
        for (const auto& [k, v] : doc.items()) {
            keys.insert(k);
        }
        EXPECT_EQ(keys, (std::set<std::string>{"command", "input", "result", "status"}));
        EXPECT_EQ(nlohmann::json::parse(doc.dump()), doc);
    }
    const auto bad = run_json({"seq", "classify", "1,1,1"});
    EXPECT_FALSE(bad["status"]["ok"].get<bool>());
    EXPECT_EQ(bad["status"]["exit_code"].get<int>(), wt::cli::not_graphic);
    const auto ok = run_json({"enumerate", "--n", "4", "--what", "sequences"});
    EXPECT_EQ(ok["result"]["count"].get<int>(), 9);
}

TEST(Cli, EnumerateTableAndExport) {
    const auto t = run({"enumerate", "--n", "6", "--what", "table"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out.rfind("n\tg\th\ts\tw\tthreshold\n", 0), 0u) << t.out;
    EXPECT_NE(t.out.find("6\t4\t6\t50\t52\t32\n"), std::string::npos) << t.out;

    const auto seqs = run({"enumerate", "--n", "4", "--what", "sequences"});
    EXPECT_EQ(std::count(seqs.out.begin(), seqs.out.end(), '\n'), 9);

    const auto path = std::filesystem::temp_directory_path() / "wt-cli-export.txt";
    const auto g = run({"enumerate", "--n", "5", "--what", "graphs", "--export", path.string()});
    EXPECT_EQ(g.code, 0);
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    EXPECT_EQ(body.str(), g.out);
    EXPECT_EQ(std::count(g.out.begin(), g.out.end(), '\n'), 21);
    std::filesystem::remove(path);
}

TEST(Cli, OracleBattery) {
    const auto o = run({"oracle", "--max-n", "5"});
    EXPECT_EQ(o.code, 0) << o.out << o.err;
    EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
}

TEST(Cli, Ferrers) {
    const auto f = run({"ferrers", "2,2,1,1"});
    EXPECT_EQ(f.code, 0);
    EXPECT_EQ(f.out.rfind("* 1 1 0\n1 * 1 0\n1 0 * 0\n1 0 0 *\n", 0), 0u) << f.out;
}
