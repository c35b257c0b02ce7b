#include <doctest.h>

#include "multiproj/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "multiproj/points.hpp"
#include "test_util.hpp"

using namespace multiproj;
using namespace testutil;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Writes the text to a unique temporary file and removes it on destruction.
class TempFile {
public:
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("multiproj_test_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter++) + ".pts"))
                    .string();
        std::ofstream out(path_);
        out << text;
    }
    ~TempFile() { std::remove(path_.c_str()); }

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

const std::string grid13_text = format_point_set(grid13());
const std::string cross4a_text = format_point_set(cross4a());

} // namespace

TEST_CASE("hilbert table text output") {
    TempFile file(grid13_text);
    const RunResult r = run_cli({"hilbert", file.path()});
    CHECK(r.code == cli::exit_ok);

    // rendering matches the computed table...
    const HilbertTable table = hilbert_table(grid13());
    CHECK(r.out == cli::render_table_text({1, 1}, 13, {6, 4}, table.box_values()));

    // ...with the documented header and the known stabilized row and column
    std::istringstream lines(r.out);
    std::vector<std::string> all;
    std::string line;
    while (std::getline(lines, line))
        all.push_back(line);
    REQUIRE(all.size() == 9); // 3 header lines + 6 table rows
    CHECK(all[0] == "dims: 1 1");
    CHECK(all[1] == "s: 13");
    CHECK(all[2] == "t: 6 4");
    CHECK(all[3] == "1 2 3 4"); // axis row: min(j+1, 4)
    CHECK(all[8] == "6 10 12 13");
    for (int row = 0; row < 6; ++row) {
        const std::string& text_row = all[3 + row];
        const std::string last_value = text_row.substr(text_row.rfind(' ') + 1);
        CHECK(last_value == std::to_string(std::vector<int>{4, 8, 12, 13, 13, 13}[row]));
    }
}

TEST_CASE("hilbert single values") {
    TempFile file(cross4a_text);
    CHECK(run_cli({"hilbert", file.path(), "--degree", "1,1"}).out == "3\n");
    CHECK(run_cli({"hilbert", file.path(), "--degree", "9,9"}).out == "4\n");
}

TEST_CASE("border text output") {
    TempFile file(grid13_text);
    const RunResult r = run_cli({"border", file.path()});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out == "dims: 1 1\n"
                   "s: 13\n"
                   "t: 6 4\n"
                   "B_C: 6 10 12 13\n"
                   "B_R: 4 8 12 13 13 13\n");

    TempFile single("dims: 1 1\n1,1|1,1\n");
    const RunResult rs = run_cli({"border", single.path()});
    CHECK(rs.out == "dims: 1 1\ns: 1\nt: 1 1\nB_C: 1\nB_R: 1\n");

    TempFile b(cross4a_text);
    const RunResult rb = run_cli({"border", b.path()});
    CHECK(rb.out == "dims: 1 1\ns: 4\nt: 3 3\nB_C: 3 4 4\nB_R: 3 4 4\n");
}

TEST_CASE("classify verdicts and exit codes") {
    const RunResult ok = run_cli({"classify", "--bc", "6,10,12,13", "--br", "4,8,12,13,13,13"});
    CHECK(ok.code == cli::exit_ok);
    CHECK(ok.out == "FEASIBLE\n");

    CHECK(run_cli({"classify", "--bc", "1", "--br", "1"}).code == cli::exit_ok);

    const RunResult bad = run_cli({"classify", "--bc", "2,2", "--br", "2,4"});
    CHECK(bad.code == cli::exit_infeasible);
    CHECK(bad.out.rfind("INFEASIBLE\n", 0) == 0);
    CHECK(bad.out.find("reason:") != std::string::npos);

    CHECK(run_cli({"classify", "--bc", "2,x", "--br", "1,2"}).code == cli::exit_parse);
}

TEST_CASE("construct emits the worked matrix and feeds hilbert") {
    const RunResult m =
        run_cli({"construct", "--alpha", "3,3,2,1", "--beta", "3,3,1,1,1", "--emit", "matrix"});
    CHECK(m.code == cli::exit_ok);
    CHECK(m.out == "0111\n1110\n0100\n1000\n1000\n");

    const RunResult p =
        run_cli({"construct", "--alpha", "3,3,2,1", "--beta", "3,3,1,1,1", "--emit", "points"});
    CHECK(p.code == cli::exit_ok);
    TempFile points(p.out);
    const RunResult table = run_cli({"hilbert", points.path()});
    CHECK(table.code == cli::exit_ok);
    CHECK(table.out.rfind("dims: 1 1\ns: 9\nt: 4 5\n", 0) == 0);
    const RunResult parts = run_cli({"partitions", points.path()});
    CHECK(parts.code == cli::exit_ok);
    CHECK(parts.out == "alpha: 3,3,2,1\n"
                       "alpha*: 4,3,2\n"
                       "beta: 3,3,1,1,1\n"
                       "beta*: 5,2,2\n");

    const RunResult infeasible =
        run_cli({"construct", "--alpha", "2,2", "--beta", "4", "--emit", "matrix"});
    CHECK(infeasible.code == cli::exit_infeasible);
    CHECK(infeasible.err.find("does not majorize") != std::string::npos);

    const RunResult mismatch =
        run_cli({"construct", "--alpha", "2,2", "--beta", "3", "--emit", "matrix"});
    CHECK(mismatch.code == cli::exit_infeasible);

    CHECK(run_cli({"construct", "--alpha", "1,2", "--beta", "3", "--emit", "matrix"}).code ==
          cli::exit_parse);
}

TEST_CASE("partitions output") {
    TempFile file(grid13_text);
    const RunResult r = run_cli({"partitions", file.path()});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out == "alpha: 4,3,2,2,1,1\n"
                   "alpha*: 6,4,2,1\n"
                   "beta: 4,3,3,3\n"
                   "beta*: 4,4,4,1\n");

    TempFile single("dims: 1 1\n1,1|1,1\n");
    CHECK(run_cli({"partitions", single.path()}).out ==
          "alpha: 1\nalpha*: 1\nbeta: 1\nbeta*: 1\n");

    TempFile a(cross4a_text);
    const RunResult ra = run_cli({"partitions", a.path()});
    CHECK(ra.out.rfind("alpha: 2,1,1\n", 0) == 0);
}

TEST_CASE("separators output shows forms with the vanishing pattern") {
    TempFile file(cross4a_text);
    const RunResult r = run_cli({"separators", file.path(), "--degree", "1,1"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("subset:") != std::string::npos);
    CHECK(r.out.find("G1 = ") != std::string::npos);
    CHECK(r.out.find("G3 = ") != std::string::npos);
    CHECK(r.out.find("check:") != std::string::npos);

    // the check matrix is diagonal with nonzero diagonal
    const RunResult j = run_cli({"separators", file.path(), "--degree", "1,1", "--format", "json"});
    const json payload = json::parse(j.out);
    const auto check = payload.at("check");
    REQUIRE(check.size() == 3);
    for (std::size_t i = 0; i < check.size(); ++i)
        for (std::size_t l = 0; l < check.size(); ++l) {
            if (i == l)
                CHECK(check[i][l].get<std::string>() != "0");
            else
                CHECK(check[i][l].get<std::string>() == "0");
        }
}

TEST_CASE("verify passes on the fixtures") {
    TempFile file(grid13_text);
    const RunResult r = run_cli({"verify", file.path()});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out == "PASS monotone\nPASS stabilizes\nPASS axis-projection\nPASS corner\n");
}

TEST_CASE("exit codes for malformed input") {
    TempFile bad("dims: 1 1\n1,1|1,oops\n");
    CHECK(run_cli({"hilbert", bad.path()}).code == cli::exit_parse);

    TempFile arity("dims: 1 1\n1,1,1|1,1\n");
    CHECK(run_cli({"hilbert", arity.path()}).code == cli::exit_arity);

    TempFile ok(cross4a_text);
    CHECK(run_cli({"hilbert", ok.path(), "--degree", "1,1,1"}).code == cli::exit_arity);
    CHECK(run_cli({"hilbert", ok.path(), "--degree", "1,x"}).code == cli::exit_parse);

    CHECK(run_cli({"hilbert", "/nonexistent/file.pts"}).code == cli::exit_parse);

    TempFile p21("dims: 2 1\n1,0,0|1,0\n1,1,0|1,1\n");
    CHECK(run_cli({"partitions", p21.path()}).code == cli::exit_ambient);

    CHECK(run_cli({"nonsense"}).code == cli::exit_parse);
}

TEST_CASE("json output regenerates the text output") {
    TempFile file(grid13_text);

    SUBCASE("hilbert") {
        const RunResult text = run_cli({"hilbert", file.path()});
        const RunResult js = run_cli({"hilbert", file.path(), "--format", "json"});
        const json payload = json::parse(js.out);
        std::vector<int> flat;
        for (const auto& row : payload.at("table"))
            for (const auto& v : row)
                flat.push_back(v.get<int>());
        CHECK(cli::render_table_text(payload.at("dims").get<std::vector<int>>(),
                                     payload.at("s").get<int>(),
                                     payload.at("t").get<std::vector<int>>(), flat) == text.out);
    }

    SUBCASE("border") {
        const RunResult text = run_cli({"border", file.path()});
        const RunResult js = run_cli({"border", file.path(), "--format", "json"});
        const json payload = json::parse(js.out);
        std::vector<BorderArray> arrays;
        for (const auto& arr : payload.at("border").at("arrays")) {
            BorderArray b;
            b.shape = {static_cast<int>(arr.size())};
            for (const auto& v : arr)
                b.values.push_back(v.get<int>());
            arrays.push_back(b);
        }
        CHECK(cli::render_border_text(payload.at("dims").get<std::vector<int>>(),
                                      payload.at("s").get<int>(),
                                      payload.at("t").get<std::vector<int>>(),
                                      arrays) == text.out);
    }

    SUBCASE("partitions") {
        const RunResult text = run_cli({"partitions", file.path()});
        const RunResult js = run_cli({"partitions", file.path(), "--format", "json"});
        const json payload = json::parse(js.out);
        CHECK(cli::render_partitions_text(payload.at("alpha").get<std::vector<int>>(),
                                          payload.at("alpha_conjugate").get<std::vector<int>>(),
                                          payload.at("beta").get<std::vector<int>>(),
                                          payload.at("beta_conjugate").get<std::vector<int>>()) ==
              text.out);
    }

    SUBCASE("value") {
        const RunResult js =
            run_cli({"hilbert", file.path(), "--degree", "100,100", "--format", "json"});
        const json payload = json::parse(js.out);
        CHECK(payload.at("value").get<int>() == 13);
        CHECK(payload.at("degree").get<std::vector<int>>() == std::vector<int>{100, 100});
    }
}
