#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "threegap/cli.hpp"

using namespace threegap;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::main_with_args(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("predict JSON is byte exact") {
    auto r = run_cli({"predict", "--z", "55/89", "--n", "5"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == R"({"n":5,"m":3,"b_m":1,"l1":"8/89","l2":"13/89","l3":"21/89","n1":0,"n2":2,"n3":3})"
                   "\n");
    CHECK(r.err.empty());

    auto six = run_cli({"predict", "--z", "55/89", "--n", "6"});
    CHECK(six.out == R"({"n":6,"m":3,"b_m":1,"l1":"8/89","l2":"13/89","l3":"21/89","n1":1,"n2":3,"n3":2})"
                     "\n");
}

TEST_CASE("predict in CSV, table and with decimals") {
    auto csv = run_cli({"predict", "--z", "55/89", "--n", "6", "--format", "csv"});
    CHECK(csv.out == "n,m,b_m,l1,l2,l3,n1,n2,n3\n6,3,1,8/89,13/89,21/89,1,3,2\n");

    auto table = run_cli({"predict", "--z", "55/89", "--n", "5", "--format", "table"});
    CHECK(table.out ==
          "n  m  b_m  l1    l2     l3     n1  n2  n3\n"
          "5  3  1    8/89  13/89  21/89  0   2   3\n");

    auto dec = run_cli({"predict", "--z", "55/89", "--n", "5", "--decimal", "4"});
    CHECK(dec.out.find(R"("l1_decimal":"0.0899","l2_decimal":"0.1461","l3_decimal":"0.2360")") != std::string::npos);
}

TEST_CASE("oracle, evolve and verify") {
    auto o = run_cli({"oracle", "--z", "55/89", "--n", "5"});
    CHECK(o.out == R"({"z":"55/89","n":5,"gaps":[{"length":"13/89","count":2},{"length":"21/89","count":3}]})"
                   "\n");

    auto e = run_cli({"evolve", "--z", "55/89", "--n-max", "4", "--format", "csv"});
    CHECK(e.out ==
          "n,m,b_m,l1,l2,l3,n1,n2,n3\n"
          "2,1,1,21/89,34/89,55/89,0,1,1\n"
          "3,2,1,13/89,21/89,34/89,0,1,2\n"
          "4,2,1,13/89,21/89,34/89,1,2,1\n");

    auto v = run_cli({"verify", "--cf", "sqrt2", "--n-max", "40"});
    CHECK(v.code == cli::kExitOk);
    CHECK(v.out.find(R"("checked":39,"mismatches":[])") != std::string::npos);
}

TEST_CASE("zorich and iet-trace") {
    auto z = run_cli({"zorich", "--z", "3/10"});
    CHECK(z.out == R"({"z":"3/10","quotients":[2,3],"stopped_by":"keane","cf":"0;3,3","expected_cf":"0;3,3","match":true})"
                   "\n");

    auto t = run_cli({"iet-trace", "--z", "7/10", "--steps", "3"});
    CHECK(t.code == cli::kExitOk);
    CHECK(t.out ==
          R"({"step":1,"type":0,"winner":"B","loser":"A","lambda_a":"3/10","lambda_b":"2/5"})"
          "\n"
          R"({"step":2,"type":0,"winner":"B","loser":"A","lambda_a":"3/10","lambda_b":"1/10"})"
          "\n"
          R"({"step":3,"type":1,"winner":"A","loser":"B","lambda_a":"1/5","lambda_b":"1/10"})"
          "\n");
}

TEST_CASE("named expansions are realized before prediction") {
    auto r = run_cli({"predict", "--cf", "golden", "--n", "5"});
    CHECK(r.out ==
          R"({"n":5,"m":3,"b_m":1,"l1":"121393/1346269","l2":"196418/1346269","l3":"317811/1346269","n1":0,"n2":2,"n3":3})"
          "\n");
}

TEST_CASE("exit codes and error records") {
    auto collision = run_cli({"predict", "--z", "55/89", "--n", "90"});
    CHECK(collision.code == cli::kExitDomain);
    CHECK(collision.out.empty());
    CHECK(collision.err.find(R"({"error":"CollisionError")") == 0);
    CHECK(collision.err.find(R"("at":90)") != std::string::npos);

    CHECK(run_cli({"predict", "--z", "1/2", "--n", "3"}).code == cli::kExitDomain);
    CHECK(run_cli({"predict", "--n", "5"}).code == cli::kExitUsage);
    CHECK(run_cli({"predict", "--z", "1/3", "--cf", "golden", "--n", "2"}).code == cli::kExitUsage);
    CHECK(run_cli({"predict", "--z", "abc", "--n", "3"}).code == cli::kExitUsage);
    CHECK(run_cli({"predict", "--z", "55/89", "--n", "5", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
}

TEST_CASE("depth default from the environment") {
    ::setenv("THREEGAP_DEPTH_DEFAULT", "5", 1);
    CHECK(cli::default_depth() == 5);
    auto r = run_cli({"predict", "--cf", "golden", "--n", "20"});
    CHECK(r.code == cli::kExitDomain);  // [0;1,1,1,1,1] realizes to 5/8
    CHECK(r.err.find("5/8") != std::string::npos);
    ::unsetenv("THREEGAP_DEPTH_DEFAULT");
    CHECK(cli::default_depth() == 30);
}

TEST_CASE("output file") {
    auto path = std::filesystem::temp_directory_path() / "threegap_cli_test.json";
    std::filesystem::remove(path);
    auto r = run_cli({"predict", "--z", "55/89", "--n", "5", "--output", path.string()});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == R"({"n":5,"m":3,"b_m":1,"l1":"8/89","l2":"13/89","l3":"21/89","n1":0,"n2":2,"n3":3})");
    std::filesystem::remove(path);
}
