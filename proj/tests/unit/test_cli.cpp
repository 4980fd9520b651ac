#include "permtree/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = permtree::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s)
{
    return s.substr(0, s.find('\n'));
}

} // namespace

TEST_CASE("documented command lines")
{
    auto c = run({"count", "--avoid", "1-23,34-21", "--max-n", "7", "--method", "rule"});
    CHECK(c.code == 0);
    CHECK(first_line(c.out) == "1 2 5 14 42 138 492");

    auto b = run({"biject", "--map", "subdiag", "--input", "4675123"});
    CHECK(b.code == 0);
    CHECK(first_line(b.out) == "EEENENEEEN");

    auto e = run({"expand", "--gf", "R", "--order", "5", "--at-u", "1"});
    CHECK(e.code == 0);
    CHECK(first_line(e.out) == "t + 2t^2 + 4t^3 + 8t^4 + 19t^5");
}

TEST_CASE("count methods agree and formats render")
{
    for (const char* method : {"brute", "tree", "rule", "gf"}) {
        auto c = run({"count", "--class", "C10", "--max-n", "7", "--method", method});
        CHECK(c.code == 0);
        CHECK(first_line(c.out) == "1 2 4 8 19 47 125");
    }
    auto csv = run({"count", "--class", "C7", "--max-n", "3", "--format", "csv"});
    CHECK(csv.out == "n,count\n1,1\n2,2\n3,5\n");

    auto js = run({"count", "--avoid", "2-1-3", "--max-n", "4", "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["counts"] == nlohmann::json::array({"1", "2", "5", "14"}));
    CHECK(j["method"] == "tree");
}

TEST_CASE("report rows")
{
    auto csv = run({"report", "--max-n", "7", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(first_line(csv.out) == "class,n,brute,tree,rule,gf,agree");
    CHECK(csv.out.find("\nC10,5,19,19,19,19,true\n") != std::string::npos);
    CHECK(csv.out.find("\nC7,3,5,5,5,5,true\n") != std::string::npos);

    auto js = run({"report", "--max-n", "1", "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["agree"] == true);
    REQUIRE(j["rows"].size() == 12);
    for (const auto& row : j["rows"]) {
        CHECK(row["n"] == 1);
        for (const char* key : {"brute", "tree", "rule", "gf"}) {
            CHECK(row["counts"][key] == "1");
        }
    }
}

TEST_CASE("report omits brute beyond the guard")
{
    auto js = run({"report", "--max-n", "11", "--format", "json", "--workers", "4"});
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    for (const auto& row : j["rows"]) {
        CHECK((row["n"].get<int>() <= 10) == !row["counts"]["brute"].is_null());
    }
}

TEST_CASE("output is identical across worker counts")
{
    const auto one = run({"report", "--max-n", "8", "--format", "csv", "--workers", "1"});
    const auto many = run({"report", "--max-n", "8", "--format", "csv", "--workers", "6"});
    CHECK(one.out == many.out);
    const auto a = run({"count", "--class", "C11", "--max-n", "10", "--workers", "1"});
    const auto b = run({"count", "--class", "C11", "--max-n", "10", "--workers", "5"});
    CHECK(a.out == b.out);
}

TEST_CASE("verify and expand")
{
    auto v = run({"verify", "--class", "C2e", "--max-n", "7", "--order", "10"});
    CHECK(v.code == 0);
    auto vj = run({"verify", "--max-n", "6", "--order", "8", "--format", "json"});
    CHECK(vj.code == 0);
    CHECK(nlohmann::json::accept(vj.out));

    auto e = run({"expand", "--gf", "N", "--order", "1", "--format", "json"});
    CHECK(e.code == 0);
    const auto j = nlohmann::json::parse(e.out);
    // t^1 coefficient is v: index [1][0][1]
    CHECK(j["coeffs"][1][0][1] == "1");
    CHECK(j["coeffs"][0] == nlohmann::json::parse(R"([["0"]])"));
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"count", "--max-n", "3"}).code == 2);
    CHECK(run({"count", "--avoid", "2-1-3", "--class", "C1", "--max-n", "3"}).code == 2);
    CHECK(run({"count", "--avoid", "2-x-3", "--max-n", "3"}).code == 2);
    CHECK(run({"count", "--avoid", "1-2", "--max-n", "3", "--method", "rule"}).code == 2);
    CHECK(run({"count", "--class", "C12", "--max-n", "3"}).code == 2);
    CHECK(run({"count", "--class", "C1", "--max-n", "11", "--method", "brute"}).code == 2);
    CHECK(run({"expand", "--gf", "Z"}).code == 2);
    CHECK(run({"biject", "--map", "phi", "--input", "213"}).code == 2);
    CHECK(run({"verify", "--max-n", "11"}).code == 2);
    CHECK(run({"count", "--avoid", "2-1-3", "--max-n", "3"}).code == 0);
}

TEST_CASE("brute and tree agree on a classical pattern")
{
    auto c = run({"count", "--avoid", "1-3-2", "--max-n", "4", "--method", "brute"});
    CHECK(c.code == 0);
    CHECK(first_line(c.out) == "1 2 5 14");
    CHECK(first_line(run({"count", "--avoid", "1-3-2", "--max-n", "4"}).out) == "1 2 5 14");
}
