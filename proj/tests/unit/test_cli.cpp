#include <doctest.h>

#include <json.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<const char*> args) {
    args.insert(args.begin(), "alba");
    std::ostringstream out, err;
    int code = alba::cli::run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run({"classify", "-e", "p prec q => p <= q"}).code == alba::cli::kOk);
    CHECK(run({"classify", "-e", "T <= T => box dia p <= dia box p"}).code == alba::cli::kNo);
    CHECK(run({"run", "-e", "T <= T => box dia p <= dia box p"}).code == alba::cli::kNo);
    CHECK(run({"run", "-e", "p <= ("}).code == alba::cli::kError);
    CHECK(run({"run"}).code == alba::cli::kError);
    CHECK(run({"bogus"}).code == alba::cli::kError);
    CHECK(run({"verify", "-e", "p prec q => p <= q", "--max-frame", "5"}).code == alba::cli::kError);
    CHECK(run({"translate", "-e", "p prec q => E c.(p prec c & c prec q)"}).code == alba::cli::kError);
}

TEST_CASE("parse errors name the position") {
    Result r = run({"run", "-e", "p <= ("});
    CHECK(r.err.find("line 1") != std::string::npos);
    CHECK(r.err.find("column") != std::string::npos);
}

TEST_CASE("run output") {
    Result r = run({"run", "--translate", "-e", "p prec q => p <= q"});
    CHECK(r.code == 0);
    CHECK(r.out.find("forall @i. @i <= sdia @i") != std::string::npos);
    CHECK(r.out.find("fo: forall w. R(w,w)") != std::string::npos);
}

TEST_CASE("json schema") {
    Result r = run({"run", "--format", "json", "--translate", "--check-topo", "-e", "p prec q => ~q prec ~p"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["success"] == true);
    CHECK(j["pure"].is_array());
    CHECK(j["fo"] == "forall w v. (R(v,w) -> R(w,v))");
    CHECK(j.contains("topology"));
    CHECK(j.contains("certificate"));

    auto c = nlohmann::json::parse(run({"classify", "--format", "json", "-e", "p prec q => p <= q"}).out);
    CHECK(c["accepted"] == true);
    CHECK(c["certificate"]["eps"].is_object());
    CHECK(c["certificate"]["order"].is_array());

    Result v = run({"verify", "--format", "json", "-e", "p prec q => p <= q", "--fo", "forall w. R'(w,w)"});
    CHECK(v.code == alba::cli::kNo);
    auto vj = nlohmann::json::parse(v.out);
    CHECK(vj["verdict"] == "counterexample");
    CHECK(vj["counterexample"]["size"].is_number());

    auto t = nlohmann::json::parse(run({"translate", "--format", "json", "-e", "p <= dia p"}).out);
    CHECK(t["fo"].is_string());
    CHECK(t["sexpr"].is_string());
}

TEST_CASE("verify") {
    Result r = run({"verify", "-e", "p prec q => dia p prec dia q"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Equivalent") != std::string::npos);
    std::string path = (std::filesystem::temp_directory_path() / "alba_unit_frame.json").string();
    std::ofstream(path) << R"({"size":1,"R":[[0,0]],"Rp":[]})";
    CHECK(run({"verify", "-e", "p prec q => p <= q", "--frame", path.c_str()}).code == 0);
    std::ofstream(path) << R"({"size":1,"R":[],"Rp":[]})";
    CHECK(run({"verify", "-e", "p prec q => p <= q", "--frame", path.c_str()}).code == 0);
    CHECK(run({"verify", "-e", "p prec q => p <= q", "--frame", path.c_str(), "--fo", "T"}).code == alba::cli::kNo);
    std::filesystem::remove(path);
}

TEST_CASE("demo") {
    CHECK(run({"demo"}).code == 0);
}
