#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "twistlab/json_io.hpp"

using namespace twistlab;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

fs::path scratch()
{
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("twistlab_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args)
{
    fs::path out = scratch() / "stdout.txt";
    std::string cmd = std::string(TWISTLAB_BIN) + " " + args + " > " + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write(const std::string& name, const json& j)
{
    fs::path p = scratch() / name;
    io::write_file(p.string(), j);
    return p.string();
}

} // namespace

TEST_CASE("verify")
{
    std::string flip = write("flip.json", io::to_json(EGrid::flip(2, Field::prime(2), 2)));
    Run r = run("verify " + flip);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["ok"] == true);

    EGrid bad(2, Field::rationals(), 2);
    bad(0, 0) = Matrix::identity(Field::rationals(), 2);
    bad(1, 1) = Matrix::identity(Field::rationals(), 2);
    bad(0, 1) = Matrix::identity(Field::rationals(), 2);
    Run b = run("verify " + write("bad.json", io::to_json(bad)));
    CHECK(b.code == 1);
    json rep = json::parse(b.out);
    bool named = false;
    for (const auto& a : rep["axioms"])
        if (a["name"] == "column_sum" && a["ok"] == false)
            named = a["witness"] == json::array({2});
    CHECK(named);

    std::ofstream(scratch() / "garbage.json") << "{ not json";
    CHECK(run("verify " + (scratch() / "garbage.json").string()).code == 2);
    CHECK(run("verify " + (scratch() / "missing.json").string()).code == 2);
}

TEST_CASE("classify, verify and compare against the oracle")
{
    std::string set = (scratch() / "two.json").string();
    CHECK(run("classify --shape 2cycle --m 2 --field p:2 -o " + set).code == 0);
    json s = io::read_file(set);
    CHECK(s["schema_version"] == 1);
    REQUIRE(s["count"].get<int>() > 0);

    bool cycle_seen = false;
    for (std::size_t k = 0; k < s["grids"].size(); ++k) {
        Run v = run("verify " + write("g.json", s["grids"][k]));
        CHECK(v.code == 0);
        if (json::parse(v.out)["quiver"]["arrows"].size() == 4)
            cycle_seen = true;
    }
    CHECK(cycle_seen);

    std::string all = (scratch() / "all.json").string();
    CHECK(run("classify --shape two-vertex --m 2 --field p:2 -o " + all).code == 0);
    Run agree = run("oracle --n 2 --m 2 --p 2 --compare " + all);
    CHECK(agree.code == 0);
    CHECK(json::parse(agree.out)["agree"] == true);
    CHECK(run("oracle --n 2 --m 2 --p 2 --threads 1 --compare " + set).code == 0);
    std::string flip = write("flipset.json", io::gridset_to_json({EGrid::flip(2, Field::prime(2), 2)}, 1));
    Run differ = run("oracle --n 2 --m 2 --p 2 --compare " + flip);
    CHECK(differ.code == 1);
    CHECK(json::parse(differ.out)["only_in_oracle"].size() == 6);
    CHECK(run("oracle --n 2 --m 3 --p 3 --budget 10").code == 3);
    CHECK(run("oracle --n 2 --m 2 --p 4").code == 2);
}

TEST_CASE("build, export and extract")
{
    CycleDatum d{{1, 0}, {Field::prime(3).from_int(2), Field::prime(3).from_int(2)}};
    std::string g = write("cycle.json", io::to_json(grid_from_pair(rep_from_cycle_datum(d))));
    Run b = run("build " + g);
    CHECK(b.code == 0);
    CHECK(json::parse(b.out)["dim"] == 4);

    Run dot = run("export --dot " + g);
    CHECK(dot.code == 0);
    CHECK(dot.out.find("1 -> 2") != std::string::npos);
    CHECK(dot.out == run("export --dot " + g).out);

    Run e = run("extract " + g);
    CHECK(e.code == 0);
    json x = json::parse(e.out);
    CHECK(x["u"] == json::array({2, 1}));
}

TEST_CASE("normalize and enumerate")
{
    json in = {{"field", "p:7"}, {"X", json::array({json::array({3, 2}), json::array({5, 2})})}, {"u", json::array({1, 2})}};
    Run n = run("normalize " + write("x.json", in));
    CHECK(n.code == 0);
    CHECK(json::parse(n.out).contains("canonical2"));
    in["X"] = json::array({json::array({3, 2}), json::array({5, 1})});
    CHECK(run("normalize " + write("sing.json", in)).code == 2);

    Run e = run("enumerate --kind rank1 --shape flip --n 1 --m 3 --field p:2");
    CHECK(e.code == 0);
    CHECK(json::parse(e.out)["count"] == 10);
    CHECK(run("enumerate --kind cycle --m 2 --field q").code == 0);
    CHECK(run("classify --m 2 --field p:6").code == 2);
}
