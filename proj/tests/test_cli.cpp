#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "psl/io.hpp"

using namespace psl;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path = fs::temp_directory_path() /
               ("psl_cli_test_" + std::to_string(stamp) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
    static inline int counter = 0;
};

const char* kSquareCsv = "0,0,1\n1,0,1\n1,1,1\n0,1,1\n";
const char* kPathFiltration = "0 1\n0 2\n1 3\n1 4\n1 1 3\n1 3 4\n1 2 4\n";

cli::RunConfig square_config(const TempDir& dir) {
    cli::RunConfig c;
    c.input_path = dir.file("square.csv");
    c.r_max = 2.0;
    c.dim_max = 2;
    c.qs = {0, 1};
    c.p_list = {0.0};
    c.out_csv = dir.file("records.csv");
    write_file(c.input_path, kSquareCsv);
    // 0, 0.05, ..., 1.6
    c.t_grid = cli::parse_grid("0:1.6:33");
    return c;
}

}  // namespace

TEST_CASE("grid specs") {
    auto lin = cli::parse_grid("0:1.6:33");
    REQUIRE(lin.size() == 33);
    CHECK(lin.front() == 0.0);
    CHECK(lin.back() == doctest::Approx(1.6).epsilon(1e-15));
    CHECK(lin[1] == doctest::Approx(0.05).epsilon(1e-12));

    auto list = cli::parse_grid("0,0.5,1");
    REQUIRE(list.size() == 3);
    CHECK(list[1] == 0.5);

    auto single = cli::parse_grid("2:9:1");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 2.0);

    CHECK_THROWS_AS(cli::parse_grid("0:1:0"), Error);
    CHECK_THROWS_AS(cli::parse_grid("a,b"), Error);
}

TEST_CASE("square run reports the cycle exactly on [1, sqrt(2))") {
    TempDir dir;
    auto config = square_config(dir);
    REQUIRE(cli::run(config) == 0);

    auto records = parse_records_csv(read_file(config.out_csv));
    const double sqrt2 = std::sqrt(2.0);
    int checked = 0;
    for (const auto& r : records) {
        if (r.q != 1) continue;
        bool alive = r.t >= 1.0 && r.t < sqrt2;
        CHECK(r.betti == (alive ? 1 : 0));
        ++checked;
    }
    CHECK(checked == 33);
}

TEST_CASE("reruns produce byte-identical artifacts") {
    TempDir dir;
    auto config = square_config(dir);
    config.out_svg_dir = dir.file("svg");
    REQUIRE(cli::run(config) == 0);
    std::string first_csv = read_file(config.out_csv);
    std::string first_svg = read_file(dir.file("svg") + "/betti_q1.svg");
    REQUIRE(cli::run(config) == 0);
    CHECK(read_file(config.out_csv) == first_csv);
    CHECK(read_file(dir.file("svg") + "/betti_q1.svg") == first_svg);
}

TEST_CASE("constant sheaf equals the all-ones labeled sheaf with trivial F") {
    TempDir dir;
    auto config = square_config(dir);
    config.sheaf_kind = "constant";
    REQUIRE(cli::run(config) == 0);
    std::string constant_csv = read_file(config.out_csv);

    config.sheaf_kind = "labeled";
    config.weight = "one";
    REQUIRE(cli::run(config) == 0);
    CHECK(read_file(config.out_csv) == constant_csv);
}

TEST_CASE("imported path filtration reproduces the known spectrum") {
    TempDir dir;
    cli::RunConfig config;
    config.input_path = dir.file("path.flt");
    write_file(config.input_path, kPathFiltration);
    config.format = "filtration";
    config.filtration_source = "import";
    config.sheaf_kind = "constant";
    config.qs = {0};
    config.t_grid = {0.0};
    config.p_list = {1.0};
    config.out_csv = dir.file("out.csv");
    REQUIRE(cli::run(config) == 0);

    auto records = parse_records_csv(read_file(config.out_csv));
    REQUIRE(records.size() == 1);
    CHECK(records[0].betti == 1);
    REQUIRE(records[0].lambda_min.has_value());
    CHECK(*records[0].lambda_min == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("missing input exits nonzero and writes nothing") {
    TempDir dir;
    cli::RunConfig config;
    config.input_path = dir.file("nope.csv");
    config.t_grid = {0.0};
    config.out_csv = dir.file("should_not_exist.csv");
    CHECK(cli::run(config) != 0);
    CHECK_FALSE(fs::exists(config.out_csv));
}

TEST_CASE("labeled sheaf on an imported filtration is rejected") {
    TempDir dir;
    cli::RunConfig config;
    config.input_path = dir.file("path.flt");
    write_file(config.input_path, kPathFiltration);
    config.format = "filtration";
    config.sheaf_kind = "labeled";
    config.t_grid = {0.0};
    CHECK(cli::run(config) == static_cast<int>(ErrorCode::InvalidParameter));
}

TEST_CASE("PQR end-to-end with charge scaling") {
    TempDir dir;
    cli::RunConfig config;
    config.input_path = dir.file("mol.pqr");
    write_file(config.input_path,
               "ATOM 1 N ALA 1 0.0 0.0 0.0 0.3 1.5\n"
               "ATOM 2 C ALA 1 1.1 0.0 0.0 0.4 1.7\n"
               "ATOM 3 O ALA 1 0.0 1.2 0.3 -0.2 1.4\n"
               "ATOM 4 H ALA 1 1.0 1.0 0.8 0.25 1.1\n");
    config.scale_charges = true;
    config.r_max = 3.0;
    config.qs = {0, 1};
    config.t_grid = cli::parse_grid("0:2.5:11");
    config.p_list = {0.0, 0.2};
    config.out_csv = dir.file("mol.csv");
    config.dump_spectra = true;
    REQUIRE(cli::run(config) == 0);

    auto records = parse_records_csv(read_file(config.out_csv));
    CHECK(records.size() == 11 * 2 * 2);
    for (const auto& r : records) {
        CHECK(r.betti >= 0);
        CHECK(r.betti <= r.n);
        if (r.lambda_min) CHECK(std::isfinite(*r.lambda_min));
    }
    CHECK(fs::exists(config.out_csv + ".spectra.csv"));
}

TEST_CASE("sign flip report runs") {
    TempDir dir;
    auto config = square_config(dir);
    config.t_grid = {1.2};
    config.sign_flip_report = true;
    CHECK(cli::run(config) == 0);
}

#ifdef PSL_TOOL_PATH
TEST_CASE("the installed binary drives the same pipeline") {
    TempDir dir;
    write_file(dir.file("square.csv"), kSquareCsv);
    std::string cmd = std::string(PSL_TOOL_PATH) + " --input " +
                      dir.file("square.csv") +
                      " --rmax 2 --dmax 2 --sheaf labeled --q 1 " +
                      "--tgrid 1.0,1.2,1.5 --p 0 --out-csv " +
                      dir.file("out.csv") + " > " + dir.file("stdout.txt");
    REQUIRE(std::system(cmd.c_str()) == 0);
    auto records = parse_records_csv(read_file(dir.file("out.csv")));
    REQUIRE(records.size() == 3);
    CHECK(records[0].betti == 1);
    CHECK(records[1].betti == 1);
    CHECK(records[2].betti == 0);

    std::string bad = std::string(PSL_TOOL_PATH) +
                      " --input /nonexistent.csv --tgrid 0 2> /dev/null";
    CHECK(std::system(bad.c_str()) != 0);
}
#endif
