#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "emdet/csv.hpp"
#include "emdet/rng.hpp"
#include "emdet/snapshot_io.hpp"
#include "emdet/svg.hpp"

using namespace emdet;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

// run the CLI through the shell; returns the exit code
int cli(const std::string& args) {
    const std::string cmd = std::string(EMDET_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

int cli_env(const std::string& env, const std::string& args) {
    const std::string cmd = env + " " + std::string(EMDET_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

SnapshotMatrix random_matrix(int n, int l, std::uint64_t seed) {
    SnapshotMatrix y(n, l);
    RngStream rng(seed, 0);
    for (int k = 0; k < l; ++k)
        for (int m = 0; m < n; ++m) y(m, k) = rng.complex_normal();
    return y;
}

struct TmpDir {
    fs::path path;
    TmpDir() {
        path = fs::temp_directory_path() /
               ("emdet_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TmpDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("snapshot files round-trip bit for bit") {
    TmpDir tmp;
    const SnapshotMatrix y = random_matrix(5, 9, 17);
    write_snapshots(tmp.file("a.snap"), y);
    const SnapshotMatrix back = read_snapshots(tmp.file("a.snap"));
    REQUIRE(back.rows() == 5);
    REQUIRE(back.cols() == 9);
    for (int k = 0; k < 9; ++k)
        for (int m = 0; m < 5; ++m) {
            CHECK(back(m, k).real() == y(m, k).real());
            CHECK(back(m, k).imag() == y(m, k).imag());
        }
    CHECK(fs::file_size(tmp.file("a.snap")) == 16 + 16 * 5 * 9);
}

TEST_CASE("snapshot reader rejects corrupt containers") {
    TmpDir tmp;
    const SnapshotMatrix y = random_matrix(3, 4, 1);
    const std::string path = tmp.file("b.snap");
    write_snapshots(path, y);
    std::string bytes = slurp(path);

    std::string bad_magic = bytes;
    bad_magic[0] = 'X';
    spit(path, bad_magic);
    CHECK_THROWS_AS(read_snapshots(path), std::runtime_error);

    spit(path, bytes.substr(0, bytes.size() - 5));
    CHECK_THROWS_AS(read_snapshots(path), std::runtime_error);

    spit(path, bytes + "junk");
    CHECK_THROWS_AS(read_snapshots(path), std::runtime_error);

    CHECK_THROWS_AS(read_snapshots(tmp.file("missing.snap")), std::runtime_error);
}

TEST_CASE("doubles format with 17 significant digits and round-trip") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 1e300, 4503599627370497.0, 0.0,
                     -0.75, 2.4513708498984760}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("csv emit/parse round-trips") {
    const CsvTable table{{"a", "b", "c"}, {"1", "0.25", "x"}, {"2", "-3", "y"}};
    const std::string text = csv_to_string(table);
    CHECK(text == "a,b,c\n1,0.25,x\n2,-3,y\n");
    CHECK(csv_parse(text) == table);

    TmpDir tmp;
    csv_write_file(tmp.file("t.csv"), table);
    CHECK(csv_read_file(tmp.file("t.csv")) == table);
    CHECK(slurp(tmp.file("t.csv")) == text);  // LF endings, no BOM, no CR
}

TEST_CASE("line plots render deterministically with axes and legend") {
    SvgSeries s1{"alpha", {1, 2, 3, 4}, {0.1, 0.5, 0.4, 0.9}};
    SvgSeries s2{"beta", {1, 2, 3, 4}, {0.2, 0.1, 0.6, 0.7}};
    SvgPlotOptions options;
    options.title = "demo";
    options.x_label = "x";
    options.y_label = "y";
    const std::string svg = render_line_plot({s1, s2}, options);
    CHECK(svg == render_line_plot({s1, s2}, options));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("alpha") != std::string::npos);
    CHECK(svg.find("beta") != std::string::npos);
    CHECK(svg.find("demo") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("log-scale plots drop nonpositive points instead of failing") {
    SvgSeries s{"gamma", {0.0, 1.0, 10.0, 100.0}, {1.0, 2.0, 3.0, 4.0}};
    SvgPlotOptions options;
    options.log_x = true;
    const std::string svg = render_line_plot({s}, options);
    CHECK(svg.find("polyline") != std::string::npos);

    TmpDir tmp;
    write_line_plot(tmp.file("p.svg"), {s}, options);
    CHECK(slurp(tmp.file("p.svg")) == svg);
}

TEST_CASE("cli synth writes the documented container") {
    TmpDir tmp;
    const std::string a = tmp.file("a.snap"), b = tmp.file("b.snap");
    CHECK(cli("synth --n 4 --snapshots 8 --hypothesis h0 --seed 1 --out " + a +
              " > /dev/null") == 0);
    CHECK(fs::file_size(a) == 528);
    CHECK(cli("synth --n 4 --snapshots 8 --hypothesis h0 --seed 1 --out " + b +
              " > /dev/null") == 0);
    CHECK(slurp(a) == slurp(b));

    const SnapshotMatrix direct = read_snapshots(a);
    CHECK(direct.rows() == 4);
    CHECK(direct.cols() == 8);
}

TEST_CASE("cli synth validates the antenna count") {
    TmpDir tmp;
    CHECK(cli("synth --n 1 --snapshots 8 --out " + tmp.file("x.snap") +
              " > /dev/null 2>&1") != 0);
}

TEST_CASE("cli detect flags truncated input") {
    TmpDir tmp;
    const std::string path = tmp.file("trunc.snap");
    CHECK(cli("synth --n 4 --snapshots 6 --out " + path + " > /dev/null") == 0);
    const std::string bytes = slurp(path);
    spit(path, bytes.substr(0, bytes.size() / 2));
    CHECK(cli("detect --input " + path + " > /dev/null 2>&1") != 0);
}

TEST_CASE("cli calibrate + empirical detect flag a strong emitter") {
    TmpDir tmp;
    const std::string calib = tmp.file("calib.csv");
    CHECK(cli("calibrate --n 8 --snapshots 24 --trials 400 --seed 3"
              " --pfa 0.1,0.2 --out " + calib) == 0);
    const CsvTable table = csv_read_file(calib);
    REQUIRE(table.size() == 9);  // header + 4 detectors x 2 targets
    CHECK(table[0] == std::vector<std::string>{"detector", "pfa", "threshold"});
    for (std::size_t i = 1; i < table.size(); ++i) {
        REQUIRE(table[i].size() == 3);
        CHECK(std::stod(table[i][2]) > 0.0);
    }

    const std::string strong = tmp.file("strong.snap");
    CHECK(cli("synth --n 8 --snapshots 24 --hypothesis h1 --snr-db 0 --seed 9 --out " +
              strong + " > /dev/null") == 0);
    const std::string report = tmp.file("report.csv");
    CHECK(cli("detect --input " + strong + " --policy empirical --calibration " +
              calib + " --pfa 0.1 --format csv --out " + report) == 0);
    const CsvTable decisions = csv_read_file(report);
    REQUIRE(decisions.size() == 5);
    CHECK(decisions[0] ==
          std::vector<std::string>{"detector", "statistic", "threshold", "decision"});
    for (std::size_t i = 1; i < decisions.size(); ++i)
        CHECK(decisions[i][3] == "present");

    // the CSV report round-trips byte for byte
    const std::string raw = slurp(report);
    CHECK(csv_to_string(csv_parse(raw)) == raw);
}

TEST_CASE("cli detect needs a calibration table in empirical mode") {
    TmpDir tmp;
    const std::string path = tmp.file("h0.snap");
    CHECK(cli("synth --n 8 --snapshots 24 --out " + path + " > /dev/null") == 0);
    CHECK(cli("detect --input " + path + " --policy empirical > /dev/null 2>&1") != 0);
}

TEST_CASE("cli roc output is byte-identical across thread counts") {
    TmpDir tmp;
    const std::string common =
        "roc --n 8 --snapshots 24 --snr-db -6 --trials 300 --seed 5"
        " --pfa-grid 0.1,0.2,0.3 ";
    const std::string one = tmp.file("roc1.csv"), three = tmp.file("roc3.csv");
    CHECK(cli(common + "--threads 1 --out " + one) == 0);
    CHECK(cli(common + "--threads 3 --out " + three) == 0);
    CHECK(slurp(one) == slurp(three));

    const CsvTable table = csv_read_file(one);
    REQUIRE(table.size() == 13);  // header + 4 detectors x 3 points
    CHECK(table[0] == std::vector<std::string>{"detector", "pfa", "pd"});
}

TEST_CASE("cli roc can draw its curves") {
    TmpDir tmp;
    const std::string svg = tmp.file("roc.svg");
    CHECK(cli("roc --n 8 --snapshots 24 --trials 200 --seed 2 --pfa-grid 0.1,0.3"
              " --svg " + svg + " > /dev/null") == 0);
    const std::string body = slurp(svg);
    CHECK(body.find("<svg") == 0);
    CHECK(body.find("polyline") != std::string::npos);
    CHECK(body.find("r-max-nv") != std::string::npos);
}

TEST_CASE("cli pmiss emits the sweep schema and drops rank-starved detectors") {
    TmpDir tmp;
    const std::string out = tmp.file("pmiss.csv");
    CHECK(cli("pmiss --n-list 4,8 --snapshots 6 --snr-db 0 --trials 200 --pfa 0.2"
              " --seed 11 --out " + out) == 0);
    const CsvTable table = csv_read_file(out);
    CHECK(table[0] == std::vector<std::string>{"n", "detector", "pmiss", "trials_used"});
    int rows_n4 = 0, rows_n8 = 0;
    for (std::size_t i = 1; i < table.size(); ++i) {
        REQUIRE(table[i].size() == 4);
        const double pmiss = std::stod(table[i][2]);
        CHECK(pmiss >= 0.0);
        CHECK(pmiss <= 1.0);
        if (table[i][0] == "4") ++rows_n4;
        if (table[i][0] == "8") ++rows_n8;
        if (table[i][0] == "8")
            CHECK((table[i][1] == "r-max-nv" || table[i][1] == "m-max-min"));
    }
    CHECK(rows_n4 == 4);
    CHECK(rows_n8 == 2);
}

TEST_CASE("cli tw-table dumps the grid with the documented left edge") {
    TmpDir tmp;
    const std::string out = tmp.file("tw.csv");
    CHECK(cli("tw-table --order 1 --out " + out) == 0);
    const CsvTable table = csv_read_file(out);
    CHECK(table[0] == std::vector<std::string>{"t", "cdf"});
    REQUIRE(table.size() > 100);
    CHECK(std::stod(table[1][0]) == -5.0);
    CHECK(std::stod(table[1][1]) < 0.001);

    const std::string raw = slurp(out);
    CHECK(csv_to_string(csv_parse(raw)) == raw);
}

TEST_CASE("cli honors the table directory override") {
    TmpDir tmp;
    // four-row stand-in table; the dump must reflect it, not the embedded grid
    spit(tmp.file("tw1_cdf.txt"),
         "# t cdf\n-4 0.0005\n-1 0.3\n1 0.8\n4 0.9995\n");
    const std::string out = tmp.file("twdir.csv");
    CHECK(cli_env("EMDET_TW_DIR=" + tmp.path.string(),
                  "tw-table --order 1 --out " + out) == 0);
    const CsvTable table = csv_read_file(out);
    REQUIRE(table.size() == 5);
    CHECK(std::stod(table[1][0]) == -4.0);
    CHECK(std::stod(table[4][1]) == 0.9995);
}

TEST_CASE("cli rejects unknown detectors and subcommands") {
    TmpDir tmp;
    const std::string path = tmp.file("h0.snap");
    CHECK(cli("synth --n 4 --snapshots 8 --out " + path + " > /dev/null") == 0);
    CHECK(cli("detect --input " + path + " --detector warp-drive"
              " > /dev/null 2>&1") != 0);
    CHECK(cli("frobnicate > /dev/null 2>&1") != 0);
    CHECK(cli("> /dev/null 2>&1") != 0);  // a subcommand is required
}
