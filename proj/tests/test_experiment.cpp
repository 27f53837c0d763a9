#include "coreset/experiment.hpp"

#include "test_util.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>

using namespace coreset;

namespace {

std::string strip_wall_ms(const std::string& csv) {
    // Drop the last column (wall_ms) from every line.
    std::string out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.rfind(',');
        out += line.substr(0, pos);
        out += '\n';
    }
    return out;
}

} // namespace

TEST_CASE("config parsing: keys, lists, seed counts") {
    ExperimentConfig cfg = parse_experiment_config(
        "# sweep\n"
        "generator = hard-matching\n"
        "n = 256\n"
        "scheme = matching-coreset\n"
        "k = 2,4\n"
        "alpha = 8\n"
        "seeds = 3\n"
        "oracle = true\n"
        "format = csv\n");
    CHECK(cfg.generator == "hard-matching");
    CHECK(cfg.k_values == std::vector<std::uint32_t>{2, 4});
    CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2, 3});
    CHECK_NOTHROW(cfg.validate());

    ExperimentConfig listed = parse_experiment_config("generator=file\ninput=x\nseeds=5,9\n");
    CHECK(listed.seeds == std::vector<std::uint64_t>{5, 9});

    CHECK_THROWS_AS(parse_experiment_config("bogus_key = 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_experiment_config("generator\n"), std::runtime_error);
}

TEST_CASE("invalid configs fail before any computation") {
    ExperimentConfig cfg;
    cfg.generator = "no-such-gen";
    cfg.n = 16;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

    ExperimentConfig cfg2;
    cfg2.generator = "random-bipartite";
    cfg2.n = 16;
    cfg2.scheme = "no-such-scheme";
    CHECK_THROWS_AS(run_experiment(cfg2), std::invalid_argument);

    ExperimentConfig cfg3;
    cfg3.generator = "random-bipartite";
    cfg3.n = 16;
    cfg3.seeds.clear();
    CHECK_THROWS_AS(run_experiment(cfg3), std::invalid_argument);
}

TEST_CASE("single machine on a file instance gives ratio 1") {
    auto dir = std::filesystem::temp_directory_path();
    auto path = dir / "coreset_exp_input.txt";
    {
        std::ofstream f(path);
        f << "10 5 bip 5 5\n0 5\n1 6\n2 7\n3 8\n4 9\n";
    }
    ExperimentConfig cfg;
    cfg.generator = "file";
    cfg.input_path = path.string();
    cfg.scheme = "matching-coreset";
    cfg.k_values = {1};
    cfg.alpha_values = {1.0};
    cfg.seeds = {42};
    Report r = run_experiment(cfg);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].solution_size == 5);
    REQUIRE(r.rows[0].ratio.has_value());
    CHECK(*r.rows[0].ratio == doctest::Approx(1.0));
    std::filesystem::remove(path);
}

TEST_CASE("grid sweep produces sorted rows and bounded ratios") {
    ExperimentConfig cfg;
    cfg.generator = "hard-matching";
    cfg.n = 512;
    cfg.scheme = "matching-coreset";
    cfg.k_values = {4, 2};
    cfg.alpha_values = {8.0};
    cfg.seeds = {2, 1};
    Report r = run_experiment(cfg);
    REQUIRE(r.rows.size() == 4);
    CHECK(r.rows[0].k == 2);
    CHECK(r.rows[0].seed == 1);
    CHECK(r.rows[1].k == 2);
    CHECK(r.rows[1].seed == 2);
    CHECK(r.rows[2].k == 4);
    for (const auto& row : r.rows) {
        REQUIRE(row.ratio.has_value());
        CHECK(*row.ratio >= 1.0);
        CHECK(*row.ratio <= 9.0);
    }
}

TEST_CASE("csv and json emission") {
    Report empty;
    CHECK(report_to_csv(empty) == std::string(kReportCsvHeader) + "\n");

    ReportRow row;
    row.scheme = "matching-coreset";
    row.generator = "hard-matching";
    row.n = 8;
    row.alpha = 2;
    row.k = 1;
    row.seed = 7;
    row.solution_size = 4;
    row.optimum = 4;
    row.ratio = 1.0;
    row.total_bits = 32;
    row.max_machine_bits = 32;
    Report one;
    one.rows.push_back(row);
    std::string csv = report_to_csv(one);
    CHECK(csv.find("matching-coreset,hard-matching,8,2,1,7,4,4,1,32,32,") != std::string::npos);

    std::string json = report_to_json(one);
    CHECK(json.find("\"solution_size\": 4") != std::string::npos);
    CHECK(json.find("\"ratio\": 1.0") != std::string::npos);
}

TEST_CASE("replay with a different worker count is byte-identical modulo wall time") {
    ExperimentConfig cfg;
    cfg.generator = "hard-vc";
    cfg.n = 256;
    cfg.scheme = "vc-coreset";
    cfg.k_values = {2, 4};
    cfg.alpha_values = {8.0, 16.0};
    cfg.seeds = {1, 2, 3};
    cfg.threads = 1;
    Report serial = run_experiment(cfg);
    cfg.threads = 4;
    Report parallel = run_experiment(cfg);
    CHECK(strip_wall_ms(report_to_csv(serial)) == strip_wall_ms(report_to_csv(parallel)));
}
