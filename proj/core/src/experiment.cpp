#include "coreset/experiment.hpp"

#include "coreset/generators.hpp"
#include "coreset/matching.hpp"
#include "coreset/vertex_cover.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace coreset {

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace

void ExperimentConfig::validate() const {
    static const std::vector<std::string> generators{"hard-matching", "hard-vc",
                                                     "random-bipartite", "maximal-trap", "file"};
    if (std::find(generators.begin(), generators.end(), generator) == generators.end())
        throw std::invalid_argument("experiment: unknown generator `" + generator + "`");
    if (generator == "file" && input_path.empty())
        throw std::invalid_argument("experiment: generator `file` needs an input path");
    if (generator != "file" && n == 0)
        throw std::invalid_argument("experiment: generator needs n > 0");
    parse_scheme(scheme); // throws on unknown scheme
    if (seeds.empty()) throw std::invalid_argument("experiment: at least one seed required");
    if (k_values.empty()) throw std::invalid_argument("experiment: at least one k required");
    if (alpha_values.empty()) throw std::invalid_argument("experiment: at least one alpha required");
    for (auto k : k_values)
        if (k == 0) throw std::invalid_argument("experiment: k must be >= 1");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("experiment: format must be csv or json");
}

ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config parse error at line " + std::to_string(line_no) +
                                     ": expected `key = value`");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key == "generator") cfg.generator = value;
        else if (key == "input") cfg.input_path = value;
        else if (key == "n") cfg.n = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "p") cfg.p = std::stod(value);
        else if (key == "scheme") cfg.scheme = value;
        else if (key == "k") {
            cfg.k_values.clear();
            for (const auto& v : split_list(value))
                cfg.k_values.push_back(static_cast<std::uint32_t>(std::stoul(v)));
        } else if (key == "alpha") {
            cfg.alpha_values.clear();
            for (const auto& v : split_list(value)) cfg.alpha_values.push_back(std::stod(v));
        } else if (key == "seeds") {
            // Either a count `seeds = 20` (seeds 1..20) or a list `seeds = 3,5,9`.
            auto items = split_list(value);
            cfg.seeds.clear();
            if (items.size() == 1 && value.find(',') == std::string::npos) {
                std::uint64_t count = std::stoull(items[0]);
                for (std::uint64_t s = 1; s <= count; ++s) cfg.seeds.push_back(s);
            } else {
                for (const auto& v : items) cfg.seeds.push_back(std::stoull(v));
            }
        } else if (key == "seed_list") {
            cfg.seeds.clear();
            for (const auto& v : split_list(value)) cfg.seeds.push_back(std::stoull(v));
        } else if (key == "oracle") {
            cfg.oracle = (value == "1" || value == "true" || value == "on");
        } else if (key == "threads") {
            cfg.threads = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "out") {
            cfg.out_path = value;
        } else if (key == "format") {
            cfg.format = value;
        } else {
            throw std::runtime_error("config parse error at line " + std::to_string(line_no) +
                                     ": unknown key `" + key + "`");
        }
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_experiment_config(ss.str());
}

namespace {

Graph build_instance(const ExperimentConfig& cfg, double alpha, std::uint32_t k, RngSeed seed) {
    if (cfg.generator == "hard-matching") return gen_hard_matching(cfg.n, alpha, k, seed).graph;
    if (cfg.generator == "hard-vc") return gen_hard_vc(cfg.n, alpha, k, seed).graph;
    if (cfg.generator == "random-bipartite") {
        double p = cfg.p > 0 ? cfg.p : 8.0 / cfg.n;
        return gen_random_bipartite(cfg.n, p, seed);
    }
    if (cfg.generator == "maximal-trap") return gen_maximal_trap(cfg.n, k);
    return load_graph(cfg.input_path);
}

std::optional<std::size_t> compute_optimum(const Graph& g, Scheme scheme) {
    if (scheme_is_matching(scheme)) {
        if (g.is_bipartite()) return maximum_matching_bipartite(g).size();
        if (g.num_edges() <= 24) return brute_force_max_matching(g);
        throw std::invalid_argument(
            "oracle requested on a non-bipartite instance too large for brute force");
    }
    if (g.is_bipartite()) return exact_vc_bipartite(g).size();
    if (g.num_vertices() <= 24) return brute_force_vc(g);
    throw std::invalid_argument(
        "oracle requested on a non-bipartite instance too large for brute force");
}

ReportRow run_cell(const ExperimentConfig& cfg, std::uint32_t k, double alpha,
                   std::uint64_t seed_value) {
    const auto start = std::chrono::steady_clock::now();
    RngSeed seed{seed_value};
    Graph g = build_instance(cfg, alpha, k, seed);
    Scheme scheme = parse_scheme(cfg.scheme);

    std::map<std::string, double> params{{"alpha", alpha}};
    ProtocolResult result = run_simultaneous(g, k, scheme, params, seed);

    ReportRow row;
    row.scheme = cfg.scheme;
    row.generator = cfg.generator == "file" ? cfg.input_path : cfg.generator;
    row.n = cfg.generator == "file" ? g.num_vertices() : cfg.n;
    row.alpha = alpha;
    row.k = k;
    row.seed = seed_value;
    row.solution_size = result.solution_size();
    row.total_bits = result.ledger.total_bits;
    row.max_machine_bits = result.ledger.max_machine_bits();
    if (cfg.oracle) {
        row.optimum = compute_optimum(g, scheme);
        const double opt = static_cast<double>(*row.optimum);
        const double sol = static_cast<double>(row.solution_size);
        if (scheme_is_matching(scheme)) {
            if (sol > 0) row.ratio = opt / sol;
            else if (opt == 0) row.ratio = 1.0;
        } else {
            if (opt > 0) row.ratio = sol / opt;
            else if (sol == 0) row.ratio = 1.0;
        }
    }
    row.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return row;
}

} // namespace

Report run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();

    struct Cell {
        std::uint32_t k;
        double alpha;
        std::uint64_t seed;
    };
    // Grid order matches the required row order (scheme is fixed per config).
    std::vector<Cell> cells;
    for (std::uint32_t k : cfg.k_values)
        for (double alpha : cfg.alpha_values)
            for (std::uint64_t s : cfg.seeds) cells.push_back(Cell{k, alpha, s});

    Report report;
    report.rows.resize(cells.size());
    const std::uint32_t workers = std::max<std::uint32_t>(cfg.threads, 1);
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            report.rows[i] = run_cell(cfg, cells[i].k, cells[i].alpha, cells[i].seed);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (std::uint32_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= cells.size()) break;
                        report.rows[i] = run_cell(cfg, cells[i].k, cells[i].alpha, cells[i].seed);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const ReportRow& a, const ReportRow& b) {
                         return std::tie(a.scheme, a.k, a.alpha, a.seed) <
                                std::tie(b.scheme, b.k, b.alpha, b.seed);
                     });
    return report;
}

const char* const kReportCsvHeader =
    "scheme,generator,n,alpha,k,seed,solution_size,optimum,ratio,total_bits,max_machine_bits,"
    "wall_ms";

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

} // namespace

std::string report_to_csv(const Report& r) {
    std::ostringstream out;
    out << kReportCsvHeader << '\n';
    for (const ReportRow& row : r.rows) {
        out << row.scheme << ',' << row.generator << ',' << row.n << ','
            << format_double(row.alpha) << ',' << row.k << ',' << row.seed << ','
            << row.solution_size << ',';
        if (row.optimum) out << *row.optimum;
        out << ',';
        if (row.ratio) out << format_double(*row.ratio);
        out << ',' << row.total_bits << ',' << row.max_machine_bits << ','
            << format_double(row.wall_ms) << '\n';
    }
    return out.str();
}

std::string report_to_json(const Report& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ReportRow& row : r.rows) {
        nlohmann::json j;
        j["scheme"] = row.scheme;
        j["generator"] = row.generator;
        j["n"] = row.n;
        j["alpha"] = row.alpha;
        j["k"] = row.k;
        j["seed"] = row.seed;
        j["solution_size"] = row.solution_size;
        if (row.optimum) j["optimum"] = *row.optimum;
        if (row.ratio) j["ratio"] = *row.ratio;
        j["total_bits"] = row.total_bits;
        j["max_machine_bits"] = row.max_machine_bits;
        j["wall_ms"] = row.wall_ms;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

void emit_report(const Report& r, const std::string& format, const std::string& path) {
    std::string text;
    if (format == "csv")
        text = report_to_csv(r);
    else if (format == "json")
        text = report_to_json(r);
    else
        throw std::invalid_argument("emit_report: format must be csv or json");
    std::ofstream f(path);
    if (!f) throw std::runtime_error("emit_report: cannot write " + path);
    f << text;
}

} // namespace coreset
