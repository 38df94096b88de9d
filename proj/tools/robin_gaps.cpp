// Command-line front end: emits spectra, gap series, running means, spacing
// CDFs and lattice counts as CSV or JSON, and runs the verification suite.

#include "robin/disk.hpp"
#include "robin/errors.hpp"
#include "robin/lattice.hpp"
#include "robin/rectangle.hpp"
#include "robin/robin1d.hpp"
#include "robin/spectrum.hpp"
#include "robin/stats.hpp"
#include "robin/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    std::string domain = "rectangle";
    double sigma = 1.0;
    double aspect = 1.0;
    std::size_t count = 2000;
    double mu_max = 0.0;
    std::string format = "csv";
    std::string output; // empty = stdout
};

std::string num15(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void emit(const RunConfig& cfg, const Table& table)
{
    std::string text;
    if (cfg.format == "csv") {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            text += (c ? "," : "") + table.columns[c];
        text += '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                text += (c ? "," : "") + num15(row[c]);
            text += '\n';
        }
    } else {
        json j;
        j["config"] = {{"command", cfg.command}, {"domain", cfg.domain},
                       {"sigma", cfg.sigma},     {"aspect", cfg.aspect},
                       {"count", cfg.count},     {"mu_max", cfg.mu_max},
                       {"format", cfg.format}};
        j["columns"] = table.columns;
        j["rows"] = table.rows;
        text = j.dump(2);
        text += '\n';
    }
    if (cfg.output.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out)
            throw std::domain_error("cannot open output file " + cfg.output);
        out.write(text.data(), std::streamsize(text.size()));
    }
}

robin::GapSeries gaps_for(const RunConfig& cfg)
{
    if (cfg.domain == "interval") {
        robin::GapSeries gs;
        gs.domain = robin::Domain::Interval;
        gs.sigma = cfg.sigma;
        for (std::size_t n = 0; n < cfg.count; ++n)
            gs.entries.push_back({n, robin::robin1d::gap1d(int(n), cfg.sigma)});
        return gs;
    }
    if (cfg.domain == "rectangle")
        return robin::rectangle::rect_gaps(cfg.aspect, cfg.sigma, cfg.count);
    return robin::disk::disk_gaps(cfg.sigma, cfg.count);
}

Table spectrum_table(const RunConfig& cfg)
{
    Table t;
    t.columns = {"index", "value", "label_a", "label_b", "multiplicity"};
    robin::Spectrum sp;
    if (cfg.domain == "interval") {
        sp.domain = robin::Domain::Interval;
        for (std::size_t n = 0; n < cfg.count; ++n) {
            const double k = robin::robin1d::frequency(int(n), cfg.sigma).k;
            sp.levels.push_back({k * k, std::int32_t(n), 0, 1});
        }
    } else if (cfg.domain == "rectangle") {
        const double cutoff = robin::rectangle::dirichlet_rank_value(cfg.aspect, cfg.count);
        const auto bc = cfg.sigma == 0.0 ? robin::BoundaryKind::Neumann : robin::BoundaryKind::Robin;
        sp = robin::rectangle::rect_spectrum(cfg.aspect, cfg.sigma, bc, cutoff);
        sp.levels.resize(std::min(sp.levels.size(), cfg.count));
    } else {
        double mu = cfg.mu_max;
        if (mu <= 0.0)
            mu = 2.0 * std::sqrt(double(cfg.count + 1)) + 2.0;
        sp = robin::disk::disk_spectrum(cfg.sigma, mu);
        if (cfg.mu_max <= 0.0 && sp.levels.size() > cfg.count)
            sp.levels.resize(cfg.count);
    }
    for (std::size_t i = 0; i < sp.levels.size(); ++i) {
        const robin::Level& l = sp.levels[i];
        t.rows.push_back({double(i), l.value, double(l.a), double(l.b), double(l.multiplicity)});
    }
    return t;
}

int run(const RunConfig& cfg)
{
    if (cfg.command == "verify") {
        const robin::verify::Report rep = robin::verify::run_full();
        if (cfg.output.empty()) {
            std::fwrite(rep.text.data(), 1, rep.text.size(), stdout);
        } else {
            std::ofstream out(cfg.output, std::ios::binary);
            out.write(rep.text.data(), std::streamsize(rep.text.size()));
        }
        return rep.all_pass ? 0 : 3;
    }

    Table t;
    if (cfg.command == "spectrum") {
        t = spectrum_table(cfg);
    } else if (cfg.command == "gaps") {
        const robin::GapSeries gs = gaps_for(cfg);
        t.columns = {"n", "d_n", "cumulative_mean"};
        double sum = 0.0;
        for (std::size_t i = 0; i < gs.entries.size(); ++i) {
            sum += gs.entries[i].d;
            t.rows.push_back({double(i), gs.entries[i].d, sum / double(i + 1)});
        }
    } else if (cfg.command == "mean") {
        const robin::GapSeries gs = gaps_for(cfg);
        t.columns = {"N", "mean"};
        for (const auto& [n, m] : robin::stats::cumulative_mean(gs))
            t.rows.push_back({double(n), m});
    } else if (cfg.command == "spacing") {
        std::vector<double> y_grid;
        for (int i = 0; i <= 300; ++i)
            y_grid.push_back(0.01 * i);
        robin::stats::SpacingStats st;
        if (cfg.domain == "rectangle") {
            const auto sp = robin::rectangle::desym_square_spectrum(cfg.sigma, cfg.count + 1);
            auto vals = sp.expanded();
            vals.resize(cfg.count + 1);
            st = robin::stats::spacing_cdf(vals, y_grid);
        } else if (cfg.domain == "disk") {
            double mu = 2.0 * std::sqrt(double(cfg.count + 2)) + 2.0;
            robin::Spectrum sp = robin::disk::disk_spectrum(cfg.sigma, mu);
            auto vals = sp.expanded();
            if (vals.size() < cfg.count + 1)
                throw robin::convergence_error("spacing: disk spectrum shorter than window");
            vals.resize(cfg.count + 1);
            st = robin::stats::spacing_cdf(vals, y_grid);
        } else {
            throw std::domain_error("spacing: domain must be rectangle or disk");
        }
        t.columns = {"y", "fraction"};
        for (const auto& [y, f] : st.cdf_samples)
            t.rows.push_back({y, f});
    } else if (cfg.command == "lattice") {
        t.columns = {"mu", "count", "area_term", "perimeter_term", "residual"};
        for (int mu = 1; mu <= int(cfg.mu_max); ++mu) {
            const auto lc = robin::lattice::count_lattice(double(mu));
            t.rows.push_back({lc.mu, double(lc.count), lc.area_term, lc.perimeter_term, lc.residual});
        }
    }
    emit(cfg, t);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Robin/Neumann/Dirichlet Laplace spectra, Robin-Neumann gap statistics, "
                 "and lattice counts in the cusped domain"};
    app.require_subcommand(1);

    RunConfig cfg;
    const auto add_common = [&](CLI::App* cmd, bool wants_domain, bool wants_mu) {
        if (wants_domain) {
            cmd->add_option("--domain", cfg.domain, "interval | rectangle | disk")
                ->check(CLI::IsMember({"interval", "rectangle", "disk"}));
            cmd->add_option("--sigma", cfg.sigma, "Robin parameter (0 = Neumann)")
                ->check(CLI::NonNegativeNumber);
            cmd->add_option("--aspect", cfg.aspect, "rectangle aspect ratio L in (0,1]")
                ->check(CLI::Range(1e-6, 1.0));
            cmd->add_option("--count", cfg.count, "number of levels / gaps")
                ->check(CLI::PositiveNumber);
        }
        if (wants_mu)
            cmd->add_option("--mu-max", cfg.mu_max, "frequency cutoff mu")
                ->check(CLI::PositiveNumber);
        cmd->add_option("--format", cfg.format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", cfg.output, "output file (default: stdout)");
    };

    CLI::App* c_spectrum = app.add_subcommand("spectrum", "ordered eigenvalue table");
    add_common(c_spectrum, true, true);
    CLI::App* c_gaps = app.add_subcommand("gaps", "Robin-Neumann gap series d_n");
    add_common(c_gaps, true, false);
    CLI::App* c_mean = app.add_subcommand("mean", "running mean of the gap series");
    add_common(c_mean, true, false);
    CLI::App* c_spacing = app.add_subcommand("spacing", "nearest-neighbour spacing CDF");
    add_common(c_spacing, true, false);
    CLI::App* c_lattice = app.add_subcommand("lattice", "lattice counts N_D(mu), mu = 1..mu_max");
    add_common(c_lattice, false, true);
    CLI::App* c_verify = app.add_subcommand("verify", "run the verification suite");
    add_common(c_verify, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (const char* env = std::getenv("ROBIN_GAPS_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end == env || *end != '\0' || v < 1)
                throw std::domain_error("ROBIN_GAPS_THREADS must be an integer >= 1");
        }
        if (cfg.command == "lattice" && cfg.mu_max <= 0.0)
            throw std::domain_error("lattice: --mu-max is required");
        if (cfg.command == "lattice" && cfg.mu_max > robin::lattice::kDefaultMuCap)
            throw robin::resource_error("lattice: mu-max exceeds the configured cap");
        if (cfg.aspect != 1.0 && cfg.domain != "rectangle")
            throw std::domain_error("--aspect applies to the rectangle domain only");
        if (cfg.command == "spacing" && cfg.domain == "rectangle" && cfg.aspect != 1.0)
            throw std::domain_error("spacing: desymmetrized statistics are defined on the square");
        return run(cfg);
    } catch (const robin::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
