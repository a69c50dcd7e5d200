#include "bgo/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bgo {

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << body;
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

nlohmann::json config_json(const ExperimentConfig& c)
{
    nlohmann::json j;
    j["algo"] = std::string(to_string(c.algo));
    j["oracle"] = std::string(to_string(c.oracle));
    j["objective"] = c.objective;
    j["dim"] = c.dim;
    j["gamma0"] = c.gamma0;
    j["eta0"] = c.eta0;
    j["m0"] = c.m0;
    j["beta"] = c.beta ? nlohmann::json(*c.beta) : nlohmann::json(nullptr);
    j["lipschitz"] = c.lipschitz ? nlohmann::json(*c.lipschitz) : nlohmann::json(nullptr);
    j["n_grid"] = c.n_grid;
    j["replications"] = c.replications;
    j["seed"] = c.seed;
    j["metric"] = std::string(to_string(c.metric));
    j["noise_std"] = c.noise_std;
    j["error_kind"] = std::string(to_string(c.error_kind));
    j["error_coeff"] = c.error_coeff;
    j["out"] = c.out;
    j["functional"] = c.functional.to_string();
    return j;
}

}  // namespace

std::string format_csv(const RateResult& result)
{
    std::string out = "n,metric_mean,metric_stderr,samples_total,oracle_calls\n";
    for (const auto& p : result.points) {
        out += std::to_string(p.n) + ',' + num(p.metric_mean) + ',' + num(p.metric_stderr) + ',' +
               num(p.samples_total) + ',' + std::to_string(p.oracle_calls) + '\n';
    }
    return out;
}

std::string format_summary_json(const RateResult& result, const ExperimentConfig& config)
{
    nlohmann::json j;
    j["slope"] = result.slope ? nlohmann::json(*result.slope) : nlohmann::json(nullptr);
    j["slope_stderr"] = result.slope_stderr ? nlohmann::json(*result.slope_stderr) : nlohmann::json(nullptr);
    j["config_echo"] = config_json(config);
    return j.dump(2) + "\n";
}

std::string format_svg(const RateResult& result, const std::string& title)
{
    constexpr double w = 480, h = 360, pad = 50;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << title << "</text>\n";
    svg << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\"" << h - pad
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad
        << "\" stroke=\"black\"/>\n";

    std::vector<std::pair<double, double>> pts;
    for (const auto& p : result.points) {
        if (p.metric_mean > 0.0) {
            pts.emplace_back(std::log10(static_cast<double>(p.n)), std::log10(p.metric_mean));
        }
    }
    if (!pts.empty()) {
        auto [xmin_it, xmax_it] = std::minmax_element(pts.begin(), pts.end(),
                                                      [](auto& a, auto& b) { return a.first < b.first; });
        auto [ymin_it, ymax_it] = std::minmax_element(pts.begin(), pts.end(),
                                                      [](auto& a, auto& b) { return a.second < b.second; });
        double x0 = xmin_it->first, x1 = std::max(xmax_it->first, x0 + 1e-9);
        double y0 = ymin_it->second, y1 = std::max(ymax_it->second, y0 + 1e-9);
        auto sx = [&](double v) { return pad + (v - x0) / (x1 - x0) * (w - 2 * pad); };
        auto sy = [&](double v) { return h - pad - (v - y0) / (y1 - y0) * (h - 2 * pad); };
        svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
        for (auto& [x, y] : pts) {
            svg << sx(x) << ',' << sy(y) << ' ';
        }
        svg << "\"/>\n";
        for (auto& [x, y] : pts) {
            svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"steelblue\"/>\n";
        }
        svg << "<text x=\"" << w / 2 << "\" y=\"" << h - 12
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">log10 N</text>\n";
        svg << "<text x=\"14\" y=\"" << h / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" transform=\"rotate(-90 14 "
            << h / 2 << ")\">log10 metric</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_results(const RateResult& result, const ExperimentConfig& config, const std::string& csv_path,
                   bool with_svg)
{
    std::filesystem::path csv(csv_path);
    write_file(csv, format_csv(result));
    auto json_path = csv;
    json_path.replace_extension(".json");
    write_file(json_path, format_summary_json(result, config));
    if (with_svg) {
        auto svg_path = csv;
        svg_path.replace_extension(".svg");
        std::string title = std::string(to_string(config.algo)) + "/" + std::string(to_string(config.oracle)) +
                            " " + std::string(to_string(config.metric));
        write_file(svg_path, format_svg(result, title));
    }
}

}  // namespace bgo
