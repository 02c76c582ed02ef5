#include "bergman/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bergman {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a_hash(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string sweep_to_csv(const SweepResult& sweep, const std::string& config_hash) {
    std::ostringstream os;
    os << "# sweep=" << sweep.name << " config_hash=" << config_hash << "\n";
    os << "param,lambda,measure,norm,ratio,flag,note\n";
    for (const auto& r : sweep.rows) {
        os << format_double(r.param) << ',' << format_double(r.lambda) << ','
           << format_double(r.measure) << ',' << format_double(r.norm_pow) << ','
           << format_double(r.ratio) << ',' << (r.valid ? "ok" : "flagged") << ','
           << '"' << r.note << '"' << "\n";
    }
    os << "# fit slope=" << format_double(sweep.fit.slope)
       << " intercept=" << format_double(sweep.fit.intercept)
       << " r2=" << format_double(sweep.fit.r_squared)
       << " suite_max=" << format_double(sweep.suite_max) << "\n";
    return os.str();
}

std::string sweep_to_json(const SweepResult& sweep, const std::string& config_hash) {
    nlohmann::json j;
    j["sweep"] = sweep.name;
    j["config_hash"] = config_hash;
    j["x_label"] = sweep.x_label;
    auto rows = nlohmann::json::array();
    for (const auto& r : sweep.rows)
        rows.push_back({{"param", r.param},
                        {"lambda", r.lambda},
                        {"measure", r.measure},
                        {"norm", r.norm_pow},
                        {"ratio", r.ratio},
                        {"valid", r.valid},
                        {"note", r.note}});
    j["rows"] = rows;
    j["fit"] = {{"slope", sweep.fit.slope},
                {"intercept", sweep.fit.intercept},
                {"r_squared", sweep.fit.r_squared},
                {"max_residual", sweep.fit.max_residual},
                {"n", sweep.fit.n}};
    j["suite_max"] = sweep.suite_max;
    return j.dump(2);
}

std::string curve_to_csv(const DistributionCurve& curve, const std::string& config_hash) {
    std::ostringstream os;
    os << "# distribution config_hash=" << config_hash << "\n";
    os << "t,measure,error\n";
    for (const auto& s : curve.samples)
        os << format_double(s.t) << ',' << format_double(s.measure) << ','
           << format_double(s.error) << "\n";
    return os.str();
}

std::string curve_to_json(const DistributionCurve& curve, const std::string& config_hash) {
    nlohmann::json j;
    j["config_hash"] = config_hash;
    auto rows = nlohmann::json::array();
    for (const auto& s : curve.samples)
        rows.push_back({{"t", s.t}, {"measure", s.measure}, {"error", s.error}});
    j["samples"] = rows;
    return j.dump(2);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

} // namespace bergman
