#include "dorod/problem.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace dorod {

std::string format_number(double v) {
    char s[40];
    const auto r = std::to_chars(s, s + sizeof s, v);
    return std::string(s, r.ptr);
}

namespace {

double to_number(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || !std::isfinite(v))
        throw domain_error("expected a number, got '" + s + "'");
    return v;
}

}  // namespace

boundary_condition boundary_condition::parse(std::string_view s) {
    std::string t(s);
    std::transform(t.begin(), t.end(), t.begin(), ::tolower);
    const auto c1 = t.find(':');
    if (c1 == std::string::npos) throw domain_error("boundary condition must be dbc:VALUE or tbc:VALUE");
    const std::string kind = t.substr(0, c1);
    std::string rest = t.substr(c1 + 1);
    std::string mode;
    if (const auto c2 = rest.find(':'); c2 != std::string::npos) {
        mode = rest.substr(c2 + 1);
        rest = rest.substr(0, c2);
    }
    const double v = to_number(rest);
    if (kind == "dbc") {
        if (!mode.empty()) throw domain_error("displacement condition takes no loading mode");
        return displacement(v);
    }
    if (kind == "tbc") {
        if (mode.empty() || mode == "point") return traction(v, traction_mode::point);
        if (mode == "cell") return traction(v, traction_mode::cell);
        throw domain_error("unknown traction mode '" + mode + "'");
    }
    throw domain_error("unknown boundary condition '" + kind + "'");
}

std::string boundary_condition::spec() const {
    if (!is_traction()) return "dbc:" + format_number(value);
    return "tbc:" + format_number(value) + (mode == traction_mode::cell ? ":cell" : "");
}

body_load body_load::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.empty()) throw domain_error("tabulated load needs at least one sample");
    std::sort(samples.begin(), samples.end());
    for (std::size_t k = 1; k < samples.size(); ++k)
        if (samples[k].first == samples[k - 1].first)
            throw domain_error("tabulated load has duplicate abscissae");
    return body_load(std::move(samples));
}

double body_load::operator()(double x) const {
    if (pts_.empty()) return 0.0;
    if (x <= pts_.front().first) return pts_.front().second;
    if (x >= pts_.back().first) return pts_.back().second;
    const auto it = std::upper_bound(pts_.begin(), pts_.end(), std::make_pair(x, -HUGE_VAL));
    const auto& [x1, f1] = *it;
    const auto& [x0, f0] = *(it - 1);
    return f0 + (f1 - f0) * (x - x0) / (x1 - x0);
}

bool body_load::is_zero() const {
    return std::all_of(pts_.begin(), pts_.end(), [](const auto& p) { return p.second == 0.0; });
}

body_load body_load::parse(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::string head;
    if (!(in >> head)) return {};
    if (head == "none") return {};
    if (head != "table") {
        std::string extra;
        if (in >> extra) throw domain_error("unexpected token '" + extra + "' in body load");
        return constant(to_number(head));
    }
    std::vector<std::pair<double, double>> pts;
    std::string tok;
    while (in >> tok) {
        const auto c = tok.find(':');
        if (c == std::string::npos) throw domain_error("table entry must be x:f, got '" + tok + "'");
        pts.emplace_back(to_number(tok.substr(0, c)), to_number(tok.substr(c + 1)));
    }
    return tabulated(std::move(pts));
}

std::string body_load::spec() const {
    if (pts_.empty()) return "none";
    if (pts_.size() == 1 && pts_[0].first == 0.0) return format_number(pts_[0].second);
    std::string s = "table";
    for (const auto& [x, f] : pts_) s += " " + format_number(x) + ":" + format_number(f);
    return s;
}

void rod_problem::validate() const {
    if (!(E > 0) || !(A > 0)) throw domain_error("E and A must be positive");
    if (mesh.intervals() < 2) throw domain_error("the rod needs at least two intervals");
}

}  // namespace dorod
