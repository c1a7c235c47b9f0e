#include "lfc/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "numfmt.hpp"

namespace lfc {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::string_view kErrorPrefix = "error: ";

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_opt(const std::optional<double>& v) {
    return v ? detail::format_17g(*v) : std::string();
}

ojson json_real(double v) {
    if (std::isfinite(v))
        return v;
    return detail::format_17g(v);
}

ojson json_opt(const std::optional<double>& v) { return v ? json_real(*v) : ojson(nullptr); }

double real_from(const ojson& j, const char* key) {
    const ojson& v = j.at(key);
    if (v.is_number())
        return v.get<double>();
    const auto s = v.get<std::string>();
    if (s == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf")
        return HUGE_VAL;
    if (s == "-inf")
        return -HUGE_VAL;
    throw std::runtime_error(std::string("report JSON: bad real in '") + key + "'");
}

std::optional<double> opt_from(const ojson& j, const char* key) {
    if (j.at(key).is_null())
        return std::nullopt;
    return real_from(j, key);
}

bool same_real(double l, double r) { return l == r || (std::isnan(l) && std::isnan(r)); }

bool same_opt(const std::optional<double>& l, const std::optional<double>& r) {
    if (l.has_value() != r.has_value())
        return false;
    return !l || same_real(*l, *r);
}

}  // namespace

std::string to_csv(const std::vector<IneqReport>& rows) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const IneqReport& r : rows) {
        const IneqParams& p = r.params;
        out += std::string(to_string(r.id)) + ',' + csv_opt(p.alpha) + ',' + csv_opt(p.s) + ',' +
               csv_opt(p.p) + ',' + csv_opt(p.q) + ',' + csv_opt(p.a) + ',' + csv_opt(p.b) + ',' +
               csv_opt(p.x) + ',' + csv_field(r.fn) + ',' + detail::format_17g(r.lhs) + ',' +
               detail::format_17g(r.rhs) + ',' + detail::format_17g(r.slack) + ',' +
               (r.holds ? "true" : "false") + ',' + csv_field(r.notes) + '\n';
    }
    return out;
}

std::string to_json(const std::vector<IneqReport>& rows) {
    ojson arr = ojson::array();
    for (const IneqReport& r : rows) {
        const IneqParams& p = r.params;
        ojson o;
        o["ineq"] = to_string(r.id);
        o["alpha"] = json_opt(p.alpha);
        o["s"] = json_opt(p.s);
        o["p"] = json_opt(p.p);
        o["q"] = json_opt(p.q);
        o["a"] = json_opt(p.a);
        o["b"] = json_opt(p.b);
        o["x"] = json_opt(p.x);
        o["fn"] = r.fn;
        o["lhs"] = json_real(r.lhs);
        o["rhs"] = json_real(r.rhs);
        o["slack"] = json_real(r.slack);
        o["holds"] = r.holds;
        o["notes"] = r.notes;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + '\n';
}

std::string render(const std::vector<IneqReport>& rows, ReportFormat format) {
    return format == ReportFormat::Csv ? to_csv(rows) : to_json(rows);
}

std::vector<IneqReport> parse_json_reports(std::string_view text) {
    const ojson arr = ojson::parse(text);
    if (!arr.is_array())
        throw std::runtime_error("report JSON: expected an array");
    std::vector<IneqReport> rows;
    for (const ojson& o : arr) {
        IneqReport r;
        const auto id = parse_ineq_id(o.at("ineq").get<std::string>());
        if (!id)
            throw std::runtime_error("report JSON: unknown ineq '" +
                                     o.at("ineq").get<std::string>() + "'");
        r.id = *id;
        r.params.alpha = opt_from(o, "alpha");
        r.params.s = opt_from(o, "s");
        r.params.p = opt_from(o, "p");
        r.params.q = opt_from(o, "q");
        r.params.a = opt_from(o, "a");
        r.params.b = opt_from(o, "b");
        r.params.x = opt_from(o, "x");
        r.fn = o.at("fn").get<std::string>();
        r.lhs = real_from(o, "lhs");
        r.rhs = real_from(o, "rhs");
        r.slack = real_from(o, "slack");
        r.holds = o.at("holds").get<bool>();
        r.notes = o.at("notes").get<std::string>();
        rows.push_back(std::move(r));
    }
    return rows;
}

void emit_report(const std::vector<IneqReport>& rows, ReportFormat format,
                 const std::string& path) {
    const std::string text = render(rows, format);
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open report file '" + path + "' for writing");
    out << text;
    out.close();
    if (!out)
        throw std::runtime_error("failed writing report file '" + path + "'");
}

IneqReport error_report(IneqId id, const IneqParams& params, const std::string& fn,
                        const std::string& message) {
    IneqReport r;
    r.id = id;
    r.params = params;
    r.fn = fn;
    r.lhs = r.rhs = r.slack = std::numeric_limits<double>::quiet_NaN();
    r.holds = false;
    r.notes = std::string(kErrorPrefix) + message;
    return r;
}

bool is_error(const IneqReport& r) { return r.notes.starts_with(kErrorPrefix); }

int exit_code(const std::vector<IneqReport>& rows) {
    int code = 0;
    for (const IneqReport& r : rows) {
        if (is_error(r))
            return 2;
        if (!r.holds)
            code = 1;
    }
    return code;
}

bool same_report(const IneqReport& l, const IneqReport& r) {
    const IneqParams &a = l.params, &b = r.params;
    return l.id == r.id && same_opt(a.alpha, b.alpha) && same_opt(a.s, b.s) &&
           same_opt(a.p, b.p) && same_opt(a.q, b.q) && same_opt(a.a, b.a) &&
           same_opt(a.b, b.b) && same_opt(a.x, b.x) && l.fn == r.fn && same_real(l.lhs, r.lhs) &&
           same_real(l.rhs, r.rhs) && same_real(l.slack, r.slack) && l.holds == r.holds &&
           l.notes == r.notes;
}

}  // namespace lfc
