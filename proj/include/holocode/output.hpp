#pragma once

// Record-oriented output. A command builds one or more tables of records
// and the same records are rendered as CSV, JSON or aligned text, which
// keeps the encodings in field-by-field agreement.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <locale>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace holocode {

enum class Format { pretty, csv, json };

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "pretty") return Format::pretty;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    return std::nullopt;
}

struct OutputSpec {
    Format format = Format::pretty;
    std::string destination = "-";  // "-" is standard output
    int precision = 6;
};

/// Rounds half away from zero to `digits` decimals.
inline double round_half_away(double x, int digits) {
    const double scale = std::pow(10.0, digits);
    return std::round(x * scale) / scale;
}

inline std::string format_fixed(double x, int digits) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::fixed << std::setprecision(digits) << round_half_away(x, digits);
    std::string s = os.str();
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);  // no "-0.000"
    return s;
}

/// Real carries its own precision so tables can round to 3 while other
/// columns keep the run-wide setting. Big integers travel as decimal text.
struct Real {
    double value;
    int digits;
};
struct BigText {
    std::string digits;
};
using Field = std::variant<std::monostate, bool, std::int64_t, Real, BigText, std::string>;

struct Record {
    std::vector<std::pair<std::string, Field>> fields;

    Record& add(std::string key, Field value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

struct Table {
    std::string name;
    std::vector<Record> rows;
};

inline std::string field_text(const Field& f) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(const Real& r) const { return format_fixed(r.value, r.digits); }
        std::string operator()(const BigText& b) const { return b.digits; }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, f);
}

inline nlohmann::ordered_json field_json(const Field& f) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(bool b) const { return b; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(const Real& r) const { return round_half_away(r.value, r.digits); }
        // Big integers stay exact as JSON numbers only if they fit; otherwise text.
        nlohmann::ordered_json operator()(const BigText& b) const {
            const auto parsed = nlohmann::ordered_json::parse(b.digits, nullptr, false);
            if (parsed.is_number_integer() || parsed.is_number_unsigned()) return parsed;
            return b.digits;
        }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, f);
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void write_csv(std::ostream& os, const Table& t) {
    if (t.rows.empty()) return;
    const auto& head = t.rows.front().fields;
    for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << csv_escape(head[i].first);
    os << '\n';
    for (const Record& r : t.rows) {
        for (std::size_t i = 0; i < r.fields.size(); ++i) os << (i ? "," : "") << csv_escape(field_text(r.fields[i].second));
        os << '\n';
    }
}

inline nlohmann::ordered_json to_json(const Record& r) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.fields) j[key] = field_json(value);
    return j;
}

inline nlohmann::ordered_json to_json(const Table& t) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const Record& r : t.rows) j.push_back(to_json(r));
    return j;
}

inline void write_pretty(std::ostream& os, const Table& t) {
    if (!t.name.empty()) os << "# " << t.name << '\n';
    if (t.rows.empty()) return;
    const auto& head = t.rows.front().fields;
    std::vector<std::size_t> width(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].first.size();
    for (const Record& r : t.rows)
        for (std::size_t i = 0; i < r.fields.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], field_text(r.fields[i].second).size());
    auto line = [&](auto text_of) {
        for (std::size_t i = 0; i < head.size(); ++i) {
            os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << text_of(i);
        }
        os << '\n';
    };
    line([&](std::size_t i) { return head[i].first; });
    for (const Record& r : t.rows) line([&](std::size_t i) { return field_text(r.fields[i].second); });
}

/// Writes a sequence of tables. A single table in JSON is emitted as an
/// object (one row) or array; several tables become an object keyed by name.
/// CSV separates tables with a blank line.
inline void write_tables(std::ostream& os, const std::vector<Table>& tables, Format format) {
    switch (format) {
        case Format::csv:
            for (std::size_t i = 0; i < tables.size(); ++i) {
                if (i) os << '\n';
                write_csv(os, tables[i]);
            }
            break;
        case Format::json: {
            nlohmann::ordered_json j;
            if (tables.size() == 1) {
                const Table& t = tables.front();
                j = t.rows.size() == 1 ? to_json(t.rows.front()) : to_json(t);
            } else {
                j = nlohmann::ordered_json::object();
                for (const Table& t : tables) j[t.name] = t.rows.size() == 1 ? to_json(t.rows.front()) : to_json(t);
            }
            os << j.dump(2) << '\n';
            break;
        }
        case Format::pretty:
            for (std::size_t i = 0; i < tables.size(); ++i) {
                if (i) os << '\n';
                write_pretty(os, tables[i]);
            }
            break;
    }
}

}  // namespace holocode
