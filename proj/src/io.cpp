// io.cpp

#include "zetastrips/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zetastrips/errors.hpp"

namespace zetastrips::io {
namespace {

std::vector<std::vector<std::string>> parse_csv_rows(const std::string& text, std::size_t columns) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != columns) {
            throw IoError("expected " + std::to_string(columns) + " columns in CSV row: " + line);
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

double to_double(const std::string& s) {
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw IoError("not a number: '" + s + "'");
    }
}

const char* terminus_name(TerminusType t) { return to_string(t); }

TerminusType terminus_from(const std::string& s) {
    if (s == "LeftBoundary") return TerminusType::LeftBoundary;
    if (s == "RightBoundary") return TerminusType::RightBoundary;
    if (s == "Zero") return TerminusType::Zero;
    if (s == "Aborted") return TerminusType::Aborted;
    throw IoError("unknown terminus '" + s + "'");
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_text_atomic(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << text;
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string zeros_csv(std::span<const CriticalZero> zeros) {
    std::string out = "ordinal,t\n";
    for (const auto& z : zeros) out += std::to_string(z.ordinal) + "," + format_number(z.t) + "\n";
    return out;
}

std::vector<CriticalZero> parse_zeros_csv(const std::string& text) {
    std::vector<CriticalZero> zeros;
    for (const auto& row : parse_csv_rows(text, 2)) {
        zeros.push_back({to_double(row[1]), std::stol(row[0])});
    }
    return zeros;
}

std::string trace_csv(const ContourTrace& trace) {
    std::string out = "sigma,t\n";
    for (const auto& p : trace.points) out += format_number(p.sigma) + "," + format_number(p.t) + "\n";
    return out;
}

std::vector<ComplexPoint> parse_trace_csv(const std::string& text) {
    std::vector<ComplexPoint> pts;
    for (const auto& row : parse_csv_rows(text, 2)) pts.push_back({to_double(row[0]), to_double(row[1])});
    return pts;
}

std::string trace_file_name(int k) { return "trace_" + std::to_string(k) + ".csv"; }

json trace_manifest_entry(const ContourTrace& trace) {
    json terminus = {{"type", terminus_name(trace.terminus.type)}, {"value", trace.terminus.value}};
    if (trace.terminus.type == TerminusType::Aborted) terminus["reason"] = trace.terminus.reason;
    json e = {{"k", trace.k},
              {"m", trace.k / 2},
              {"kind", to_string(trace.kind)},
              {"start", {{"sigma", trace.start.sigma}, {"t", trace.start.t}}},
              {"terminus", terminus},
              {"n_points", trace.points.size()},
              {"file", "contours/" + trace_file_name(trace.k)}};
    if (trace.terminus.type == TerminusType::Zero) e["zero_ordinal"] = trace.zero_ordinal;
    return e;
}

ContourTrace trace_from_manifest_entry(const json& e) {
    ContourTrace tr;
    tr.k = e.at("k").get<int>();
    tr.kind = e.at("kind").get<std::string>() == "boundary" ? TraceKind::Boundary : TraceKind::PrimaryCandidate;
    tr.start = {e.at("start").at("sigma").get<double>(), e.at("start").at("t").get<double>()};
    const auto& term = e.at("terminus");
    tr.terminus.type = terminus_from(term.at("type").get<std::string>());
    tr.terminus.value = term.at("value").get<double>();
    if (term.contains("reason")) tr.terminus.reason = term.at("reason").get<std::string>();
    if (e.contains("zero_ordinal")) tr.zero_ordinal = e.at("zero_ordinal").get<long>();
    return tr;
}

json traces_to_json(std::span<const ContourTrace> traces) {
    json arr = json::array();
    for (const auto& tr : traces) {
        json e = trace_manifest_entry(tr);
        json pts = json::array();
        for (const auto& p : tr.points) pts.push_back({p.sigma, p.t});
        e["points"] = std::move(pts);
        arr.push_back(std::move(e));
    }
    return arr;
}

std::vector<ContourTrace> traces_from_json(const json& j) {
    std::vector<ContourTrace> out;
    for (const auto& e : j) {
        ContourTrace tr = trace_from_manifest_entry(e);
        for (const auto& p : e.at("points")) tr.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        out.push_back(std::move(tr));
    }
    return out;
}

json zeros_to_json(std::span<const CriticalZero> zeros) {
    json arr = json::array();
    for (const auto& z : zeros) arr.push_back({z.ordinal, z.t});
    return arr;
}

std::vector<CriticalZero> zeros_from_json(const json& j) {
    std::vector<CriticalZero> out;
    for (const auto& e : j) out.push_back({e.at(1).get<double>(), e.at(0).get<long>()});
    return out;
}

void write_traces(const fs::path& dir, std::span<const ContourTrace> traces, const json& header) {
    json manifest = header;
    json entries = json::array();
    for (const auto& tr : traces) {
        write_text_atomic(dir / "contours" / trace_file_name(tr.k), trace_csv(tr));
        entries.push_back(trace_manifest_entry(tr));
    }
    manifest["traces"] = std::move(entries);
    write_text_atomic(dir / "traces.json", manifest.dump(2) + "\n");
}

std::vector<ContourTrace> read_traces(const fs::path& dir) {
    const json manifest = json::parse(read_text(dir / "traces.json"));
    std::vector<ContourTrace> out;
    for (const auto& e : manifest.at("traces")) {
        ContourTrace tr = trace_from_manifest_entry(e);
        tr.points = parse_trace_csv(read_text(dir / e.at("file").get<std::string>()));
        out.push_back(std::move(tr));
    }
    return out;
}

std::string strips_csv(std::span<const Strip> strips) {
    std::string out =
        "m,bottom_t,top_t,width,bottom_rounded,top_rounded,width_rounded,n_zeros,primary_index,primary_score\n";
    for (const auto& s : strips) {
        const RoundedStrip r = rounded_strip(s);
        out += std::to_string(s.m) + "," + format_number(s.bottom_t) + "," + format_number(s.top_t) + "," +
               format_number(strip_width(s)) + "," + std::to_string(r.bottom) + "," + std::to_string(r.top) + "," +
               std::to_string(r.width) + "," + std::to_string(s.zeros.size()) + "," +
               std::to_string(s.primary_index) + "," + format_number(primary_score(s).value) + "\n";
    }
    return out;
}

std::vector<StripRow> parse_strips_csv(const std::string& text) {
    std::vector<StripRow> rows;
    for (const auto& cells : parse_csv_rows(text, 10)) {
        StripRow r;
        r.m = std::stoi(cells[0]);
        r.bottom_t = to_double(cells[1]);
        r.top_t = to_double(cells[2]);
        r.n_zeros = std::stol(cells[7]);
        r.primary_index = std::stoi(cells[8]);
        rows.push_back(r);
    }
    return rows;
}

std::string series_csv(std::span<const SeriesRow> rows, std::string_view value_column) {
    std::string out = "m,";
    out += value_column;
    out += "\n";
    for (const auto& r : rows) out += std::to_string(r.m) + "," + format_number(r.value) + "\n";
    return out;
}

json to_json(const FitResult& fit) {
    return {{"slope", fit.slope},
            {"intercept", fit.intercept},
            {"slope_stderr", fit.slope_stderr},
            {"intercept_stderr", fit.intercept_stderr},
            {"n", fit.n}};
}

json to_json(const SampleStats& st) { return {{"n", st.n}, {"mean", st.mean}, {"variance", st.variance}}; }

}  // namespace zetastrips::io
