#include "bhlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bhlab/errors.hpp"

namespace bhlab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

MultiIndex read_index(const ordered_json& entry) {
    if (!entry.contains("index") || !entry["index"].is_array())
        throw parse_error("entry without an index array");
    MultiIndex idx;
    for (const auto& v : entry["index"]) {
        if (!v.is_number_integer()) throw parse_error("index entries must be integers");
        idx.push_back(v.get<int>());
    }
    return idx;
}

std::complex<double> read_value(const ordered_json& entry) {
    const double re = entry.value("re", 0.0);
    const double im = entry.value("im", 0.0);
    return {re, im};
}

ordered_json entries_to_json(const IndexSetSpec& spec,
                             const std::vector<std::complex<double>>& values) {
    ordered_json entries = ordered_json::array();
    MultiIndex idx = first_index(spec);
    std::uint64_t off = 0;
    do {
        const std::complex<double> v = values[off++];
        if (v == 0.0) continue;
        ordered_json entry;
        entry["index"] = idx;
        entry["re"] = v.real();
        entry["im"] = v.imag();
        entries.push_back(std::move(entry));
    } while (bhlab::advance(spec, idx));
    return entries;
}

}  // namespace

CoefficientFile parse_coefficients(const std::string& json_text) {
    const ordered_json doc = parse_json(json_text);
    if (!doc.is_object()) throw parse_error("top level must be an object");
    if (!doc.contains("m") || !doc.contains("n")) throw parse_error("missing m or n");
    const int m = doc["m"].get<int>();
    const int n = doc["n"].get<int>();
    const std::string kind = doc.value("kind", std::string("full"));

    CoefficientFile out;
    if (kind == "full") {
        out.kind = IndexSetKind::full;
        out.tensor = CoefficientTensor::zeros(m, n);
    } else if (kind == "nondecreasing") {
        out.kind = IndexSetKind::nondecreasing;
        out.poly = PolynomialCoefficients::zeros(m, n);
    } else {
        throw parse_error("kind must be full or nondecreasing");
    }

    const IndexSetSpec& spec = out.kind == IndexSetKind::full ? out.tensor.spec : out.poly.spec;
    if (doc.contains("entries")) {
        if (!doc["entries"].is_array()) throw parse_error("entries must be an array");
        for (const auto& entry : doc["entries"]) {
            MultiIndex idx = read_index(entry);
            if (!spec.contains(idx)) throw parse_error("entry index outside the index set");
            if (out.kind == IndexSetKind::full)
                out.tensor.at(idx) = read_value(entry);
            else
                out.poly.at(idx) = read_value(entry);
        }
    }
    return out;
}

CoefficientFile read_coefficients(const std::string& path) {
    return parse_coefficients(read_text_file(path));
}

std::string tensor_to_json(const CoefficientTensor& a) {
    ordered_json doc;
    doc["m"] = a.m();
    doc["n"] = a.n();
    doc["kind"] = "full";
    doc["entries"] = entries_to_json(a.spec, a.values);
    return doc.dump();
}

std::string poly_to_json(const PolynomialCoefficients& c) {
    ordered_json doc;
    doc["m"] = c.m();
    doc["n"] = c.n();
    doc["kind"] = "nondecreasing";
    doc["entries"] = entries_to_json(c.spec, c.values);
    return doc.dump();
}

DirichletCoefficients parse_dirichlet(const std::string& json_text) {
    const ordered_json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("m")) throw parse_error("missing m");
    DirichletCoefficients d;
    d.m = doc["m"].get<int>();
    if (doc.contains("entries")) {
        if (!doc["entries"].is_array()) throw parse_error("entries must be an array");
        for (const auto& entry : doc["entries"]) {
            if (!entry.contains("n")) throw parse_error("entry without n");
            const auto n = entry["n"].get<std::uint64_t>();
            d.entries[n] = read_value(entry);
        }
    }
    return d;
}

DirichletCoefficients read_dirichlet(const std::string& path) {
    return parse_dirichlet(read_text_file(path));
}

std::string dirichlet_to_json(const DirichletCoefficients& d) {
    ordered_json doc;
    doc["m"] = d.m;
    ordered_json entries = ordered_json::array();
    for (const auto& [n, v] : d.entries) {
        if (v == 0.0) continue;
        ordered_json entry;
        entry["n"] = n;
        entry["re"] = v.real();
        entry["im"] = v.imag();
        entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
    return doc.dump();
}

std::string report_to_json_line(const InequalityReport& report) {
    ordered_json doc;
    doc["lemma_id"] = report.lemma_id;
    doc["instance"] = report.instance;
    doc["instance_hash"] = report.instance_hash;
    doc["lhs"] = report.lhs;
    doc["rhs"] = report.rhs;
    doc["constant"] = report.constant_used;
    doc["margin"] = report.margin;
    doc["verdict"] = to_string(report.verdict);
    doc["rel_tol"] = report.rel_tol;
    doc["conclusive"] = report.conclusive;
    return doc.dump();
}

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_optimality_csv(std::ostream& out, const std::vector<OptimalityRow>& rows) {
    out << "N,phi,sup_bound,ascent_estimate,ratio\n";
    for (const auto& row : rows)
        out << row.N << ',' << csv_number(row.phi) << ',' << csv_number(row.sup_bound) << ','
            << csv_number(row.ascent_estimate) << ',' << csv_number(row.ratio) << '\n';
}

void write_growth_csv(std::ostream& out, const NonEmbeddingTables& tables) {
    out << "table,n,value\n";
    for (const auto& row : tables.atom_table)
        out << "atom," << row.n << ',' << csv_number(row.value) << '\n';
    for (const auto& row : tables.atom_table_alt)
        out << "atom_alt," << row.n << ',' << csv_number(row.value) << '\n';
    for (const auto& row : tables.ratio_table)
        out << "ratio," << row.n << ',' << csv_number(row.value) << '\n';
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path);
    out << text;
}

}  // namespace bhlab
