#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bhlab/dirichlet.hpp"
#include "bhlab/forms.hpp"
#include "bhlab/lowerbounds.hpp"
#include "bhlab/mixed.hpp"
#include "bhlab/report.hpp"

namespace bhlab {

// Coefficient files: {"m":…, "n":…, "kind":"full|nondecreasing",
// "entries":[{"index":[…], "re":…, "im":…}]}; omitted entries are zero.
struct CoefficientFile {
    IndexSetKind kind = IndexSetKind::full;
    CoefficientTensor tensor;      // populated when kind == full
    PolynomialCoefficients poly;   // populated when kind == nondecreasing
};

CoefficientFile parse_coefficients(const std::string& json_text);
CoefficientFile read_coefficients(const std::string& path);

std::string tensor_to_json(const CoefficientTensor& a);
std::string poly_to_json(const PolynomialCoefficients& c);

// Dirichlet files: {"m":…, "entries":[{"n":…, "re":…, "im":…}]}.
DirichletCoefficients parse_dirichlet(const std::string& json_text);
DirichletCoefficients read_dirichlet(const std::string& path);
std::string dirichlet_to_json(const DirichletCoefficients& d);

// One JSON object per line: lemma_id, instance, instance_hash, lhs, rhs,
// constant, margin, verdict, rel_tol. Field order is fixed so identical
// runs serialize to identical bytes.
std::string report_to_json_line(const InequalityReport& report);

// CSV with %.17g cells (lossless roundtrip for doubles).
std::string csv_number(double v);
void write_optimality_csv(std::ostream& out, const std::vector<OptimalityRow>& rows);
void write_growth_csv(std::ostream& out, const NonEmbeddingTables& tables);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bhlab
