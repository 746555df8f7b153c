#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bhlab {

enum class Verdict { holds, violated, inconclusive };

std::string to_string(Verdict v);

struct InequalityReport {
    std::string lemma_id;
    std::string instance;       // short human-readable descriptor
    std::string instance_hash;  // FNV-1a over the instance data, hex
    double lhs = 0.0;
    double rhs = 0.0;
    double constant_used = 1.0;
    double margin = 0.0;  // rhs - lhs
    Verdict verdict = Verdict::holds;
    double rel_tol = 1e-9;
    // False when the right-hand side carries an unknown universal constant
    // or an uncertified sup-norm estimate; such checks can never report a
    // violation, only holds / inconclusive.
    bool conclusive = true;
};

// verdict = holds iff lhs <= rhs * (1 + rel_tol). When `conclusive` is
// false (heuristic sup-norm bound in the unfavorable direction) a failed
// comparison yields inconclusive instead of violated.
InequalityReport make_report(std::string lemma_id, std::string instance,
                             std::string instance_hash, double lhs, double rhs,
                             double constant_used, double rel_tol = 1e-9,
                             bool conclusive = true);

// FNV-1a over the bit patterns of the values, as a hex string.
std::string fingerprint(const std::vector<std::complex<double>>& values);
std::string fingerprint(const std::vector<double>& values);

// Named constants used by the verifiers. Unknown universal constants
// default to 1; fit-mode callers report the smallest value that would
// make their trials pass instead of asserting one.
struct BHConstantTable {
    std::map<double, double> khinchine_Ap;   // overrides; default sqrt(2)
    std::map<double, double> steinhaus_Sp;   // overrides; default sqrt(2)
    std::map<int, double> bh_mult = {{1, 1.0}};
    double ksz_constant = 1.0;
    double kappa = 1.0;      // unknown universal constant (subpolynomial bound)
    double C_eps = 1.0;      // unknown C(eps)
    double C_q = 1.0;        // unknown constant of the block contraction bounds
    double L = 1.0;          // unknown constant of the diagonal comparison
    double C2 = 1.0;         // unknown constant paired with L in the chain
    double C_general = 1.0;  // unknown constant of the interpolation envelope

    double ap(double p) const;
    double sp(double p) const;
    std::optional<double> bh(int k) const;

    // All entries must be >= 1.
    void validate() const;
};

double euler_gamma();

}  // namespace bhlab
