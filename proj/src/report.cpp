#include "bhlab/report.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

#include "bhlab/errors.hpp"

namespace bhlab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

InequalityReport make_report(std::string lemma_id, std::string instance,
                             std::string instance_hash, double lhs, double rhs,
                             double constant_used, double rel_tol, bool conclusive) {
    InequalityReport r;
    r.lemma_id = std::move(lemma_id);
    r.instance = std::move(instance);
    r.instance_hash = std::move(instance_hash);
    r.lhs = lhs;
    r.rhs = rhs;
    r.constant_used = constant_used;
    r.margin = rhs - lhs;
    r.rel_tol = rel_tol;
    r.conclusive = conclusive;
    if (lhs <= rhs * (1.0 + rel_tol) + 0.0)
        r.verdict = Verdict::holds;
    else
        r.verdict = conclusive ? Verdict::violated : Verdict::inconclusive;
    return r;
}

namespace {

std::uint64_t fnv1a(const unsigned char* data, std::size_t len, std::uint64_t h) {
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string hex16(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

}  // namespace

std::string fingerprint(const std::vector<std::complex<double>>& values) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const auto& v : values) {
        double parts[2] = {v.real(), v.imag()};
        unsigned char bytes[sizeof parts];
        std::memcpy(bytes, parts, sizeof parts);
        h = fnv1a(bytes, sizeof parts, h);
    }
    return hex16(h);
}

std::string fingerprint(const std::vector<double>& values) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (double v : values) {
        unsigned char bytes[sizeof v];
        std::memcpy(bytes, &v, sizeof v);
        h = fnv1a(bytes, sizeof v, h);
    }
    return hex16(h);
}

double BHConstantTable::ap(double p) const {
    auto it = khinchine_Ap.find(p);
    if (it != khinchine_Ap.end()) return it->second;
    return std::numbers::sqrt2;
}

double BHConstantTable::sp(double p) const {
    auto it = steinhaus_Sp.find(p);
    if (it != steinhaus_Sp.end()) return it->second;
    return std::numbers::sqrt2;
}

std::optional<double> BHConstantTable::bh(int k) const {
    auto it = bh_mult.find(k);
    if (it == bh_mult.end()) return std::nullopt;
    return it->second;
}

void BHConstantTable::validate() const {
    auto check = [](double v, const char* name) {
        if (!(v >= 1.0)) throw bad_params(std::string("constant table entry < 1: ") + name);
    };
    for (const auto& [p, v] : khinchine_Ap) check(v, "khinchine_Ap");
    for (const auto& [p, v] : steinhaus_Sp) check(v, "steinhaus_Sp");
    for (const auto& [k, v] : bh_mult) check(v, "bh_mult");
    check(ksz_constant, "ksz_constant");
    check(kappa, "kappa");
    check(C_eps, "C_eps");
    check(C_q, "C_q");
    check(L, "L");
    check(C2, "C2");
    check(C_general, "C_general");
}

double euler_gamma() {
    return std::numbers::egamma;
}

}  // namespace bhlab
