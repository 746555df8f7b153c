#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace bhlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Weight scheme for the ell_{p,q} sum over the nonincreasing rearrangement.
// telescoping uses x*_k^q * (k^{q/p} - (k-1)^{q/p}); its partial weights
// telescope, so the N-atom indicator has norm exactly N^{1/p}.
// power uses the classical discrete weight k^{q/p-1}.
enum class LorentzScheme { telescoping, power };

struct LorentzParams {
    double p = 2.0;
    double q = 2.0;  // kInf for the weak norm sup_k k^{1/p} x*_k
    LorentzScheme scheme = LorentzScheme::telescoping;
};

// Magnitudes sorted in nonincreasing order. Empty input allowed (norm 0).
std::vector<double> rearrange(const std::vector<std::complex<double>>& x);
std::vector<double> rearrange(const std::vector<double>& x);

// ell_{p,q} norm of a finite sequence; requires p >= 1, q >= 1.
double lorentz_norm(const std::vector<std::complex<double>>& x, const LorentzParams& params);
double lorentz_norm(const std::vector<double>& x, const LorentzParams& params);

// Same, but on an already nonincreasing magnitude sequence.
double lorentz_norm_sorted(const std::vector<double>& star, const LorentzParams& params);

// sup_k (x*_1 + ... + x*_k) / k^{1/p'}; requires p > 1.
double marcinkiewicz_norm(const std::vector<std::complex<double>>& x, double p);
double marcinkiewicz_norm(const std::vector<double>& x, double p);

// Norm of the N-atom indicator; N^{1/p} exactly under telescoping.
double fundamental_function(const LorentzParams& params, std::uint64_t atoms);

// A positive weight sequence, either tabulated (1-based) or generated.
class Weight {
public:
    static Weight from_values(std::vector<double> values);
    static Weight from_generator(std::function<double(std::uint64_t)> gen,
                                 std::uint64_t first_valid = 1);

    // Value at 1-based position n; throws weight_domain_error if the
    // position is outside the table / below first_valid, or the value
    // is not strictly positive and finite.
    double at(std::uint64_t n) const;

private:
    std::vector<double> values_;
    std::function<double(std::uint64_t)> gen_;
    std::uint64_t first_valid_ = 1;
};

// sum_n |x_n| * w(n) over the support of x (positions are 1-based).
double weighted_l1_norm(const std::vector<std::complex<double>>& x, const Weight& w);

}  // namespace bhlab
