#pragma once

#include <string>
#include <vector>

namespace qgs {

// Eigenvalues ascending, grouped into clusters: values[i] is the i-th distinct
// eigenvalue (cluster representative) and multiplicities[i] its multiplicity.
// Two consecutive computed eigenvalues belong to one cluster when their gap is
// below 1e-8 * max(1, |lambda|).
struct Spectrum {
    std::vector<double> values;
    std::vector<int> multiplicities;
    std::string solver;    // "dense" | "secular" | "fem"
    double residual = 0.0;  // solver-specific backward error estimate

    int total_count() const {
        int n = 0;
        for (int m : multiplicities) n += m;
        return n;
    }

    // Eigenvalues repeated according to multiplicity; element k-1 is the k-th
    // eigenvalue (k starting at 1).
    std::vector<double> expanded() const;
    double value_at(int k) const;  // k is 1-based

    // Groups a sorted list into clusters with the standard gap rule.
    static Spectrum from_sorted(const std::vector<double>& sorted, std::string solver, double residual);
};

std::string spectrum_to_json(const Spectrum& s);
// CSV rows "k,lambda" (dense) or "k,lambda,multiplicity,solver" (metric).
std::string spectrum_to_csv(const Spectrum& s, bool with_solver_columns);

}  // namespace qgs
