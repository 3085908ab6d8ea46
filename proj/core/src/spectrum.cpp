#include "qgs/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "qgs/error.hpp"
#include "qgs/format.hpp"

namespace qgs {

std::vector<double> Spectrum::expanded() const {
    std::vector<double> out;
    for (size_t i = 0; i < values.size(); ++i)
        for (int j = 0; j < multiplicities[i]; ++j) out.push_back(values[i]);
    return out;
}

double Spectrum::value_at(int k) const {
    require(k >= 1, "spectrum: eigenvalue index is 1-based");
    int seen = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        seen += multiplicities[i];
        if (k <= seen) return values[i];
    }
    fail("spectrum: eigenvalue index " + std::to_string(k) + " beyond computed range");
}

Spectrum Spectrum::from_sorted(const std::vector<double>& sorted, std::string solver, double residual) {
    Spectrum s;
    s.solver = std::move(solver);
    s.residual = residual;
    for (double x : sorted) {
        if (!s.values.empty() && x - s.values.back() < 1e-8 * std::max(1.0, std::abs(x))) {
            s.multiplicities.back() += 1;
        } else {
            s.values.push_back(x);
            s.multiplicities.push_back(1);
        }
    }
    return s;
}

std::string spectrum_to_json(const Spectrum& s) {
    std::ostringstream os;
    os << "{\"values\":[";
    for (size_t i = 0; i < s.values.size(); ++i) os << (i ? "," : "") << fmt_double(s.values[i]);
    os << "],\"multiplicities\":[";
    for (size_t i = 0; i < s.multiplicities.size(); ++i) os << (i ? "," : "") << s.multiplicities[i];
    os << "],\"solver\":\"" << s.solver << "\",\"residual\":" << fmt_double(s.residual) << "}";
    return os.str();
}

std::string spectrum_to_csv(const Spectrum& s, bool with_solver_columns) {
    std::ostringstream os;
    os << (with_solver_columns ? "k,lambda,multiplicity,solver\n" : "k,lambda\n");
    int k = 1;
    for (size_t i = 0; i < s.values.size(); ++i) {
        for (int j = 0; j < s.multiplicities[i]; ++j, ++k) {
            os << k << "," << fmt_double(s.values[i]);
            if (with_solver_columns) os << "," << s.multiplicities[i] << "," << s.solver;
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace qgs
