#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace fstruct {

/// Invariant Riemannian metric determined by its three characteristic numbers,
/// one positive weight per module of the reductive complement.
struct Metric {
    double a1, a2, a3;

    Metric(double a1_, double a2_, double a3_) : a1(a1_), a2(a2_), a3(a3_) {
        if (!(a1 > 0.0) || !(a2 > 0.0) || !(a3 > 0.0))
            throw std::invalid_argument("Metric: characteristic numbers must be strictly positive");
    }

    double operator[](int i) const {
        switch (i) {
            case 0: return a1;
            case 1: return a2;
            case 2: return a3;
        }
        throw std::out_of_range("Metric: index");
    }

    std::array<double, 3> values() const { return {a1, a2, a3}; }

    std::string str() const {
        return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + ")";
    }
};

}  // namespace fstruct
