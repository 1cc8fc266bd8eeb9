#pragma once

#include "dunkl/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

/// gamma_k = sum of kappa over the positive roots, lambda_k = gamma_k + (d-2)/2.
struct DunklConstants {
    Rational gamma;
    Rational lambda;
};

/// A reduced root system with rational coordinates, the orbit partition of
/// its positive roots and a multiplicity function constant on orbits.
/// Immutable once built.
class RootSystem {
public:
    /// Validates reducedness and closure under the system's own reflections,
    /// computes orbits, then attaches one multiplicity per orbit. Orbits are
    /// numbered by the first root that belongs to them.
    /// Throws InputError on any failed check.
    RootSystem(std::size_t dim, std::vector<RationalVector> positive_roots,
               const RationalVector& orbit_multiplicities, std::string name = "custom");

    /// Same, but with one multiplicity per root; rejects a kappa that is not
    /// constant on orbits.
    static RootSystem with_root_multiplicities(std::size_t dim, std::vector<RationalVector> positive_roots,
                                               const RationalVector& root_multiplicities,
                                               std::string name = "custom");

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<RationalVector>& positive_roots() const { return roots_; }
    std::size_t root_count() const { return roots_.size(); }
    /// orbit_of()[i] is the orbit index of root i.
    const std::vector<std::size_t>& orbit_of() const { return orbit_of_; }
    std::size_t orbit_count() const { return orbit_mult_.size(); }
    const RationalVector& orbit_multiplicities() const { return orbit_mult_; }
    const Rational& multiplicity(std::size_t root) const { return orbit_mult_[orbit_of_[root]]; }

    DunklConstants constants() const { return constants_; }

    /// True for Z2^d: the roots are positive multiples of e_1..e_d.
    bool is_coordinate_system() const;
    /// Multiplicity attached to coordinate axis j; requires is_coordinate_system().
    Rational coordinate_multiplicity(std::size_t j) const;

    /// Copy with different orbit multiplicities.
    RootSystem with_multiplicities(const RationalVector& orbit_multiplicities) const;

private:
    RootSystem() = default;
    void set_multiplicities(const RationalVector& orbit_multiplicities);

    std::size_t dim_ = 0;
    std::string name_;
    std::vector<RationalVector> roots_;
    std::vector<std::size_t> orbit_of_;
    RationalVector orbit_mult_;
    DunklConstants constants_;
};

/// x - 2 <alpha,x>/<alpha,alpha> alpha. Throws InputError for alpha = 0.
RationalVector reflect(const RationalVector& alpha, const RationalVector& x);

/// Positive roots of a catalog family:
///   "z2"  e_i                      (d >= 1, d orbits)
///   "a"   e_i - e_j, i < j          (A_{d-1} in R^d)
///   "b"   e_i, then e_i -+ e_j      (d >= 2, short orbit first)
///   "d"   e_i -+ e_j                (d >= 2)
std::vector<RationalVector> catalog_roots(std::string_view family, std::size_t dim);

/// Parses "z2:d=3", "b:d=2", "a:d=3", "d:d=4" or "custom:<file>". kappa is
/// per orbit; a single value is broadcast to every orbit. For custom files
/// the multiplicities in the file are used when kappa is empty.
/// Custom file: {"dim": d, "roots": [["1","-1/2"], ...], "multiplicities": [...]},
/// multiplicities either per orbit or per root.
RootSystem build_root_system(std::string_view spec, const RationalVector& kappa);

RootSystem load_custom_root_system(const std::string& path, const RationalVector& kappa);

/// Checks that constants() match a fresh computation. Throws InvariantViolation.
DunklConstants constants(const RootSystem& rs);

/// prod |<alpha,x>|^{kappa_alpha} in floating point.
double weight_eval(const RootSystem& rs, std::span<const double> x);

} // namespace dunkl
