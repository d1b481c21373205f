#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fibereit::jones {

/// Elliptical-birefringence description of a fiber. `phi_linear` is the total
/// accumulated linear retardation (unbounded), `chi_circular` the circular
/// admixture angle, `beta_axis` the orientation of the optical main axis
/// relative to horizontal.
struct JonesParameters {
    double phi_linear = 0.0;    // rad, accumulates over length
    double chi_circular = 0.0;  // rad, in [-pi/2, pi/2]
    double beta_axis = 0.0;     // rad, normalized to (-pi/2, pi/2]
    double fiber_length = 0.0;  // m

    /// Wrapped representation: phi = winding * 2*pi + remainder, remainder in [0, 2*pi).
    int winding() const;
    double phi_mod_2pi() const;
    static JonesParameters from_wrapped(double phi_mod, int winding, double chi, double beta,
                                        double length);

    void validate() const;  // throws std::invalid_argument on invariant violation
};

struct PolarizationField {
    std::complex<double> ex;
    std::complex<double> ey;
    double norm2() const { return std::norm(ex) + std::norm(ey); }
};

/// Real quadrature coefficients of the output field,
/// E_x(t) = a cos(-wt) + b sin(-wt), E_y(t) = c cos(-wt) + d sin(-wt).
/// For unit input amplitude a^2+b^2+c^2+d^2 = 1.
struct EllipseCoefficients {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    double delta() const { return a * d - b * c; }
};

struct EllipseNormalForm {
    double r1 = 0.0;          // smaller quadratic-form eigenvalue (major axis)
    double r2 = 0.0;          // larger eigenvalue (minor axis)
    double orientation = 0.0; // major-axis angle, (-pi/2, pi/2]
};

struct DegenerateEllipse : std::runtime_error {
    DegenerateEllipse() : std::runtime_error("degenerate ellipse: output is linearly polarized") {}
};

struct PolarizerScan {
    double theta_in = 0.0;  // rad
    std::vector<std::pair<double, double>> samples;  // (analyzer angle rad, P/P0)
    double wavelength = 0.0;  // m, 0 if unspecified

    void validate() const;  // >= 8 angles spanning >= pi, powers in [0,1]
};

struct DopMeasurement {
    double theta_in = 0.0;
    double dop = 0.0;
    double theta_out = 0.0;  // NaN when the scan carries no orientation info
    double dop_err = 0.0;
    double theta_in_err = 0.0;
    double theta_out_err = 0.0;
    bool clipped = false;  // fitted a/b exceeded 1 and was clipped
};

struct AmbiguityError : std::runtime_error {
    explicit AmbiguityError(const std::string& what) : std::runtime_error(what) {}
};

Eigen::Matrix2cd jones_matrix(const JonesParameters& p);

/// Output field in the lab frame for unit linear input at angle theta:
/// R(beta) J R(-beta) applied to (cos theta, sin theta).
PolarizationField propagate(const JonesParameters& p, double theta_in);

/// Major-axis orientation of the output ellipse, normalized to (-pi/2, pi/2].
double output_orientation(const JonesParameters& p, double theta_in);

/// Closed-form degree of linear polarization of the output.
double degree_of_polarization(const JonesParameters& p, double theta_in);

/// Independent oracle: samples the real field over one optical period,
/// projects onto analyzer angles, returns (Imax - Imin)/(Imax + Imin).
/// n_samples is used for both the time grid and the analyzer grid.
double dop_bruteforce(const JonesParameters& p, double theta_in, int n_samples);

/// Quadrature coefficients straight from the closed-form expressions
/// (rotated frame, unit input amplitude).
EllipseCoefficients ellipse_coefficients(const JonesParameters& p, double theta_in);

/// Principal-axis form of the output ellipse. Throws DegenerateEllipse when
/// delta ~ 0 (perfectly linear output, DOP = 1).
EllipseNormalForm ellipse_normal_form(const EllipseCoefficients& e);

double dop_from_normal_form(const EllipseNormalForm& nf);

/// Least-squares reduction of an analyzer scan, P/P0 = b + a cos(2(angle - theta_out)).
/// DOP = a/b, theta_out from the fitted minima + 90 degrees.
DopMeasurement analyze_polarizer_scan(const PolarizerScan& scan);

struct BirefringenceFit {
    JonesParameters params;
    Eigen::MatrixXd covariance;  // order: phi, chi, beta [, dop_scale]
    double chi2 = 0.0;
    int n_residuals = 0;
    double dop_scale = 1.0;  // input-depolarization ceiling, 1 unless fitted
    bool scale_fitted = false;
};

struct BirefringenceFitOptions {
    bool fit_dop_scale = false;  // also fit an overall DOP amplitude
    double fiber_length = 0.0;
};

/// Joint weighted fit of DOP(theta) and theta_out(theta). phi is constrained
/// to phi_seed +- pi; multi-start over beta in {0, +-pi/4}. Throws
/// AmbiguityError when no orientation data is present (DOP-only data cannot
/// identify phi uniquely).
BirefringenceFit fit_birefringence(const std::vector<DopMeasurement>& data, double phi_seed,
                                   const BirefringenceFitOptions& opt = {});

/// Two-length extrapolation of the winding-resolved linear phase.
double resolve_phase_ambiguity(double short_fiber_phi, double short_length, double long_length);

/// L_b = 2*pi*l / phi. Returns +infinity for phi == 0.
double beat_length(const JonesParameters& p);

struct LengthMapRow {
    double length = 0.0;
    double dop = 0.0;
    double delta_theta = 0.0;  // |theta_out - theta_in|, axis-wrapped
};

struct ThetaPolicy {
    bool at_beta = true;
    double fixed_theta = 0.0;  // used when at_beta is false
};

/// DOP and orientation change versus fiber length. Both accumulated phases
/// (phi and chi) scale linearly with length; beta is a geometric orientation
/// and stays fixed.
std::vector<LengthMapRow> dop_length_map(const JonesParameters& params_per_meter,
                                         const std::vector<double>& lengths,
                                         const ThetaPolicy& policy = {});

/// Maximum DOP over input orientation, with an optional input-depolarization
/// ceiling multiplying the fiber response. Returns {max dop, theta at max}.
std::pair<double, double> max_dop_over_theta(const JonesParameters& p, double input_dop = 1.0);

}  // namespace fibereit::jones
