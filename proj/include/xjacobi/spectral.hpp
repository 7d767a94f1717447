#pragma once

#include "xjacobi/family.hpp"
#include "xjacobi/integrate.hpp"

#include <array>
#include <vector>

namespace xjacobi {

/// Frobenius data at a regular singular endpoint: the indicial equation is
/// r(r+alpha) = 0 at +1 and r(r+beta) = 0 at -1, so the two local solutions
/// behave like 1 and (1 -+ x)^{-exponent}.
struct IndicialData {
    Endpoint endpoint;
    std::array<double, 2> roots;  // {0, -exponent}
    double weight_exponent;       // alpha at +1, beta at -1
};

IndicialData indicial_roots(double alpha, double beta, Endpoint e);
IndicialData indicial_roots(const ExceptionalFamily& fam, Endpoint e);

/// Square-integrability of (1 -+ x)^r against (1 -+ x)^{weight_exponent}:
/// 2r + weight_exponent > -1.
bool sq_integrable_exponent(double r, double weight_exponent);

enum class EndpointClass { limit_point, limit_circle };

const char* to_string(EndpointClass c);

/// Limit-circle iff both local solutions are square-integrable near the
/// endpoint; the second solution (1 -+ x)^{-e} is integrable iff e < 1, so
/// the boundary values alpha = 1, beta = 1 land in the limit-point case.
EndpointClass classify_endpoint(double exponent);
EndpointClass classify_endpoint(const ExceptionalFamily& fam, Endpoint e);

struct DeficiencyIndex {
    int n_plus = 0;
    int n_minus = 0;
};

/// (k,k) with k the number of limit-circle endpoints.
DeficiencyIndex deficiency_index(double alpha, double beta);
DeficiencyIndex deficiency_index(const ExceptionalFamily& fam);

enum class BoundaryCaseId {
    both_limit_point,     // alpha >= 1 and beta >= 1: the maximal domain itself
    circle_at_minus_one,  // condition lim (1+x)^{beta+1} f'(x) = 0 at -1
    circle_at_plus_one,   // condition lim (1-x)^{alpha+1} f'(x) = 0 at +1
    circle_at_both,       // conditions at both endpoints
};

const char* to_string(BoundaryCaseId id);

struct BoundaryCase {
    BoundaryCaseId id;
    std::vector<Endpoint> required_functionals;  // one per limit-circle endpoint
};

BoundaryCase boundary_case(double alpha, double beta);
BoundaryCase boundary_case(const ExceptionalFamily& fam);

/// Exact certificate that the eigenvalue equation has no nonzero polynomial
/// solution of degree <= d (for d < m): computes the F-space kernel on P_d
/// and then the largest T-stable subspace of it — an eigenpair exists inside
/// P_d iff that subspace is nonzero. All arithmetic is rational.
bool gap_certificate(const ExceptionalFamily& fam, int max_degree);

enum class TailTrend { convergent, divergent, inconclusive };

const char* to_string(TailTrend t);

/// Dyadic shell integrals of (1 -+ x)^{2r} W over [endpoint - 1e-1,
/// endpoint - 1e-6]; the shell ratio tends to 2^{-(1 + 2r + w)} so the trend
/// separates integrable from non-integrable tails.
struct TailProbe {
    std::vector<double> shell_integrals;
    TailTrend trend = TailTrend::inconclusive;
};

TailProbe tail_integral_probe(const ExceptionalFamily& fam, Endpoint e, double solution_exponent);

/// Probes the second indicial solution and reports whether the numeric
/// trend matches sq_integrable_exponent.
struct IntegrabilityCheck {
    TailProbe probe;
    bool predicted_integrable = false;
    bool agrees = false;
};

IntegrabilityCheck corroborate_integrability(const ExceptionalFamily& fam, Endpoint e);

}  // namespace xjacobi
