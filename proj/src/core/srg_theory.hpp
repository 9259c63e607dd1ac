#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "core/graph.hpp"

namespace qeg {

enum class QeClass { yes, no, boundary };
enum class Method { closed_form, numeric };

const char* to_string(QeClass c);
const char* to_string(Method m);

/// QE constant together with the extreme distance eigenvalues. The law
/// delta2 <= qec < delta1 holds for every connected graph; closed-form
/// reports have qec == delta2 exactly.
struct QecReport {
    double qec = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    QeClass qe_class = QeClass::no;
    Method method = Method::closed_form;
};

/// The single condition that failed, for infeasible parameter tuples.
enum class Violation {
    none,
    n_range,               // n >= 4
    k_range,               // 2 <= k <= n-2
    mu_range,              // 1 <= mu <= k
    lambda_range,          // 0 <= lambda <= k-2
    parameter_relation,    // (n-k-1) mu == (k-lambda-1) k
    discriminant_not_square,
    multiplicity_not_integer,
    conference_form,       // 2k + (n-1)(lambda-mu) == 0 but not the conference tuple
};
const char* to_string(Violation v);

/// Verdict of the necessary feasibility conditions for srg(n,k,lambda,mu)
/// with mu >= 1. "feasible" means every necessary condition passes, not
/// that a graph with these parameters exists.
struct FeasibilityReport {
    bool feasible = false;
    Violation violation = Violation::none;
    bool is_conference = false;
    bool integer_eigenvalues = false;
};

/// Adjacency spectrum of srg(n,k,lambda,mu): s < r < k with multiplicities
/// g, f, 1. disc = (lambda-mu)^2 + 4(k-mu) = (r-s)^2.
struct SrgSpectrum {
    double s = 0.0;
    double r = 0.0;
    std::int64_t k = 0;
    std::int64_t f = 0;
    std::int64_t g = 0;
    std::int64_t disc = 0;
    bool integer_eigenvalues = false;
};

FeasibilityReport validate_params(const SrgParams& p);

/// Throws InputError when validate_params rejects p.
SrgSpectrum adjacency_eigenvalues(const SrgParams& p);

/// Distance spectrum as the increasing triple (-r-2, -s-2, 2(n-1)-k), with
/// multiplicities (f, g, 1).
std::array<double, 3> distance_eigenvalues(const SrgParams& p);

/// boundary iff k - 2 lambda + mu == 4; yes iff < 4; no otherwise.
QeClass classify_qe(const SrgParams& p);

/// QEC = -s - 2 where s is the least adjacency eigenvalue. Refuses
/// infeasible tuples (in particular mu = 0 or undetermined).
QecReport qec_closed_form(const SrgParams& p);

/// Result of the exact integer verification of the structural matrix
/// identities of a strongly regular graph with mu >= 1:
///   adjacency_square      A^2 = mu J - (mu-lambda) A - (mu-k) I
///   minimal_polynomial    (A - k I)(A^2 + (mu-lambda) A + (mu-k) I) = 0
///   distance_polynomial   mu D = 2 A^2 - (2 lambda - mu) A - 2k I
///   distance_two_form     D = 2 J - 2 I - A
struct IdentityCheck {
    bool pass = true;
    std::string identity;  // name of the first failing identity, empty on pass
    std::int64_t row = -1;
    std::int64_t col = -1;
    std::int64_t lhs = 0;  // entry values on the failing position
    std::int64_t rhs = 0;
};

IdentityCheck matrix_identity_check(const Graph& g, const SrgParams& p);

/// Exact integer square root (largest t with t*t <= x); -1 for negative x.
std::int64_t isqrt(std::int64_t x);

}  // namespace qeg
