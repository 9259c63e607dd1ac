#include "core/srg_theory.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace qeg {

const char* to_string(QeClass c) {
    switch (c) {
        case QeClass::yes: return "yes";
        case QeClass::no: return "no";
        case QeClass::boundary: return "boundary";
    }
    return "?";
}

const char* to_string(Method m) {
    return m == Method::closed_form ? "closed_form" : "numeric";
}

const char* to_string(Violation v) {
    switch (v) {
        case Violation::none: return "none";
        case Violation::n_range: return "n_range";
        case Violation::k_range: return "k_range";
        case Violation::mu_range: return "mu_range";
        case Violation::lambda_range: return "lambda_range";
        case Violation::parameter_relation: return "parameter_relation";
        case Violation::discriminant_not_square: return "discriminant_not_square";
        case Violation::multiplicity_not_integer: return "multiplicity_not_integer";
        case Violation::conference_form: return "conference_form";
    }
    return "?";
}

std::int64_t isqrt(std::int64_t x) {
    if (x < 0) {
        return -1;
    }
    if (x < 2) {
        return x;
    }
    auto t = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (t > 0 && t * t > x) {
        --t;
    }
    while ((t + 1) * (t + 1) <= x) {
        ++t;
    }
    return t;
}

FeasibilityReport validate_params(const SrgParams& p) {
    FeasibilityReport rep;
    const auto fail = [&rep](Violation v) {
        rep.feasible = false;
        rep.violation = v;
        return rep;
    };

    // The range checks below cap k, lambda, mu by n, so this single bound
    // keeps every later product inside int64.
    constexpr std::int64_t kMaxN = 1'000'000'000;
    if (p.n > kMaxN) {
        throw InputError("vertex count " + std::to_string(p.n) +
                         " exceeds the supported bound " + std::to_string(kMaxN));
    }

    if (p.n < 4) {
        return fail(Violation::n_range);
    }
    if (p.k < 2 || p.k > p.n - 2) {
        return fail(Violation::k_range);
    }
    if (p.mu < 1 || p.mu > p.k) {
        return fail(Violation::mu_range);
    }
    if (p.lambda < 0 || p.lambda > p.k - 2) {
        return fail(Violation::lambda_range);
    }
    if ((p.n - p.k - 1) * p.mu != (p.k - p.lambda - 1) * p.k) {
        return fail(Violation::parameter_relation);
    }

    const std::int64_t balance = 2 * p.k + (p.n - 1) * (p.lambda - p.mu);
    if (balance != 0) {
        // Three-eigenvalue integer case: the discriminant must be a perfect
        // square and both multiplicities non-negative integers.
        const std::int64_t disc = (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu);
        const std::int64_t e = isqrt(disc);
        if (e * e != disc) {
            return fail(Violation::discriminant_not_square);
        }
        // e and lambda-mu share parity whenever disc is a perfect square,
        // so s and r are integers.
        const std::int64_t s = ((p.lambda - p.mu) - e) / 2;
        const std::int64_t f_num = -s * (p.n - 1) - p.k;
        if (f_num % e != 0) {
            return fail(Violation::multiplicity_not_integer);
        }
        const std::int64_t f = f_num / e;
        const std::int64_t g = p.n - 1 - f;
        if (f < 0 || g < 0) {
            return fail(Violation::multiplicity_not_integer);
        }
        rep.integer_eigenvalues = true;
    } else {
        // Balanced multiplicities force the conference tuple
        // (n, (n-1)/2, (n-5)/4, (n-1)/4) with n = 1 (mod 4).
        if (p.n % 4 != 1 || 2 * p.k != p.n - 1 || 4 * p.lambda != p.n - 5 ||
            4 * p.mu != p.n - 1) {
            return fail(Violation::conference_form);
        }
        rep.is_conference = true;
        const std::int64_t e = isqrt(p.n);
        rep.integer_eigenvalues = (e * e == p.n);
    }
    rep.feasible = true;
    return rep;
}

SrgSpectrum adjacency_eigenvalues(const SrgParams& p) {
    const auto rep = validate_params(p);
    if (!rep.feasible) {
        throw InputError(std::string("infeasible srg parameters (") + to_string(rep.violation) +
                         "): srg(" + std::to_string(p.n) + ", " + std::to_string(p.k) + ", " +
                         std::to_string(p.lambda) + ", " + std::to_string(p.mu) + ")");
    }

    SrgSpectrum sp;
    sp.k = p.k;
    sp.disc = (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu);
    sp.integer_eigenvalues = rep.integer_eigenvalues;

    if (rep.is_conference && !rep.integer_eigenvalues) {
        const double root = std::sqrt(static_cast<double>(p.n));
        sp.s = (-1.0 - root) / 2.0;
        sp.r = (-1.0 + root) / 2.0;
        sp.f = (p.n - 1) / 2;
        sp.g = (p.n - 1) / 2;
        return sp;
    }

    // Exact integer arithmetic; for conference tuples with square n this
    // coincides with (-1 +- sqrt(n)) / 2.
    const std::int64_t e = isqrt(sp.disc);
    const std::int64_t s = ((p.lambda - p.mu) - e) / 2;
    const std::int64_t r = ((p.lambda - p.mu) + e) / 2;
    sp.s = static_cast<double>(s);
    sp.r = static_cast<double>(r);
    sp.f = (-s * (p.n - 1) - p.k) / e;
    sp.g = p.n - 1 - sp.f;
    return sp;
}

std::array<double, 3> distance_eigenvalues(const SrgParams& p) {
    const auto sp = adjacency_eigenvalues(p);
    return {-sp.r - 2.0, -sp.s - 2.0, static_cast<double>(2 * (p.n - 1) - p.k)};
}

QeClass classify_qe(const SrgParams& p) {
    const auto rep = validate_params(p);
    if (!rep.feasible) {
        throw InputError(std::string("infeasible srg parameters (") + to_string(rep.violation) +
                         ")");
    }
    const std::int64_t key = p.k - 2 * p.lambda + p.mu;
    if (key == 4) {
        return QeClass::boundary;
    }
    return key < 4 ? QeClass::yes : QeClass::no;
}

QecReport qec_closed_form(const SrgParams& p) {
    const auto sp = adjacency_eigenvalues(p);
    QecReport rep;
    rep.qec = -sp.s - 2.0;
    rep.delta1 = static_cast<double>(2 * (p.n - 1) - p.k);
    rep.delta2 = rep.qec;
    rep.qe_class = classify_qe(p);
    rep.method = Method::closed_form;
    return rep;
}

namespace {

using IntMatrix = std::vector<std::int64_t>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::int64_t n) {
    IntMatrix c(static_cast<std::size_t>(n * n), 0);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t k = 0; k < n; ++k) {
            const std::int64_t aik = a[i * n + k];
            if (aik == 0) {
                continue;
            }
            for (std::int64_t j = 0; j < n; ++j) {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    return c;
}

struct EntryMismatch {
    bool found = false;
    std::int64_t row = 0, col = 0, lhs = 0, rhs = 0;
};

EntryMismatch first_mismatch(const IntMatrix& lhs, const IntMatrix& rhs, std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            if (lhs[i * n + j] != rhs[i * n + j]) {
                return {true, i, j, lhs[i * n + j], rhs[i * n + j]};
            }
        }
    }
    return {};
}

}  // namespace

IdentityCheck matrix_identity_check(const Graph& g, const SrgParams& p) {
    const std::int64_t n = g.order();
    IdentityCheck result;

    IntMatrix adj(static_cast<std::size_t>(n * n), 0);
    for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = 0; v < n; ++v) {
            adj[u * n + v] = (u != v && g.has_edge(u, v)) ? 1 : 0;
        }
    }
    const IntMatrix adj2 = multiply(adj, adj, n);

    const auto entry_identity = [&](std::int64_t i, std::int64_t j) { return i == j ? 1 : 0; };

    const auto report = [&result](const char* name, const EntryMismatch& m) {
        result.pass = false;
        result.identity = name;
        result.row = m.row;
        result.col = m.col;
        result.lhs = m.lhs;
        result.rhs = m.rhs;
        return result;
    };

    // A^2 = mu J - (mu - lambda) A - (mu - k) I
    {
        IntMatrix rhs(static_cast<std::size_t>(n * n), 0);
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t j = 0; j < n; ++j) {
                rhs[i * n + j] = p.mu - (p.mu - p.lambda) * adj[i * n + j] -
                                 (p.mu - p.k) * entry_identity(i, j);
            }
        }
        if (const auto m = first_mismatch(adj2, rhs, n); m.found) {
            return report("adjacency_square", m);
        }
    }

    // (A - k I)(A^2 + (mu - lambda) A + (mu - k) I) = 0
    {
        IntMatrix factor(static_cast<std::size_t>(n * n), 0);
        IntMatrix shifted(static_cast<std::size_t>(n * n), 0);
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t j = 0; j < n; ++j) {
                factor[i * n + j] = adj2[i * n + j] + (p.mu - p.lambda) * adj[i * n + j] +
                                    (p.mu - p.k) * entry_identity(i, j);
                shifted[i * n + j] = adj[i * n + j] - p.k * entry_identity(i, j);
            }
        }
        const IntMatrix product = multiply(shifted, factor, n);
        const IntMatrix zero(static_cast<std::size_t>(n * n), 0);
        if (const auto m = first_mismatch(product, zero, n); m.found) {
            return report("minimal_polynomial", m);
        }
    }

    const auto dm = distance_matrix(g);

    // mu D = 2 A^2 - (2 lambda - mu) A - 2 k I
    {
        IntMatrix lhs(static_cast<std::size_t>(n * n), 0);
        IntMatrix rhs(static_cast<std::size_t>(n * n), 0);
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t j = 0; j < n; ++j) {
                lhs[i * n + j] = p.mu * dm.at(i, j);
                rhs[i * n + j] = 2 * adj2[i * n + j] - (2 * p.lambda - p.mu) * adj[i * n + j] -
                                 2 * p.k * entry_identity(i, j);
            }
        }
        if (const auto m = first_mismatch(lhs, rhs, n); m.found) {
            return report("distance_polynomial", m);
        }
    }

    // D = 2 J - 2 I - A
    {
        IntMatrix lhs(static_cast<std::size_t>(n * n), 0);
        IntMatrix rhs(static_cast<std::size_t>(n * n), 0);
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t j = 0; j < n; ++j) {
                lhs[i * n + j] = dm.at(i, j);
                rhs[i * n + j] = 2 - 2 * entry_identity(i, j) - adj[i * n + j];
            }
        }
        if (const auto m = first_mismatch(lhs, rhs, n); m.found) {
            return report("distance_two_form", m);
        }
    }

    return result;
}

}  // namespace qeg
