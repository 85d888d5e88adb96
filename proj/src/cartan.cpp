#include "vcqds/cartan.hpp"
#include <cstdio>
#include <cstdlib>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>

namespace vcqds {

namespace {

bool in_k(const PauliString& p) { return (p.y_count() & 1) != 0; }

void verify_relations(const LieBasis& g, const std::vector<PauliString>& k,
                      const std::vector<PauliString>& m) {
    auto check = [&](const std::vector<PauliString>& a, const std::vector<PauliString>& b,
                     bool result_in_k, const char* what) {
        for (const auto& p : a)
            for (const auto& q : b) {
                auto c = commutator(p, q);
                if (!c) continue;
                if (!g.contains(c->string))
                    throw InvolutionViolation(std::string("commutator leaves the basis in ") +
                                              what + ": [" + p.label() + "," + q.label() + "]");
                if (in_k(c->string) != result_in_k)
                    throw InvolutionViolation(std::string("relation ") + what + " violated by [" +
                                              p.label() + "," + q.label() + "]");
            }
    };
    check(k, k, true, "[k,k] in k");
    check(m, m, true, "[m,m] in k");
    check(k, m, false, "[k,m] in m");
}

}  // namespace

CartanSplit involution_split(const LieBasis& g) {
    CartanSplit split;
    split.g = g;
    for (const auto& p : g.elements) (in_k(p) ? split.k_part : split.m_part).push_back(p);
    verify_relations(g, split.k_part, split.m_part);
    return split;
}

CartanSplit cartan_subalgebra(CartanSplit split, const PauliSum& seed) {
    split.h_part.clear();
    const PauliString* start = nullptr;
    for (const auto& [p, c] : seed.terms()) {
        if (std::find(split.m_part.begin(), split.m_part.end(), p) != split.m_part.end()) {
            start = &p;
            break;
        }
    }
    if (!start) throw SeedNotInM("no seed term lies in the m part");
    split.h_part.push_back(*start);
    for (const auto& p : split.m_part) {
        if (p == *start) continue;
        bool ok = true;
        for (const auto& h : split.h_part)
            if (!commutes(p, h)) {
                ok = false;
                break;
            }
        if (ok) split.h_part.push_back(p);
    }
    return split;
}

PauliSum adjoint_rotate(const PauliSum& sum, const PauliString& k, double a) {
    PauliSum out(sum.n_qubits());
    const double c = std::cos(2 * a);
    const double s = std::sin(2 * a);
    for (const auto& [p, coeff] : sum.terms()) {
        if (commutes(k, p)) {
            out.add(p, coeff);
            continue;
        }
        const PauliProduct kp = multiply(k, p);
        // i * (+-i) = -+1
        const double sigma = (kp.phase_exp == 1) ? -1.0 : 1.0;
        out.add(p, c * coeff);
        out.add(kp.string, s * sigma * coeff);
    }
    return out;
}

namespace {

// Coefficient vectors over the Lie basis with precomputed mixing tables: the
// adjoint action of e^{iak_i} rotates anticommuting pairs (lo, hi) by the
// angle 2a with sign sigma.
struct AdjointRep {
    struct Pairs {
        std::vector<std::uint32_t> lo, hi;
        std::vector<double> sigma;  // sign on the lo -> hi transfer
    };
    std::size_t dim = 0;
    std::vector<Pairs> k_tables;
    std::vector<std::size_t> h_indices;
    std::vector<std::size_t> k_indices_in_g;

    AdjointRep(const LieBasis& g, const std::vector<PauliString>& k_part,
               const std::vector<PauliString>& h_part) {
        dim = g.size();
        k_tables.reserve(k_part.size());
        for (const auto& k : k_part) {
            Pairs table;
            for (std::size_t j = 0; j < g.size(); ++j) {
                const PauliString& p = g.elements[j];
                if (commutes(k, p)) continue;
                const PauliProduct kp = multiply(k, p);
                const std::size_t partner = g.position(kp.string);
                if (partner < j) continue;  // each pair once, from its low index
                table.lo.push_back(static_cast<std::uint32_t>(j));
                table.hi.push_back(static_cast<std::uint32_t>(partner));
                table.sigma.push_back(kp.phase_exp == 1 ? -1.0 : 1.0);
            }
            k_tables.push_back(std::move(table));
        }
        for (const auto& h : h_part) h_indices.push_back(g.position(h));
        for (const auto& k : k_part) k_indices_in_g.push_back(g.position(k));
    }

    void rotate(std::vector<double>& w, std::size_t k_idx, double angle) const {
        const Pairs& t = k_tables[k_idx];
        const double c = std::cos(2 * angle);
        const double s = std::sin(2 * angle);
        for (std::size_t i = 0; i < t.lo.size(); ++i) {
            const double wl = w[t.lo[i]];
            const double wh = w[t.hi[i]];
            const double sg = t.sigma[i];
            w[t.lo[i]] = c * wl - s * sg * wh;
            w[t.hi[i]] = c * wh + s * sg * wl;
        }
    }

    // <i[k_idx, w], target> in plain coefficient inner product.
    double bracket_inner(const std::vector<double>& w, std::size_t k_idx,
                         const std::vector<double>& target) const {
        const Pairs& t = k_tables[k_idx];
        double acc = 0.0;
        for (std::size_t i = 0; i < t.lo.size(); ++i)
            acc += 2.0 * t.sigma[i] *
                   (w[t.lo[i]] * target[t.hi[i]] - w[t.hi[i]] * target[t.lo[i]]);
        return acc;
    }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Objective and analytic gradient of f(a) = <Ad_K(a) v, h0n>. Frames are
// swept once backward: w_j and H_j advance together, three rotations per
// parameter.
struct Objective {
    const AdjointRep& rep;
    const std::vector<double>& v;
    const std::vector<double>& h0n;
    std::size_t n_params;

    std::vector<double> full_forward(const std::vector<double>& a) const {
        std::vector<double> w = v;
        for (std::size_t i = n_params; i-- > 0;) rep.rotate(w, i, a[i]);
        return w;
    }

    double value(const std::vector<double>& a) const { return dot(full_forward(a), h0n); }

    double value_and_grad(const std::vector<double>& a, std::vector<double>& grad) const {
        std::vector<double> w = full_forward(a);  // frame 0: K v K^dag
        const double f = dot(w, h0n);
        std::vector<double> h_cur = h0n;
        grad.assign(n_params, 0.0);
        for (std::size_t j = 0; j < n_params; ++j) {
            grad[j] = rep.bracket_inner(w, j, h_cur);
            rep.rotate(w, j, -a[j]);
            rep.rotate(h_cur, j, -a[j]);
        }
        return f;
    }
};

// One pass of exact coordinate minimization: along each angle the objective
// is c0 + beta cos(2t) + gamma sin(2t), minimized in closed form.
double coordinate_sweep(const Objective& obj, std::vector<double>& a) {
    const AdjointRep& rep = obj.rep;
    std::vector<double> w = obj.full_forward(a);
    std::vector<double> h_cur = obj.h0n;
    for (std::size_t j = 0; j < obj.n_params; ++j) {
        rep.rotate(w, j, -a[j]);  // frame j+1, angle j removed
        const AdjointRep::Pairs& t = rep.k_tables[j];
        double beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < t.lo.size(); ++i) {
            const double wl = w[t.lo[i]], wh = w[t.hi[i]];
            const double hl = h_cur[t.lo[i]], hh = h_cur[t.hi[i]];
            beta += wl * hl + wh * hh;
            gamma += t.sigma[i] * (wl * hh - wh * hl);
        }
        a[j] = 0.5 * std::atan2(-gamma, -beta);
        rep.rotate(h_cur, j, -a[j]);
    }
    return obj.value(a);
}

struct LbfgsResult {
    double f = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    bool reached_floor = false;
};

// Gauss-Newton on the off-h components of u(a) = Ad_{K^dag(a)} h0. The
// first-order route lands near a Cartan point; this polishes the residual to
// the tolerance with quadratic convergence. Every exact Cartan point is also
// a stationary point of f, so the polish keeps the stationarity invariant.
bool gauss_newton_residual_polish(const AdjointRep& rep, const std::vector<double>& h0n,
                                  std::vector<double>& a, double tol, int max_steps = 40) {
    const std::size_t dim = rep.dim;
    const std::size_t n = a.size();
    if (n == 0) return true;
    std::vector<char> in_h(dim, 0);
    for (std::size_t idx : rep.h_indices) in_h[idx] = 1;

    auto off_residual = [&](const std::vector<double>& angles, std::vector<double>& u) {
        u = h0n;
        for (std::size_t i = 0; i < n; ++i) rep.rotate(u, i, -angles[i]);
        double r2 = 0.0;
        for (std::size_t l = 0; l < dim; ++l)
            if (!in_h[l]) r2 += u[l] * u[l];
        return std::sqrt(r2);
    };

    std::vector<double> u;
    double rnorm = off_residual(a, u);
    double lambda = 1e-10;
    for (int step = 0; step < max_steps; ++step) {
        if (rnorm <= 0.1 * tol) return true;

        // columns J_j = Ad_{(j+1..n)}(-i[k_j, y_j]) built in one forward pass
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                                    static_cast<Eigen::Index>(n));
        std::vector<double> y = h0n;
        std::vector<double> col(dim);
        for (std::size_t j = 0; j < n; ++j) {
            rep.rotate(y, j, -a[j]);
            std::fill(col.begin(), col.end(), 0.0);
            const AdjointRep::Pairs& t = rep.k_tables[j];
            for (std::size_t i = 0; i < t.lo.size(); ++i) {
                col[t.hi[i]] -= 2.0 * t.sigma[i] * y[t.lo[i]];
                col[t.lo[i]] += 2.0 * t.sigma[i] * y[t.hi[i]];
            }
            for (std::size_t l = 0; l < dim; ++l) jac(static_cast<Eigen::Index>(l),
                                                      static_cast<Eigen::Index>(j)) = col[l];
            // earlier columns pick up this frame
            for (std::size_t jc = 0; jc < j; ++jc) {
                const AdjointRep::Pairs& tj = rep.k_tables[j];
                const double c = std::cos(-2 * a[j]);
                const double s = std::sin(-2 * a[j]);
                for (std::size_t i = 0; i < tj.lo.size(); ++i) {
                    const double lo = jac(tj.lo[i], static_cast<Eigen::Index>(jc));
                    const double hi = jac(tj.hi[i], static_cast<Eigen::Index>(jc));
                    jac(tj.lo[i], static_cast<Eigen::Index>(jc)) = c * lo - s * tj.sigma[i] * hi;
                    jac(tj.hi[i], static_cast<Eigen::Index>(jc)) = c * hi + s * tj.sigma[i] * lo;
                }
            }
        }

        // keep only off-h rows
        Eigen::VectorXd r(static_cast<Eigen::Index>(dim));
        for (std::size_t l = 0; l < dim; ++l) {
            if (in_h[l]) {
                r(static_cast<Eigen::Index>(l)) = 0.0;
                jac.row(static_cast<Eigen::Index>(l)).setZero();
            } else {
                r(static_cast<Eigen::Index>(l)) = u[l];
            }
        }

        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd jtr = jac.transpose() * r;
        bool accepted = false;
        for (int damp = 0; damp < 25; ++damp) {
            Eigen::MatrixXd m = jtj;
            m.diagonal().array() += lambda;
            const Eigen::VectorXd d = m.ldlt().solve(-jtr);
            std::vector<double> a_try = a;
            for (std::size_t j = 0; j < n; ++j) a_try[j] += d(static_cast<Eigen::Index>(j));
            std::vector<double> u_try;
            const double r_try = off_residual(a_try, u_try);
            if (r_try < rnorm) {
                a = std::move(a_try);
                u = std::move(u_try);
                rnorm = r_try;
                lambda = std::max(lambda * 0.1, 1e-14);
                accepted = true;
                break;
            }
            lambda *= 10.0;
        }
        if (!accepted) return rnorm <= tol;
    }
    return rnorm <= 0.1 * tol || rnorm <= tol;
}

LbfgsResult minimize_angles(const Objective& obj, std::vector<double>& a,
                            const CartanOptions& opts) {
    const std::size_t n = obj.n_params;
    constexpr std::size_t kMemory = 10;
    std::deque<std::vector<double>> s_hist, y_hist;
    std::deque<double> rho_hist;

    std::vector<double> grad(n), grad_new(n);
    double f = obj.value_and_grad(a, grad);
    LbfgsResult res;

    const bool debug = std::getenv("VCQDS_CARTAN_DEBUG") != nullptr;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        res.iterations = iter;
        res.f = f;
        res.grad_norm = norm2(grad);
        if (debug && iter % 100 == 0)
            std::fprintf(stderr, "iter %d f=%.16g grad=%.3e\n", iter, f, res.grad_norm);
        if (res.grad_norm <= opts.grad_floor) {
            res.reached_floor = true;
            return res;
        }

        // two-loop recursion
        std::vector<double> d = grad;
        std::vector<double> alpha(s_hist.size());
        for (std::size_t i = s_hist.size(); i-- > 0;) {
            alpha[i] = rho_hist[i] * dot(s_hist[i], d);
            for (std::size_t k = 0; k < n; ++k) d[k] -= alpha[i] * y_hist[i][k];
        }
        if (!s_hist.empty()) {
            const double yy = dot(y_hist.back(), y_hist.back());
            const double sy = 1.0 / rho_hist.back();
            const double scale = sy / std::max(yy, 1e-300);
            for (auto& x : d) x *= scale;
        }
        for (std::size_t i = 0; i < s_hist.size(); ++i) {
            const double beta = rho_hist[i] * dot(y_hist[i], d);
            for (std::size_t k = 0; k < n; ++k) d[k] += (alpha[i] - beta) * s_hist[i][k];
        }
        for (auto& x : d) x = -x;

        double gd = dot(grad, d);
        if (gd >= 0) {  // not a descent direction; restart from steepest descent
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            for (std::size_t k = 0; k < n; ++k) d[k] = -grad[k];
            gd = dot(grad, d);
        }

        // backtracking Armijo search
        double step = 1.0;
        bool accepted = false;
        std::vector<double> a_new(n);
        double f_new = f;
        for (int bt = 0; bt < 50; ++bt) {
            for (std::size_t k = 0; k < n; ++k) a_new[k] = a[k] + step * d[k];
            f_new = obj.value(a_new);
            if (f_new <= f + 1e-4 * step * gd) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // stall: one closed-form coordinate pass, then continue fresh
            const double f_before = f;
            coordinate_sweep(obj, a);
            f = obj.value_and_grad(a, grad);
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            res.f = f;
            res.grad_norm = norm2(grad);
            if (f_before - f <= 1e-15 * (1.0 + std::abs(f))) break;
            continue;
        }

        f_new = obj.value_and_grad(a_new, grad_new);
        std::vector<double> s_vec(n), y_vec(n);
        for (std::size_t k = 0; k < n; ++k) {
            s_vec[k] = a_new[k] - a[k];
            y_vec[k] = grad_new[k] - grad[k];
        }
        const double sy = dot(s_vec, y_vec);
        if (sy > 1e-12 * norm2(s_vec) * norm2(y_vec)) {
            s_hist.push_back(std::move(s_vec));
            y_hist.push_back(std::move(y_vec));
            rho_hist.push_back(1.0 / sy);
            if (s_hist.size() > kMemory) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
        }
        a = std::move(a_new);
        grad = grad_new;
        f = f_new;
    }

    // Polish with closed-form coordinate sweeps. These are not limited by the
    // resolution of f differences, so the gradient keeps contracting linearly
    // well past the line-search noise floor.
    double prev = norm2(grad);
    for (int sweep = 0; sweep < opts.max_iterations && prev > opts.grad_floor; ++sweep) {
        coordinate_sweep(obj, a);
        f = obj.value_and_grad(a, grad);
        const double cur = norm2(grad);
        ++res.iterations;
        if (debug && sweep % 50 == 0)
            std::fprintf(stderr, "sweep %d f=%.16g grad=%.3e\n", sweep, f, cur);
        if (cur >= prev * 0.999) {
            prev = cur;
            break;
        }
        prev = cur;
    }
    res.f = f;
    res.grad_norm = prev;
    res.reached_floor = prev <= opts.grad_floor;
    return res;
}

}  // namespace

namespace detail {

std::vector<double> fk_gradient(const CartanSplit& split, const PauliSum& h0,
                                const std::vector<double>& angles, double* f_out) {
    AdjointRep rep(split.g, split.k_part, split.h_part);
    std::vector<double> h0v(rep.dim, 0.0);
    for (const auto& [p, c] : h0.terms()) h0v[split.g.position(p)] = c;
    std::vector<double> v(rep.dim, 0.0);
    const double denom = static_cast<double>(rep.h_indices.size());
    double nrm = 0.0;
    for (std::size_t i = 0; i < rep.h_indices.size(); ++i) {
        const double g = std::pow(M_PI, static_cast<double>(i + 1) / denom);
        v[rep.h_indices[i]] = g;
        nrm += g * g;
    }
    nrm = std::sqrt(nrm);
    for (auto& x : v) x /= nrm;
    Objective obj{rep, v, h0v, angles.size()};
    std::vector<double> grad;
    const double f = obj.value_and_grad(angles, grad);
    if (f_out) *f_out = f;
    return grad;
}

}  // namespace detail

CartanFactorization minimize_fK(const CartanSplit& split, const PauliSum& h0,
                                const CartanOptions& opts) {
    if (split.h_part.empty()) throw Error("minimize_fK needs a nonempty Cartan subalgebra");
    for (const auto& [p, c] : h0.terms())
        if (std::find(split.m_part.begin(), split.m_part.end(), p) == split.m_part.end())
            throw SeedNotInM("H0 term " + p.label() + " is outside span(m)");

    const double h0_norm = h0.norm();
    if (h0_norm == 0.0) throw Error("H0 is zero");

    AdjointRep rep(split.g, split.k_part, split.h_part);
    const std::size_t dim = rep.dim;
    const std::size_t n_params = split.k_part.size();

    std::vector<double> h0n(dim, 0.0);
    for (const auto& [p, c] : h0.terms()) h0n[split.g.position(p)] = c / h0_norm;

    // v = sum_i gamma_i h_i with incommensurate gamma_i = pi^{(i+1)/|h|},
    // normalized. Fractional exponents keep every gamma within a factor of
    // pi of each other; integer powers would span hundreds of orders of
    // magnitude for large h and leave directions numerically invisible.
    std::vector<double> v(dim, 0.0);
    {
        const double denom = static_cast<double>(rep.h_indices.size());
        double nrm = 0.0;
        for (std::size_t i = 0; i < rep.h_indices.size(); ++i) {
            const double g = std::pow(M_PI, static_cast<double>(i + 1) / denom);
            v[rep.h_indices[i]] = g;
            nrm += g * g;
        }
        nrm = std::sqrt(nrm);
        for (auto& x : v) x /= nrm;
    }

    Objective obj{rep, v, h0n, n_params};
    std::mt19937_64 rng(opts.rng_seed);
    std::uniform_real_distribution<double> angle_dist(-M_PI, M_PI);

    CartanFactorization fact;
    fact.n_qubits = h0.n_qubits();
    fact.k_generators = split.k_part;
    fact.h_strings = split.h_part;

    std::string last_failure;
    for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
        std::vector<double> a(n_params, 0.0);
        if (attempt > 0)
            for (auto& x : a) x = angle_dist(rng);

        LbfgsResult run{};
        if (n_params > 0) {
            run = minimize_angles(obj, a, opts);
            if (run.grad_norm > 1e-4) {
                last_failure = "gradient norm " + std::to_string(run.grad_norm) + " after " +
                               std::to_string(run.iterations) + " iterations";
                continue;
            }
        }

        // h = K^dag H0 K in the adjoint representation
        auto compute_residual = [&](std::vector<double>& w_out) {
            w_out = h0n;
            for (std::size_t i = 0; i < n_params; ++i) rep.rotate(w_out, i, -a[i]);
            double r2 = 0.0;
            for (std::size_t l = 0; l < dim; ++l) r2 += w_out[l] * w_out[l];
            for (std::size_t idx : rep.h_indices) r2 -= w_out[idx] * w_out[idx];
            return std::sqrt(std::max(r2, 0.0));
        };
        std::vector<double> w;
        double residual = compute_residual(w);
        if (residual > opts.tolerance) {
            gauss_newton_residual_polish(rep, h0n, a, opts.tolerance);
            residual = compute_residual(w);
            std::vector<double> g;
            run.f = obj.value_and_grad(a, g);
            run.grad_norm = norm2(g);
        }
        if (residual > opts.tolerance) {
            last_failure = "residual " + std::to_string(residual) + " outside span(h)";
            continue;
        }
        std::vector<double> h_proj(dim, 0.0);
        for (std::size_t idx : rep.h_indices) h_proj[idx] = w[idx];

        // reconstruction check: rotate the projected h back and compare to H0
        std::vector<double> recon = h_proj;
        for (std::size_t i = n_params; i-- > 0;) rep.rotate(recon, i, a[i]);
        double diff2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double d = recon[i] - h0n[i];
            diff2 += d * d;
        }
        if (std::sqrt(diff2) > opts.reconstruction_tol) {
            last_failure = "reconstruction error " + std::to_string(std::sqrt(diff2));
            continue;
        }

        fact.k_angles = std::move(a);
        fact.h_coefficients.clear();
        for (std::size_t idx : rep.h_indices) fact.h_coefficients.push_back(w[idx] * h0_norm);
        fact.residual_norm = residual;
        fact.report.iterations = run.iterations;
        fact.report.retries = attempt;
        fact.report.grad_norm = run.grad_norm;
        fact.report.f_value = run.f * h0_norm * std::ldexp(1.0, 2 * h0.n_qubits() + 1);
        return fact;
    }

    if (last_failure.find("residual") != std::string::npos ||
        last_failure.find("reconstruction") != std::string::npos)
        throw ResidualTooLarge("Cartan optimization converged off the Cartan point: " +
                               last_failure);
    throw NoConvergence("Cartan optimization did not converge: " + last_failure);
}

CartanFactorization cartan_factorize(const PauliSum& h0, std::size_t closure_cap,
                                     const CartanOptions& opts, CartanSplit* split_out) {
    std::vector<PauliString> generators;
    for (const auto& [p, c] : h0.terms())
        if (!p.is_identity()) generators.push_back(p);
    if (generators.empty()) throw Error("H0 has no non-identity terms");

    const LieBasis g = lie_closure(generators, closure_cap);
    CartanSplit split = cartan_subalgebra(involution_split(g), h0);
    CartanFactorization fact = minimize_fK(split, h0, opts);
    if (split_out) *split_out = std::move(split);
    return fact;
}

void fast_forward_apply(const CartanFactorization& fact, double t, StateVector& state) {
    if (state.n_qubits() != fact.n_qubits)
        throw DimensionMismatch("state and factorization qubit counts differ");
    const std::size_t nk = fact.k_generators.size();
    for (std::size_t i = 0; i < nk; ++i)  // K^dag
        apply_pauli_rotation(state, fact.k_generators[i], fact.k_angles[i]);
    for (std::size_t j = 0; j < fact.h_strings.size(); ++j)  // e^{-iht}, exactly (h abelian)
        apply_pauli_rotation(state, fact.h_strings[j], fact.h_coefficients[j] * t);
    for (std::size_t i = nk; i-- > 0;)  // K
        apply_pauli_rotation(state, fact.k_generators[i], -fact.k_angles[i]);
}

StateVector fast_forwarded(const CartanFactorization& fact, double t, const StateVector& state) {
    StateVector out = state;
    fast_forward_apply(fact, t, out);
    return out;
}

namespace {
void write_double(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}
}  // namespace

void write_factorization(std::ostream& os, const CartanFactorization& fact) {
    os << "# vcqds cartan factorization v1\n";
    os << "involution even-y\n";
    os << "n_qubits " << fact.n_qubits << "\n";
    os << "k_count " << fact.k_generators.size() << "\n";
    for (std::size_t i = 0; i < fact.k_generators.size(); ++i) {
        os << "k " << fact.k_generators[i].label() << " ";
        write_double(os, fact.k_angles[i]);
        os << "\n";
    }
    os << "h_count " << fact.h_strings.size() << "\n";
    for (std::size_t i = 0; i < fact.h_strings.size(); ++i) {
        os << "h " << fact.h_strings[i].label() << " ";
        write_double(os, fact.h_coefficients[i]);
        os << "\n";
    }
    os << "residual ";
    write_double(os, fact.residual_norm);
    os << "\n";
}

CartanFactorization read_factorization(std::istream& is) {
    CartanFactorization fact;
    std::string line;
    std::size_t k_count = 0, h_count = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "involution") {
            std::string kind;
            ls >> kind;
            if (kind != "even-y") throw ParseError("unknown involution tag: " + kind);
        } else if (tag == "n_qubits") {
            ls >> fact.n_qubits;
        } else if (tag == "k_count") {
            ls >> k_count;
        } else if (tag == "h_count") {
            ls >> h_count;
        } else if (tag == "k") {
            std::string label;
            double angle;
            ls >> label >> angle;
            if (!ls) throw ParseError("malformed k line: " + line);
            fact.k_generators.push_back(PauliString::from_label(label));
            fact.k_angles.push_back(angle);
        } else if (tag == "h") {
            std::string label;
            double coeff;
            ls >> label >> coeff;
            if (!ls) throw ParseError("malformed h line: " + line);
            fact.h_strings.push_back(PauliString::from_label(label));
            fact.h_coefficients.push_back(coeff);
        } else if (tag == "residual") {
            ls >> fact.residual_norm;
        } else {
            throw ParseError("unknown factorization line: " + line);
        }
    }
    if (fact.k_generators.size() != k_count || fact.h_strings.size() != h_count)
        throw ParseError("factorization counts do not match the listed entries");
    return fact;
}

void save_factorization(const std::string& path, const CartanFactorization& fact) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open " + path + " for writing");
    write_factorization(os, fact);
}

CartanFactorization load_factorization(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path);
    return read_factorization(is);
}

}  // namespace vcqds
