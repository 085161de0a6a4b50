#include "utcell/invariants.hpp"

#include "json.hpp"

#include <algorithm>

namespace utcell {

// ------------------------------------------------------------ step context

StepContext step_context(const BasicSubset& d, int i) {
    const std::vector<Root> ext = extension(d);
    if (i < 1 || i > static_cast<int>(ext.size()))
        throw std::invalid_argument("step_context: step index out of range");
    const int n = d.n;
    const Root xi = ext[static_cast<std::size_t>(i - 1)];
    const int s = xi.row, t = xi.col;
    StepContext ctx{n,
                    i,
                    xi,
                    reflection_prefix(n, ext, i - 1),
                    reflection_prefix(n, ext, i),
                    {}, {}, {}, {}, {}, {}, {}};
    for (const Root& eta : all_positive_roots(n)) {
        if (eta.col < t) continue;
        if (act_on_root(ctx.w_prev, eta).positive()) ctx.lambda_i.insert(eta);
        if (act_on_root(ctx.w_cur, eta).positive()) ctx.lambda_gt_i.insert(eta);
    }
    for (int b = t + 1; b < s; ++b) {
        const Root beta{s, b};
        const Root alpha{b, t};
        if (!ctx.lambda_i.count(beta)) {
            ctx.t_minus.insert(beta);
            ctx.s_minus.insert(alpha);
        } else if (ctx.lambda_i.count(alpha)) {
            ctx.t_plus.insert(beta);
            ctx.s_plus.insert(alpha);
        } else {
            ctx.t0.insert(beta);
        }
    }
    return ctx;
}

std::vector<StepContext> all_step_contexts(const BasicSubset& d) {
    std::vector<StepContext> out;
    const std::size_t c = extension(d).size();
    for (std::size_t i = 1; i <= c; ++i)
        out.push_back(step_context(d, static_cast<int>(i)));
    return out;
}

// ------------------------------------------------------------- theta image

RatFn theta_image(const StepContext& ctx, const Root& eta) {
    if (!ctx.lambda_gt_i.count(eta))
        throw std::invalid_argument("theta_image: " + to_string(eta) +
                                    " is outside the domain of step " + std::to_string(ctx.index));
    const int s = ctx.xi.row, t = ctx.xi.col;
    const int a = eta.row, b = eta.col;

    if (b == s && a > s) {
        // eta shares its column with row(xi): correct by every active pair.
        Poly sum;
        for (const Root& beta : ctx.t_plus)
            sum = sum + Poly::var(Root{a, beta.col}) * Poly::var(Root{beta.col, t});
        for (const Root& beta : ctx.t_minus)
            sum = sum + Poly::var(Root{a, beta.col}) * Poly::var(Root{beta.col, t});
        if (sum.is_zero()) return RatFn::var(eta);
        return RatFn(Poly::var(eta)) + RatFn(sum, Poly::var(ctx.xi));
    }

    if (a < s && b > t) {
        const Root pair_root{s, a};
        if (!ctx.t_plus.count(pair_root) && !ctx.t_minus.count(pair_root))
            return RatFn::var(eta);          // no pair attached to (s,a)
        const Root eta_beta{s, b};
        if (ctx.t_minus.count(eta_beta))
            return RatFn::var(eta);          // image would leave the step algebra
        return RatFn(Poly::var(eta)) -
               RatFn(Poly::var(Root{a, t}) * Poly::var(eta_beta), Poly::var(ctx.xi));
    }

    return RatFn::var(eta);
}

RatFn theta_series_composite(const StepContext& ctx, const RatFn& a) {
    std::vector<Root> pairs;                 // T_+ u T_-, least first
    for (const Root& beta : ctx.t_plus) pairs.push_back(beta);
    for (const Root& beta : ctx.t_minus) pairs.push_back(beta);
    std::sort(pairs.begin(), pairs.end(), [](const Root& x, const Root& y) {
        return root_after(y, x);
    });
    RatFn out = a;
    for (const Root& beta : pairs) {
        const Poly p = Poly::var(beta);
        const RatFn q(Poly::var(Root{beta.col, ctx.xi.col}), Poly::var(ctx.xi));
        out = theta_generic(p, q, out);
    }
    return out;
}

// ------------------------------------------------------------- invariants

RatFn apply_substitutions(const RatFn& f, const std::vector<std::pair<Root, RatFn>>& subs) {
    RatFn out = f;
    for (const auto& [eta, value] : subs)
        if (out.support().count(eta)) out = out.substitute(eta, value);
    return out;
}

namespace {

RatFn apply_theta(const StepContext& ctx, const RatFn& f) {
    std::map<Root, RatFn, SuccDesc> images;
    for (const Root& v : f.support()) images.emplace(v, theta_image(ctx, v));
    return f.substitute_all(images);
}

} // namespace

Poly clear_denominators(const RatFn& red, const std::vector<Poly>& earlier) {
    Poly num = red.num();
    Poly den = red.den();
    // Generator factors shared by both sides are removable; cancel them
    // before treating what remains of the denominator as clearing factors.
    bool progress = true;
    while (!den.is_constant() && progress) {
        progress = false;
        for (const Poly& g : earlier) {
            if (g.is_constant()) continue;
            while (auto qd = den.divide_exact(g)) {
                if (auto qn = num.divide_exact(g)) {
                    num = *qn;
                    den = *qd;
                    progress = true;
                } else {
                    break;
                }
            }
        }
    }
    progress = true;
    while (!den.is_constant() && progress) {
        progress = false;
        for (const Poly& g : earlier) {
            if (g.is_constant()) continue;
            if (auto q = den.divide_exact(g)) {
                den = *q;
                progress = true;
                break;
            }
        }
    }
    if (!den.is_constant()) {
        // Leftover factor must be shared with the numerator.
        auto q = num.divide_exact(den);
        if (!q)
            throw std::runtime_error(
                "clear_denominators: denominator is not a product of earlier generators");
        num = *q;
    }
    return num.primitive_part();
}

InvariantSet compute_invariants(const BasicSubset& d) {
    InvariantSet inv{d, extension(d), {}, {}, {}};
    const RootPartition part = classify(d);
    const std::vector<StepContext> ctxs = all_step_contexts(d);

    RootSet targets = part.m_set;
    for (const Root& xi : inv.ext) targets.insert(xi);

    std::vector<Poly> gens_in_order;
    for (const Root& eta : targets) {   // descending
        int k = 0;
        while (k < static_cast<int>(inv.ext.size()) &&
               root_after(inv.ext[static_cast<std::size_t>(k)], eta))
            ++k;
        RatFn expr = RatFn::var(eta);
        for (int j = k; j >= 1; --j)
            expr = apply_theta(ctxs[static_cast<std::size_t>(j - 1)], expr);
        inv.raw.emplace(eta, expr);
        RatFn red = apply_substitutions(expr, inv.substitutions);
        if (part.m_set.count(eta)) {
            inv.substitutions.emplace_back(eta, RatFn::var(eta) - red);
        } else {
            Poly canon = clear_denominators(red, gens_in_order);
            gens_in_order.push_back(canon);
            inv.generators.emplace(eta, canon);
        }
    }
    return inv;
}

// ---------------------------------------------------------- cell relations

CellRelations cell_relations(const BasicSubset& d) {
    CellRelations rel;
    const Permutation w = w_d(d);
    const RootPartition part = classify(d);
    auto build = [&](const Root& r) {
        const MinorSpec spec = minor_spec(w, r.row, r.col);
        Poly unshifted = minor_poly(spec, false, d.n);
        Poly shifted = minor_poly(spec, true, d.n);
        if (!(unshifted == shifted))
            throw std::logic_error("cell_relations: shift changed a below-diagonal minor");
        return unshifted;
    };
    for (const Root& gamma : part.m_set) rel.vanishing.emplace_back(gamma, build(gamma));
    for (const Root& xi : d.roots) rel.nonvanishing.emplace_back(xi, build(xi));
    return rel;
}

Point x_d_phi(const BasicSubset& d, const PhiMap& phi) {
    if (phi.size() != d.roots.size())
        throw std::invalid_argument("x_d_phi: phi must be defined exactly on D");
    std::map<Root, Rational, SuccDesc> entries;
    for (const auto& [r, v] : phi) {
        if (!d.contains(r))
            throw std::invalid_argument("x_d_phi: " + to_string(r) + " is not in D");
        if (v == 0)
            throw std::invalid_argument("x_d_phi: phi" + to_string(r) + " must be nonzero");
        entries[r] = v;
    }
    return Point::make(d.n, entries);
}

// ---------------------------------------------------------------- matrices

Matrix identity_matrix(int n) {
    Matrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

bool is_unitriangular(const Matrix& g) {
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i].size() != n) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && g[i][j] != 1) return false;
            if (i > j && g[i][j] != 0) return false;
        }
    }
    return true;
}

Matrix unitriangular_inverse(const Matrix& g) {
    if (!is_unitriangular(g))
        throw std::invalid_argument("unitriangular_inverse: matrix is not upper unitriangular");
    const std::size_t n = g.size();
    Matrix inv = identity_matrix(static_cast<int>(n));
    // Back substitution column by column.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j; i-- > 0;) {
            Rational acc(0);
            for (std::size_t k = i + 1; k <= j; ++k) acc += g[i][k] * inv[k][j];
            inv[i][j] = -acc;
        }
    return inv;
}

Matrix point_matrix(const Point& x) {
    Matrix m(static_cast<std::size_t>(x.n), std::vector<Rational>(static_cast<std::size_t>(x.n), Rational(0)));
    for (const auto& [r, v] : x.entries)
        m[static_cast<std::size_t>(r.row - 1)][static_cast<std::size_t>(r.col - 1)] = v;
    return m;
}

Point lower_truncation(const Matrix& m, int n) {
    std::map<Root, Rational, SuccDesc> entries;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            const Rational& v = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (v != 0) entries[Root{i, j}] = v;
        }
    return Point::make(n, entries);
}

Point left_right_move(const Matrix& g, const Matrix& h, const Point& x) {
    if (!is_unitriangular(g) || !is_unitriangular(h))
        throw std::invalid_argument("left_right_move: factors must be upper unitriangular");
    return lower_truncation(mat_mul(mat_mul(g, point_matrix(x)), h), x.n);
}

Point coadjoint_move(const Matrix& g, const Point& x) {
    if (!is_unitriangular(g))
        throw std::invalid_argument("coadjoint_move: factor must be upper unitriangular");
    return lower_truncation(mat_mul(mat_mul(g, point_matrix(x)), unitriangular_inverse(g)), x.n);
}

// ---------------------------------------------------------------- sampling

std::mt19937_64 trial_rng(unsigned long seed, int trial) {
    std::seed_seq seq{static_cast<unsigned long long>(seed),
                      static_cast<unsigned long long>(trial) + 0x9e3779b97f4a7c15ull};
    return std::mt19937_64(seq);
}

namespace {
int small_int(std::mt19937_64& rng) {
    return std::uniform_int_distribution<int>(-3, 3)(rng);
}
int small_nonzero(std::mt19937_64& rng) {
    for (;;) {
        int v = small_int(rng);
        if (v != 0) return v;
    }
}
} // namespace

Matrix random_unitriangular(int n, std::mt19937_64& rng) {
    Matrix m = identity_matrix(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = small_int(rng);
    return m;
}

PhiMap random_phi(const BasicSubset& d, std::mt19937_64& rng) {
    PhiMap phi;
    for (const Root& r : d.roots) phi[r] = small_nonzero(rng);
    return phi;
}

Point sample_cell_point(const BasicSubset& d, const PhiMap& phi, std::mt19937_64& rng) {
    const Matrix g = random_unitriangular(d.n, rng);
    const Matrix h = random_unitriangular(d.n, rng);
    return left_right_move(g, h, x_d_phi(d, phi));
}

// ------------------------------------------------------------ verification

VerifyReport verify_invariance(const InvariantSet& inv, int trials, unsigned long seed,
                               const PhiMap* fixed_phi) {
    const BasicSubset& d = inv.d;
    VerifyReport rep;
    rep.trials = trials;
    const CellRelations rels = cell_relations(d);
    const std::vector<Root> coords = all_positive_roots(d.n);

    // Brackets with every coordinate, shared across trials.
    std::vector<std::pair<Root, std::vector<Poly>>> brackets;
    for (const auto& [xi, f] : inv.generators) {
        std::vector<Poly> row;
        row.reserve(coords.size());
        for (const Root& gamma : coords) row.push_back(poisson(f, Poly::var(gamma)));
        brackets.emplace_back(xi, std::move(row));
    }

    auto fail = [&rep](std::string msg) {
        rep.pass = false;
        rep.failures.push_back(std::move(msg));
    };

    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng = trial_rng(seed, trial);
        const PhiMap phi = fixed_phi ? *fixed_phi : random_phi(d, rng);
        const Point x0 = x_d_phi(d, phi);
        const Point x = sample_cell_point(d, phi, rng);

        for (const auto& [gamma, p] : rels.vanishing)
            if (p.evaluate(x) != 0) {
                fail("trial " + std::to_string(trial) + ": vanishing minor of " + to_string(gamma) +
                     " is nonzero on the sampled orbit point");
            }
        for (const auto& [xi, p] : rels.nonvanishing) {
            if (p.evaluate(x0) == 0)
                fail("trial " + std::to_string(trial) + ": minor of " + to_string(xi) +
                     " vanishes at the seed point");
            if (p.evaluate(x) != p.evaluate(x0))
                fail("trial " + std::to_string(trial) + ": minor of " + to_string(xi) +
                     " moved along the orbit");
        }
        // D-indexed generators are constant across the whole variety
        for (const Root& xi : d.roots)
            if (inv.generators.at(xi).evaluate(x) != inv.generators.at(xi).evaluate(x0))
                fail("trial " + std::to_string(trial) + ": F" + to_string(xi) +
                     " is not constant on the variety");

        const Matrix g2 = random_unitriangular(d.n, rng);
        const Point moved = coadjoint_move(g2, x);
        for (const auto& [xi, f] : inv.generators)
            if (f.evaluate(moved) != f.evaluate(x))
                fail("trial " + std::to_string(trial) + ": F" + to_string(xi) +
                     " changed under a coadjoint move");
        for (const auto& [xi, p] : rels.nonvanishing)
            if (p.evaluate(moved) != p.evaluate(x))
                fail("trial " + std::to_string(trial) + ": minor of " + to_string(xi) +
                     " changed under a coadjoint move");

        for (const auto& [xi, row] : brackets)
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (row[k].evaluate(x) != 0)
                    fail("trial " + std::to_string(trial) + ": {F" + to_string(xi) + ", x" +
                         to_string(coords[k]) + "} is nonzero on the cell");
    }
    return rep;
}

VerifyReport verify_invariance(const BasicSubset& d, int trials, unsigned long seed,
                               const PhiMap* fixed_phi) {
    return verify_invariance(compute_invariants(d), trials, seed, fixed_phi);
}

int jacobian_rank(const InvariantSet& inv, const Point& x, bool variety_only) {
    const std::vector<Root> coords = all_positive_roots(inv.d.n);
    std::vector<std::vector<Rational>> rows;
    for (const auto& [xi, f] : inv.generators) {
        if (variety_only && inv.d.contains(xi)) continue;
        std::vector<Rational> row;
        row.reserve(coords.size());
        for (const Root& gamma : coords) row.push_back(f.derivative(gamma).evaluate(x));
        rows.push_back(std::move(row));
    }
    // Gaussian elimination over Q.
    std::size_t rank = 0;
    std::size_t cols = coords.size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Rational factor = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int jacobian_rank(const BasicSubset& d, const Point& x) {
    return jacobian_rank(compute_invariants(d), x, false);
}

// ------------------------------------------------------------------ report

std::string report_json(const BasicSubset& d, int trials, unsigned long seed,
                        bool* pass_out, const PhiMap* fixed_phi) {
    nlohmann::json j;
    j["n"] = d.n;
    nlohmann::json droots = nlohmann::json::array();
    for (const Root& r : d.roots) droots.push_back({r.row, r.col});
    j["D"] = {{"n", d.n}, {"roots", droots}};

    const InvariantSet inv = compute_invariants(d);
    j["extension"] = nlohmann::json::array();
    for (const Root& r : inv.ext) j["extension"].push_back({r.row, r.col});
    const Permutation w = w_d(d);
    j["w"] = w.images();

    nlohmann::json gens = nlohmann::json::object();
    for (const auto& [xi, f] : inv.generators) gens[to_string(xi)] = f.to_text();
    j["generators"] = gens;

    const CellRelations rels = cell_relations(d);
    nlohmann::json vanish = nlohmann::json::object(), nonvanish = nlohmann::json::object();
    for (const auto& [r, p] : rels.vanishing) vanish[to_string(r)] = p.to_text();
    for (const auto& [r, p] : rels.nonvanishing) nonvanish[to_string(r)] = p.to_text();
    j["cell_relations"] = {{"vanishing", vanish}, {"nonvanishing", nonvanish}};

    const VerifyReport rep = verify_invariance(inv, trials, seed, fixed_phi);
    j["invariance"] = {{"trials", rep.trials}, {"failures", rep.failures}};

    // Ranks want a generic point; resample on degeneracy.
    const int expect_cell = static_cast<int>(inv.ext.size());
    const int expect_var = expect_cell - static_cast<int>(d.roots.size());
    int rank_cell = 0, rank_var = 0;
    constexpr int kBudget = 100;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        std::mt19937_64 rng = trial_rng(seed, 1000 + attempt);
        const PhiMap phi = fixed_phi ? *fixed_phi : random_phi(d, rng);
        const Point x = sample_cell_point(d, phi, rng);
        rank_cell = std::max(rank_cell, jacobian_rank(inv, x, false));
        rank_var = std::max(rank_var, jacobian_rank(inv, x, true));
        if (rank_cell == expect_cell && rank_var == expect_var) break;
    }
    j["jacobian_rank"] = rank_cell;
    j["jacobian_rank_variety"] = rank_var;

    const bool pass = rep.pass && rank_cell == expect_cell && rank_var == expect_var;
    j["pass"] = pass;
    if (pass_out) *pass_out = pass;
    return j.dump(2);
}

} // namespace utcell
