#ifndef UTCELL_INVARIANTS_HPP
#define UTCELL_INVARIANTS_HPP

#include "utcell/diagram.hpp"
#include "utcell/poly.hpp"
#include "utcell/root.hpp"
#include "utcell/weyl.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace utcell {

// Root bookkeeping for the i-th localization step, xi_i = (s,t). Signs of
// w_{i-1} and w_i classify which coordinates the step still sees.
struct StepContext {
    int n;
    int index;            // i, 1-based
    Root xi;
    Permutation w_prev;   // w_{i-1}
    Permutation w_cur;    // w_i
    RootSet lambda_i;     // col >= t and w_{i-1}-positive
    RootSet lambda_gt_i;  // col >= t and w_i-positive
    RootSet t0, t_plus, t_minus;   // partition of T = {(s,b) : t < b < s}
    RootSet s_plus, s_minus;       // alpha with xi - alpha in T_+/T_-
};

StepContext step_context(const BasicSubset& d, int i);
std::vector<StepContext> all_step_contexts(const BasicSubset& d);

// Image of x_eta under the step embedding. eta must lie in lambda_gt_i.
RatFn theta_image(const StepContext& ctx, const Root& eta);

// Same image produced by composing the generic series over the step's
// (p,q) pairs, least pair first. Used to cross-check theta_image.
RatFn theta_series_composite(const StepContext& ctx, const RatFn& a);

struct InvariantSet {
    BasicSubset d;
    std::vector<Root> ext;                              // C(D), descending
    std::map<Root, Poly, SuccDesc> generators;          // canonical F_xi
    std::map<Root, RatFn, SuccDesc> raw;                // unreduced images
    std::vector<std::pair<Root, RatFn>> substitutions;  // x_eta -> value, eta in M(D)
};

InvariantSet compute_invariants(const BasicSubset& d);

// Applies the recorded triangular substitutions in order.
RatFn apply_substitutions(const RatFn& f, const std::vector<std::pair<Root, RatFn>>& subs);

// Canonical polynomial representative of a reduced image: cancels generator
// factors shared by numerator and denominator, clears the remaining
// denominator (a product of the given generators), and strips content.
Poly clear_denominators(const RatFn& reduced, const std::vector<Poly>& generators);

struct CellRelations {
    std::vector<std::pair<Root, Poly>> vanishing;      // minors of M(D) roots
    std::vector<std::pair<Root, Poly>> nonvanishing;   // minors of D roots
};

CellRelations cell_relations(const BasicSubset& d);

using PhiMap = std::map<Root, Rational, SuccDesc>;

Point x_d_phi(const BasicSubset& d, const PhiMap& phi);

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool is_unitriangular(const Matrix& g);
Matrix unitriangular_inverse(const Matrix& g);
Matrix point_matrix(const Point& x);
Point lower_truncation(const Matrix& m, int n);

Point left_right_move(const Matrix& g, const Matrix& h, const Point& x);
Point coadjoint_move(const Matrix& g, const Point& x);

// Deterministic samplers, integer entries in [-3, 3].
std::mt19937_64 trial_rng(unsigned long seed, int trial);
Matrix random_unitriangular(int n, std::mt19937_64& rng);
PhiMap random_phi(const BasicSubset& d, std::mt19937_64& rng);
Point sample_cell_point(const BasicSubset& d, const PhiMap& phi, std::mt19937_64& rng);

struct VerifyReport {
    int trials = 0;
    bool pass = true;
    std::vector<std::string> failures;
};

// When fixed_phi is given it seeds every trial; otherwise phi is resampled.
VerifyReport verify_invariance(const BasicSubset& d, int trials, unsigned long seed,
                               const PhiMap* fixed_phi = nullptr);
VerifyReport verify_invariance(const InvariantSet& inv, int trials, unsigned long seed,
                               const PhiMap* fixed_phi = nullptr);

// Rank of the Jacobian of the generators (all of C(D), or C(D) \ D when
// variety_only) with respect to every coordinate, evaluated at x.
int jacobian_rank(const InvariantSet& inv, const Point& x, bool variety_only = false);
int jacobian_rank(const BasicSubset& d, const Point& x);

// Full JSON report: generators, relations, invariance run, Jacobian ranks.
std::string report_json(const BasicSubset& d, int trials, unsigned long seed,
                        bool* pass_out = nullptr, const PhiMap* fixed_phi = nullptr);

} // namespace utcell

#endif
