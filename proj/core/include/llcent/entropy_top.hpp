// Topological entropy of a banded endomorphism.
//
// For a basic open U = U_k the n-th cotrajectory is
//   C_n(f, U) = U ∩ f^-1(U) ∩ ... ∩ f^-(n-1)(U),
// a decreasing chain of basic opens. The codimensions dim U/C_n grow with a
// non-increasing integer increment gamma_n = dim C_n/C_{n+1} that eventually
// becomes stationary; that stationary value is H*(f, U), and
// ent*(f) = sup over k of H*(f, U_k). The supremum is monitored by an
// ascending k-sweep (values are non-decreasing in k) with a plateau
// certificate.
//
// The same value has a second, limit-free route: with U_0 = U and
// U_{n+1} = U ∩ f(U_n), the chain's intersection U+ satisfies
// H*(f, U) = dim f(U+)/U+. The chain is computed as row spaces in a finite
// window whose tail is tracked as a full free product; window adequacy is
// certified by escalation, and a persistent failure raises WindowTooSmall.

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "llcent/endo.hpp"
#include "llcent/window.hpp"

namespace llcent {

struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StabilizationPolicy {
  int s_min = 8;  // consecutive equal increments required for a certificate
  int n_cap = 64; // hard stage cap; exhaustion yields an uncertified result
};

struct StabilizationCertificate {
  bool certified = false;
  int value = 0;         // the (candidate) stationary increment
  int stabilized_at = 0; // first n attaining the final value
  int agreement = 0;     // consecutive stages observed at that value
  int n_used = 0;
};

// dim U_k / C_n(f, U_k), exact. Constraint functionals (f^j x)_(t,i) with
// i < k and 0 < j < n are supported on window positions < k + n*band, so a
// finite rank computes the codimension with no truncation error.
int cotraj_codim(const BandedEndo& f, int k, int n);

struct CotrajectoryTable {
  int level = 0;
  std::vector<int> codims; // codims[n] = dim U_k / C_{n+1}; codims[0] = 0
  std::vector<int> gammas; // gammas[n-1] = codims[n] - codims[n-1], n >= 1
  std::optional<int> stationary_gamma; // tail value when the tail is constant
  int stationary_from = 0;             // first n with gamma_n == tail value
};

CotrajectoryTable gamma_sequence(const BandedEndo& f, int k, int n_max);

// H*(f, U_k) as the stationary gamma, with a stabilization certificate.
StabilizationCertificate h_star(const BandedEndo& f, int k,
                                const StabilizationPolicy& policy = {});

// The chain U_0 = U_k, U_{n+1} = U_k ∩ f(U_n) as window row spaces over
// positions [k, k+window]; coordinates beyond the window are a free tail.
struct UPlusChain {
  int level = 0;
  int window_lo = 0, window_hi = 0;
  std::vector<WindowMatrix> subspaces; // views of U_0, U_1, ...
  int stabilized_at = 0;               // first n with U_n = U_{n+1}
  bool fixed_point_verified = false;   // U+ = U ∩ f(U+) inside the window
};

UPlusChain u_plus(const BandedEndo& f, int k, int window);

// dim f(U+)/U+ from the stabilized window representation. Must agree with
// h_star on certified instances; the window escalates (doubling) until the
// value is stable, else WindowTooSmall.
int h_star_limit_free(const BandedEndo& f, int k, int window_margin = 0);

struct KSweepPolicy {
  std::optional<int> k_min, k_max; // defaults derived from core and periods
  int plateau = 8;
  StabilizationPolicy stab;
};

struct LevelResult {
  int level = 0;
  StabilizationCertificate cert;
};

struct EntropyReport {
  std::vector<LevelResult> per_level; // ascending k
  int value = 0;                      // ent* when certified, else a lower bound
  bool certified = false;
  bool possibly_infinite = false; // values still growing at the sweep end
  double h_top = 0.0;             // value * ln p
};

// Ascending k-sweep; certified when the trailing plateau is long enough to
// cover both template periods. The engine never claims an infinite value.
//
// Certified per-level values are upper bounds of the true H* (the increment
// sequence is non-increasing), and true values are monotone in k, so a
// certified level exceeding a certified higher level is a false plateau; the
// sweep recomputes such levels with the higher value as a hard bound and
// downgrades them if the bound is never reached.
EntropyReport ent_star(const BandedEndo& f, const KSweepPolicy& sweep = {});

namespace detail {

// h_star that certifies only once the increment has fallen to at most
// `bound`; the stage cap is extended for the chase.
StabilizationCertificate h_star_bounded(const BandedEndo& f, int k,
                                        const StabilizationPolicy& policy,
                                        int bound);

// Monotone repair of a sweep (values along the vector must be non-decreasing
// on certified levels). recompute(level, bound) reruns one level.
void repair_monotone_sweep(
    std::vector<LevelResult>& levels,
    const std::function<StabilizationCertificate(int, int)>& recompute);

} // namespace detail

// dim f(U)/(U ∩ f(U)) - dim U/(U ∩ f(U)) for an automorphism, computed at
// level k; independent of k. f_inv is verified exactly.
int delta_dim(const BandedEndo& f, const BandedEndo& f_inv, int k);

struct ZeroEntropyVerdict {
  enum class Kind { Zero, Positive, Undetermined } kind;
  int stabilized_n = 0; // Zero: C(f,U) = C_n(f,U), so C(f,U) is open
  int gamma = 0;        // Positive: the stationary gamma
};

ZeroEntropyVerdict zero_entropy_witness(const BandedEndo& f, int k, int n_cap);

// Window view on positions [1, window] of the stabilized intersection of the
// images f^n(V_c). The caller passes the compact component when the space has
// a discrete part. Diagnostic.
WindowMatrix surjective_core_window(const BandedEndo& f, int window,
                                    const StabilizationPolicy& policy = {});

} // namespace llcent
