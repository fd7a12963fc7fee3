#pragma once

#include "zspulse/design.hpp"
#include "zspulse/forward.hpp"
#include "zspulse/marchenko.hpp"

namespace zs {

// Kernel coefficient sequence over a contiguous index window [lo, hi];
// reads outside the window return zero.
class KernelSeq {
 public:
  KernelSeq() = default;
  KernelSeq(std::int64_t lo, std::vector<Complex> vals);
  Complex at(std::int64_t m) const;
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(vals_.size()) - 1; }
  double tail_below(std::int64_t m) const;  // sum |f| over indices <= m

 private:
  std::int64_t lo_ = 0;
  CVector vals_;
};

// Right/left kernel sequences driving the inverse recursions:
//   f(m) = r_hat(m) - sum_k c_k w_k^{-m-1}
//   g(m) = s_hat(m) - sum_k c~_k w_k^{-m}
// so that the step-j kernels are r_j(n) = f(n-j+1) and s_j(n) = g(n+j)
// for n <= -1.
struct FgSequences {
  KernelSeq f;
  KernelSeq g;
};

FgSequences build_fg(const LaurentSeries& r_hat,
                     const std::vector<ReducedBoundState>& right_constants,
                     const LaurentSeries& s_hat,
                     const std::vector<ReducedBoundState>& left_constants,
                     std::int64_t lo, std::int64_t hi);

// Step-j Marchenko kernels as Laurent series (negative support), for the
// linear-system oracle.
LaurentSeries right_kernel(const KernelSeq& f, std::int64_t j);
LaurentSeries left_kernel(const KernelSeq& g, std::int64_t j);

struct DistWorkspace {
  FgSequences fg;
  std::int64_t m_plus = 0;   // right recursion is seeded at this step
  std::int64_t m_minus = 0;  // left recursion is seeded at -m_minus
};

// gamma_j for j = m_plus-1 ... 0 (returned in increasing j order)
CVector dist_right(const DistWorkspace& ws);
// gamma_j for j = -m_minus ... -1, plus the step-0 value used only as the
// left/right consistency diagnostic
struct DistLeft {
  CVector gammas;
  Complex gamma0_check;
};
DistLeft dist_left(const DistWorkspace& ws);

struct DistDiagnostics {
  double gamma0_gap = 0.0;
  std::int64_t m_plus = 0;
  std::int64_t m_minus = 0;
  int doublings = 0;
};

struct DistInversion {
  HardPulse pulse;
  DistDiagnostics diag;
};

// Full inverse transform: reduced data -> hard pulse. The truncation indices
// follow the kernel tail rule and are doubled (at most twice) whenever the
// left and right step-0 values disagree beyond 1e-6.
DistInversion dist_invert(const ReducedScatteringData& data,
                          std::size_t grid_size = 4096, double delta = 1.0);

// Workspace construction shared by dist_invert and the oracle tests.
DistWorkspace make_workspace(const ReducedScatteringData& data,
                             std::size_t grid_size, int doublings = 0);

// Marchenko-oracle gammas on the same workspace (right side for j >= 0,
// left side for j < 0).
Complex oracle_gamma_right(const DistWorkspace& ws, std::int64_t j);
Complex oracle_gamma_left(const DistWorkspace& ws, std::int64_t j);

}  // namespace zs
