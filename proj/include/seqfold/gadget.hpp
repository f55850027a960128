#pragma once

// Alignment gadget: folds a list-alignment problem into a single LCS
// instance. For input lists X_1..X_n (all of one type) and Y_1..Y_m (all of
// one type), n >= m, the builders emit binary strings S_X, S_Y and the
// constant C such that
//
//   min over alignments  <=  delta(S_X, S_Y) - C  <=  min over structural
//
// where the minima are the oracle costs from alignment.hpp.
//
// Construction. Every payload W is sealed into a cell 1^q 0^r W 0^r 1^q and
// cells are concatenated directly. Both strings are flanked by absorber
// blocks 1^q 0^{2r+z0} 1^q, z0 being the zero count of an X payload: n-m on
// each flank of S_Y (dummies) and the same number on each flank of S_X
// (sinks).
//
//   S_X = sink^{n-m}  cell(X_1) ... cell(X_n)  sink^{n-m}
//   S_Y = dummy^{n-m} cell(Y_1) ... cell(Y_m) dummy^{n-m}
//
// In a block-to-block engagement a dummy is worth 2q + 2r + z0 against any
// X cell or sink alike, and a real pair is worth 2q + 2r + lcs(X_i, Y_j).
// Every Y block engages in every optimal matching (the Y side has no spare
// capacity; slack lives on the X side as unneeded sinks or skipped cells,
// which die whole). The matched mass is therefore selection-independent and
// the signal is the payload LCS sum over the engaged pairs. Two facts pin
// the optimum to alignment semantics: lcs(X,Y) >= min(zeros X, zeros Y), so
// a real cell never gains by engaging a sink instead of a cell; and guards
// seal the pads, so splitting one cell between two Y blocks or stretching a
// payload match across a guard forfeits a q or r run against a payload-size
// gain.
//
// All run lengths derive from (n, m, T_X, T_Y) only, which is what makes
// output types and C instance-independent. The lengths live in one
// parameter block so the sandwich suite can shrink them and watch the
// contract break (negative control).

#include <vector>

#include "seqfold/core.hpp"

namespace seqfold {

struct GadgetParams {
  long long guard_units = 2;  // guard q = even(guard_units * l + guard_base), l = lx + ly
  long long guard_base = 4;
  long long pad_units = 2;    // pad   r = even(pad_units * l + pad_base)
  long long pad_base = 2;
};

inline GadgetParams default_gadget_params() { return GadgetParams{}; }

// separator runs far below validity; sandwich violations expected
inline GadgetParams shrunk_gadget_params() { return GadgetParams{0, 2, 0, 0}; }

// declared constant for the size bound |S_X| + |S_Y| <= kappa * (n+m) * (lx+ly)
inline constexpr long long kGadgetSizeKappa = 128;

struct GadgetPlan {
  long long n = 0, m = 0;
  SeqType tx, ty;
  long long guard = 0, pad = 0;
  long long absorber_zeros = 0;  // 2*pad + zeros of one X payload
  SeqType out_x, out_y;          // types of S_X and S_Y
  long long c = 0;

  static GadgetPlan make(long long n, long long m, SeqType tx, SeqType ty,
                         const GadgetParams& params = default_gadget_params());
};

Seq ga_x(long long m, SeqType ty, const std::vector<Seq>& xs,
         const GadgetParams& params = default_gadget_params());

Seq ga_y(long long n, SeqType tx, const std::vector<Seq>& ys,
         const GadgetParams& params = default_gadget_params());

long long ga_constant(long long n, long long m, SeqType tx, SeqType ty,
                      const GadgetParams& params = default_gadget_params());

}  // namespace seqfold
