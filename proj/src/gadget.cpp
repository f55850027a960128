#include "seqfold/gadget.hpp"

#include <stdexcept>

namespace seqfold {

namespace {

long long round_even(long long v) { return v % 2 == 0 ? v : v + 1; }

void check_list(const std::vector<Seq>& list, SeqType want, const char* who) {
  for (const Seq& s : list) {
    if (s.empty()) throw std::invalid_argument(std::string(who) + ": empty payload");
    if (type_of(s) != want) throw std::invalid_argument(std::string(who) + ": mixed payload types");
  }
}

void append_cell(Seq& out, const Seq& payload, const GadgetPlan& plan) {
  out.append_run(Sym::One, plan.guard);
  out.append_run(Sym::Zero, plan.pad);
  out.append(payload);
  out.append_run(Sym::Zero, plan.pad);
  out.append_run(Sym::One, plan.guard);
}

void append_absorber(Seq& out, const GadgetPlan& plan) {
  out.append_run(Sym::One, plan.guard);
  out.append_run(Sym::Zero, plan.absorber_zeros);
  out.append_run(Sym::One, plan.guard);
}

}  // namespace

GadgetPlan GadgetPlan::make(long long n, long long m, SeqType tx, SeqType ty,
                            const GadgetParams& params) {
  if (m < 1 || n < m) throw std::invalid_argument("GadgetPlan: need n >= m >= 1");
  if (tx.len < 1 || ty.len < 1) throw std::invalid_argument("GadgetPlan: empty payload type");
  if (tx.ones < 0 || tx.ones > tx.len || ty.ones < 0 || ty.ones > ty.len)
    throw std::invalid_argument("GadgetPlan: malformed type");

  GadgetPlan p;
  p.n = n;
  p.m = m;
  p.tx = tx;
  p.ty = ty;
  const long long l = tx.len + ty.len;
  p.guard = round_even(params.guard_units * l + params.guard_base);
  p.pad = round_even(params.pad_units * l + params.pad_base);
  const long long z0 = tx.len - tx.ones;
  p.absorber_zeros = 2 * p.pad + z0;

  const long long frame = 2 * p.guard + 2 * p.pad;        // cell minus payload
  const long long absorber = 2 * p.guard + p.absorber_zeros;
  const long long flank = 2 * (n - m) * absorber;         // per side count is n-m

  p.out_x = SeqType{n * (frame + tx.len) + flank, n * (2 * p.guard + tx.ones) + 2 * (n - m) * 2 * p.guard};
  p.out_y = SeqType{m * (frame + ty.len) + flank, m * (2 * p.guard + ty.ones) + 2 * (n - m) * 2 * p.guard};

  // baseline matched mass, doubled to stay integral: every Y block engages
  // fully -- 2(n-m) absorber engagements plus m real-cell engagements
  const long long two_b = 4 * (n - m) * absorber + 2 * m * frame + m * (tx.len + ty.len);
  p.c = p.out_x.len + p.out_y.len - two_b;
  return p;
}

Seq ga_x(long long m, SeqType ty, const std::vector<Seq>& xs, const GadgetParams& params) {
  if (xs.empty()) throw std::invalid_argument("ga_x: empty input list");
  const long long n = static_cast<long long>(xs.size());
  SeqType tx = type_of(xs[0]);
  check_list(xs, tx, "ga_x");
  GadgetPlan plan = GadgetPlan::make(n, m, tx, ty, params);

  Seq out;
  out.reserve(plan.out_x.len);
  for (long long i = 0; i < n - m; i++) append_absorber(out, plan);
  for (const Seq& x : xs) append_cell(out, x, plan);
  for (long long i = 0; i < n - m; i++) append_absorber(out, plan);
  return out;
}

Seq ga_y(long long n, SeqType tx, const std::vector<Seq>& ys, const GadgetParams& params) {
  if (ys.empty()) throw std::invalid_argument("ga_y: empty input list");
  const long long m = static_cast<long long>(ys.size());
  SeqType ty = type_of(ys[0]);
  check_list(ys, ty, "ga_y");
  GadgetPlan plan = GadgetPlan::make(n, m, tx, ty, params);

  Seq out;
  out.reserve(plan.out_y.len);
  for (long long i = 0; i < n - m; i++) append_absorber(out, plan);
  for (const Seq& y : ys) append_cell(out, y, plan);
  for (long long i = 0; i < n - m; i++) append_absorber(out, plan);
  return out;
}

long long ga_constant(long long n, long long m, SeqType tx, SeqType ty,
                      const GadgetParams& params) {
  return GadgetPlan::make(n, m, tx, ty, params).c;
}

}  // namespace seqfold
