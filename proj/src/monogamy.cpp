#include "bqc/monogamy.hpp"

namespace bqc {

namespace {

double sq(double x) { return x * x; }

}  // namespace

SefTerms sef_residual(const PureState3Q &s) {
  using Q = QubitLabel;
  SefTerms t;
  t.ef2_A_BC = sq(eof_one_vs_rest(s, Q::A));
  t.ef2_AB = sq(eof_pair(s, Q::A, Q::B));
  t.ef2_AC = sq(eof_pair(s, Q::A, Q::C));
  t.residual = t.ef2_A_BC - t.ef2_AB - t.ef2_AC;
  return t;
}

SqdTerms sqd_residual(const PureState3Q &s, DiscordSide side) {
  using Q = QubitLabel;
  SqdTerms t;
  t.d2_A_BC = sq(discord_one_vs_rest(s, Q::A));
  if (side == DiscordSide::Partner) {
    t.d2_AB = sq(discord_kw(s, Q::A, Q::B));
    t.d2_AC = sq(discord_kw(s, Q::A, Q::C));
  } else {
    t.d2_AB = sq(discord_kw(s, Q::B, Q::A));
    t.d2_AC = sq(discord_kw(s, Q::C, Q::A));
  }
  t.residual = t.d2_A_BC - t.d2_AB - t.d2_AC;
  return t;
}

MonogamyReport monogamy_report(const PureState3Q &s, DiscordSide side) {
  const SefTerms e = sef_residual(s);
  const SqdTerms d = sqd_residual(s, side);
  return {e.ef2_A_BC, e.ef2_AB, e.ef2_AC, e.residual, d.d2_A_BC, d.d2_AB, d.d2_AC, d.residual};
}

}  // namespace bqc
