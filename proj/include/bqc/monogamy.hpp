#pragma once

// Squared entanglement-of-formation (SEF) and squared quantum discord (SQD)
// monogamy terms for a three-qubit pure state, with A as the focus party.

#include "bqc/measures.hpp"

namespace bqc {

/// Which party the pairwise discords D(rho_AB), D(rho_AC) are measured on.
enum class DiscordSide {
  Partner,  // D(AB) on B, D(AC) on C (default)
  Focus,    // both on A
};

struct SefTerms {
  double ef2_A_BC = 0.0;
  double ef2_AB = 0.0;
  double ef2_AC = 0.0;
  double residual = 0.0;  // E_R^2, unclamped
};

struct SqdTerms {
  double d2_A_BC = 0.0;
  double d2_AB = 0.0;
  double d2_AC = 0.0;
  double residual = 0.0;  // D_R^2, unclamped
};

struct MonogamyReport {
  double ef2_A_BC = 0.0, ef2_AB = 0.0, ef2_AC = 0.0;
  double e_residual = 0.0;
  double d2_A_BC = 0.0, d2_AB = 0.0, d2_AC = 0.0;
  double d_residual = 0.0;
};

SefTerms sef_residual(const PureState3Q &s);
SqdTerms sqd_residual(const PureState3Q &s, DiscordSide side = DiscordSide::Partner);
MonogamyReport monogamy_report(const PureState3Q &s, DiscordSide side = DiscordSide::Partner);

}  // namespace bqc
