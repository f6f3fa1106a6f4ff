#pragma once

#include <vector>

#include "cardguess/deck.hpp"
#include "cardguess/pmf.hpp"
#include "cardguess/rational.hpp"

namespace cardguess {

// E(W (W-1) ... (W-s+1)) via the single sum
//   E C(W, s) = sum_{k=s-1}^{m2-1} C(k, s-1) 2^{k+1} C(m1+m2-k-1, m1) / C(m1+m2, m1),
// which needs O(m2) big-integer steps and no materialized PMF.
Rational factorial_moment_W(const DeckComposition& deck, int s);

// Falling-factorial moment of Chat = C - m1; equals 2^{-s} E(W falling s).
Rational factorial_moment_Chat(const DeckComposition& deck, int s);

// Raw moment E(Chat^s) from the factorial moments and Stirling numbers of
// the second kind.
Rational raw_moment_Chat(const DeckComposition& deck, int s);

// Gamma(s/2 + 1) m^{s/2}: leading term of E(Chat_{m,m}^s).
double asym_raw_moment_Chat_equal(int m, int s);

// Gamma(s/2 + 1) for integer s >= 0, from Gamma(1) = 1, Gamma(1/2) = sqrt(pi).
double gamma_half_integer(int s);

// S(n, k) for 0 <= k <= n <= max_n, from S(n,k) = k S(n-1,k) + S(n-1,k-1).
std::vector<std::vector<Integer>> stirling2_table(int max_n);

// Direct summations over a PMF.
Rational falling_factorial_moment(const DiscretePMF& pmf, int s);
// E((X - shift)^s)
Rational raw_moment(const DiscretePMF& pmf, int s, std::int64_t shift = 0);

struct MomentReport {
  int order;
  Rational exact;
  double asymptotic;
  double ratio;  // exact / asymptotic
};

// Exact vs. asymptotic raw moment of Chat on the balanced deck (m, m).
MomentReport balanced_moment_report(int m, int s);

}  // namespace cardguess
