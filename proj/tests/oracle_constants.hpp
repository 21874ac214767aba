#pragma once

// Expected values frozen from an independent high-precision evaluation
// (60-digit arithmetic, symmetric eigendecompositions computed outside this
// code base). The fixed inputs are:
//   A2 = [[2,1],[1,2]]            B2 = diag(3,1)
//   A3 = [[4,1,0],[1,3,1],[0,1,2]]
//   B3 = [[2,0,1],[0,2,0],[1,0,3]]
//   C3 = [[3,1,1],[1,4,0],[1,0,2]]

namespace oracle {

// eigenvalues, descending
inline constexpr double kA3Eigs[3] = {4.732050807568877294, 3.0, 1.267949192431122706};
inline constexpr double kB3Eigs[3] = {3.618033988749894848, 2.0, 1.381966011250105152};

// A2 #_{1/4} B2
inline constexpr double kSharpQuarterDiag0 = 2.115319527387279874;
inline constexpr double kSharpQuarterDiag1 = 1.661412347570653757;
inline constexpr double kSharpQuarterOff = 0.7172293788311703492;

// pnorm_heron on (A2, B2), t = 1/4, r = 1
inline constexpr double kPnormP2Lhs = 11.66509781243690045;
inline constexpr double kPnormP2Rhs = 11.73425974612517558;
inline constexpr double kPnormP1Lhs = 15.55346374991586726;
inline constexpr double kPnormP1Rhs = 15.60082381091035013;

// log_maj_proposition on (A3, B3), t = 0.6
inline constexpr double kPropositionLhsSpectrum[3] = {14.68026924960755429, 6.078257928167535996,
                                                      2.551927670063949697};
inline constexpr double kPropositionRhsSpectrum[3] = {14.8623723670746395, 6.072117866127283917,
                                                      2.523208714903384185};
inline constexpr double kPropositionPrefixMargins[3] = {0.0123283101267504639,
                                                        0.01131763149970862199, 0.0};
// the section-1 variant right side misses the full-product equality by
// exactly t*log det(A): 0.6 * log 18
inline constexpr double kPropositionVariantFinalMargin = -1.734223054737698815;

// trace_sharp on (A3, B3), t = 0.3
inline constexpr double kTraceSharpLhs = 27.34408730609017541;
inline constexpr double kTraceSharpRhs = 27.46176945235446432;

// strip_trace on (A2, B2), z = 1/4 + i/2
inline constexpr double kStripLhs = 7.87523970604382041;
inline constexpr double kStripRhs = 8.0;

// heinz_sharp_trace on (A3, B3), t = 0.3
inline constexpr double kHeinzSharpLhs = 19.74219845847023243;
inline constexpr double kHeinzSharpRhs = 20.0;

// sharp_square_traces on (A3, B3), t = 0.3
inline constexpr double kSharpSquareLhs = 41.30126225143345546;
inline constexpr double kSharpSquareRhs = 41.79231242305709641;

// cross_traces on (A3, B3), t = 0.3
inline constexpr double kCrossLhs = 86.17063723750520011;
inline constexpr double kCrossRhs = 86.6419530652760564;

// det_audenaert on (A3, B3), t = 0.4, log domain
inline constexpr double kDetAudenaertLhs = 3.719951629763704218;
inline constexpr double kDetAudenaertRhs = 3.721591566510963465;

// det_power_mean on (A3, B3), t = 0.5, log domain. The high-precision oracle
// puts log det P above log det Q: the stated direction is VIOLATED on this
// pair (margin -1.386e-3), and independent sweeps show the same sign on every
// generic pair tried.
inline constexpr double kDetPowerMeanLhs = 2.717684387784926448;
inline constexpr double kDetPowerMeanRhs = 2.716298030154478868;

// Heron determinant corollary values at t = 1/2 on (A3, B3), log domain:
// log det(A+B+2 A#B) vs log det(A+B+A^{1/2}B^{1/2}+B^{1/2}A^{1/2})
inline constexpr double kHeronCorollaryLhs = 6.876567471144598305;
inline constexpr double kHeronCorollaryRhs = 6.875181113514150725;

// qnorm_infinity on (A3, B3, C3), t = 0.5
inline constexpr double kQnormLhs = 3.860900994703559769;
inline constexpr double kQnormRhs = 3.878197026263468904;

// open_th122 on (A3, B3): margins rhs - lhs over the t grid
inline constexpr double kTh122MarginT01 = 0.1030284236547273038;
inline constexpr double kTh122MarginT03 = 0.2018542124616582667;
inline constexpr double kTh122MarginT05 = 0.2254209710582697141;
inline constexpr double kTh122TraceAB = 20.0;

}  // namespace oracle
