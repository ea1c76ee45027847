#pragma once

// Generated by tests/tools/make_reference_values.py (mpmath, 40 digits).
// Do not edit by hand; rerun the script instead.

#include <array>
#include <utility>

namespace refv {

inline constexpr double kLangevin1 = 0.3130352854993313036362;
inline constexpr double kLangevin2 = 0.5373147207275480958778;
inline constexpr double kLangevin8 = 0.8750002250703747668522;
inline constexpr double kLangevinOverP2 = 0.2686573603637740479389;
inline constexpr double kLangevinOverP05 = 0.32790682747730569754;
inline constexpr double kMeanCos2Dc1 = 0.3739294290013373927277;
inline constexpr double kMeanCos2Dc4 = 0.6246644247991587550439;
inline constexpr double kMeanCos2Dc5 = 0.6799636784071922497853;
inline constexpr double kMeanCos2Dc8 = 0.781249943732406308287;

inline constexpr double kDawson0_25 = 0.239839163562898212365;
inline constexpr double kDawson0_5 = 0.424436383502022295934;
inline constexpr double kDawson1 = 0.5380795069127684191364;
inline constexpr double kDawson2 = 0.3013403889237919660347;
inline constexpr double kDawson3 = 0.1782710306105582873426;
inline constexpr double kDawson5 = 0.1021340744242768354386;
inline constexpr double kDawson8 = 0.06300019870755338791925;
inline constexpr double kDawson10 = 0.05025384718759852803275;
inline constexpr double kDawson25 = 0.02001603855446640822543;
inline constexpr double kDawson100 = 0.005000250037509378282727;

// (q, L2(q)) from quadrature of the defining ratio
inline constexpr std::array<std::pair<double, double>, 18> kGenLangevin = {{
    {-1000.0, 0.0005},
    {-50.0, 0.009999999999999999999985},
    {-10.0, 0.04999190002631596158769},
    {-5.0, 0.09829726120834668901142},
    {-3.0, 0.1502139043389995578722},
    {-1.0, 0.2537041018036844625449},
    {-0.5, 0.291125094772793211191},
    {-0.001000000000000000020817, 0.3332444529111813157994},
    {0.001000000000000000020817, 0.3334222306867015979947},
    {0.5, 0.3797319547409956328021},
    {1.0, 0.4292307058277509599643},
    {2.0, 0.531264557686532836493},
    {3.0, 0.626185395910082825116},
    {5.0, 0.7642662212704321335586},
    {10.0, 0.8927277614092508567198},
    {50.0, 0.9797891799259343979097},
    {1000.0, 0.9989994987453528090994},
    {10000.0, 0.9998999949987495372792},
}};

// (p, q, <cos^2 theta0>) under weight exp(p u + q u^2)
inline constexpr std::array<std::array<double, 3>, 20> kMomentTable = {{
    {{0.0, 0.0, 0.3333333333333333333333}},
    {{0.01000000000000000020817, 0.0, 0.3333377777354501587261}},
    {{1.0, 0.0, 0.3739294290013373927277}},
    {{5.0, 0.0, 0.6799636784071922497853}},
    {{10.0, 0.0, 0.8199999991755385493252}},
    {{50.0, 0.0, 0.9608}},
    {{500.0, 0.0, 0.996008}},
    {{10000.0, 0.0, 0.99980002}},
    {{0.0, -0.5, 0.291125094772793211191}},
    {{0.0, 3.0, 0.626185395910082825116}},
    {{0.0, -50.0, 0.009999999999999999999985}},
    {{0.0, 50.0, 0.9797891799259343979097}},
    {{0.0, 10000.0, 0.9998999949987495372792}},
    {{0.0, -10000.0, 0.00005}},
    {{2.0, 1.0, 0.5607805643118292636279}},
    {{2.0, -3.0, 0.2168571826492736715567}},
    {{0.5, 5.0, 0.7702103711986613270606}},
    {{5.0, -10.0, 0.1120976690999114475625}},
    {{10.0, 20.0, 0.9594761934153618508151}},
    {{700.0, 300.0, 0.9984616296567890298741}},
}};

inline constexpr double kGainDcOrth_8_2_08 = 0.1055508601572223924946;
inline constexpr double kGainDcOrth_1e4_0_08 = 0.2665666766666666666667;
inline constexpr double kGainDcPar_1_4_08 = 0.1258021108379896113075;
inline constexpr double kGainDcPar_65_26_08 = 0.001184822927749541358497;
inline constexpr double kGainDcPar_2_8_08 = 0.1623146757134731425074;
inline constexpr double kGainAcOrthHalved_2_05_08 = 0.01373949694686816512567;
inline constexpr double kGainAcOrthHalved_5_m5_08 = 0.2428142061518773911747;
inline constexpr double kGainAcPar_m3_3_08 = 0.3507344123890667022205;
inline constexpr double kGainAcPar_0_1e4_08 = 0.4665866626656662964901;
inline constexpr double kFig3CornerLimit = 0.2239583051995364874768;

inline constexpr double kFig1Threshold = 2.147898387204208544819;
inline constexpr double kFig1Argmax = 9.186106592296979868897;
inline constexpr double kFig1MaxValue = 0.1067801696702022733965;
inline constexpr double kFig4CrossingA = 0.4012470623611965608546;
inline constexpr double kFig4CrossingB = 6.549562343317777992648;

inline constexpr double kAlignP_10D_70K_28kVmm = 0.966397686884935997491;
inline constexpr double kFieldForP1_10D_70K = 28973579.28313606983967;
inline constexpr double kFieldForQ1_1em23_300K = 2728588029.853564583003;

} // namespace refv
