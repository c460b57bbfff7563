#pragma once

// Generated by tests/oracles/generate_goldens.py (mpmath, 200 digits). Frozen.

namespace golden {

inline constexpr double kMl_05_m1 = 0.42758357615580700441;
inline constexpr double kMl_05_m1_erfc = 0.42758357615580700441;
inline constexpr double kMl_03_m2 = 0.29023222616787535504;
inline constexpr double kMl_08_m5 = 0.057595384762152244264;
inline constexpr double kMl_09_m20 = 0.0057495078161091125836;
inline constexpr double kMl_06_m15 = 0.030759491256463480407;
inline constexpr double kMl_07_p1 = 3.7041461454375862416;
inline constexpr double kPrabhakar_2_05_2_m05 = 0.51186097742312310247;
inline constexpr double kPrabhakar_3_07_15_m1 = 0.093347292420647338326;
inline constexpr double kMlPdf_05_1_1 = 0.13660600739194928254;
inline constexpr double kMlPdf_07_2_05 = 0.4012229217022935991;
inline constexpr double kPsiUniform_2 = 1.4426950408889634074;
inline constexpr double kLevyTailStable03_2 = 0.62574558720816464626;
inline constexpr double kCaputoLinearHalf = 1.1283791670955125739;
inline constexpr double kMixtureDerivLinear = 1.1073949570354837889;
inline constexpr double kInvDensity_05_1_1 = 0.43939128946772239705;
inline constexpr double kInvDensity_03_05_1 = 0.56100164873166428441;
inline constexpr double kInvDensity_07_1_2 = 0.30768098535524896809;
inline constexpr double kInvDensity_08_02_1 = 0.28003858181235394613;
inline constexpr double kStableDensity_05_1 = 0.21969564473386119852;
inline constexpr double kStableDensity_07_15 = 0.18530890306577911491;
inline constexpr double kStableDensity_03_4 = 0.024840312475858108125;
inline constexpr double kPmf05_1_1_n0 = 0.42758357615580700441;
inline constexpr double kPmf05_1_1_n1 = 0.27321201478389856507;
inline constexpr double kPmf05_1_1_n2 = 0.15437156137190843934;
inline constexpr double kPmf05_1_1_n3 = 0.079226968941326750492;
inline constexpr double kPmf05_1_1_n4 = 0.037572296215290844422;
inline constexpr double kPmf05_1_1_n5 = 0.016661869090414362428;
inline constexpr double kPmf05_1_1_n6 = 0.0069701423749588273312;
inline constexpr double kPmf05_1_1_n7 = 0.0027690647758444385991;
inline constexpr double kPmf05_1_1_n8 = 0.001050269399778597183;
inline constexpr double kPmf05_1_1_n9 = 0.0003819545280146314258;
inline constexpr double kPmf05_1_1_n10 = 0.00013366297435279315144;
inline constexpr double kPmf07_2_15_n0 = 0.15779737853469846993;
inline constexpr double kPmf07_2_15_n1 = 0.17349914378046301813;
inline constexpr double kPmf07_2_15_n3 = 0.14856302161738594184;
inline constexpr double kPmf07_2_15_n6 = 0.059242096686782445721;
inline constexpr double kRenewalMean05 = 1.1283791670955125739;

}  // namespace golden
