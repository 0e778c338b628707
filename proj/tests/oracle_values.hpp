#pragma once

// Reference values evaluated at 40 significant digits (tests/oracles/derive_values.py).
namespace oracle {

inline constexpr double gamma_075 = 1.2254167024651776451;
inline constexpr double beta_075_075 = 1.6944261695879581732;
inline constexpr double beta_075_025 = 4.442882938158366247;
inline constexpr double beta_2_075 = 0.76190476190476190476;
inline constexpr double ml_075_075_at_1 = 3.6787264341661804746;
inline constexpr double ml_solution_at_1 = 4.5079728162274022969;  // Gamma(.75) E_{.75,.75}(1)
inline constexpr double ml_075_1_at_m1 = 0.39310830281575406177;
inline constexpr double ml_05_1_at_m2 = 0.25539567631050574387;
inline constexpr double inv_gamma_025 = 0.27581566283020931436;
inline constexpr double inv_gamma_175 = 1.0880652521310173081;

inline constexpr double small_c_15 = 1.218732303156066035;
inline constexpr double big_C_15 = 4.8749292126242641401;
inline constexpr double big_D_15 = 6.5693553822122223133;
inline constexpr double big_E_15 = 5.3609154902137479352;
inline constexpr double small_c_43 = 1.139753528477388821;
inline constexpr double big_C_43 = 4.559014113909555284;
inline constexpr double big_D_43 = 6.2534402834975134572;
inline constexpr double big_E_43 = 5.1031133090624867501;

inline constexpr double rhs_075 = 0.16669432161567304447;
inline constexpr double rhs_06 = 0.15876675315737470415;
inline constexpr double rhs_09 = 0.183585076375459675;
inline constexpr double min_length_075_15 = 0.06805831757494999317;
inline constexpr double min_length_075_43 = 0.091740494059272800821;
inline constexpr double lhs_075_15_half = 0.62996052494743658238;

}  // namespace oracle
