#pragma once

// Result tags attached to classification flags, closed forms and witnesses.

namespace pm::cite {

inline constexpr const char* kPrimeFractions = "Example 2.1";
inline constexpr const char* kIncreasingAtomic = "Prop 3.2";
inline constexpr const char* kExampleAB = "Example 3.2";
inline constexpr const char* kScaling = "Lemma 3.3";
inline constexpr const char* kInfiniteAtoms = "Prop 3.4";
inline constexpr const char* kNonMonotoneConverse = "Thm 3.6";
inline constexpr const char* kHereditaryIncreasing = "Cor 3.7";
inline constexpr const char* kStronglyBoundedDecreasing = "Prop 4.6";
inline constexpr const char* kBothMonotone = "Prop 4.8";
inline constexpr const char* kPrimaryDefinition = "Def 5.1";
inline constexpr const char* kPartialSumsAtoms = "Prop 5.4";
inline constexpr const char* kMertensEstimate = "Eq. 5.3";
inline constexpr const char* kPrimaryUnboundedSubmonoid = "Cor 5.6";
inline constexpr const char* kDenominatorSupport = "Lemma 5.8";
inline constexpr const char* kPrimaryHereditary = "Thm 5.9";
inline constexpr const char* kPrimaryAtomsOracle = "oracle-backed";
inline constexpr const char* kGeometric = "Thm 6.2";
inline constexpr const char* kGeometricBoundedness = "Cor 6.3";
inline constexpr const char* kGeoPartialSums = "Example 6.4";
inline constexpr const char* kUnboundedGeometric = "Prop 6.5";
inline constexpr const char* kTrivialMonoid = "trivial";

}  // namespace pm::cite
