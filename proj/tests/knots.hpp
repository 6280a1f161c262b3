#pragma once

// Standard PD codes shared by the unit tests.
namespace knots {

inline constexpr const char* kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
inline constexpr const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
inline constexpr const char* k51 = "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)";
inline constexpr const char* k63 = "X(9,12,10,1) X(1,5,2,4) X(7,3,8,2) X(3,9,4,8) X(5,10,6,11) X(11,6,12,7)";
inline constexpr const char* k73 =
    "X(14,9,1,10) X(8,1,9,2) X(2,7,3,8) X(10,3,11,4) X(4,11,5,12) X(12,5,13,6) X(6,13,7,14)";
inline constexpr const char* kHopf = "X(4,1,3,2) X(2,3,1,4)";
// Two unlinked trefoils drawn apart: determinant 0.
inline constexpr const char* kSplitTrefoils = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) X(7,11,8,10) X(9,7,10,12) X(11,9,12,8)";

}  // namespace knots
