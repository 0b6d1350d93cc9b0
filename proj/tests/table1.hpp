#pragma once

// Published forward differences (Delta^j p_{2,6,10})(k): row j, column k.

#include <array>

namespace peakpoly::testdata {

inline constexpr std::array<std::array<long, 11>, 11> table1 = {{
    {-8, -4, 0, 2, 4, 6, 0, -18, -72, -196, 0},
    {4, 4, 2, 2, 2, -6, -18, -54, -124, 196, 3094},
    {0, -2, 0, 0, -8, -12, -36, -70, 320, 2898, 12376},
    {-2, 2, 0, -8, -4, -24, -34, 390, 2578, 9478, 26564},
    {4, -2, -8, 4, -20, -10, 424, 2188, 6900, 17086, 36376},
    {-6, -6, 12, -24, 10, 434, 1764, 4712, 10186, 19290, 33324},
    {0, 18, -36, 34, 424, 1330, 2948, 5474, 9104, 14034, 20460},
    {18, -54, 70, 390, 906, 1618, 2526, 3630, 4930, 6426, 8118},
    {-72, 124, 320, 516, 712, 908, 1104, 1300, 1496, 1692, 1888},
    {196, 196, 196, 196, 196, 196, 196, 196, 196, 196, 196},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
}};

}  // namespace peakpoly::testdata
