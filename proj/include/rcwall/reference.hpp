#pragma once

#include <array>
#include <string_view>

#include "rcwall/wall_model.hpp"

// Reference results used to cross-check the statistics pipeline and the
// wall model, to two decimals.
namespace rcwall::reference {

inline constexpr std::array<std::string_view, 10> kAlgorithms = {
    "FPA", "GWO", "ICA", "PSO", "LFBBO", "BBO", "DE", "MSA", "IHS", "FAGLSUD"};

/// Mean cost over 101 runs, example 1, cases 1..9, one row per kAlgorithms entry.
inline constexpr std::array<std::array<double, 9>, 10> kExample1CostMeans = {{
    {83.66, 97.78, 133.92, 81.71, 92.89, 136.73, 81.62, 89.53, 152.26},
    {86.10, 102.94, 140.60, 84.15, 97.79, 143.03, 84.08, 94.16, 157.01},
    {73.84, 91.06, 126.17, 72.64, 86.13, 128.12, 71.09, 82.00, 142.61},
    {62.86, 84.01, 117.36, 59.78, 79.51, 119.63, 57.15, 75.49, 131.80},
    {63.16, 89.08, 121.31, 59.37, 82.33, 121.33, 56.89, 77.21, 131.83},
    {62.96, 84.65, 118.84, 59.36, 80.19, 121.26, 56.96, 75.76, 133.90},
    {86.06, 102.86, 140.97, 84.94, 98.57, 142.84, 84.19, 94.11, 157.75},
    {62.50, 83.98, 116.97, 59.38, 79.62, 119.00, 56.89, 75.67, 131.89},
    {63.80, 84.34, 118.39, 60.52, 79.87, 120.75, 57.83, 75.60, 133.05},
    {62.45, 83.93, 116.71, 59.35, 79.51, 118.90, 56.88, 75.44, 131.06},
}};

inline constexpr std::array<double, 10> kExample1CostAverageRank = {8.00, 9.33, 7.00, 3.06, 4.83,
                                                                    4.56, 9.67, 2.83, 4.67, 1.05};
inline constexpr std::array<int, 10> kExample1CostOverallRank = {8, 9, 7, 3, 6, 4, 10, 2, 5, 1};

/// Mean weight (kg), example 2, cases 1..9.
inline constexpr std::array<double, 9> kExample2WeightFaglsud = {8640.82, 10709.61, 13323.81, 8277.24, 10087.33,
                                                                 13104.87, 8093.61, 9444.77, 13179.25};
inline constexpr std::array<double, 9> kExample2WeightPso = {8644.37, 10709.76, 13325.32, 8281.45, 10086.42,
                                                             13105.54, 8098.19, 9444.05, 13180.74};

struct ReferenceDesign {
    Example example;
    int seismic_case;
    Position position;  // X1..X8 in m, R1..R4 as continuous catalog indices
    double value;
};

/// Best-cost designs for example 1, cases 1..9.
inline constexpr std::array<ReferenceDesign, 9> kExample1CostDesigns = {{
    {Example::One, 1, {1.51, 0.78, 0.20, 0.20, 0.27, 1.31, 0.20, 0.20, 28.03, 17.98, 17.96, 7.37}, 62.33},
    {Example::One, 2, {2.09, 0.78, 0.27, 0.20, 0.27, 1.39, 0.20, 0.20, 45.29, 14.09, 14.47, 7.51}, 83.42},
    {Example::One, 3, {2.86, 0.78, 0.33, 0.20, 0.27, 2.17, 0.20, 0.20, 82.67, 14.60, 14.28, 7.81}, 115.97},
    {Example::One, 4, {1.51, 0.78, 0.20, 0.20, 0.27, 1.31, 0.20, 0.20, 14.72, 14.12, 14.18, 7.84}, 59.27},
    {Example::One, 5, {2.00, 0.78, 0.26, 0.20, 0.27, 1.43, 0.20, 0.20, 37.56, 14.19, 14.21, 7.15}, 79.00},
    {Example::One, 6, {2.93, 0.78, 0.33, 0.20, 0.27, 1.38, 0.20, 0.20, 82.90, 14.44, 14.06, 7.46}, 118.38},
    {Example::One, 7, {1.51, 0.78, 0.20, 0.20, 0.27, 1.31, 0.20, 0.20, 6.67, 14.71, 14.04, 7.18}, 56.88},
    {Example::One, 8, {1.91, 0.78, 0.24, 0.20, 0.27, 1.31, 0.20, 0.20, 33.02, 14.92, 14.07, 7.97}, 74.88},
    {Example::One, 9, {3.17, 0.78, 0.32, 0.20, 0.27, 1.31, 0.20, 0.20, 102.56, 14.42, 14.57, 7.04}, 130.83},
}};

/// Best-cost designs for example 2, cases 1..9.
inline constexpr std::array<ReferenceDesign, 9> kExample2CostDesigns = {{
    {Example::Two, 1, {2.90, 0.87, 0.47, 0.30, 0.54, 2.60, 0.30, 0.30, 97.82, 56.11, 56.04, 20.19}, 246.78},
    {Example::Two, 2, {3.89, 1.22, 0.59, 0.30, 0.54, 2.60, 0.32, 0.30, 129.16, 56.87, 56.60, 20.29}, 310.53},
    {Example::Two, 3, {4.92, 1.55, 0.66, 0.30, 0.54, 4.40, 0.32, 0.30, 166.01, 56.00, 56.04, 20.66}, 382.98},
    {Example::Two, 4, {2.90, 0.87, 0.41, 0.30, 0.54, 2.60, 0.30, 0.30, 77.72, 56.57, 56.07, 20.17}, 228.79},
    {Example::Two, 5, {3.67, 1.09, 0.57, 0.30, 0.54, 2.90, 0.30, 0.30, 114.99, 56.22, 56.97, 20.39}, 291.23},
    {Example::Two, 6, {4.91, 1.47, 0.66, 0.30, 0.54, 3.84, 0.30, 0.30, 159.54, 57.00, 56.37, 20.07}, 376.07},
    {Example::Two, 7, {2.90, 1.56, 0.33, 0.30, 0.54, 2.60, 0.30, 0.30, 51.81, 56.90, 56.77, 20.87}, 206.93},
    {Example::Two, 8, {3.40, 0.94, 0.49, 0.30, 0.54, 2.60, 0.30, 0.30, 111.06, 56.66, 56.59, 20.95}, 270.63},
    {Example::Two, 9, {4.99, 1.43, 0.65, 0.30, 0.54, 2.60, 0.30, 0.30, 159.78, 56.01, 56.00, 20.23}, 377.77},
}};

} // namespace rcwall::reference
