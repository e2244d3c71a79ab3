#pragma once

#include <string>
#include <vector>

namespace eigendist {

struct FigureTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// E|lambda|^2 against d on [1, 10] (step 0.05) for n in {2, 3, 5, 10}.
FigureTable figure1_left();

/// E|lambda|^2 against n = 1..30 for d in {1, 2, 3, 5}.
FigureTable figure1_right();

/// Normalized density at d = 1 for n in {10, 50, 100} on tau in [0, 3]
/// (step 0.01), plus the indicator-of-[0,1] limit column.
FigureTable figure2_left();

/// Normalized density at d = 2 for n in {2, 3, 5} on tau in [0, 4]
/// (step 0.01), plus the 2 e^{-2 tau} limit column.
FigureTable figure2_right();

/// CSV with header row, comma separators, LF endings, 17-significant-digit
/// floats.
void write_figure_csv(const std::string& path, const FigureTable& table);

}  // namespace eigendist
