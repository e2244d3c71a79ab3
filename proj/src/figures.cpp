#include "eigendist/figures.hpp"

#include <fstream>
#include <stdexcept>

#include "eigendist/density.hpp"
#include "eigendist/system_io.hpp"

namespace eigendist {

FigureTable figure1_left() {
    FigureTable t;
    t.columns = {"d", "n2", "n3", "n5", "n10"};
    const int ns[4] = {2, 3, 5, 10};
    for (int i = 0; i <= 180; ++i) {
        const double d = 1.0 + 0.05 * i;
        std::vector<double> row{d};
        for (int n : ns) row.push_back(expectation_modulus_sq({n, d}));
        t.rows.push_back(std::move(row));
    }
    return t;
}

FigureTable figure1_right() {
    FigureTable t;
    t.columns = {"n", "d1", "d2", "d3", "d5"};
    const double ds[4] = {1.0, 2.0, 3.0, 5.0};
    for (int n = 1; n <= 30; ++n) {
        std::vector<double> row{static_cast<double>(n)};
        for (double d : ds) row.push_back(expectation_modulus_sq({n, d}));
        t.rows.push_back(std::move(row));
    }
    return t;
}

FigureTable figure2_left() {
    FigureTable t;
    t.columns = {"tau", "n10", "n50", "n100", "indicator"};
    const int ns[3] = {10, 50, 100};
    for (int i = 0; i <= 300; ++i) {
        const double tau = 0.01 * i;
        std::vector<double> row{tau};
        for (int n : ns) row.push_back(density_normalized({n, 1.0}, tau));
        row.push_back(density_limit(1.0, tau));
        t.rows.push_back(std::move(row));
    }
    return t;
}

FigureTable figure2_right() {
    FigureTable t;
    t.columns = {"tau", "n2", "n3", "n5", "limit"};
    const int ns[3] = {2, 3, 5};
    for (int i = 0; i <= 400; ++i) {
        const double tau = 0.01 * i;
        std::vector<double> row{tau};
        for (int n : ns) row.push_back(density_normalized({n, 2.0}, tau));
        row.push_back(density_limit(2.0, tau));
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_figure_csv(const std::string& path, const FigureTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write CSV: " + path);
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const std::vector<double>& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_double(row[i]);
        }
        out << '\n';
    }
}

}  // namespace eigendist
