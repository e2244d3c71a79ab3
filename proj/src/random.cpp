#include "eigendist/random.hpp"

#include <cmath>
#include <stdexcept>

namespace eigendist {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t index) {
    return splitmix64(base_seed ^ splitmix64(index + 1));
}

std::vector<double> TruncatedGeometricSpec::pmf() const {
    if (q < 0.0 || q >= 1.0 || n < 1) {
        throw std::invalid_argument("TruncatedGeometricSpec: need 0 <= q < 1, n >= 1");
    }
    std::vector<double> p(static_cast<std::size_t>(n));
    if (q == 0.0) {
        p[0] = 1.0;
        return p;
    }
    const double one_minus_qn = -std::expm1(n * std::log(q));
    double qk = 1.0;  // q^{k-1}
    for (int k = 1; k <= n; ++k) {
        p[static_cast<std::size_t>(k - 1)] = qk * (1.0 - q) / one_minus_qn;
        qk *= q;
    }
    return p;
}

std::complex<double> sample_complex_std_normal(SeededGenerator& gen) {
    return gen.complex_normal();
}

HomogeneousSystem sample_weyl_system(int n, int d, SeededGenerator& gen) {
    if (n < 1 || d < 1) throw std::invalid_argument("sample_weyl_system: need n >= 1, d >= 1");
    const std::size_t k = multi_index_count(n, d);
    std::vector<HomogeneousPoly> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<cplx> weyl(k);
        for (std::size_t j = 0; j < k; ++j) weyl[j] = gen.complex_normal();
        comps.push_back(HomogeneousPoly::from_weyl_coeffs(n, d, weyl));
    }
    return HomogeneousSystem(std::move(comps));
}

Eigen::MatrixXcd sample_ginibre(int n, SeededGenerator& gen) {
    if (n < 1) throw std::invalid_argument("sample_ginibre: n >= 1 required");
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) A(i, j) = gen.complex_normal();
    }
    return A;
}

int sample_truncated_geometric(const TruncatedGeometricSpec& spec, SeededGenerator& gen) {
    const std::vector<double> p = spec.pmf();
    const double u = gen.uniform01();
    double cum = 0.0;
    for (int k = 1; k <= spec.n; ++k) {
        cum += p[static_cast<std::size_t>(k - 1)];
        if (u < cum) return k;
    }
    return spec.n;
}

int fold_trial_to_support(long long l, int n) {
    if (l < 1 || n < 1) throw std::invalid_argument("fold_trial_to_support: need l >= 1, n >= 1");
    return static_cast<int>((l - 1) % n) + 1;
}

int sample_truncated_geometric_modn(double q, int n, SeededGenerator& gen) {
    if (q <= 0.0 || q >= 1.0 || n < 1) {
        throw std::invalid_argument("sample_truncated_geometric_modn: need 0 < q < 1, n >= 1");
    }
    long long l = 1;
    while (gen.uniform01() < q) ++l;  // failure with probability q
    return fold_trial_to_support(l, n);
}

double sample_chi_square(int dof, SeededGenerator& gen) {
    if (dof < 2 || dof % 2 != 0) throw std::invalid_argument("sample_chi_square: dof must be positive even");
    double sum = 0.0;
    for (int i = 0; i < dof; ++i) {
        const double x = gen.normal_std();
        sum += x * x;
    }
    return sum;
}

double sample_chi_square_gamma(int dof, SeededGenerator& gen) {
    if (dof < 2 || dof % 2 != 0) throw std::invalid_argument("sample_chi_square_gamma: dof must be positive even");
    double sum = 0.0;
    for (int i = 0; i < dof / 2; ++i) {
        sum += -2.0 * std::log(1.0 - gen.uniform01());
    }
    return sum;
}

int sample_mixture_index(int n, double d, SeededGenerator& gen) {
    if (n < 1 || d < 1.0) throw std::invalid_argument("sample_mixture_index: need n >= 1, d >= 1");
    if (d == 1.0) {
        int k = 1 + static_cast<int>(gen.uniform01() * n);
        return k > n ? n : k;
    }
    return sample_truncated_geometric(TruncatedGeometricSpec{1.0 / d, n}, gen);
}

double sample_eigenvalue_modulus_sq(int n, double d, SeededGenerator& gen) {
    const int k = sample_mixture_index(n, d, gen);
    return 0.5 * sample_chi_square(2 * k, gen);
}

std::complex<double> sample_eigenvalue(int n, double d, SeededGenerator& gen) {
    const double modulus = std::sqrt(sample_eigenvalue_modulus_sq(n, d, gen));
    const double theta = 2.0 * M_PI * gen.uniform01();
    return {modulus * std::cos(theta), modulus * std::sin(theta)};
}

}  // namespace eigendist
