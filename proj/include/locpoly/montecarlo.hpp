#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locpoly/bandwidth.hpp"
#include "locpoly/dgp.hpp"
#include "locpoly/kernels.hpp"

namespace locpoly {

enum class Target { regression, derivative };
enum class Stat { bias, mse };

const char* target_name(Target t);
const char* stat_name(Stat s);

// Knobs shared by every cell of an experiment.
struct RunOptions {
    bool mu2_squared = false;
    double stationary_variance = 0.01;        // Var(e_t) of the paper presets
    std::optional<double> sigma2_override;    // DGP-only override (noiseless runs);
                                              // the amise oracle keeps the nominal variance
    std::optional<double> fixed_h;            // bandwidth for Selector::fixed
    std::optional<double> bandwidth_override; // forces every selector to this h (validation hook)
    bool paper_literal_m1_derivative = false;
    CvSearch cv;
};

struct ExperimentConfig {
    std::vector<Model> models{Model::m1};
    std::vector<double> rhos{0.0, 0.5, 0.9};
    std::vector<int> ns{200, 600};
    std::vector<double> x0s_m1;  // defaults to {pi/2, pi, 3pi/2}
    std::vector<double> x0s_m2;  // defaults to {0.25, 0.5, 0.75}
    int replications = 1000;
    int order = 1;
    KernelId kernel = KernelId::epanechnikov;
    std::uint64_t master_seed = 1;
    RunOptions options;

    const std::vector<double>& x0s(Model m) const;
};

ExperimentConfig default_experiment_config();

// All selector estimates for one (model, rho, n) cell under common random
// numbers: the dataset of replication r depends only on (seed, r).
struct CellData {
    std::vector<double> x0s;
    int replications = 0;
    int order = 0;
    // Indexing: [selector][x0][replication] flattened; selector order
    // amise=0, cv=1, rot=2, fixed=3.
    static constexpr int kSelectors = 4;
    std::vector<std::uint8_t> ok;
    std::vector<double> b0;
    std::vector<double> b1;
    std::vector<double> h;              // [selector][replication]
    std::vector<std::uint8_t> h_ok;     // [selector][replication]
    std::vector<std::uint64_t> dataset_checksum;  // [replication]

    std::size_t est_index(Selector s, std::size_t x0_idx, std::size_t r) const;
    std::size_t h_index(Selector s, std::size_t r) const;
};

int selector_index(Selector s);

CellData compute_cell(Model model, double rho, int n, const std::vector<double>& x0s, int R,
                      int order, const Kernel& k, std::uint64_t seed, const RunOptions& opts = {});

// Per-replication estimates of b_0 (and b_1 when order >= 1) against the
// model truth.  Replications whose bandwidth selection or fit raised a
// domain error are excluded; more than 5% exclusions raises CellFailed.
struct CellResult {
    double bias[2] = {0.0, 0.0};
    double mse[2] = {0.0, 0.0};
    std::vector<double> estimates_b0;
    std::vector<double> estimates_b1;
    std::vector<double> h_values;
    std::vector<std::uint64_t> dataset_checksums;
    int excluded = 0;
    int replications = 0;
};

CellResult run_cell(Model model, double rho, int n, double x0, Selector selector, int R, int order,
                    const Kernel& k, std::uint64_t seed, const RunOptions& opts = {});

// Extracts the run_cell aggregation from an already computed cell.
CellResult aggregate_cell(const CellData& cd, Model model, Selector selector, std::size_t x0_idx,
                          const RunOptions& opts);

struct RatioRow {
    Model model = Model::m1;
    double rho = 0.0;
    int n = 0;
    double x0 = 0.0;
    Target target = Target::regression;
    Stat stat = Stat::bias;
    Selector selector = Selector::cv;
    double ratio = 0.0;
    double raw_num = 0.0;
    double raw_den = 0.0;
    int excluded = 0;
};

struct RatioTable {
    std::vector<RatioRow> rows;
    std::vector<std::string> failed_cells;
};

RatioTable build_tables(const ExperimentConfig& cfg);

// Differences m_hat(x0; h_sel) - m_hat(x0; h_amise) per replication, for the
// regression coefficient and (order >= 1) the derivative.  A replication is
// kept only when amise, cv and rot all produced estimates at x0.
struct FigureSamples {
    std::vector<double> reg_cv;
    std::vector<double> reg_rot;
    std::vector<double> der_cv;
    std::vector<double> der_rot;
    int excluded = 0;
};

FigureSamples figure_samples(const ExperimentConfig& cfg, Model model, double rho, int n,
                             double x0);
FigureSamples figure_samples_from_cell(const CellData& cd, std::size_t x0_idx);

// Runs the full experiment and writes ratios.csv, figure_<cell>.csv files and
// meta.json under out_dir.
void run_experiment(const ExperimentConfig& cfg, const std::string& out_dir);

void write_ratios_csv(const RatioTable& table, std::ostream& out);

} // namespace locpoly
