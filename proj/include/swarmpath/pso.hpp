#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <vector>

namespace swarmpath {

/**
 * Particle swarm parameters. Defaults follow the classic linearly
 * decreasing inertia weight setup (w 0.9 -> 0.4, c1 = c2 = 2).
 *
 * v_max caps the absolute value of each velocity component. v_init_min
 * only bounds the initial velocity draw, v ~ U[v_init_min, v_max].
 */
struct PsoConfig {
    int swarm_size = 500;
    int max_iterations = 100;
    double omega_max = 0.9;
    double omega_min = 0.4;
    double c1 = 2.0;  // individual learning rate
    double c2 = 2.0;  // group learning rate
    double v_max = 200.0;
    double v_init_min = 0.0;
    double convergence_epsilon = 1e-6;
    std::uint64_t rng_seed = 0;
    bool parallel_eval = true;  // OpenMP fitness evaluation when compiled in

    void validate() const;  // throws std::invalid_argument
};

struct SearchDomain {
    std::vector<double> lower;
    std::vector<double> upper;

    static SearchDomain interval(double lo, double hi) { return {{lo}, {hi}}; }
    [[nodiscard]] int dim() const { return static_cast<int>(lower.size()); }
    void validate() const;
};

/**
 * Swarm state in structure-of-arrays layout: particle i's coordinates live
 * at [i*dim, (i+1)*dim). The RNG is part of the state so the stream is a
 * pure function of the seed across init and every subsequent step.
 */
struct SwarmState {
    int dim = 0;
    int swarm_size = 0;
    int iteration = 0;
    std::vector<double> positions;
    std::vector<double> velocities;
    std::vector<double> pbest_positions;
    std::vector<double> pbest_fitness;
    std::vector<double> gbest_position;
    double gbest_fitness = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng;

    [[nodiscard]] std::span<const double> position(int i) const {
        return {positions.data() + static_cast<std::size_t>(i) * dim,
                static_cast<std::size_t>(dim)};
    }
};

using FitnessFn = std::function<double(std::span<const double>)>;

struct OptimizeResult {
    std::vector<double> best_position;
    double best_fitness = std::numeric_limits<double>::infinity();
    int iterations_used = 0;
};

/// Uniform double in [0, 1) from the top 53 bits of the generator output.
/// Pinned mapping, so seeded runs reproduce bit-exactly everywhere.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double affine_from_unit(double u, double lo, double hi) {
    return lo + u * (hi - lo);
}

/// Linearly decreasing inertia weight, evaluated through long double so the
/// returned values are the correctly rounded linear schedule.
/// Rejects it outside [0, max_iterations].
double inertia_weight(int it, const PsoConfig& config);

/// Draw order: particles in index order; per particle all position
/// coordinates, then all velocity coordinates. pbest starts at the initial
/// position with +inf fitness (nothing evaluated yet).
SwarmState init_swarm(const PsoConfig& config, const SearchDomain& domain);

/// Fitness of every particle at its current position, written to out[i].
/// The serial loop is the reference; the parallel kernel must produce
/// bit-identical output (pure fitness, indexed stores).
void evaluate_swarm_serial(const SwarmState& state, const FitnessFn& fitness,
                           std::span<double> out);
void evaluate_swarm_parallel(const SwarmState& state, const FitnessFn& fitness,
                             std::span<double> out);

/**
 * One iteration: evaluate all particles, fold pbest/gbest in particle index
 * order (strict improvement only, NaN treated as +inf), then update
 * velocities and positions with fresh r1, r2 per particle per dimension
 * (r1 before r2), clamp |v| to v_max and positions to the domain.
 */
void step(SwarmState& state, const PsoConfig& config, const SearchDomain& domain,
          const FitnessFn& fitness);

/// Max over dimensions of (max - min) particle coordinate; the convergence
/// measure used by optimize.
double position_spread(const SwarmState& state);

/// init_swarm + step until max_iterations or the swarm collapses below
/// convergence_epsilon. Always runs at least one step.
OptimizeResult optimize(const PsoConfig& config, const SearchDomain& domain,
                        const FitnessFn& fitness);

}  // namespace swarmpath
