#include "swarmpath/pso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmpath {

void PsoConfig::validate() const {
    if (swarm_size < 2) throw std::invalid_argument("swarm_size must be >= 2");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (!(omega_max >= omega_min)) throw std::invalid_argument("omega_max must be >= omega_min");
    if (c1 < 0.0 || c2 < 0.0) throw std::invalid_argument("learning rates must be >= 0");
    if (!(v_max > 0.0)) throw std::invalid_argument("v_max must be positive");
    if (convergence_epsilon < 0.0)
        throw std::invalid_argument("convergence_epsilon must be >= 0");
}

void SearchDomain::validate() const {
    if (lower.empty() || lower.size() != upper.size())
        throw std::invalid_argument("domain bounds must be non-empty and same size");
    for (std::size_t d = 0; d < lower.size(); ++d) {
        if (!(lower[d] < upper[d]))
            throw std::invalid_argument("domain lower bound must be < upper bound");
        if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]))
            throw std::invalid_argument("domain bounds must be finite");
    }
}

double inertia_weight(int it, const PsoConfig& config) {
    if (it < 0 || it > config.max_iterations)
        throw std::out_of_range("iteration index outside [0, max_iterations]");
    const long double w = static_cast<long double>(config.omega_max) -
                          (static_cast<long double>(config.omega_max) -
                           static_cast<long double>(config.omega_min)) *
                              static_cast<long double>(it) /
                              static_cast<long double>(config.max_iterations);
    return static_cast<double>(w);
}

SwarmState init_swarm(const PsoConfig& config, const SearchDomain& domain) {
    config.validate();
    domain.validate();

    const int n = config.swarm_size;
    const int dim = domain.dim();
    SwarmState state;
    state.dim = dim;
    state.swarm_size = n;
    state.rng.seed(config.rng_seed);
    state.positions.resize(static_cast<std::size_t>(n) * dim);
    state.velocities.resize(static_cast<std::size_t>(n) * dim);
    state.pbest_fitness.assign(n, std::numeric_limits<double>::infinity());

    for (int i = 0; i < n; ++i) {
        for (int d = 0; d < dim; ++d) {
            const double u = uniform01(state.rng);
            state.positions[static_cast<std::size_t>(i) * dim + d] =
                affine_from_unit(u, domain.lower[d], domain.upper[d]);
        }
        for (int d = 0; d < dim; ++d) {
            const double u = uniform01(state.rng);
            const double v = affine_from_unit(u, config.v_init_min, config.v_max);
            state.velocities[static_cast<std::size_t>(i) * dim + d] =
                std::clamp(v, -config.v_max, config.v_max);
        }
    }
    state.pbest_positions = state.positions;
    // Placeholder until the first evaluation pass; never steers motion
    // because step evaluates before it moves anything.
    state.gbest_position.assign(state.positions.begin(), state.positions.begin() + dim);
    return state;
}

void evaluate_swarm_serial(const SwarmState& state, const FitnessFn& fitness,
                           std::span<double> out) {
    for (int i = 0; i < state.swarm_size; ++i) {
        out[i] = fitness(state.position(i));
    }
}

void evaluate_swarm_parallel(const SwarmState& state, const FitnessFn& fitness,
                             std::span<double> out) {
#ifdef _OPENMP
    const int n = state.swarm_size;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        out[i] = fitness(state.position(i));
    }
#else
    evaluate_swarm_serial(state, fitness, out);
#endif
}

void step(SwarmState& state, const PsoConfig& config, const SearchDomain& domain,
          const FitnessFn& fitness) {
    const int n = state.swarm_size;
    const int dim = state.dim;

    std::vector<double> fit(n);
    if (config.parallel_eval) {
        evaluate_swarm_parallel(state, fitness, fit);
    } else {
        evaluate_swarm_serial(state, fitness, fit);
    }

    // pbest/gbest reduction in particle index order, strict improvement only.
    for (int i = 0; i < n; ++i) {
        double f = fit[i];
        if (std::isnan(f)) f = std::numeric_limits<double>::infinity();
        if (f < state.pbest_fitness[i]) {
            state.pbest_fitness[i] = f;
            std::copy_n(state.positions.begin() + static_cast<std::size_t>(i) * dim, dim,
                        state.pbest_positions.begin() + static_cast<std::size_t>(i) * dim);
        }
        if (state.pbest_fitness[i] < state.gbest_fitness) {
            state.gbest_fitness = state.pbest_fitness[i];
            std::copy_n(state.pbest_positions.begin() + static_cast<std::size_t>(i) * dim,
                        dim, state.gbest_position.begin());
        }
    }

    const double w = inertia_weight(state.iteration, config);
    for (int i = 0; i < n; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) * dim;
        for (int d = 0; d < dim; ++d) {
            const double r1 = uniform01(state.rng);
            const double r2 = uniform01(state.rng);
            const double x = state.positions[base + d];
            double v = w * state.velocities[base + d] +
                       config.c1 * r1 * (state.pbest_positions[base + d] - x) +
                       config.c2 * r2 * (state.gbest_position[d] - x);
            v = std::clamp(v, -config.v_max, config.v_max);
            state.velocities[base + d] = v;
            state.positions[base + d] =
                std::clamp(x + v, domain.lower[d], domain.upper[d]);
        }
    }
    ++state.iteration;
}

double position_spread(const SwarmState& state) {
    double spread = 0.0;
    for (int d = 0; d < state.dim; ++d) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < state.swarm_size; ++i) {
            const double x = state.positions[static_cast<std::size_t>(i) * state.dim + d];
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        spread = std::max(spread, hi - lo);
    }
    return spread;
}

OptimizeResult optimize(const PsoConfig& config, const SearchDomain& domain,
                        const FitnessFn& fitness) {
    SwarmState state = init_swarm(config, domain);
    int used = 0;
    for (int it = 0; it < config.max_iterations; ++it) {
        step(state, config, domain, fitness);
        ++used;
        if (position_spread(state) < config.convergence_epsilon) break;
    }
    return {state.gbest_position, state.gbest_fitness, used};
}

}  // namespace swarmpath
