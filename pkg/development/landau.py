from hampic import (
    commands,
    configuration,
    diagnostics,
    fem,
    integrators,
    particles,
    scenarios,
)

config = configuration.parse_config(
    overrides=['preset="landau_k05"', "scenario.n_particles=20000", "time.t_final=5.0"]
)
simulation = commands.setup.prepare(config)

print(simulation.space)
print(scenarios.total_mass(config.scenario))
print(particles.total_charge(simulation.state.ensemble))

rows = []
M = simulation.model.stiffness


def record(state):
    phi = state.field.phi
    rows.append(diagnostics.diagnostics_row(state.time, state.ensemble, phi, M))


final = integrators.run(
    simulation.state,
    simulation.scheme,
    simulation.model,
    simulation.bspec,
    config.time.t_final,
    [integrators.Schedule(every=10, observer=record)],
)

t = [row[0] for row in rows]
e_d = [row[1] for row in rows]

fit = diagnostics.fit_damping_rate(t, e_d, fallback=True)
print(fit.gamma, fit.r_squared, fit.n_peaks)

load = particles.deposit(
    final.ensemble, simulation.model.kernel, simulation.space, simulation.model.rho0
)
coefficients = fem.solve_poisson(M, load.F, config.solver, scale=load.scale)
print(coefficients.iterations, coefficients.residual_norm)
