"""Default resolventlab configuration parameters (overridable in configs/*.yaml)
"""

from yacs.config import CfgNode as CN

########################################################################################################################
cfg = CN()
cfg.name = ''       # Run name
cfg.debug = False   # Debugging flag
cfg.config = ''     # Path of the merged scenario file (filled in by the parser)
########################################################################################################################
### ARCH
########################################################################################################################
cfg.arch = CN()
cfg.arch.seed = 42                # Seed for sample-point generation
cfg.arch.jobs = 1                 # Worker processes for independent grid points
########################################################################################################################
### SOLVER
########################################################################################################################
cfg.solver = CN()
cfg.solver.tol = 1e-12            # Residual tolerance |z - tG(z) - w|
cfg.solver.min_step = 1e-10       # Continuation step below which the root is declared lost
cfg.solver.max_newton_iter = 50   # Newton iterations per continuation step
cfg.solver.initial_step = 0.1     # Upper bound of the first continuation step
cfg.solver.max_damping = 10       # Newton update halvings before a step is rejected
########################################################################################################################
### QUADRATURE
########################################################################################################################
cfg.quadrature = CN()
cfg.quadrature.real_nodes = 64    # Gauss-Legendre nodes for densities on compact intervals
cfg.quadrature.circle_nodes = 256 # Midpoint nodes for densities on the unit circle
########################################################################################################################
### GENERATOR_TEST
########################################################################################################################
cfg.generator_test = CN()
cfg.generator_test.grid_n = 64    # Angles x radii of the falsification grid
cfg.generator_test.r_max = 0.999  # Outermost radius of the grid
cfg.generator_test.tol = 1e-12    # Real parts below -tol count as violations
########################################################################################################################
### ODE
########################################################################################################################
cfg.ode = CN()
cfg.ode.rk_tol = 1e-10            # Local error tolerance of the Cash-Karp pair
cfg.ode.boundary_eps = 1e-12      # Distance to the boundary that truncates a trajectory
cfg.ode.max_steps = 100000        # Hard cap on accepted + rejected steps
########################################################################################################################
### FREEPROB
########################################################################################################################
cfg.freeprob = CN()
cfg.freeprob.wedge_gamma = 1.0                  # |Re z| < gamma Im z
cfg.freeprob.wedge_delta = 10.0                 # |z| > delta
cfg.freeprob.stieltjes_eps = [1e-1, 1e-2, 1e-3] # Distances to the real axis for inversion
########################################################################################################################
### OUTPUT
########################################################################################################################
cfg.output = CN()
cfg.output.path = 'results'       # Artifact folder
cfg.output.digits = 17            # Significant digits in CSV files
########################################################################################################################
### SCENARIO
########################################################################################################################
cfg.scenario = CN()
cfg.scenario.command = ''         # resolvent | chain | semigroup | freeconv | verify | figure
cfg.scenario.spec = ''            # JSON generator / field / measure / triple file
cfg.scenario.t = 1.0              # Final time (semigroup, figure)
cfg.scenario.t_grid = []          # Times at which maps are evaluated
cfg.scenario.points = []          # Query points as [re, im] pairs
cfg.scenario.sample_n = 0         # Extra seeded sample points (0 = none)
cfg.scenario.n_list = [2, 4, 8, 16, 32, 64, 128]  # Iteration counts of the exponential formula
cfg.scenario.x_grid = [-4.0, 4.0, 161]           # [lo, hi, n] for densities and figures
cfg.scenario.y_levels = [0.1, 0.5, 1.0, 2.0]     # Horizontal lines imaged by F-transforms
cfg.scenario.check = ''           # Named verification pipeline
cfg.scenario.figure = ''          # Named figure pipeline
########################################################################################################################


def get_cfg_defaults():
    return cfg.clone()
