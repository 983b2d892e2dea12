"""Moments of traces over compact simply connected semisimple Lie groups.

Three independent routes to the same numbers:

* exact character-ring evaluation (:mod:`liemoments.charring`),
* quadrature on the maximal torus (:mod:`liemoments.torusquad`),
* closed-form leading-order asymptotics (:mod:`liemoments.asymptotics`),

on top of exact root data (:mod:`liemoments.rootsys`) and weight systems
(:mod:`liemoments.repweights`), with a convergence harness and CLI
(:mod:`liemoments.harness`, :mod:`liemoments.cli`).
"""

from .asymptotics import (AsymptoticEstimate, ClassFunction, HypothesisError,
                          biane_dimension_estimate, cycle_constants,
                          leading_term_I, leading_term_K, mehta_closed_form,
                          nu_character, vanish_leading_constant)
from .charring import (CycleType, SupportCapExceeded, adams, decompose, dual,
                       exact_moment, greedy_decompose, invariant_dimension,
                       permutation_trace_bruteforce, product,
                       trivial_multiplicity)
from .harness import (ConvergenceReport, ExperimentConfig, HypothesisVerdict,
                      check_hypotheses, run_experiment)
from .repweights import (SecondMoment, WeightSystem, a_lambda, is_regular,
                         weight_system, weyl_dimension)
from .rootsys import (ConfigurationError, FundamentalGroup, RootSystem,
                      build_root_system, dominant_representative,
                      fundamental_group, kappa, pairing, weyl_orbit)
from .torusquad import (GridError, TorusGrid, character_at, default_grid,
                        mehta_quadrature, quad_I_N, quad_K_N,
                        weyl_denominator_sq)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticEstimate", "ClassFunction", "ConfigurationError",
    "ConvergenceReport", "CycleType", "ExperimentConfig", "FundamentalGroup",
    "GridError", "HypothesisError", "HypothesisVerdict", "RootSystem",
    "SecondMoment", "SupportCapExceeded", "TorusGrid", "WeightSystem",
    "a_lambda", "adams", "biane_dimension_estimate", "build_root_system",
    "character_at", "check_hypotheses", "cycle_constants", "decompose",
    "default_grid", "dominant_representative", "dual", "exact_moment",
    "fundamental_group", "greedy_decompose", "invariant_dimension", "kappa",
    "leading_term_I", "leading_term_K", "mehta_closed_form",
    "mehta_quadrature", "nu_character", "pairing",
    "permutation_trace_bruteforce", "product", "quad_I_N", "quad_K_N",
    "run_experiment", "trivial_multiplicity", "vanish_leading_constant",
    "weight_system", "weyl_dimension", "weyl_denominator_sq", "weyl_orbit",
]
