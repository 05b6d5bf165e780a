"""Exact finite KM-fuzzy metric spaces, nests of metrics and fuzzy betweenness."""

from .distributions import (INF, POINT_ONE, ExpLevel, Generator, Scaled, Step, dilate,
                            evaluate, exponential, godel_residual_inf, level, pointwise_le,
                            pointwise_min, standard, step, supmin_convolve)
from .errors import KMError
from .fuzzy_betweenness import (FuzzyTernaryRelation, bd_from_nest, bm_from_fuzzy_metric,
                                check_cut_characterization, check_equality, check_fp,
                                check_ft, check_fuzzy_axioms, check_fuzzy_transitivities,
                                check_strict_characterization, level_cut, nonsplit_bm)
from .fuzzy_metric import (FuzzyMetricSpace, exponential_from_metric, from_entries,
                           standard_from_metric, validate)
from .grades import TNorm, parse_rational, residuum, tnorm
from .nest import (FiniteMetric, MetricNest, PairLevels, fuzzy_metric_from_nest, level_slice,
                   nest_from_fuzzy_metric, roundtrip_check, validate_nest)
from .relations import (BinaryRelation, LatticeTable, PosetTable, TernaryRelation,
                        betweenness_at_level, check_basic, check_betweenness,
                        check_betweenness_nest, check_fivepoint, check_fourpoint,
                        check_transitivities, compose_i, lattice_betweenness,
                        metric_betweenness, order_betweenness, projections)
from .report import Check, Report

__version__ = "0.1.0"
