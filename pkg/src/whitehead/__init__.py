"""Whitehead problem algorithms for free groups: words, Whitehead graphs,
elementary automorphisms, orbit minimisation, equivalence and primitivity
decisions, plus average-case benchmarks."""

from .automorphisms import (AutWitness, LetterPermutation, WhiteheadAut, apply, apply_cyclic,
                            apply_witness, enumerate_type_I, enumerate_type_II, invert,
                            parse_move, parse_witness)
from .graph import (ScanState, WhGraph, build_graph, has_cut_vertex, has_isolated_edge,
                    is_complete, scan_push, to_dot)
from .minimization import (MinimizationResult, greedy_minimize, is_minimal,
                           is_strictly_minimal)
from .orbits import (BlockingVerdict, BudgetExceeded, EquivVerdict, OrbitLevelGraph, Stage,
                     blocking_check, bounded_orbit_enumerate, is_primitive, level_graph,
                     same_orbit)
from .words import (CyclicWord, TrimReport, Word, WordError, canonical_cyclic,
                    count_freely_reduced, cyclic_equal, cyclic_trim, free_reduce,
                    sample_ball, sample_cyclically_reduced, sample_freely_reduced)

__version__ = "0.1.0"
