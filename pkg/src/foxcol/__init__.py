"""Fox colorings of knot and link diagrams.

Counting and enumerating colorings exactly, minimum color counts for the
torus links ``T(2, n)``, and Reidemeister move sequences that carry a
coloring along while shrinking its palette.
"""

from .analysis import (BoundReport, ExperimentReport, TripleClass, classify_triple,
                       conjecture_experiment, harary_check, min_colors_of_diagram, mincol_bounds,
                       three_color_feasible)
from .coloring import (ColoredDiagram, Coloring, ColoringError, Palette, Rejection,
                       braid_coloring, color_spectrum, coloring_matrix, count_colorings,
                       determinant, enumerate_colorings, has_nontrivial, palette_of,
                       stacked_coloring, subpalette, validate_coloring)
from .diagram import (BraidWord, CrossingRecord, Diagram, ParseError, PDCrossing, RationalSpec,
                      ValidationReport, braid_closure, braid_word_parse, rational_diagram,
                      torus_diagram, validate_diagram)
from .modular import (BudgetExceeded, DomainError, IntegerMatrix, SnfDecomposition,
                      SnfOverflowError, count_solutions_mod, enumerate_solutions_mod, gcd,
                      least_common_prime_divisor, smith_normal_form)
from .moves import (MovePatternError, MoveSpec, PaletteTrace, SearchResult, TraceStep,
                    TransportError, apply_move, legal_moves, run_moves, teneva_reduce,
                    teneva_search, teneva_sequence, teneva_transform, teneva_walks)

__version__ = "0.1.0"
