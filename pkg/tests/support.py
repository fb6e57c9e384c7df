"""Reference algebras and graphs used across the tests, plus random
generators for the property corpora.

Each builder is named after the structure it encodes, with the basis
squares spelled out next to it.
"""

from fractions import Fraction
import random

from evolalg import QQ, AssociatedGraph, EvolutionAlgebra, Matrix


def from_squares(field, squares):
    return EvolutionAlgebra.from_squares(field, squares)


# dim 4: e1^2 = e2+e3, e2^2 = 0, e3^2 = -2 e4, e4^2 = 5 e3
def fan_to_swap_pair(field=QQ):
    return from_squares(field, [(0, 1, 1, 0), (0, 0, 0, 0),
                                (0, 0, 0, -2), (0, 0, 5, 0)])


# dim 6: e1^2 = 0, e2^2 = e1+e3, e3^2 = 0, e4^2 = e3+e5, e5^2 = e6, e6^2 = e5
def two_sinks_and_pair(field=QQ):
    return from_squares(field, [(0, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0),
                                (0, 0, 0, 0, 0, 0), (0, 0, 1, 0, 1, 0),
                                (0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 1, 0)])


# dim 2: e1^2 = e1+e2, e2^2 = 0
def loop_with_tail(field=QQ):
    return from_squares(field, [(1, 1), (0, 0)])


# dim 2: e1^2 = e1, e2^2 = 0  (the same algebra as loop_with_tail on the
# natural basis {e1+e2, e2})
def lone_loop_plus_sink(field=QQ):
    return from_squares(field, [(1, 0), (0, 0)])


# dim 3: e1^2 = e2, e2^2 = e1, e3^2 = e3
def swap_pair_plus_loop(field=QQ):
    return from_squares(field, [(0, 1, 0), (1, 0, 0), (0, 0, 1)])


# dim 3: e1^2 = e2+e3, e2^2 = e1+e2, e3^2 = -(e1+e2); the span of e1^2 and
# e2^2 is the ideal {(a, a+b, b)}, which has no natural basis
def entangled_squares(field=QQ):
    return from_squares(field, [(0, 1, 1), (1, 1, 0), (-1, -1, 0)])


# dim 3: e1^2 = e3, e2^2 = e1+e2, e3^2 = e3
def tail_into_loop(field=QQ):
    return from_squares(field, [(0, 0, 1), (1, 1, 0), (0, 0, 1)])


# dim 2: e1^2 = e1, e2^2 = e1
def loop_feeder(field=QQ):
    return from_squares(field, [(1, 0), (1, 0)])


# dim 2: e1^2 = e1, e2^2 = e2
def double_loop(field=QQ):
    return from_squares(field, [(1, 0), (0, 1)])


# dim 2: e1^2 = e2, e2^2 = e2
def shared_loop_target(field=QQ):
    return from_squares(field, [(0, 1), (0, 1)])


# dim 2: e1^2 = 0, e2^2 = e1+e2
def sink_feeder(field=QQ):
    return from_squares(field, [(0, 0), (1, 1)])


# dim 6: e1^2 = e2^2 = e3^2 = 0, e4^2 = e1+e2, e5^2 = e2, e6^2 = e2+e5
def all_chains_die(field=QQ):
    return from_squares(field, [(0,) * 6, (0,) * 6, (0,) * 6,
                                (1, 1, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0),
                                (0, 1, 0, 0, 1, 0)])


# dim 5: e1^2 = e2^2 = e1, e3^2 = e3+e5, e4^2 = e5^2 = 0; admits two
# distinct refinements into irreducible ideals
def two_loops_two_sinks(field=QQ):
    return from_squares(field, [(1, 0, 0, 0, 0), (1, 0, 0, 0, 0),
                                (0, 0, 1, 0, 1), (0, 0, 0, 0, 0),
                                (0, 0, 0, 0, 0)])


# dim 2: e1^2 = e2, e2^2 = e1+e2  (simple; also classically degenerate)
def pair_cycle_mixing(field=QQ):
    return from_squares(field, [(0, 1), (1, 1)])


# dim 3: e1^2 = e2^2 = e2+e3, e3^2 = -e2-e3  (non-degenerate, yet the line
# through e2+e3 is an ideal of square zero)
def nilpotent_line_nondegenerate(field=QQ):
    return from_squares(field, [(0, 1, 1), (0, 1, 1), (0, -1, -1)])


# dim 3: e1^2 = e3^2 = e1+e2, e2^2 = e3  (everything reaches everything,
# but the squares span only a plane)
def squares_span_deficient(field=QQ):
    return from_squares(field, [(1, 1, 0), (0, 0, 1), (1, 1, 0)])


# dim 3: e1^2 = e1+e2, e2^2 = -e1-e2, e3^2 = -e2+e3
def opposed_pair_and_loop(field=QQ):
    return from_squares(field, [(1, 1, 0), (-1, -1, 0), (0, -1, 1)])


ALL_REFERENCE_BUILDERS = (
    fan_to_swap_pair, two_sinks_and_pair, loop_with_tail, lone_loop_plus_sink,
    swap_pair_plus_loop, entangled_squares, tail_into_loop, loop_feeder,
    double_loop, shared_loop_target, sink_feeder, all_chains_die,
    two_loops_two_sinks, pair_cycle_mixing, nilpotent_line_nondegenerate,
    squares_span_deficient, opposed_pair_and_loop,
)


# reference graphs (1-based edge lists)

def graph_fan_swap():
    # 1 -> 2, 1 -> 3, 3 <-> 4
    return AssociatedGraph.from_edges(4, [(1, 2), (1, 3), (3, 4), (4, 3)])


def graph_cycle_with_entry():
    # 1 -> 2 -> 3 -> 4 -> 2
    return AssociatedGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 2)])


def graph_core_triple():
    # triangle core {1,2,3} with a loop at 1, plus 2 -> 4
    return AssociatedGraph.from_edges(
        4, [(3, 1), (3, 2), (1, 1), (1, 2), (2, 1), (2, 3), (2, 4)])


def graph_core_with_side_loop():
    # entry 1 -> core {2,3,5}, plus a loop at 4 feeding the core
    return AssociatedGraph.from_edges(
        5, [(1, 2), (2, 5), (2, 3), (3, 2), (3, 5), (5, 2), (5, 3),
            (4, 3), (4, 4)])


def graph_core_loop_tail():
    # entry 1 -> core {2,3,6}, core -> loop 4 -> sink 5
    return AssociatedGraph.from_edges(
        6, [(1, 2), (2, 6), (2, 3), (3, 2), (3, 6), (6, 2), (6, 3),
            (3, 4), (4, 4), (4, 5)])


# random corpora

RATIONAL_POOL = tuple(Fraction(n) for n in (1, -1, 2, -2, 3, 5)) + (
    Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3))


def random_scalar(rng, field):
    if field.kind == "rational":
        return rng.choice(RATIONAL_POOL)
    return rng.randrange(1, field.p)


def random_algebra(rng, field, dim, zero_col_prob=0.25, density=0.45):
    """Random structure matrix: each column is zero with zero_col_prob,
    else carries at least one nonzero entry."""
    squares = []
    for _ in range(dim):
        if rng.random() < zero_col_prob:
            squares.append((field.zero,) * dim)
            continue
        col = [random_scalar(rng, field) if rng.random() < density else field.zero
               for _ in range(dim)]
        if all(field.is_zero(x) for x in col):
            col[rng.randrange(dim)] = random_scalar(rng, field)
        squares.append(tuple(col))
    return EvolutionAlgebra.from_squares(field, squares)


def random_element(rng, field, dim, zero_prob=0.3):
    return tuple(field.zero if rng.random() < zero_prob else random_scalar(rng, field)
                 for _ in range(dim))


def relabel(algebra, perm):
    """Algebra on the reindexed basis f_j = e_{perm[j-1]}: the structure
    entry (m, j) becomes the old entry (perm[m-1], perm[j-1])."""
    n = algebra.dim
    old = algebra.structure.entries
    rows = tuple(tuple(old[perm[m] - 1][perm[j] - 1] for j in range(n))
                 for m in range(n))
    return EvolutionAlgebra(algebra.field, Matrix(n, n, rows))


def random_permutation(rng, n):
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return tuple(perm)


def inverse_permutation(perm):
    inv = [0] * len(perm)
    for pos, value in enumerate(perm, start=1):
        inv[value - 1] = pos
    return tuple(inv)


def make_rng(seed):
    return random.Random(seed)
