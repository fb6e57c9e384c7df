"""Simplicity and irreducibility decisions, the canonical covering of the
index set by principal cycles and chain-start indices, the fragmentation
process, and the resulting optimal direct-sum decomposition.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .algebra import EvolutionAlgebra
from .errors import InternalConsistencyError, PreconditionError
from .graph import AssociatedGraph, associated_graph
from .ideals import is_ideal, is_nondegenerate
from .linalg import Matrix, Subspace, det, rref, subspace_from_vectors

PRINCIPAL_CYCLE = "principal_cycle"
CHAIN_START = "chain_start"


@dataclass(frozen=True)
class CanonicalPart:
    kind: str        # PRINCIPAL_CYCLE or CHAIN_START
    seed: frozenset  # the cycle, or the singleton chain-start index
    derived: frozenset


@dataclass(frozen=True)
class CanonicalDecomposition:
    parts: tuple


@dataclass(frozen=True)
class Fragmentation:
    blocks: tuple        # pairwise disjoint index sets, sorted by least element
    block_members: tuple # for each block, positions of the covering sets it absorbed


@dataclass(frozen=True)
class BlockReport:
    indices: frozenset
    ideal: Subspace
    nondegenerate: bool
    simple: bool
    det: object


@dataclass(frozen=True)
class DecompositionReport:
    blocks: tuple
    algebra_nondegenerate: bool
    optimal_certified: bool


@dataclass(frozen=True)
class SimplicityResult:
    simple: bool
    reasons: tuple

    def __bool__(self):
        return self.simple


@dataclass(frozen=True)
class IrreducibilityResult:
    """Connectivity verdict; trust it as irreducibility only when conclusive
    (the algebra is non-degenerate)."""

    connected: bool
    conclusive: bool

    def __bool__(self):
        return self.connected


def derived_index_set(graph: AssociatedGraph, seed) -> frozenset:
    """The forward closure of seed: the set itself plus every descendent."""
    out = set()
    for i in seed:
        graph._check_index(i)
        out.add(i)
        out |= graph.descendents(i)
    return frozenset(out)


def _canonical_parts(graph: AssociatedGraph):
    parts = []
    for cycle in graph.principal_cycles():
        parts.append(CanonicalPart(PRINCIPAL_CYCLE, cycle, derived_index_set(graph, cycle)))
    for i in sorted(graph.chain_start_indices()):
        parts.append(CanonicalPart(CHAIN_START, frozenset({i}),
                                   derived_index_set(graph, {i})))
    parts.sort(key=lambda part: min(part.seed))
    return tuple(parts)


def canonical_decomposition(algebra: EvolutionAlgebra) -> CanonicalDecomposition:
    """One derived set per principal cycle and per chain-start index; for a
    finite index set these always cover everything."""
    graph = associated_graph(algebra)
    parts = _canonical_parts(graph)
    covered = set()
    for part in parts:
        covered |= part.derived
    if covered != set(range(1, algebra.dim + 1)):
        raise InternalConsistencyError("canonical decomposition failed to cover the index set")
    return CanonicalDecomposition(parts)


def _intersection_components(parts):
    """Connected components (by pairwise intersection) of a list of sets,
    as sorted tuples of positions."""
    m = len(parts)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(m):
        for b in range(a + 1, m):
            if parts[a] & parts[b]:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[rb] = ra
    groups = {}
    for x in range(m):
        groups.setdefault(find(x), []).append(x)
    return [tuple(sorted(g)) for g in groups.values()]


def _validated_parts(parts):
    parts = [frozenset(p) for p in parts]
    if not parts:
        raise ValueError("no covering sets given")
    if any(not p for p in parts):
        raise ValueError("covering sets must be non-empty")
    return parts


def is_fragmentable(parts) -> bool:
    """True when the intersection graph of the covering sets is
    disconnected, i.e. the union splits into two groups of whole sets."""
    parts = _validated_parts(parts)
    return len(_intersection_components(parts)) > 1


def optimal_fragmentation(parts) -> Fragmentation:
    """Merge the covering sets along the connected components of their
    intersection graph; no resulting block splits any further."""
    parts = _validated_parts(parts)
    blocks = []
    for members in _intersection_components(parts):
        block = frozenset().union(*(parts[x] for x in members))
        blocks.append((block, members))
    blocks.sort(key=lambda item: min(item[0]))
    return Fragmentation(tuple(b for b, _ in blocks), tuple(ms for _, ms in blocks))


def _restricted_structure(algebra, indices):
    idx = sorted(indices)
    rows = tuple(tuple(algebra.structure.entries[r - 1][c - 1] for c in idx) for r in idx)
    return Matrix(len(idx), len(idx), rows)


def optimal_decomposition(algebra: EvolutionAlgebra) -> DecompositionReport:
    """Canonical decomposition followed by fragmentation; one basis-spanned
    ideal per block.

    The direct sum is always valid; optimality (irreducibility of every
    block, uniqueness) is certified only for non-degenerate algebras.
    """
    f = algebra.field
    n = algebra.dim
    graph = associated_graph(algebra)
    parts = _canonical_parts(graph)
    if n == 0:
        return DecompositionReport((), True, True)
    frag = optimal_fragmentation([p.derived for p in parts])

    seen = set()
    for block in frag.blocks:
        if block & seen:
            raise InternalConsistencyError("fragmentation blocks overlap")
        seen |= block
    if seen != set(range(1, n + 1)):
        raise InternalConsistencyError("fragmentation blocks do not span every index")

    if frag.blocks != graph.weak_components():
        # guaranteed to coincide for non-degenerate algebras; for degenerate
        # ones surface any mismatch without failing
        warnings.warn("fragmentation blocks differ from weak components", RuntimeWarning)

    blocks = []
    full_desc = {i: graph.descendents(i) for i in range(1, n + 1)}
    for block in frag.blocks:
        ideal = subspace_from_vectors(f, n, [algebra.basis_element(i) for i in sorted(block)])
        if not is_ideal(algebra, ideal):
            raise InternalConsistencyError("a fragmentation block failed the ideal test")
        sub = _restricted_structure(algebra, block)
        block_det = det(f, sub)
        nondeg = all(any(not f.is_zero(x) for x in algebra.square_of_basis(i))
                     for i in block)
        simple = (not f.is_zero(block_det)
                  and all(full_desc[i] == block for i in block))
        blocks.append(BlockReport(block, ideal, nondeg, simple, block_det))

    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            for i in blocks[a].indices:
                for j in blocks[b].indices:
                    product = algebra.multiply(algebra.basis_element(i),
                                               algebra.basis_element(j))
                    if any(not f.is_zero(x) for x in product):
                        raise InternalConsistencyError("blocks are not orthogonal")

    nondeg = is_nondegenerate(algebra)
    return DecompositionReport(tuple(blocks), nondeg, nondeg)


def is_simple(algebra: EvolutionAlgebra, cross_check: bool = False) -> SimplicityResult:
    """Simplicity for finite dimension: nonsingular structure matrix and
    every index reaches every index.  Reason codes name the failing clause;
    cross_check recomputes the verdict through rank fullness and must agree.
    """
    n = algebra.dim
    f = algebra.field
    if n == 0:
        return SimplicityResult(False, ("zero algebra",))
    reasons = []
    d = det(f, algebra.structure)
    if f.is_zero(d):
        reasons.append("det(M_B) == 0")
    graph = associated_graph(algebra)
    everything = frozenset(range(1, n + 1))
    for i in range(1, n + 1):
        if graph.descendents(i) != everything:
            reasons.append("D(%d) != Lambda" % i)
            break
    verdict = not reasons
    if cross_check:
        rank, _ = rref(f, algebra.structure)
        alternative = (rank == n
                       and all(graph.descendents(i) == everything
                               for i in range(1, n + 1)))
        if alternative != verdict:
            raise InternalConsistencyError("simplicity routes disagree")
    return SimplicityResult(verdict, tuple(reasons))


def is_irreducible(algebra: EvolutionAlgebra) -> IrreducibilityResult:
    """Connectivity of the associated graph.  Equivalent to irreducibility
    when the algebra is non-degenerate; otherwise the flag conclusive is
    False and the verdict is only the connectivity datum."""
    graph = associated_graph(algebra)
    connected = len(graph.weak_components()) <= 1
    return IrreducibilityResult(connected, is_nondegenerate(algebra))


def simple_sum_report(algebra: EvolutionAlgebra):
    """For a non-degenerate algebra: the block partition when every block
    is simple as an algebra, else None."""
    if not is_nondegenerate(algebra):
        raise PreconditionError("simple-sum report requires a non-degenerate algebra")
    report = optimal_decomposition(algebra)
    if all(block.simple for block in report.blocks):
        return tuple(block.indices for block in report.blocks)
    return None
