"""The lemma checks run over exhaustive populations of small spaces.

Each check pairs a population (split into picklable work units) with a
predicate on a single :class:`Witness`.  A check passes when the predicate
holds on every instance; the first failing instance in population order is
the witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import census
from .constructions import product, subspace
from .maps import (
    enumerate_maps,
    is_almost_continuous,
    is_continuous,
    is_open_map,
    is_star_continuous,
    is_star_continuous_direct,
    projections,
    star_closure_image_check,
)
from .properties import (
    components_by_clopens,
    connected_components,
    is_compact,
    is_connected,
    is_hausdorff,
    is_locally_compact,
    is_locally_connected,
    is_locally_connected_by_definition,
)
from .regular import (
    is_regular_open,
    is_semi_regular,
    is_star_open,
    regular_closed_family,
    regular_open_family,
    star_closure,
    star_closure_by_regular_closeds,
    star_interior,
    star_interior_pointwise,
    star_open_family,
    star_open_topology,
)
from .space import (
    TopologyError,
    canonical_family,
    closure,
    interior,
    is_closed,
    is_open,
    is_subset,
    validate_topology,
)
from .witness import Witness

MAP_MAX_POINTS = 3
PRODUCT_MAX_POINTS = 3

Ref = tuple[int, int]
Unit = tuple[Ref, ...]


@dataclass(frozen=True)
class Check:
    id: str
    title: str
    units: Callable[[int], list[Unit]]
    instances: Callable[[Unit], Iterable[Witness]]
    holds: Callable[[Witness], bool]
    empirical: bool = False


# populations ---------------------------------------------------------------


def single_units(max_n: int) -> list[Unit]:
    return [(census.space_ref(s),) for s in census.spaces_up_to(max_n)]


def pair_units(limit: int) -> Callable[[int], list[Unit]]:
    def units(max_n: int) -> list[Unit]:
        refs = [census.space_ref(s) for s in census.spaces_up_to(min(max_n, limit))]
        return [(a, b) for a in refs for b in refs]

    return units


def projection_units(max_n: int) -> list[Unit]:
    units = pair_units(PRODUCT_MAX_POINTS)(max_n)
    if max_n >= 2:
        # One iterated ternary product: Sierpinski x discrete x indiscrete.
        twos = census.enumerate_topologies(2).spaces
        units.append(tuple(census.space_ref(s) for s in (twos[1], twos[0], twos[3])))
    return units


def _spaces(unit: Unit):
    return tuple(census.resolve(r) for r in unit)


def each_space(unit: Unit) -> Iterator[Witness]:
    yield Witness(_spaces(unit))


def each_subset(unit: Unit) -> Iterator[Witness]:
    spaces = _spaces(unit)
    for a in spaces[0].subsets():
        yield Witness(spaces, (a,))


def each_open(unit: Unit) -> Iterator[Witness]:
    spaces = _spaces(unit)
    for u in spaces[0].opens:
        yield Witness(spaces, (u,))


def each_regular_open_pair(unit: Unit) -> Iterator[Witness]:
    spaces = _spaces(unit)
    ro = regular_open_family(spaces[0])
    for i, u in enumerate(ro):
        for v in ro[i:]:
            yield Witness(spaces, (u, v))


def each_open_carrier(unit: Unit) -> Iterator[Witness]:
    spaces = _spaces(unit)
    for y in spaces[0].opens:
        if y:
            yield Witness(spaces, (y,))


def each_open_carrier_subset(unit: Unit) -> Iterator[Witness]:
    spaces = _spaces(unit)
    for y in spaces[0].opens:
        if y:
            for a in range(y + 1):
                if is_subset(a, y):
                    yield Witness(spaces, (y, a))


def _factor_pairs(families: Callable) -> Callable[[Unit], Iterator[Witness]]:
    def instances(unit: Unit) -> Iterator[Witness]:
        spaces = _spaces(unit)
        for u in families(spaces[0]):
            for v in families(spaces[1]):
                yield Witness(spaces, (u, v))

    return instances


def each_map(unit: Unit) -> Iterator[Witness]:
    dom, cod = _spaces(unit)
    for f in enumerate_maps(dom, cod):
        yield Witness((dom, cod), (), f.assign)


# predicates ----------------------------------------------------------------


def lemma1_chain(w: Witness) -> bool:
    s, (a,) = w.space, w.sets
    chain = [star_interior(s, a), interior(s, a), a, closure(s, a), star_closure(s, a)]
    return all(is_subset(x, y) for x, y in zip(chain, chain[1:]))


def lemma1_union_formula(w: Witness) -> bool:
    s, (a,) = w.space, w.sets
    return star_interior(s, a) == star_interior_pointwise(s, a)


def lemma1_intersection_formula(w: Witness) -> bool:
    s, (a,) = w.space, w.sets
    return star_closure(s, a) == star_closure_by_regular_closeds(s, a)


def lemma1_open_closed(w: Witness) -> bool:
    s, (a,) = w.space, w.sets
    return is_open(s, star_interior(s, a)) and is_closed(s, star_closure(s, a))


def lemma1_duality(w: Witness) -> bool:
    s, (a,) = w.space, w.sets
    c = s.full & ~a
    return (
        star_closure(s, c) == s.full & ~star_interior(s, a)
        and s.full & ~star_closure(s, a) == star_interior(s, c)
    )


def lemma5_inclusions(w: Witness) -> bool:
    s = w.space
    star = set(star_open_topology(s).opens)
    return star.issubset(s.opens) and all(r in star for r in regular_open_family(s))


def lemma7_regularization(w: Witness) -> bool:
    s, (u,) = w.space, w.sets
    return is_regular_open(s, interior(s, closure(s, u)))


def lemma8_regular_opens(w: Witness) -> bool:
    s = w.space
    return set(regular_open_family(star_open_topology(s))).issubset(regular_open_family(s))


def star_of_star_subset(w: Witness) -> bool:
    once = star_open_topology(w.space)
    return set(star_open_topology(once).opens).issubset(once.opens)


def star_of_star_equal(w: Witness) -> bool:
    once = star_open_topology(w.space)
    return star_open_topology(once).opens == once.opens


def regular_open_meet(w: Witness) -> bool:
    s, (u, v) = w.space, w.sets
    return is_regular_open(s, u & v)


def theorem32_topology(w: Witness) -> bool:
    s = w.space
    family = star_open_family(s)
    try:
        validate_topology(s.n, family)
    except TopologyError:
        return False
    return family == star_open_topology(s).opens


def regular_closeds_are_complements(w: Witness) -> bool:
    s = w.space
    return regular_closed_family(s) == canonical_family(s.full & ~r for r in regular_open_family(s))


def semi_regular_iff(w: Witness) -> bool:
    s = w.space
    return is_semi_regular(s) == (star_open_topology(s).opens == s.opens)


def lemma9_regular_traces(w: Witness) -> bool:
    s, (y,) = w.space, w.sets
    emb = subspace(s, y)
    traced = canonical_family(emb.to_child(r) for r in regular_open_family(s))
    return regular_open_family(emb.child) == traced


def lemma9_star_interior(w: Witness) -> bool:
    s, (y, a) = w.space, w.sets
    emb = subspace(s, y)
    relative = emb.to_parent(star_interior(emb.child, emb.to_child(a)))
    return star_interior(s, a) == relative & star_interior(s, y)


def lemma9_star_closure(w: Witness) -> bool:
    s, (y, a) = w.space, w.sets
    emb = subspace(s, y)
    relative = emb.to_parent(star_closure(emb.child, emb.to_child(a)))
    return relative == star_closure(s, a) & y


def corollary10(w: Witness) -> bool:
    s, (y, a) = w.space, w.sets
    if not is_star_open(s, a):
        return True
    emb = subspace(s, y)
    return is_star_open(emb.child, emb.to_child(a))


def lemma12_rectangles(w: Witness) -> bool:
    (a, b), (u, v) = w.spaces, w.sets
    p = product(a, b)
    return is_star_open(p.space, p.rectangle(u, v))


def product_regularization(w: Witness) -> bool:
    (a, b), (u, v) = w.spaces, w.sets
    p = product(a, b)
    lhs = interior(p.space, closure(p.space, p.rectangle(u, v)))
    return lhs == p.rectangle(interior(a, closure(a, u)), interior(b, closure(b, v)))


def product_regular_opens(w: Witness) -> bool:
    (a, b), (u, v) = w.spaces, w.sets
    p = product(a, b)
    return is_regular_open(p.space, p.rectangle(u, v))


def lemma18_connected(w: Witness) -> bool:
    return is_connected(w.space) == is_connected(star_open_topology(w.space))


def lemma19_compact(w: Witness) -> bool:
    return not is_compact(w.space) or is_compact(star_open_topology(w.space))


def lemma21_locally_compact(w: Witness) -> bool:
    s = w.space
    if not (is_hausdorff(s) and is_locally_compact(s)):
        return True
    return is_locally_compact(star_open_topology(s))


def lemma25_locally_connected(w: Witness) -> bool:
    return not is_locally_connected(w.space) or is_locally_connected(star_open_topology(w.space))


def locally_connected_agree(w: Witness) -> bool:
    return is_locally_connected(w.space) == is_locally_connected_by_definition(w.space)


def components_agree(w: Witness) -> bool:
    return connected_components(w.space) == components_by_clopens(w.space)


def hausdorff_iff_discrete(w: Witness) -> bool:
    s = w.space
    return is_hausdorff(s) == (len(s.opens) == 1 << s.n)


def closure_image_iff(w: Witness) -> bool:
    f = w.map
    return is_star_continuous(f) == star_closure_image_check(f).holds_for_all


def star_continuity_routes_agree(w: Witness) -> bool:
    return is_star_continuous(w.map) == is_star_continuous_direct(w.map)


def continuous_is_almost(w: Witness) -> bool:
    f = w.map
    return not is_continuous(f) or is_almost_continuous(f)


def star_continuous_is_almost(w: Witness) -> bool:
    f = w.map
    return not is_star_continuous(f) or is_almost_continuous(f)


def open_almost_is_star(w: Witness) -> bool:
    f = w.map
    return not (is_open_map(f) and is_almost_continuous(f)) or is_star_continuous(f)


def lemma29_connected_image(w: Witness) -> bool:
    f = w.map
    if not (f.is_surjective() and is_star_continuous(f) and is_connected(f.dom)):
        return True
    return is_connected(f.cod)


def projections_star_continuous(w: Witness) -> bool:
    # Products associate to the left; each factor projection of an iterated
    # product is a composite of binary projections.
    factors = w.spaces
    p = product(factors[0], factors[1])
    legs = list(projections(p))
    for factor in factors[2:]:
        p = product(p.space, factor)
        first, last = projections(p)
        legs = [first.then(g) for g in legs] + [last]
    return all(is_star_continuous(g) for g in legs)


CHECKS: tuple[Check, ...] = (
    Check("L1-chain", "*int A <= int A <= A <= cl A <= *cl A", single_units, each_subset, lemma1_chain),
    Check("L1.2", "*int A is the union of regular opens inside A", single_units, each_subset, lemma1_union_formula),
    Check("L1.3", "*cl A is the intersection of regular closed supersets", single_units, each_subset, lemma1_intersection_formula),
    Check("L1.4", "*int A is open and *cl A is closed", single_units, each_subset, lemma1_open_closed),
    Check("L1.5", "*cl(X-A) = X-*int A and X-*cl A = *int(X-A)", single_units, each_subset, lemma1_duality),
    Check("RC-COMPLEMENT", "regular closeds are the complements of regular opens", single_units, each_space, regular_closeds_are_complements),
    Check("L5", "R.O(X) <= *O(X) <= tau", single_units, each_space, lemma5_inclusions),
    Check("L7", "int cl U is regular open for open U", single_units, each_open, lemma7_regularization),
    Check("L8", "R.O of the semiregularization <= R.O(X)", single_units, each_space, lemma8_regular_opens),
    Check("SS-SUB", "*O(*O(X)) <= *O(X)", single_units, each_space, star_of_star_subset),
    Check("SS-EQ", "*O(*O(X)) = *O(X)", single_units, each_space, star_of_star_equal, empirical=True),
    Check("RO-MEET", "regular opens are closed under pairwise intersection", single_units, each_regular_open_pair, regular_open_meet),
    Check("T32", "*-open sets form a topology generated by R.O(X)", single_units, each_space, theorem32_topology),
    Check("L6", "semi-regular iff *O(X) = tau", single_units, each_space, semi_regular_iff),
    Check("L9.1", "R.O(Y) = traces of R.O(X) for open Y", single_units, each_open_carrier, lemma9_regular_traces),
    Check("L9.2", "*int A = *int_Y A cap *int Y for open Y", single_units, each_open_carrier_subset, lemma9_star_interior, empirical=True),
    Check("L9.3", "*cl_Y A = *cl A cap Y for open Y", single_units, each_open_carrier_subset, lemma9_star_closure, empirical=True),
    Check("C10", "*-open in X and inside open Y gives *-open in Y", single_units, each_open_carrier_subset, corollary10),
    Check("L12", "A x B is *-open for *-open A, B", pair_units(PRODUCT_MAX_POINTS), _factor_pairs(star_open_family), lemma12_rectangles),
    Check("PROD-ID", "int cl (U x V) = int cl U x int cl V", pair_units(PRODUCT_MAX_POINTS), _factor_pairs(lambda s: s.opens), product_regularization),
    Check("PROD-RO", "U x V is regular open for regular open U, V", pair_units(PRODUCT_MAX_POINTS), _factor_pairs(regular_open_family), product_regular_opens),
    Check("L18", "X connected iff *O(X) connected", single_units, each_space, lemma18_connected),
    Check("L19", "compactness passes to *O(X) (degenerate: finite)", single_units, each_space, lemma19_compact),
    Check("L21", "local compactness passes to *O(X) (degenerate: finite)", single_units, each_space, lemma21_locally_compact),
    Check("L25", "local connectedness passes to *O(X)", single_units, each_space, lemma25_locally_connected),
    Check("LC-DEF", "minimal-neighbourhood and definitional local connectedness agree", single_units, each_space, locally_connected_agree),
    Check("CC", "union-find and clopen components agree", single_units, each_space, components_agree),
    Check("HAUS", "finite Hausdorff iff discrete", single_units, each_space, hausdorff_iff_discrete),
    Check("S3-IFF", "*-continuous iff f(*cl A) <= *cl f(A) for all A", pair_units(MAP_MAX_POINTS), each_map, closure_image_iff),
    Check("S3-STAR-DEF", "semiregularization and direct *-continuity agree", pair_units(MAP_MAX_POINTS), each_map, star_continuity_routes_agree),
    Check("S3-CONT-ALMOST", "continuous implies almost continuous", pair_units(MAP_MAX_POINTS), each_map, continuous_is_almost),
    Check("S3-STAR-ALMOST", "*-continuous implies almost continuous", pair_units(MAP_MAX_POINTS), each_map, star_continuous_is_almost),
    Check("S3-OPEN-ALMOST", "open almost continuous implies *-continuous", pair_units(MAP_MAX_POINTS), each_map, open_almost_is_star),
    Check("S3-PROJ", "product projections are *-continuous", projection_units, each_space, projections_star_continuous),
    Check("L29", "onto *-continuous image of connected is connected", pair_units(MAP_MAX_POINTS), each_map, lemma29_connected_image),
)

CHECKS_BY_ID = {c.id: c for c in CHECKS}
