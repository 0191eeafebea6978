"""Closed-form graph parameters for k-power graphs, paired with brute force.

Every quantity here comes in two independent routes: a number-theoretic
closed form evaluated from the group's order census, and a direct
computation on the built graph.  ``analyze`` runs both routes for one
(G, k) pair and records any disagreement in the report's ``discrepancies``
field instead of reconciling it; the strict standalone operations raise
``TheoremViolation`` instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import numth
from .graphs import (
    BASIC_SHAPES,
    KPowerGraph,
    build_undirected,
    components,
    cycle_lengths,
    diameter,
    normalize_exponent,
)
from .groups import FiniteGroup, build_group

# Order censuses that identify the two exceptional star-graph groups:
# the cyclic group of order 4, and the quaternion group of order 8
# (the unique order-8 group with exactly one involution and no element
# of order 8).
_CENSUS_Z4 = {1: 1, 2: 1, 4: 2}
_CENSUS_Q8 = {1: 1, 2: 1, 4: 6}

STAR_CASE_ALL_ORDERS = "all_orders_divide_k"
STAR_CASE_Z4 = "z4_k2"
STAR_CASE_Q8 = "q8_k2_or_6"
STAR_CASE_NONE = "not_star"


class TheoremViolation(RuntimeError):
    """A proven identity failed to hold; indicates an implementation bug."""


# -- edge count ---------------------------------------------------------------


def edge_count_formula(group: FiniteGroup, k: int) -> int:
    """Closed-form edge count of P(G, k) from the order census.

    |E| = n - sum_{d | k1} t_d - (1/2) sum_{d | k2, d !| k1} t_d with
    k1 = gcd(k-1, n) and k2 = gcd(k^2-1, n).  The halved sum is over
    element orders > 2 only, whose counts are always even; an odd count
    there means the census itself is broken.
    """
    n = group.order
    k_norm = normalize_exponent(k, n)
    census = group.order_census()
    k1 = math.gcd(k_norm - 1, n)
    k2 = math.gcd(k_norm * k_norm - 1, n)
    fixed = sum(t for d, t in census.items() if k1 % d == 0)
    halved = 0
    for d, t in census.items():
        if k2 % d == 0 and k1 % d != 0:
            if t % 2:
                raise TheoremViolation(
                    f"odd element count t_{d}={t} in the mutual-edge sum; census is broken"
                )
            halved += t
    return n - fixed - halved // 2


# -- degrees (cyclic groups) --------------------------------------------------


def degree_cyclic(n: int, k: int, a: int) -> int:
    """Degree of vertex a in P(Z_n, k), in closed form.

    With d = gcd(n, k) and o = o(a) = n/gcd(n, a):
      d !| a:  0 if o | k-1 else 1
      d  | a:  d-1 if o | k-1
               d   if o | k^2-1 but o !| k-1   (the out-edge is mutual)
               d+1 otherwise
    """
    if n < 1:
        raise ValueError("degree_cyclic expects n >= 1")
    if k < 2:
        raise ValueError("degree_cyclic expects k >= 2")
    if not 0 <= a < n:
        raise ValueError(f"residue {a} out of range for Z_{n}")
    d = math.gcd(n, k)
    o = n // math.gcd(n, a)
    if a % d != 0:
        return 0 if (k - 1) % o == 0 else 1
    if (k - 1) % o == 0:
        return d - 1
    if (k * k - 1) % o == 0:
        return d
    return d + 1


# -- connectivity -------------------------------------------------------------


def min_covering_exponent(d: int, k: int) -> int | None:
    """Least m >= 0 with d | k**m, or None when no power of k is divisible.

    The search is capped at (number of prime factors of d with
    multiplicity) + 1, beyond which divisibility can no longer newly occur.
    """
    if d < 1:
        raise ValueError("expects d >= 1")
    if d == 1:
        return 0
    cap = sum(e for _, e in numth.factorize(d)) + 1
    r = 1 % d
    m = 0
    while m < cap:
        r = r * k % d
        m += 1
        if r == 0:
            return m
    return None


def is_connected_criterion(group: FiniteGroup, k: int) -> tuple[bool, int | None]:
    """Connectivity test from element orders, plus the diameter bound.

    P(G, k) is connected iff every element order divides some power of k;
    when it is, the diameter is at most twice the largest minimal such
    power over the elements.
    """
    k_norm = normalize_exponent(k, group.order)
    worst = 0
    for d in group.order_census():
        m = min_covering_exponent(d, k_norm)
        if m is None:
            return False, None
        worst = max(worst, m)
    return True, 2 * worst


def is_connected_cyclic_pi(n: int, k: int) -> bool:
    """P(Z_n, k) is connected iff every prime of n also divides k."""
    if n < 1:
        raise ValueError("expects n >= 1")
    if k < 2:
        raise ValueError("expects k >= 2")
    return set(numth.prime_set(n)) <= set(numth.prime_set(k))


# -- clique and chromatic numbers ----------------------------------------------


def clique_number(gr: KPowerGraph, group: FiniteGroup, k: int) -> tuple[int, bool]:
    """(omega, criterion): the graph-side clique number, never above 3,
    and the order-census test for omega = 3 (an element order m > 3 with
    m | k^3-1 and m !| k-1)."""
    if gr.edge_count == 0:
        omega = 1
    elif _has_triangle(gr):
        omega = 3
    else:
        omega = 2
    k_norm = normalize_exponent(k, group.order)
    kc = k_norm**3 - 1
    criterion = any(
        m > 3 and kc % m == 0 and (k_norm - 1) % m != 0 for m in group.order_census()
    )
    return omega, criterion


def _has_triangle(gr: KPowerGraph) -> bool:
    adj_sets = [set(nbrs) for nbrs in gr.adjacency]
    for u, v in gr.edges():
        probe, other = (u, v) if len(gr.adjacency[u]) <= len(gr.adjacency[v]) else (v, u)
        other_set = adj_sets[other]
        for w in gr.adjacency[probe]:
            if w != other and w in other_set:
                return True
    return False


def chromatic(gr: KPowerGraph) -> tuple[int, list[int]]:
    """Proper colouring with the minimum number of colours (never above 3).

    Vertices are coloured greedily in BFS order starting from the least
    vertex of each component, so the output is deterministic.  Colours are
    1-based; chi is 1 for edgeless graphs, 2 for bipartite graphs with an
    edge, and 3 exactly when some component's cycle is odd.
    """
    n = gr.group_order
    adjacency = gr.adjacency
    colors = [0] * n
    chi = 0
    for root in range(n):
        if colors[root]:
            continue
        colors[root] = 1
        chi = max(chi, 1)
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adjacency[v]:
                    if colors[w]:
                        continue
                    used = 0
                    for u in adjacency[w]:
                        cu = colors[u]
                        if cu:
                            used |= 1 << cu
                    c = 1
                    while used >> c & 1:
                        c += 1
                    if c > 3:
                        raise TheoremViolation(
                            "greedy colouring needed a 4th colour; graph is not a pseudoforest"
                        )
                    colors[w] = c
                    if c > chi:
                        chi = c
                    nxt.append(w)
            frontier = nxt
    return chi, colors


def is_perfect(gr: KPowerGraph) -> bool:
    """True iff no component carries an odd cycle of length >= 5.

    In a pseudoforest every cycle is chordless and induced subgraphs stay
    pseudoforests, so odd holes of length >= 5 are the only possible
    obstruction to perfection (longer odd antiholes would need more edges
    than any pseudoforest subgraph can hold).
    """
    return all(length == 3 or length % 2 == 0 for length in cycle_lengths(gr))


# -- characterizations ----------------------------------------------------------


def is_star(group: FiniteGroup, k: int, gr: KPowerGraph | None = None) -> tuple[bool, str]:
    """(graph-side star test, criterion case).

    The graph side checks for one centre adjacent to every other vertex and
    no further edges (n >= 2).  The criterion case is the three-way
    disjunction: every element order divides k; or G is cyclic of order 4
    with k = 2; or G is the order-8 quaternion group with k in {2, 6}
    (k taken mod o(G)).  The two must agree; ``analyze`` flags mismatches.
    """
    n = group.order
    if gr is None:
        gr = build_undirected(group, k)
    graph_star = (
        n >= 2
        and gr.edge_count == n - 1
        and max(len(nbrs) for nbrs in gr.adjacency) == n - 1
    )
    k_norm = normalize_exponent(k, n)
    census = group.order_census()
    if n < 2:
        case = STAR_CASE_NONE
    elif all(k_norm % d == 0 for d in census):
        case = STAR_CASE_ALL_ORDERS
    elif census == _CENSUS_Z4 and k_norm == 2:
        case = STAR_CASE_Z4
    elif census == _CENSUS_Q8 and k_norm in (2, 6):
        case = STAR_CASE_Q8
    else:
        case = STAR_CASE_NONE
    return graph_star, case


def is_empty_graph(group: FiniteGroup, k: int) -> bool:
    """True iff every element order divides k - 1 (all vertices fixed)."""
    k_norm = normalize_exponent(k, group.order)
    return all((k_norm - 1) % d == 0 for d in group.order_census())


def is_forest(group: FiniteGroup, k: int, gr: KPowerGraph | None = None) -> tuple[bool, bool]:
    """(graph-side acyclicity, criterion).

    The criterion: no element order m > 1 is coprime to k with
    ord_m(k) > 2.  Such an m would close an m-orbit of length ord_m(k)
    into a cycle; conversely any cycle forces one.
    """
    if gr is None:
        gr = build_undirected(group, k)
    acyclic = all(p.cycle_length is None for p in components(gr))
    k_norm = normalize_exponent(k, group.order)
    criterion = True
    for m in group.order_census():
        if m > 1 and math.gcd(k_norm, m) == 1 and numth.multiplicative_order(k_norm, m) > 2:
            criterion = False
            break
    return acyclic, criterion


# -- cyclic specialisations ------------------------------------------------------


def component_count_cyclic(n: int, k: int) -> tuple[int, int, bool]:
    """(component count, tau(n), primitive-root criterion) for coprime (n, k).

    Raises ValueError unless gcd(n, k) = 1 (the bound is only claimed
    there), and TheoremViolation if the count drops below tau(n) or the
    equality fails to match the criterion.
    """
    if n < 1:
        raise ValueError("expects n >= 1")
    if math.gcd(n, k) != 1:
        raise ValueError(f"component bound requires gcd(n, k) = 1, got gcd({n}, {k}) != 1")
    group = build_group(f"cyclic:{n}")
    count = len(components(build_undirected(group, k)))
    divs = numth.divisors(n)
    tau_n = len(divs)
    criterion = all(numth.is_primitive_root(k, d) for d in divs)
    if count < tau_n:
        raise TheoremViolation(f"P(Z_{n},{k}) has {count} components, below tau({n}) = {tau_n}")
    if (count == tau_n) != criterion:
        raise TheoremViolation(
            f"P(Z_{n},{k}): component count {count} vs tau {tau_n} disagrees with "
            f"the primitive-root criterion ({criterion})"
        )
    return count, tau_n, criterion


def adjacency_preserves_order(gr: KPowerGraph, group: FiniteGroup) -> bool | None:
    """Whether every edge joins elements of equal order.

    Only applicable when gcd(o(G), k) = 1; returns None otherwise.
    """
    if math.gcd(group.order, gr.k_normalized) != 1:
        return None
    orders = group.element_orders
    return all(orders[u] == orders[v] for u, v in gr.edges())


@dataclass
class HalfExponentCertificate:
    """Structural witness for P(Z_n, n/2) and P(Z_n, n/2+1), n = 2 mod 4."""

    n: int
    k_half: int
    star_centers: tuple[int, int]
    star_leaf_count: int
    half_description: str
    k_half_plus_one: int
    matching_pairs: list[tuple[int, int]]
    matching_description: str


def theorem16_structure(n: int) -> HalfExponentCertificate:
    """Verify the two closed-form shapes at k = n/2 and k = n/2 + 1.

    For even n with n/2 odd (n >= 6): at k = n/2 the graph is two stars
    K_{1, n/2-1} centred at 0 and n/2 (evens attach to 0, odds to n/2);
    at k = n/2 + 1 it is n/2 disjoint edges {a, a + n/2}.  A mismatch
    raises TheoremViolation since both shapes are forced.
    """
    if n < 6 or n % 4 != 2:
        raise ValueError("requires even n with n/2 odd and n >= 6")
    half = n // 2
    group = build_group(f"cyclic:{n}")

    expected_stars = sorted(
        [(0, a) for a in range(2, n, 2)] + [(min(a, half), max(a, half)) for a in range(1, n, 2) if a != half]
    )
    got_stars = build_undirected(group, half).edges()
    if got_stars != expected_stars:
        raise TheoremViolation(f"P(Z_{n},{half}) does not split into the two expected stars")

    pairs = [(a, (a + half) % n) for a in range(1, n, 2)]
    expected_matching = sorted((min(a, b), max(a, b)) for a, b in pairs)
    got_matching = build_undirected(group, half + 1).edges()
    if got_matching != expected_matching:
        raise TheoremViolation(f"P(Z_{n},{half + 1}) is not the expected perfect matching")

    return HalfExponentCertificate(
        n=n,
        k_half=half,
        star_centers=(0, half),
        star_leaf_count=half - 1,
        half_description=f"2*K_{{1,{half - 1}}}",
        k_half_plus_one=half + 1,
        matching_pairs=sorted((min(a, b), max(a, b)) for a, b in pairs),
        matching_description=f"{half}*P_2",
    )


def shapes_all_basic_criterion(n: int, k: int) -> bool:
    """Predicts when every component of P(Z_n, k) is isolated, K_2 or a cycle.

    True when gcd(n, k) = 1.  The lone exception on the non-coprime side is
    k = n/2 + 1 (mod n) for n = 2 mod 4, where the graph degenerates to a
    perfect matching of K_2 components even though gcd(n, k) = 2: the usual
    witness (the degree-1 vertex 1 attached to a higher-degree vertex k)
    collapses because k is then a fixed point.
    """
    if n < 1:
        raise ValueError("expects n >= 1")
    if math.gcd(n, k) == 1:
        return True
    k_norm = k % n or n  # n = 2 has n/2 + 1 = n, which reduces to residue 0
    return n % 4 == 2 and k_norm == n // 2 + 1


# -- the aggregate report ---------------------------------------------------------


@dataclass
class CyclicExtras:
    pi_criterion_connected: bool
    tau: int
    primitive_root_all_divisors: bool | None  # None when gcd(n, k) != 1
    thm16_structure: str | None  # "two_stars" | "half_matching" | None


@dataclass
class AnalysisReport:
    group: str
    k: int
    k_normalized: int
    edges: int
    edge_count_formula: int
    edge_count_brute: int
    degree_sequence: list[int]
    components: int
    component_count: int
    component_shapes: dict[str, int]
    is_connected: bool
    diameter: int | None
    diameter_bound: int | None
    clique_number: int
    clique_criterion_holds: bool
    chromatic_number: int
    is_forest: bool
    forest_criterion_holds: bool
    is_star: bool
    star_criterion_case: str
    is_empty: bool
    is_perfect: bool
    cyclic: CyclicExtras | None
    discrepancies: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        doc = {
            "group": self.group,
            "k": self.k,
            "k_normalized": self.k_normalized,
            "edges": self.edges,
            "edge_count_formula": self.edge_count_formula,
            "edge_count_brute": self.edge_count_brute,
            "degree_sequence": self.degree_sequence,
            "components": self.components,
            "component_count": self.component_count,
            "component_shapes": self.component_shapes,
            "is_connected": self.is_connected,
            "diameter": self.diameter,
            "diameter_bound": self.diameter_bound,
            "clique_number": self.clique_number,
            "clique_criterion_holds": self.clique_criterion_holds,
            "chromatic_number": self.chromatic_number,
            "is_forest": self.is_forest,
            "forest_criterion_holds": self.forest_criterion_holds,
            "is_star": self.is_star,
            "star_criterion_case": self.star_criterion_case,
            "is_empty": self.is_empty,
            "is_perfect": self.is_perfect,
            "cyclic": None,
            "discrepancies": self.discrepancies,
        }
        if self.cyclic is not None:
            doc["cyclic"] = {
                "pi_criterion_connected": self.cyclic.pi_criterion_connected,
                "tau": self.cyclic.tau,
                "primitive_root_all_divisors": self.cyclic.primitive_root_all_divisors,
                "thm16_structure": self.cyclic.thm16_structure,
            }
        return doc

    CSV_FIELDS = (
        "group,k,k_normalized,edges,edge_count_formula,edge_count_brute,degree_sequence,"
        "components,component_count,component_shapes,is_connected,diameter,diameter_bound,"
        "clique_number,clique_criterion_holds,chromatic_number,is_forest,forest_criterion_holds,"
        "is_star,star_criterion_case,is_empty,is_perfect,pi_criterion_connected,tau,"
        "primitive_root_all_divisors,thm16_structure,discrepancies"
    )

    def to_csv_row(self) -> str:
        def cell(value) -> str:
            if value is None:
                return ""
            if isinstance(value, bool):
                return "1" if value else "0"
            return str(value)

        shape_text = ";".join(f"{tag}:{count}" for tag, count in sorted(self.component_shapes.items()))
        degree_text = " ".join(str(d) for d in self.degree_sequence)
        cyc = self.cyclic
        fields = [
            self.group,
            self.k,
            self.k_normalized,
            self.edges,
            self.edge_count_formula,
            self.edge_count_brute,
            degree_text,
            self.components,
            self.component_count,
            shape_text,
            self.is_connected,
            self.diameter,
            self.diameter_bound,
            self.clique_number,
            self.clique_criterion_holds,
            self.chromatic_number,
            self.is_forest,
            self.forest_criterion_holds,
            self.is_star,
            self.star_criterion_case,
            self.is_empty,
            self.is_perfect,
            cyc.pi_criterion_connected if cyc else None,
            cyc.tau if cyc else None,
            cyc.primitive_root_all_divisors if cyc else None,
            cyc.thm16_structure if cyc else None,
            "|".join(self.discrepancies),
        ]
        return ",".join(cell(v) for v in fields)


def analyze(group: FiniteGroup, k: int) -> AnalysisReport:
    """Compute every parameter and criterion for one (G, k) pair.

    All paired closed-form/brute-force values are compared; mismatches are
    recorded in ``discrepancies`` rather than raised, so reports remain
    producible outside any theorem's hypothesis.
    """
    n = group.order
    gr = build_undirected(group, k)
    profiles = components(gr)
    discrepancies: list[str] = []

    edges_brute = gr.edge_count
    try:
        edges_formula = edge_count_formula(group, k)
    except TheoremViolation as exc:
        edges_formula = -1
        discrepancies.append(str(exc))
    if edges_formula != edges_brute:
        discrepancies.append(f"edge count: formula {edges_formula} != graph {edges_brute}")

    shape_counts: dict[str, int] = {}
    for p in profiles:
        shape_counts[p.shape_tag] = shape_counts.get(p.shape_tag, 0) + 1

    connected = len(profiles) == 1
    criterion_connected, bound = is_connected_criterion(group, k)
    if criterion_connected != connected:
        discrepancies.append(
            f"connectivity: criterion {criterion_connected} != graph {connected}"
        )
    diam = diameter(gr) if connected else None
    if connected and bound is not None and diam is not None and diam > bound:
        discrepancies.append(f"diameter {diam} exceeds bound {bound}")

    omega, clique_criterion = clique_number(gr, group, k)
    if (omega == 3) != clique_criterion:
        discrepancies.append(f"clique: omega {omega} vs criterion {clique_criterion}")

    chi, coloring = chromatic(gr)
    if any(coloring[u] == coloring[v] for u, v in gr.edges()):
        discrepancies.append("colouring is not proper")
    if sorted(set(coloring)) != list(range(1, chi + 1)):
        discrepancies.append("colouring does not use exactly chi colours")

    forest_bool, forest_criterion = is_forest(group, k, gr)
    if forest_bool != forest_criterion:
        discrepancies.append(f"forest: graph {forest_bool} vs criterion {forest_criterion}")

    star_bool, star_case = is_star(group, k, gr)
    if star_bool != (star_case != STAR_CASE_NONE):
        discrepancies.append(f"star: graph {star_bool} vs case {star_case}")

    empty_criterion = is_empty_graph(group, k)
    if empty_criterion != (edges_brute == 0):
        discrepancies.append(
            f"empty: criterion {empty_criterion} vs edge count {edges_brute}"
        )

    perfect = is_perfect(gr)
    if chi == 3 and omega == 2 and perfect:
        discrepancies.append("perfect despite chi 3 and omega 2")

    cyclic_extras = None
    if group.spec.family == "cyclic":
        pi_connected = is_connected_cyclic_pi(n, k)
        if pi_connected != connected:
            discrepancies.append(f"pi criterion {pi_connected} != connectivity {connected}")
        if connected and not forest_bool:
            discrepancies.append("connected cyclic graph is not a tree")
        divs = numth.divisors(n)
        tau_n = len(divs)
        prim_root: bool | None = None
        if math.gcd(n, gr.k_normalized) == 1:
            prim_root = all(numth.is_primitive_root(gr.k_normalized, d) for d in divs)
            count = len(profiles)
            if count < tau_n:
                discrepancies.append(f"component count {count} below tau {tau_n}")
            if (count == tau_n) != prim_root:
                discrepancies.append(
                    f"component count {count} vs tau {tau_n} disagrees with "
                    f"primitive-root criterion {prim_root}"
                )
            homogeneous = adjacency_preserves_order(gr, group)
            if homogeneous is False:
                discrepancies.append("an edge joins elements of different order")
        all_basic = all(p.shape in BASIC_SHAPES for p in profiles)
        if all_basic != shapes_all_basic_criterion(n, gr.k_normalized):
            discrepancies.append(
                f"component shapes basic={all_basic} disagrees with the gcd criterion"
            )
        tag = None
        if n % 4 == 2:
            if gr.k_normalized == n // 2:
                tag = "two_stars"
            elif gr.k_normalized == n // 2 + 1:
                tag = "half_matching"
        cyclic_extras = CyclicExtras(pi_connected, tau_n, prim_root, tag)

    degree_sequence = sorted((len(nbrs) for nbrs in gr.adjacency), reverse=True)

    return AnalysisReport(
        group=str(group.spec),
        k=k,
        k_normalized=gr.k_normalized,
        edges=edges_brute,
        edge_count_formula=edges_formula,
        edge_count_brute=edges_brute,
        degree_sequence=degree_sequence,
        components=len(profiles),
        component_count=len(profiles),
        component_shapes=shape_counts,
        is_connected=connected,
        diameter=diam,
        diameter_bound=bound,
        clique_number=omega,
        clique_criterion_holds=clique_criterion,
        chromatic_number=chi,
        is_forest=forest_bool,
        forest_criterion_holds=forest_criterion,
        is_star=star_bool,
        star_criterion_case=star_case,
        is_empty=empty_criterion,
        is_perfect=perfect,
        cyclic=cyclic_extras,
        discrepancies=discrepancies,
    )
