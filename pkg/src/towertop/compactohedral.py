"""Validators for marked towers and the gallery of worked examples.

A marked tower carries a compact part ``K_i`` (and sometimes an outer
collar ``L_i``) inside each level.  The validators check, entirely
combinatorially, that the markings present a genuine compactum inside
the limit space:

* C0 — every level is a well-formed complex and every marking is a
  subcomplex.
* C1 — bonds carry the fine marking into the coarse one.
* C2 — the fine marking sits interior to the bond preimage of the
  coarse one (no simplex touching ``K_{i+1}`` escapes the preimage).
* C3 — away from the marking the bond is a simplicial isomorphism.

The four variants differ in which of C2/C3 they require and whether
they are phrased against ``K`` itself or the collar ``L``:
``compactohedral`` = C0,C1,C2,C3; ``weakly_compactohedral`` = C0,C1,C3;
``pre_compactohedral`` = C0,C1,C2'',C3'' (collar interiority, closed
complements); ``weakly_pre_compactohedral`` = C0,C1,C2',C3' (collar
containment, open complements).

Interiority is the star condition: ``contained_in_interior(A, B, K)``
holds when every simplex of ``K`` meeting a vertex of ``A`` lies in
``B``.  This is the combinatorial rendering of "A is contained in the
topological interior of B".

Violations are reported axiom-major: the validator scans one axiom
across every level before moving to the next and reports only the
first axiom that fails, every level where it does.  Later axioms are
not evaluated, both because their failures are usually downstream
noise (a C1 escape breaks C2 at the same spot) and so a report names
exactly one broken axiom.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .simplicial import (
    SimplicialComplex,
    SimplicialMap,
    generated_subcomplex,
    label_key,
    preimage_subcomplex,
    sort_simplex,
    validate_complex,
)
from .tower import Certificate, ComplexTower


def _ordered(simplexes):
    return sorted(simplexes, key=lambda s: (len(s), tuple(label_key(v) for v in s)))


# -- interiority ---------------------------------------------------------


def _interior_witness(a: SimplicialComplex, b: SimplicialComplex, k: SimplicialComplex):
    """First simplex of ``k`` meeting ``a`` but escaping ``b``, or None."""
    marked = set(a.vertices)
    for s in _ordered(k.simplexes):
        if any(v in marked for v in s) and s not in b.simplexes:
            return s
    return None


def contained_in_interior(
    a: SimplicialComplex, b: SimplicialComplex, k: SimplicialComplex
) -> bool:
    """Does ``a`` lie in the interior of ``b`` inside the ambient ``k``?

    True when every simplex of ``k`` that meets a vertex of ``a`` lies
    in ``b``; in particular the closed star of ``a`` must be inside
    ``b``, and ``a`` itself is then a subcomplex of ``b``.

    >>> path = SimplicialComplex.from_maximal([("a", "b"), ("b", "c")])
    >>> inner = SimplicialComplex.from_maximal([], extra_vertices=["a"])
    >>> hull = SimplicialComplex.from_maximal([("a", "b")])
    >>> contained_in_interior(inner, hull, path)
    True
    >>> middle = SimplicialComplex.from_maximal([], extra_vertices=["b"])
    >>> contained_in_interior(middle, hull, path)
    False
    """
    if not a.is_subcomplex_of(k):
        raise ValueError("the inner complex must be a subcomplex of the ambient one")
    if not b.is_subcomplex_of(k):
        raise ValueError("the outer complex must be a subcomplex of the ambient one")
    return _interior_witness(a, b, k) is None


# -- reports -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    level: int
    witness: tuple
    detail: str

    def message(self) -> str:
        return f"level {self.level}: witness {self.witness!r} ({self.detail})"


@dataclass(frozen=True)
class ValidationReport:
    variant: str
    verdict: str  # "PASS" | "FAIL"
    axioms: Tuple[str, ...]
    violations: Tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def failed_axiom(self) -> Optional[str]:
        return self.violations[0].axiom if self.violations else None

    def headline(self) -> str:
        if self.passed:
            if self.axioms == ("C0", "C1", "C2", "C3"):
                return "PASS (C0..C3)"
            return "PASS (" + ",".join(self.axioms) + ")"
        return f"FAIL ({self.failed_axiom()})"


VARIANTS = (
    "compactohedral",
    "weakly_compactohedral",
    "pre_compactohedral",
    "weakly_pre_compactohedral",
)


def _check_c0(tower: ComplexTower) -> List[Violation]:
    out = []
    for i, level in enumerate(tower.levels):
        bad = validate_complex(level)
        if bad is not None:
            out.append(Violation("C0", i, bad.simplex, bad.kind))
    return out


def _check_c1(tower: ComplexTower) -> List[Violation]:
    out = []
    for i, bond in enumerate(tower.bonds):
        fine_k = tower.marked_K[i + 1]
        coarse_k = tower.marked_K[i]
        for s in _ordered(fine_k.simplexes):
            if bond.image_simplex(s) not in coarse_k.simplexes:
                out.append(
                    Violation(
                        "C1",
                        i + 1,
                        s,
                        "marked simplex whose image escapes the coarse marking",
                    )
                )
                break
    return out


def _check_c2(tower: ComplexTower) -> List[Violation]:
    out = []
    for i, bond in enumerate(tower.bonds):
        fine_k = tower.marked_K[i + 1]
        pulled = preimage_subcomplex(bond, tower.marked_K[i])
        w = _interior_witness(fine_k, pulled, tower.levels[i + 1])
        if w is not None:
            out.append(
                Violation(
                    "C2",
                    i + 1,
                    w,
                    "simplex touching the fine marking escapes the bond preimage "
                    "of the coarse marking",
                )
            )
    return out


def _outside_iso_violation(
    bond: SimplicialMap, blocked_coarse: SimplicialComplex, axiom: str, level: int
) -> Optional[Violation]:
    """Check the bond restricts to an isomorphism away from the marking.

    Both sides are the full subcomplexes spanned by vertices outside
    the marking (coarse) and outside its bond preimage (fine); the
    witness always lives in the coarse level.
    """
    coarse, fine = bond.target, bond.source
    blocked_fine = preimage_subcomplex(bond, blocked_coarse)
    coarse_out = [v for v in coarse.vertices if v not in set(blocked_coarse.vertices)]
    fine_out = [v for v in fine.vertices if v not in set(blocked_fine.vertices)]
    coarse_full = coarse.full_subcomplex(coarse_out)
    fine_full = fine.full_subcomplex(fine_out)

    inverse = {}
    for v in fine_out:
        w = bond.vertex_map[v]
        if w in inverse:
            return Violation(axiom, level, (w,), "coarse vertex covered twice away from the marking")
        inverse[w] = v
    for w in coarse_out:
        if w not in inverse:
            return Violation(axiom, level, (w,), "coarse vertex not covered away from the marking")
    for s in _ordered(fine_full.simplexes):
        if len(bond.image_simplex(s)) != len(s):
            return Violation(axiom, level, bond.image_simplex(s), "simplex collapses away from the marking")
    for t in _ordered(coarse_full.simplexes):
        pulled = tuple(inverse[w] for w in t)
        if not fine.has_simplex(pulled):
            return Violation(axiom, level, t, "coarse simplex has no counterpart away from the marking")
    return None


def _check_c3(tower: ComplexTower, marked, axiom: str) -> List[Violation]:
    out = []
    for i, bond in enumerate(tower.bonds):
        v = _outside_iso_violation(bond, marked[i], axiom, i)
        if v is not None:
            out.append(v)
    return out


def _check_collar_containment(tower: ComplexTower, interior: bool, axiom: str) -> List[Violation]:
    """C2' / C2'': the collar maps into the marking, which sits inside the collar."""
    out = []
    for i, bond in enumerate(tower.bonds):
        fine_l = tower.marked_L[i + 1]
        coarse_k = tower.marked_K[i]
        for s in _ordered(fine_l.simplexes):
            if bond.image_simplex(s) not in coarse_k.simplexes:
                out.append(
                    Violation(
                        axiom, i + 1, s, "collar simplex whose image escapes the coarse marking"
                    )
                )
                break
    for i in range(len(tower.levels)):
        k_i, l_i = tower.marked_K[i], tower.marked_L[i]
        if interior:
            w = _interior_witness(k_i, l_i, tower.levels[i])
            if w is not None:
                out.append(
                    Violation(axiom, i, w, "simplex touching the marking escapes the collar")
                )
        else:
            missing = next(
                (s for s in _ordered(k_i.simplexes) if s not in l_i.simplexes), None
            )
            if missing is not None:
                out.append(Violation(axiom, i, missing, "marking not contained in the collar"))
    return out


def _closed_complement(level: SimplicialComplex, collar: SimplicialComplex) -> SimplicialComplex:
    """Closure of the part of the level outside the collar."""
    outside = [s for s in level.simplexes if s not in collar.simplexes]
    return generated_subcomplex(outside)


def _check_c3_closed(tower: ComplexTower, axiom: str) -> List[Violation]:
    """C3'': bond is an isomorphism between closed complements of the collars."""
    out = []
    for i, bond in enumerate(tower.bonds):
        coarse_cc = _closed_complement(tower.levels[i], tower.marked_L[i])
        fine_cc = preimage_subcomplex(bond, coarse_cc)
        # vertex bijection plus two-sided simplex matching
        inverse = {}
        violation = None
        for v in fine_cc.vertices:
            w = bond.vertex_map[v]
            if w in inverse:
                violation = Violation(axiom, i, (w,), "coarse vertex covered twice in the closed complement")
                break
            inverse[w] = v
        if violation is None:
            for w in coarse_cc.vertices:
                if w not in inverse:
                    violation = Violation(axiom, i, (w,), "coarse vertex not covered in the closed complement")
                    break
        if violation is None:
            for s in _ordered(fine_cc.simplexes):
                if len(bond.image_simplex(s)) != len(s):
                    violation = Violation(axiom, i, bond.image_simplex(s), "simplex collapses in the closed complement")
                    break
        if violation is None:
            for t in _ordered(coarse_cc.simplexes):
                pulled = tuple(inverse[w] for w in t)
                if not fine_cc.has_simplex(pulled):
                    violation = Violation(axiom, i, t, "coarse simplex has no counterpart in the closed complement")
                    break
        if violation is not None:
            out.append(violation)
    return out


def validate(tower: ComplexTower, variant: str = "compactohedral") -> ValidationReport:
    """Check the marked tower against one axiom family.

    Violations are reported axiom-major: only the first failing axiom
    appears, with one witness per level where it fails.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant: {variant!r}")
    if tower.marked_K is None:
        raise ValueError("validation needs marked_K on every level")
    needs_collar = variant in ("pre_compactohedral", "weakly_pre_compactohedral")
    if needs_collar and tower.marked_L is None:
        raise ValueError(f"{variant} needs marked_L on every level")

    if variant == "compactohedral":
        axioms = ("C0", "C1", "C2", "C3")
        checks = {
            "C1": lambda: _check_c1(tower),
            "C2": lambda: _check_c2(tower),
            "C3": lambda: _check_c3(tower, tower.marked_K, "C3"),
        }
    elif variant == "weakly_compactohedral":
        axioms = ("C0", "C1", "C3")
        checks = {
            "C1": lambda: _check_c1(tower),
            "C3": lambda: _check_c3(tower, tower.marked_K, "C3"),
        }
    elif variant == "pre_compactohedral":
        axioms = ("C0", "C1", "C2''", "C3''")
        checks = {
            "C1": lambda: _check_c1(tower),
            "C2''": lambda: _check_collar_containment(tower, True, "C2''"),
            "C3''": lambda: _check_c3_closed(tower, "C3''"),
        }
    else:
        axioms = ("C0", "C1", "C2'", "C3'")
        checks = {
            "C1": lambda: _check_c1(tower),
            "C2'": lambda: _check_collar_containment(tower, False, "C2'"),
            "C3'": lambda: _check_c3(tower, tower.marked_L, "C3'"),
        }

    c0 = _check_c0(tower)
    if c0:
        return ValidationReport(variant, "FAIL", axioms, tuple(c0))
    for name in axioms[1:]:
        found = checks[name]()
        if found:
            return ValidationReport(variant, "FAIL", axioms, tuple(found))
    return ValidationReport(variant, "PASS", axioms, ())


def implied_collars(tower: ComplexTower) -> ComplexTower:
    """Attach the canonical collars: the whole coarsest level, then bond preimages.

    With these collars a tower satisfying the plain axioms satisfies
    the collared ones as well.
    """
    if tower.marked_K is None:
        raise ValueError("collars are derived from marked_K")
    collars = [tower.levels[0]]
    for i, bond in enumerate(tower.bonds):
        collars.append(preimage_subcomplex(bond, tower.marked_K[i]))
    return ComplexTower(
        tower.levels, tower.bonds, tower.marked_K, collars, tower.certificate
    )


# -- gallery -------------------------------------------------------------


def _path_edges(prefix, k, lo, hi):
    return [((prefix, k, j), (prefix, k, j + 1)) for j in range(lo, hi)]


def _comb_level(teeth: int, depth: int, i: int) -> SimplicialComplex:
    length = 2 * depth + 4
    edges = []
    for k in range(1, teeth + 1):
        edges.extend(_path_edges("c", k, 0, length))
    edges.extend([(("c", k, 0), ("c", k + 1, 0)) for k in range(1, teeth)])
    edges.append((("o",), ("c", teeth, length)))
    edges.extend(
        [(("c", k, length), ("c", k + 1, length)) for k in range(i + 1, teeth)]
    )
    return SimplicialComplex.from_maximal(edges)


def _comb_marking(teeth: int, depth: int, i: int) -> SimplicialComplex:
    length = 2 * depth + 4
    reach = depth + 1 - i
    edges = [(("o",), ("c", teeth, length))]
    edges.extend(
        [(("c", k, length), ("c", k + 1, length)) for k in range(i + 1, teeth)]
    )
    for k in range(i + 1, teeth + 1):
        edges.extend(_path_edges("c", k, length - reach, length))
    return SimplicialComplex.from_maximal(edges)


def _fence_level(segments: int, depth: int, i: int) -> SimplicialComplex:
    length = 2 * depth + 4
    edges = []
    for k in range(1, segments + 1):
        edges.extend(_path_edges("s", k, 0, length))
    edges.extend([(("s", k, 0), ("s", k + 1, 0)) for k in range(i + 1, segments)])
    edges.extend(
        [(("s", k, length), ("s", k + 1, length)) for k in range(i + 1, segments)]
    )
    return SimplicialComplex.from_maximal(edges)


def _fence_marking(segments: int, depth: int, i: int) -> SimplicialComplex:
    length = 2 * depth + 4
    reach = depth + 1 - i
    edges = []
    edges.extend([(("s", k, 0), ("s", k + 1, 0)) for k in range(i + 1, segments)])
    edges.extend(
        [(("s", k, length), ("s", k + 1, length)) for k in range(i + 1, segments)]
    )
    for k in range(i + 1, segments + 1):
        edges.extend(_path_edges("s", k, 0, reach))
        edges.extend(_path_edges("s", k, length - reach, length))
    return SimplicialComplex.from_maximal(edges)


def _inclusion_bonds(levels) -> list:
    return [
        SimplicialMap.inclusion(levels[i + 1], levels[i]) for i in range(len(levels) - 1)
    ]


def _polygon(m: int) -> SimplicialComplex:
    return SimplicialComplex.from_maximal(
        [(("v", a), ("v", (a + 1) % m)) for a in range(m)]
    )


def build_gallery(name: str, **params) -> ComplexTower:
    """Construct one of the worked example towers.

    comb(teeth, depth): a comb losing bottom connections level by
    level; its compactum is the bottom spine plus the still-attached
    tooth tips.  Certified shrinking family with trivial core.

    fence(segments, depth): segments joined along both rails, losing
    a pair of rail edges per level; the compactum is the two rail
    collars.  No certificate.

    solenoid(p, depth): circles with degree-p winding bonds; the whole
    level is marked.  Certified periodic.

    warsaw(depth): a constant hexagon with identity bonds; the whole
    level is marked.  Certified periodic.
    """
    if name == "comb":
        teeth, depth = int(params["teeth"]), int(params["depth"])
        if depth < 1:
            raise ValueError("depth must be at least 1")
        if teeth < depth + 1:
            raise ValueError("comb needs at least depth + 1 teeth")
        levels = [_comb_level(teeth, depth, i) for i in range(depth + 1)]
        marks = [_comb_marking(teeth, depth, i) for i in range(depth + 1)]
        tower = ComplexTower(
            levels,
            _inclusion_bonds(levels),
            marks,
            certificate=Certificate(
                "shift_family", stable_core=None, lim1_display="Prod(Z)/Sum(Z)"
            ),
        )
        return implied_collars(tower)
    if name == "fence":
        segments, depth = int(params["segments"]), int(params["depth"])
        if depth < 1:
            raise ValueError("depth must be at least 1")
        if segments < depth + 1:
            raise ValueError("fence needs at least depth + 1 segments")
        levels = [_fence_level(segments, depth, i) for i in range(depth + 1)]
        marks = [_fence_marking(segments, depth, i) for i in range(depth + 1)]
        tower = ComplexTower(levels, _inclusion_bonds(levels), marks)
        return implied_collars(tower)
    if name == "solenoid":
        p, depth = int(params["p"]), int(params["depth"])
        if depth < 1:
            raise ValueError("depth must be at least 1")
        if p < 2:
            raise ValueError("winding degree must be at least 2")
        levels = [_polygon(3 * p**j) for j in range(depth + 1)]
        bonds = []
        for j in range(depth):
            m = 3 * p**j
            fine = levels[j + 1]
            bonds.append(
                SimplicialMap(fine, levels[j], {("v", a): ("v", a % m) for a in range(3 * p ** (j + 1))})
            )
        tower = ComplexTower(
            levels, bonds, list(levels), certificate=Certificate("periodic")
        )
        return implied_collars(tower)
    if name == "warsaw":
        depth = int(params["depth"])
        if depth < 1:
            raise ValueError("depth must be at least 1")
        hexagon = _polygon(6)
        levels = [hexagon] * (depth + 1)
        bonds = [SimplicialMap.identity(hexagon)] * depth
        tower = ComplexTower(
            levels, bonds, list(levels), certificate=Certificate("periodic")
        )
        return implied_collars(tower)
    raise ValueError(f"unknown gallery family: {name!r}")


def fence_violation(axiom: str, segments: int, depth: int) -> ComplexTower:
    """A fence tower broken so that exactly the named axiom fails.

    "C1" enlarges one marking by a vertex whose image escapes the
    coarser marking; "C2" removes the marking's interior margin so a
    neighboring simplex escapes the preimage; "C3" deletes one edge
    away from the markings so the bond stops being an isomorphism
    there.
    """
    if depth < 2:
        raise ValueError("violations need depth at least 2")
    base = build_gallery("fence", segments=segments, depth=depth)
    levels = list(base.levels)
    marks = list(base.marked_K)
    length = 2 * depth + 4
    if axiom == "C1":
        marks[2] = marks[2].union(
            SimplicialComplex.from_maximal([], extra_vertices=[("s", 1, 0)])
        )
    elif axiom == "C2":
        # stretch the level-2 marking to the level-1 reach: the margin
        # that keeps neighbors inside the preimage disappears
        reach = depth  # reach of level 1
        extra = []
        for k in range(3, segments + 1):
            extra.extend(_path_edges("s", k, 0, reach))
            extra.extend(_path_edges("s", k, length - reach, length))
        marks[2] = marks[2].union(SimplicialComplex.from_maximal(extra))
    elif axiom == "C3":
        mid = depth + 1
        gone = (("s", 1, mid), ("s", 1, mid + 1))
        for i in range(2, depth + 1):
            levels[i] = SimplicialComplex(
                s for s in levels[i].simplexes if s != sort_simplex(gone)
            )
    else:
        raise ValueError(f"no violation builder for axiom {axiom!r}")
    bonds = _inclusion_bonds(levels)
    return implied_collars(ComplexTower(levels, bonds, marks))
