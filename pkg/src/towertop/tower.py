"""Inverse sequences of groups and complexes, with exact limit analysis.

A tower is indexed so that level 0 is the coarsest stage and
``bonds[i]`` maps level ``i + 1`` into level ``i``.  A direct system
runs the other way: ``bonds[i]`` maps level ``i`` into level ``i + 1``.

Only a finite truncation of a tower is ever observed, so any claim
about its limit behaviour is either (a) a statement about the window
actually computed, or (b) an extrapolation licensed by a certificate.
A certificate asserts that the visible pattern continues forever:
``periodic`` means levels and bonds repeat (up to canonical
coordinates) with the stated offset and period; ``shift_family`` means
every bond beyond the offset is injective and not surjective, with the
limiting value carried as ``stable_core``.  Certificates are verified
against the visible data on construction and rejected when the data
contradicts them; what they add is the right to extend the verified
pattern beyond the truncation.

The image chain at a level is the descending sequence of images of the
composite bonds from deeper and deeper stages: entry k is the image of
the k-fold composite, with entry 0 the full group.
"""

from dataclasses import dataclass
from typing import List, Optional, Union

import sympy

from .abelian import (
    FGAbelianGroup,
    GroupHom,
    IntegerMatrix,
    Subgroup,
    compose_homs,
)
from .simplicial import (
    cohomology,
    homology,
    induced_cohomology_map,
    induced_map,
)


@dataclass(frozen=True)
class Certificate:
    """Assertion that a tower's visible pattern continues forever.

    kind = "periodic": levels and bonds from ``offset`` on repeat with
    the given ``period`` (compared in canonical coordinates — the
    abstract isomorphism type of the data, not label identity).

    kind = "shift_family": beyond ``offset`` every bond is injective
    and not surjective, and the inverse limit equals ``stable_core``.

    ``lim1_display`` optionally names the derived-limit quotient shown
    when the first derived limit is uncountable.
    """

    kind: str
    offset: int = 0
    period: int = 1
    stable_core: Optional[FGAbelianGroup] = None
    lim1_display: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("periodic", "shift_family"):
            raise ValueError(f"unknown certificate kind: {self.kind!r}")
        if self.offset < 0:
            raise ValueError("certificate offset must be nonnegative")
        if self.period < 1:
            raise ValueError("certificate period must be positive")


def _verify_group_certificate(levels, bonds, cert: Certificate) -> None:
    if cert.kind == "periodic":
        o, p = cert.offset, cert.period
        if len(levels) < o + p + 1:
            raise ValueError(
                "periodic certificate needs at least one full period of observed levels"
            )
        for j in range(o, len(levels) - p):
            if levels[j].invariants != levels[j + p].invariants:
                raise ValueError(
                    f"certificate contradicted: levels {j} and {j + p} are not isomorphic"
                )
        for j in range(o, len(bonds) - p):
            if bonds[j].canonical_matrix() != bonds[j + p].canonical_matrix():
                raise ValueError(
                    f"certificate contradicted: bonds {j} and {j + p} differ canonically"
                )
    else:
        for j in range(cert.offset, len(bonds)):
            if not bonds[j].is_injective():
                raise ValueError(f"certificate contradicted: bond {j} is not injective")
            if bonds[j].is_surjective():
                raise ValueError(f"certificate contradicted: bond {j} is surjective")


class GroupTower:
    """Inverse sequence of finitely generated abelian groups."""

    __slots__ = ("levels", "bonds", "certificate")

    def __init__(self, levels, bonds, certificate: Optional[Certificate] = None):
        self.levels = list(levels)
        self.bonds = list(bonds)
        if not self.levels:
            raise ValueError("a tower needs at least one level")
        if len(self.bonds) != len(self.levels) - 1:
            raise ValueError("a tower needs exactly one bond per adjacent pair of levels")
        for i, b in enumerate(self.bonds):
            if b.source != self.levels[i + 1] or b.target != self.levels[i]:
                raise ValueError(f"bond {i} does not map level {i + 1} into level {i}")
        if certificate is not None:
            _verify_group_certificate(self.levels, self.bonds, certificate)
        self.certificate = certificate

    def truncate(self, depth: int) -> "GroupTower":
        """First ``depth + 1`` levels, dropping the certificate."""
        if depth < 0 or depth >= len(self.levels):
            raise ValueError("truncation depth out of range")
        return GroupTower(self.levels[: depth + 1], self.bonds[:depth])

    def __repr__(self) -> str:
        inner = ", ".join(g.describe() for g in self.levels)
        return f"<GroupTower {inner}>"


class DirectSystem:
    """Direct sequence of finitely generated abelian groups."""

    __slots__ = ("levels", "bonds", "certificate")

    def __init__(self, levels, bonds, certificate: Optional[Certificate] = None):
        self.levels = list(levels)
        self.bonds = list(bonds)
        if not self.levels:
            raise ValueError("a direct system needs at least one level")
        if len(self.bonds) != len(self.levels) - 1:
            raise ValueError("a direct system needs one bond per adjacent pair of levels")
        for i, b in enumerate(self.bonds):
            if b.source != self.levels[i] or b.target != self.levels[i + 1]:
                raise ValueError(f"bond {i} does not map level {i} into level {i + 1}")
        if certificate is not None:
            self._verify(certificate)
        self.certificate = certificate

    def _verify(self, cert: Certificate) -> None:
        if cert.kind == "periodic":
            o, p = cert.offset, cert.period
            if len(self.levels) < o + p + 1:
                raise ValueError(
                    "periodic certificate needs at least one full period of observed levels"
                )
            for j in range(o, len(self.levels) - p):
                if self.levels[j].invariants != self.levels[j + p].invariants:
                    raise ValueError(
                        f"certificate contradicted: levels {j} and {j + p} are not isomorphic"
                    )
            for j in range(o, len(self.bonds) - p):
                if self.bonds[j].canonical_matrix() != self.bonds[j + p].canonical_matrix():
                    raise ValueError(
                        f"certificate contradicted: bonds {j} and {j + p} differ canonically"
                    )
        else:
            # dual shrinking family: bonds eventually surjective, never injective
            for j in range(cert.offset, len(self.bonds)):
                if not self.bonds[j].is_surjective():
                    raise ValueError(f"certificate contradicted: bond {j} is not surjective")
                if self.bonds[j].is_injective():
                    raise ValueError(f"certificate contradicted: bond {j} is injective")

    def __repr__(self) -> str:
        inner = ", ".join(g.describe() for g in self.levels)
        return f"<DirectSystem {inner}>"


class ComplexTower:
    """Inverse sequence of simplicial complexes with optional marked pairs.

    ``marked_K`` and ``marked_L`` are per-level subcomplexes used by
    the compactohedral validators; either may be omitted.  A
    certificate on a complex tower asserts periodicity of the induced
    homology data (not of the complexes themselves) and is checked
    when homology towers are formed.
    """

    __slots__ = ("levels", "bonds", "marked_K", "marked_L", "certificate")

    def __init__(
        self,
        levels,
        bonds,
        marked_K=None,
        marked_L=None,
        certificate: Optional[Certificate] = None,
    ):
        self.levels = list(levels)
        self.bonds = list(bonds)
        if not self.levels:
            raise ValueError("a tower needs at least one level")
        if len(self.bonds) != len(self.levels) - 1:
            raise ValueError("a tower needs exactly one bond per adjacent pair of levels")
        for i, b in enumerate(self.bonds):
            if b.source != self.levels[i + 1]:
                raise ValueError(f"bond {i} source is not level {i + 1}")
            if b.target != self.levels[i]:
                raise ValueError(f"bond {i} target is not level {i}")
        self.marked_K = self._check_marked(marked_K, "marked_K")
        self.marked_L = self._check_marked(marked_L, "marked_L")
        if certificate is not None and certificate.kind == "periodic":
            if len(self.levels) < certificate.offset + certificate.period + 1:
                raise ValueError("periodic certificate needs one full period of levels")
        self.certificate = certificate

    def _check_marked(self, marked, name):
        if marked is None:
            return None
        marked = list(marked)
        if len(marked) != len(self.levels):
            raise ValueError(f"{name} needs one subcomplex per level")
        for i, sub in enumerate(marked):
            if not sub.is_subcomplex_of(self.levels[i]):
                raise ValueError(f"{name}[{i}] is not a subcomplex of level {i}")
        return marked

    def truncate(self, depth: int) -> "ComplexTower":
        if depth < 0 or depth >= len(self.levels):
            raise ValueError("truncation depth out of range")
        return ComplexTower(
            self.levels[: depth + 1],
            self.bonds[:depth],
            None if self.marked_K is None else self.marked_K[: depth + 1],
            None if self.marked_L is None else self.marked_L[: depth + 1],
        )

    def __repr__(self) -> str:
        return f"<ComplexTower with {len(self.levels)} levels>"


@dataclass
class MLStatus:
    """Image-chain analysis of one tower level.

    verdict is one of "Stabilized" (with the first stable index),
    "StrictlyDecreasing" (certified to keep falling forever), or
    "UndeterminedWithinWindow".  ``image_chain`` lists the isomorphism
    types of the composite images, starting with the full group.
    """

    verdict: str
    index: Optional[int]
    image_chain: List[FGAbelianGroup]
    reason: str


@dataclass
class Lim1Class:
    """Classification of the first derived limit of a tower.

    verdict is "Zero", "Uncountable", or "Undetermined"; ``display``
    optionally names the uncountable quotient.
    """

    verdict: str
    reason: str
    display: Optional[str] = None


@dataclass
class NotStable:
    """Outcome of ``stable_lim`` when no stable value is reachable."""

    reason: str
    image_chains: tuple


@dataclass
class NotFinitelyStable:
    """Outcome of ``colim_direct_system`` without finite stabilization."""

    reason: str
    level_invariants: tuple
    certified: bool = False


@dataclass
class ColimResult:
    group: FGAbelianGroup
    index: int
    note: str = ""


# -- image chains -------------------------------------------------------


def _image_chain(tower: GroupTower, level: int, depth: int) -> List[Subgroup]:
    """Images in levels[level] of the composites of 0..depth bonds below it."""
    chain = [Subgroup.full(tower.levels[level])]
    comp = None
    for k in range(depth):
        b = tower.bonds[level + k]
        comp = b if comp is None else compose_homs(b, comp)
        chain.append(comp.image_subgroup())
    return chain


def _iteration_bound(group: FGAbelianGroup) -> int:
    # enough steps for both the free part (rank drops + unimodular
    # stabilization) and the torsion part (descending chain in a
    # finite group whose strict drops at least halve it) to settle
    return 2 * (group.free_rank + sum(t.bit_length() for t in group.torsion)) + 4


def _canonical_model(group: FGAbelianGroup) -> FGAbelianGroup:
    fr, tors = group.invariants
    return FGAbelianGroup.from_invariants(fr, tors)


def _period_endo_inverse(tower: GroupTower, cert: Certificate, base: int) -> GroupHom:
    """One period of bonds as an endomorphism of the canonical model at ``base``.

    Bonds are taken canonically from the certified pattern, so the
    composite exists even when ``base + period`` exceeds the window.
    """
    o, p = cert.offset, cert.period
    mats = [
        tower.bonds[o + ((j - o) % p)].canonical_matrix() for j in range(base, base + p)
    ]
    prod = mats[0]
    for m in mats[1:]:
        prod = prod * m
    model = _canonical_model(tower.levels[base])
    return GroupHom(model, model, prod)


def _stable_endo_image(model: FGAbelianGroup, endo: GroupHom) -> Optional[Subgroup]:
    """The stable image of iterated ``endo``, or None if it never repeats.

    An image chain of a single endomorphism cannot pause and then drop
    (a repeat propagates forever), so the first repeat is the limit;
    absence of a repeat within the iteration bound rules one out.
    """
    prev = Subgroup.full(model)
    power = endo
    for _ in range(_iteration_bound(model)):
        cur = power.image_subgroup()
        if cur.equals(prev):
            return prev
        prev = cur
        power = compose_homs(power, endo)
    return None


def _periodic_stable_image(tower: GroupTower, level: int, cert: Certificate) -> Optional[Subgroup]:
    """Certified eventual image at ``level``, or None when images keep falling."""
    base = max(level, cert.offset)
    endo = _period_endo_inverse(tower, cert, base)
    stable = _stable_endo_image(endo.source, endo)
    if stable is None:
        return None
    carried = Subgroup(tower.levels[base], stable.generators)
    if base == level:
        return carried
    down = tower.bonds[level]
    for j in range(level + 1, base):
        down = compose_homs(tower.bonds[j], down)
    return carried.image_under(down)


def ml_status(tower: GroupTower, level: int, window: Optional[int] = None) -> MLStatus:
    """Image-chain verdict at one level.

    Without a certificate the verdict reports the window literally:
    the first repeated image stabilizes it, otherwise it is
    undetermined.  With a certificate the verdict extends the verified
    pattern: the certified eventual image (when it exists) decides
    stabilization, and an all-injective certified bond pattern with
    non-surjective bonds forces the chain to keep falling forever.
    """
    if level < 0 or level >= len(tower.levels):
        raise ValueError("level out of range")
    available = len(tower.bonds) - level
    if window is None:
        window = available
    if window < 1:
        raise ValueError("window must be at least 1")
    if window > available:
        raise ValueError(
            f"window {window} exceeds the truncated tower: only {available} bonds below level {level}"
        )
    subs = _image_chain(tower, level, window)
    groups = [s.as_group() for s in subs]
    repeat = next((k for k in range(len(subs) - 1) if subs[k].equals(subs[k + 1])), None)
    cert = tower.certificate

    if cert is None:
        if repeat is not None:
            return MLStatus(
                "Stabilized", repeat, groups, "first repeated image within the window"
            )
        return MLStatus(
            "UndeterminedWithinWindow",
            None,
            groups,
            "no repeated image within the window and no certificate to extend it",
        )

    if cert.kind == "periodic":
        stable = _periodic_stable_image(tower, level, cert)
        if stable is not None:
            for k, s in enumerate(subs):
                if s.equals(stable):
                    return MLStatus(
                        "Stabilized",
                        k,
                        groups,
                        "image chain reaches the certified eventual image",
                    )
            # stabilization is proved even though the window is too
            # short to exhibit the stable index
            return MLStatus(
                "Stabilized",
                None,
                groups,
                "certified eventual image lies beyond the window",
            )
        if all(b.is_injective() for b in tower.bonds[level:]):
            o, p = cert.offset, cert.period
            if any(not tower.bonds[j].is_surjective() for j in range(o, o + p)):
                return MLStatus(
                    "StrictlyDecreasing",
                    None,
                    groups,
                    "certified periodic bonds are injective and drop rank every period",
                )
        return MLStatus(
            "UndeterminedWithinWindow",
            None,
            groups,
            "certified pattern does not settle the chain at this level",
        )

    # shift_family: bonds beyond the offset are injective and not
    # surjective forever; injectivity of the observed prefix makes the
    # whole chain strictly decreasing from the offset on
    if all(b.is_injective() for b in tower.bonds[level:]):
        return MLStatus(
            "StrictlyDecreasing",
            None,
            groups,
            "certified shrinking family: injective non-surjective bonds force strict descent",
        )
    if repeat is not None:
        return MLStatus(
            "Stabilized", repeat, groups, "first repeated image within the window"
        )
    return MLStatus(
        "UndeterminedWithinWindow",
        None,
        groups,
        "certified pattern does not settle the chain at this level",
    )


def lim1_class(tower: GroupTower, window: Optional[int] = None) -> Lim1Class:
    """Classify the first derived limit: Zero, Uncountable, or Undetermined.

    For towers of finitely generated (hence countable) groups the
    derived limit is either zero or uncountable; it is zero exactly
    when every image chain stabilizes.  A certified strictly falling
    chain at any level therefore forces the uncountable side.
    """
    statuses = []
    for i in range(len(tower.levels)):
        available = len(tower.bonds) - i
        if available == 0:
            continue
        w = available if window is None else min(window, available)
        statuses.append(ml_status(tower, i, w))
    if any(s.verdict == "StrictlyDecreasing" for s in statuses):
        display = tower.certificate.lim1_display if tower.certificate else None
        return Lim1Class(
            "Uncountable",
            "an image chain is certified to keep falling; over countable groups "
            "the derived limit is then uncountable",
            display,
        )
    if all(s.verdict == "Stabilized" for s in statuses):
        basis = (
            "image chains stabilize at every level within the window"
            if tower.certificate is None
            else "image chains stabilize at every level under the verified certificate"
        )
        return Lim1Class("Zero", basis)
    return Lim1Class(
        "Undetermined",
        "some image chain neither repeats within the window nor is certified to keep falling",
    )


# -- limits -------------------------------------------------------------


def _restricted_hom(bond: GroupHom, fine: Subgroup, coarse: Subgroup) -> Optional[GroupHom]:
    """The bond between two stable images, presented on their generators."""
    cols = []
    for g in fine.generators:
        c = coarse.coordinates(bond.apply_canonical(g))
        if c is None:
            return None
        cols.append(c)
    return GroupHom(
        fine.as_group(),
        coarse.as_group(),
        IntegerMatrix.from_columns(cols, nrows=len(coarse.generators)),
    )


def stable_lim(
    tower: GroupTower, window: Optional[int] = None
) -> Union[FGAbelianGroup, NotStable]:
    """Inverse limit via stabilized image chains, when they stabilize.

    Every level's image chain must repeat within its window, and the
    bonds must restrict to isomorphisms between consecutive stable
    images; the limit is then the stable image at the coarsest level.
    This is deliberately partial: towers whose stable images keep
    proper inclusions (or whose chains never repeat) yield NotStable
    with the observed chains attached.
    """
    n = len(tower.levels)
    if n == 1:
        return Subgroup.full(tower.levels[0]).as_group()
    stable = []
    chains_display = []
    for i in range(n - 1):
        available = len(tower.bonds) - i
        w = available if window is None else min(window, available)
        subs = _image_chain(tower, i, w)
        chains_display.append(tuple(s.as_group().invariants for s in subs))
        idx = next((k for k in range(len(subs) - 1) if subs[k].equals(subs[k + 1])), None)
        if idx is None:
            if len(subs) >= 3:
                return NotStable(
                    f"image chain at level {i} does not repeat within the window",
                    tuple(chains_display),
                )
            idx = len(subs) - 1  # window too short to confirm; take the deepest image
        stable.append(subs[idx])
    for i in range(len(stable) - 1):
        h = _restricted_hom(tower.bonds[i], stable[i + 1], stable[i])
        if h is None or not h.is_isomorphism():
            return NotStable(
                f"the bond does not carry the stable image at level {i + 1} "
                f"isomorphically onto the stable image at level {i}",
                tuple(chains_display),
            )
    return stable[0].as_group()


def _unit_part_degree(endo: GroupHom) -> int:
    """Degree of the unit-constant part of the free block's characteristic polynomial."""
    r = endo.source.free_rank
    if r == 0:
        return 0
    can = endo.canonical_matrix()
    block = [[can.rows[i][j] for j in range(r)] for i in range(r)]
    x = sympy.Symbol("x")
    poly = sympy.Matrix(block).charpoly(x).as_expr()
    total = 0
    for factor, mult in sympy.factor_list(poly, x)[1]:
        p = sympy.Poly(factor, x)
        if abs(p.eval(0)) == 1:
            total += p.degree() * mult
    return total


def periodic_lim(group: FGAbelianGroup, endo: GroupHom) -> FGAbelianGroup:
    """Inverse limit of the constant tower with one endomorphism as every bond.

    The limit is the largest subgroup on which the endomorphism is
    bijective, namely the intersection of the images of its powers.
    When the image chain repeats, that intersection is reached exactly;
    otherwise the free rank is the degree of the unit-constant part of
    the characteristic polynomial on the free quotient, and the torsion
    has already stabilized within the iteration bound.

    >>> z = FGAbelianGroup.free(1)
    >>> periodic_lim(z, GroupHom(z, z, IntegerMatrix([[2]]))).describe()
    '0'
    """
    if endo.source != group or endo.target != group:
        raise ValueError("periodic limit needs an endomorphism of the given group")
    stable = _stable_endo_image(group, endo)
    if stable is not None:
        return stable.as_group()
    prev = Subgroup.full(group)
    power = endo
    for _ in range(_iteration_bound(group)):
        prev = power.image_subgroup()
        power = compose_homs(power, endo)
    torsion = prev.as_group().torsion
    return FGAbelianGroup.from_invariants(_unit_part_degree(endo), torsion)


def tower_lim(
    tower: GroupTower, window: Optional[int] = None
) -> Union[FGAbelianGroup, NotStable]:
    """Inverse limit, consuming the certificate when one is attached.

    Periodic towers reduce to ``periodic_lim`` of the one-period
    endomorphism; shrinking families carry their limit as certified
    data; everything else falls back to ``stable_lim``.
    """
    cert = tower.certificate
    if cert is not None and cert.kind == "periodic":
        endo = _period_endo_inverse(tower, cert, cert.offset)
        return periodic_lim(endo.source, endo)
    if cert is not None and cert.kind == "shift_family":
        core = cert.stable_core
        return core if core is not None else FGAbelianGroup.trivial()
    return stable_lim(tower, window)


def colim_direct_system(
    system: DirectSystem, window: Optional[int] = None
) -> Union[ColimResult, NotFinitelyStable]:
    """Direct limit when it stabilizes at a finite stage.

    Uncertified systems are read literally: the colimit is the first
    level from which every observed bond is an isomorphism.  A periodic
    certificate reduces the question to the one-period endomorphism
    (between canonically equal levels an isomorphic composite forces
    every factor to be an isomorphism, and a non-invertible one keeps
    the system moving forever).  A shrinking-family certificate reports
    the certified core, reached beyond any finite stage.
    """
    nb = len(system.bonds)
    w = nb if window is None else min(window, nb)
    bonds = system.bonds[:w]
    iso = [b.is_isomorphism() for b in bonds]
    t = len(iso)
    while t > 0 and iso[t - 1]:
        t -= 1
    invariants = tuple(g.invariants for g in system.levels)
    cert = system.certificate

    if cert is not None and cert.kind == "periodic":
        o, p = cert.offset, cert.period
        mats = [system.bonds[o + ((j - o) % p)].canonical_matrix() for j in range(o, o + p)]
        prod = mats[0]
        for m in mats[1:]:
            prod = m * prod
        model = _canonical_model(system.levels[o])
        endo = GroupHom(model, model, prod)
        if endo.is_isomorphism():
            return ColimResult(
                system.levels[t],
                t,
                "periodic certificate: the period map is an isomorphism",
            )
        return NotFinitelyStable(
            "certified periodic with a non-invertible period map: "
            "the system never stabilizes at a finite stage",
            invariants,
            certified=True,
        )
    if cert is not None and cert.kind == "shift_family":
        core = cert.stable_core if cert.stable_core is not None else FGAbelianGroup.trivial()
        return ColimResult(
            core,
            len(system.levels) - 1,
            "certified shrinking family: value extrapolated to the certified core",
        )
    if t < len(iso) or nb == 0:
        return ColimResult(
            system.levels[t], t, "bonds are isomorphisms from this index on within the window"
        )
    return NotFinitelyStable(
        "bonds are not eventually isomorphisms within the window", invariants
    )


# -- towers induced on homology and cohomology ---------------------------


def _transfer_certificate(cert, levels, bonds, forward: bool) -> Optional[Certificate]:
    """Re-verify a complex tower's certificate on induced group data.

    A certificate on complexes promises periodicity (or shrinking) of
    the induced algebra; it is attached to the group tower only in the
    form that actually verifies there, and silently dropped otherwise.
    """
    if cert is None:
        return None
    periodic = Certificate(
        "periodic", cert.offset, cert.period, lim1_display=cert.lim1_display
    )
    holder = DirectSystem if forward else GroupTower
    try:
        holder(levels, bonds, periodic)
        return periodic
    except ValueError:
        pass
    if cert.kind == "shift_family":
        shift = Certificate(
            "shift_family",
            cert.offset,
            1,
            stable_core=cert.stable_core,
            lim1_display=cert.lim1_display,
        )
        try:
            holder(levels, bonds, shift)
            return shift
        except ValueError:
            pass
    return None


def homology_tower(
    tower: ComplexTower, n: int, reduced: bool = False
) -> GroupTower:
    """The induced tower of homology groups in dimension ``n``."""
    results = [homology(k, n, reduced=reduced) for k in tower.levels]
    homs = [
        induced_map(f, n, source_h=results[i + 1], target_h=results[i], reduced=reduced)
        for i, f in enumerate(tower.bonds)
    ]
    groups = [r.group for r in results]
    cert = _transfer_certificate(getattr(tower, "certificate", None), groups, homs, forward=False)
    return GroupTower(groups, homs, cert)


def cohomology_system(tower: ComplexTower, n: int) -> DirectSystem:
    """The induced direct system of cohomology groups in dimension ``n``."""
    results = [cohomology(k, n) for k in tower.levels]
    homs = [
        induced_cohomology_map(f, n, source_h=results[i], target_h=results[i + 1])
        for i, f in enumerate(tower.bonds)
    ]
    groups = [r.group for r in results]
    cert = _transfer_certificate(getattr(tower, "certificate", None), groups, homs, forward=True)
    return DirectSystem(groups, homs, cert)
