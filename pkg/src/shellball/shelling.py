"""Step-by-step verification of shelling orders and ball gluings.

A shelling is checked literally: at each step the intersection with the
union of earlier facets (computed as the maximal pairwise intersections)
must be nonempty and generated by codimension-one faces.  The ball
certificate additionally demands, per step, that every glued ridge lies in
exactly one earlier facet and that at least one ridge of the new facet is
left unglued; gluing along all ridges would close the complex up to a
sphere or worse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import SimplicialComplex, vertices_of


@dataclass
class GluedRidge:
    ridge: int  # mask
    in_earlier: tuple[int, ...]  # indices (into the order) of earlier facets containing it

    def to_json_dict(self) -> dict:
        return {"ridge": list(vertices_of(self.ridge)), "in_earlier": list(self.in_earlier)}


@dataclass
class ShellingStep:
    position: int
    facet_index: int
    glued: list[GluedRidge] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "position": self.position,
            "facet": self.facet_index,
            "glued": [g.to_json_dict() for g in self.glued],
        }


@dataclass
class ShellingCertificate:
    order: tuple[int, ...]
    steps: list[ShellingStep]
    ok: bool
    failed_step: int | None = None
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "kind": "shelling",
            "order": list(self.order),
            "ok": self.ok,
            "failed_step": self.failed_step,
            "reason": self.reason,
            "steps": [s.to_json_dict() for s in self.steps],
        }


@dataclass
class BallCertificate:
    shelling: ShellingCertificate
    ok: bool
    failed_step: int | None = None
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "kind": "ball",
            "ok": self.ok,
            "failed_step": self.failed_step,
            "reason": self.reason,
            "shelling": self.shelling.to_json_dict(),
        }


def _check_order(cx: SimplicialComplex, order) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(len(cx.facets))):
        raise ValueError("order is not a permutation of the facet indices")
    if not cx.is_pure:
        raise ValueError("not pure")
    return order


def verify_shelling(cx: SimplicialComplex, order) -> ShellingCertificate:
    """Check that the given facet order is a shelling, step by step."""
    order = _check_order(cx, order)
    facets = cx.facets
    steps: list[ShellingStep] = []
    for i in range(1, len(order)):
        fi = facets[order[i]]
        size = fi.bit_count()
        inters = {}
        for k in range(i):
            m = fi & facets[order[k]]
            if m:
                inters.setdefault(m, []).append(k)
        maximal = [
            m for m in inters if not any(m != g and m & ~g == 0 for g in inters)
        ]
        step = ShellingStep(position=i, facet_index=order[i])
        if not maximal:
            return ShellingCertificate(
                order, steps, ok=False, failed_step=i, reason="empty intersection with earlier facets"
            )
        bad = [m for m in maximal if m.bit_count() != size - 1]
        if bad:
            return ShellingCertificate(
                order,
                steps,
                ok=False,
                failed_step=i,
                reason=(
                    f"intersection face {vertices_of(bad[0])} has codimension "
                    f"{size - bad[0].bit_count()} (want 1)"
                ),
            )
        for m in sorted(maximal):
            containing = tuple(k for k in range(i) if m & ~facets[order[k]] == 0)
            step.glued.append(GluedRidge(ridge=m, in_earlier=containing))
        steps.append(step)
    return ShellingCertificate(order, steps, ok=True)


def verify_ball(cx: SimplicialComplex, order) -> BallCertificate:
    """Check the per-step gluing conditions certifying that the shelled complex is a ball."""
    shell = verify_shelling(cx, order)
    if not shell.ok:
        return BallCertificate(
            shell, ok=False, failed_step=shell.failed_step, reason=f"not a shelling: {shell.reason}"
        )
    facets = cx.facets
    for step in shell.steps:
        size = facets[step.facet_index].bit_count()
        for g in step.glued:
            if len(g.in_earlier) != 1:
                return BallCertificate(
                    shell,
                    ok=False,
                    failed_step=step.position,
                    reason=(
                        f"glued ridge {vertices_of(g.ridge)} lies in "
                        f"{len(g.in_earlier)} earlier facets (want exactly 1)"
                    ),
                )
        if len(step.glued) >= size:
            return BallCertificate(
                shell,
                ok=False,
                failed_step=step.position,
                reason="all ridges glued: closes to a sphere or worse",
            )
    return BallCertificate(shell, ok=True)
