"""(i,j)-shifts and compression of a family to a left-compressed fixed point."""
from __future__ import annotations

import random
from dataclasses import dataclass

from src.errors import DomainError
from src.setcore.order import all_ksets, shift_set
from src.setcore.sets import GroundContext, KSet, SetFamily
from src.utils.event_bus import SHIFT_APPLIED, SWEEP_FINISHED, EventBus, emit
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class AppliedShift:
    i: int
    j: int
    moved: int


@dataclass(frozen=True)
class ShiftReport:
    input_size: int
    output_size: int
    rounds: int
    applied: tuple[AppliedShift, ...]

    def lines(self) -> list[str]:
        return [f"{s.i} {s.j} {s.moved}" for s in self.applied]


def _shift_pass(family: SetFamily, i: int, j: int) -> tuple[SetFamily, int]:
    ctx = family.context
    if not 1 <= i < j <= ctx.n:
        raise DomainError(f"shift needs 1 ≤ i < j ≤ {ctx.n}, got i={i}, j={j}")

    # decisions are taken against the family as it stood when the pass began
    created: set[KSet] = set()
    result: list[KSet] = []
    for a in family:
        if j in a and i not in a:
            target = shift_set(a, i, j)
            if target not in family and target not in created:
                created.add(target)
                result.append(target)
                continue
        result.append(a)
    if not created:
        return family, 0
    return SetFamily.of(ctx, result), len(created)


def ij_shift(family: SetFamily, i: int, j: int) -> SetFamily:
    shifted, _ = _shift_pass(family, i, j)
    return shifted


def _weight(family: SetFamily) -> int:
    return sum(sum(m.elements) for m in family)


def compress(family: SetFamily, bus: EventBus | None = None) -> tuple[SetFamily, ShiftReport]:
    """Sweep (i,j) in lexicographic order until a whole sweep changes nothing."""
    n = family.n
    current = family
    applied: list[AppliedShift] = []
    weight = _weight(current)
    rounds = 0
    while True:
        rounds += 1
        changed = False
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                current, moved = _shift_pass(current, i, j)
                if not moved:
                    continue
                step = AppliedShift(i, j, moved)
                applied.append(step)
                changed = True
                new_weight = _weight(current)
                # every effective shift lowers the element sum by (j - i) * moved
                assert new_weight == weight - (j - i) * moved, "shift did not decrease the weight"
                weight = new_weight
                emit(bus, SHIFT_APPLIED, (step, current))
        emit(bus, SWEEP_FINISHED, (rounds, changed))
        if not changed:
            break

    logger.debug(f"Compressed {len(family)} sets in {rounds} sweeps ({len(applied)} effective shifts).")
    report = ShiftReport(
        input_size=len(family),
        output_size=len(current),
        rounds=rounds,
        applied=tuple(applied),
    )
    return current, report


def sample_intersecting_family(ctx: GroundContext, rng: random.Random) -> SetFamily:
    """Shuffle every k-set and insert greedily while the family stays intersecting."""
    candidates = list(all_ksets(ctx))
    rng.shuffle(candidates)
    chosen: list[KSet] = []
    for c in candidates:
        if all(c.mask & m.mask for m in chosen):
            chosen.append(c)
    return SetFamily.of(ctx, chosen)


def sample_lcif(ctx: GroundContext, rng: random.Random, keep: float = 1.0) -> SetFamily:
    """A left-compressed intersecting family: compress a sampled intersecting family.

    With ``keep < 1`` a random prefix of the sample (by shuffle order) is
    compressed instead, which yields smaller, usually non-maximal families.
    """
    family = sample_intersecting_family(ctx, rng)
    if keep < 1.0:
        members = list(family)
        rng.shuffle(members)
        size = max(1, int(len(members) * keep))
        family = SetFamily.of(ctx, members[:size])
    compressed, _ = compress(family)
    return compressed
