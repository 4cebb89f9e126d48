"""Greedy extension of a left-compressed intersecting family by whole closures."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.errors import PreconditionError
from src.setcore.order import all_ksets, find_downclosure_violation, lower_closure
from src.setcore.sets import KSet, SetFamily, masks_of
from src.mlcif.maximality import MaximalityVerdict, is_maximal_intersecting, require_intersecting
from src.utils.event_bus import CLOSURE_ADDED, EventBus, emit
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

GREEDY_NOT_MAXIMAL = "greedy-not-maximal"


@dataclass(frozen=True)
class ExtensionOutcome:
    family: SetFamily
    verdict: MaximalityVerdict
    finding: str | None = None


def _all_meet(left: np.ndarray, right: np.ndarray) -> bool:
    if left.size == 0 or right.size == 0:
        return True
    return bool(np.all((left[:, None] & right[None, :]) != 0))


def greedy_extend(family: SetFamily, bus: EventBus | None = None) -> SetFamily:
    """Add L(C) for every k-set C, in lexicographic order, whenever the union stays intersecting.

    One pass is enough: a closure rejected against a smaller family is still
    rejected against any superset of it.
    """
    violation = find_downclosure_violation(family)
    if violation is not None:
        raise PreconditionError(
            f"family is not left-compressed: {violation[0]} is a member but {violation[1]} is not",
            witness=violation,
        )
    require_intersecting(family)

    ctx = family.context
    members: set[KSet] = set(family.members)
    member_masks = masks_of(family.members)
    for c in all_ksets(ctx):
        if c in members:
            continue
        fresh = [s for s in lower_closure(c, ctx) if s not in members]
        fresh_masks = masks_of(fresh)
        if not _all_meet(fresh_masks, fresh_masks) or not _all_meet(fresh_masks, member_masks):
            continue
        members.update(fresh)
        member_masks = np.concatenate([member_masks, fresh_masks])
        emit(bus, CLOSURE_ADDED, (c, len(fresh)))
        logger.debug(f"Added closure of {c} ({len(fresh)} new sets).")

    result = SetFamily.of(ctx, members)
    logger.debug(f"Greedy extension grew {len(family)} sets to {len(result)}.")
    return result


def extend_and_audit(family: SetFamily, bus: EventBus | None = None) -> ExtensionOutcome:
    """greedy_extend, then test the result for maximality among all intersecting families."""
    extended = greedy_extend(family, bus)
    verdict = is_maximal_intersecting(extended)
    finding = None
    if not verdict.is_maximal:
        finding = GREEDY_NOT_MAXIMAL
        logger.warning(
            f"Finding {finding}: closure-saturated family of {len(extended)} sets "
            f"still admits {verdict.blocker}."
        )
    return ExtensionOutcome(family=extended, verdict=verdict, finding=finding)
