"""Two-phase election reading of the game.

Phase 1 eliminates one of three candidates (the cutter's rejection); phase 2
picks a winner from the remaining two (the chooser's pick). The loser of
phase 2 corresponds to the cutter's meal, the winner to the chooser's. This
is a pure relabeling: every number comes straight from the game modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diet import diet_profile
from .errors import DuplicateLabel, OutOfRange
from .strategies import (
    ChooserStrategy,
    CutterStrategy,
    PreferenceClass,
    classify_preferences,
)

Triple = tuple[float, float, float]


@dataclass(frozen=True)
class ElectionReport:
    """Candidate-labeled view of elimination odds, phase-2 outcomes, and electorate type."""

    labels: tuple[str, str, str]
    phase1_elimination_dist: Triple
    phase2_winner_dist: Triple
    phase2_loser_dist: Triple
    preference_class: PreferenceClass


def to_election_report(
    cutter: CutterStrategy,
    chooser: ChooserStrategy,
    labels: Sequence[str],
) -> ElectionReport:
    """Relabel a strategy pair as a two-phase election between three candidates."""
    names = tuple(str(x) for x in labels)
    if len(names) != 3:
        raise OutOfRange(f"exactly three candidate labels required, got {labels!r}")
    if any(not name for name in names):
        raise OutOfRange(f"candidate labels must be nonempty, got {labels!r}")
    if len(set(names)) != 3:
        raise DuplicateLabel(f"candidate labels must be distinct, got {labels!r}")
    profile = diet_profile(cutter, chooser)
    _, preference_class = classify_preferences(chooser, eps=0.0)
    return ElectionReport(
        labels=names,  # type: ignore[arg-type]
        phase1_elimination_dist=cutter.p,
        phase2_winner_dist=profile.omega,
        phase2_loser_dist=profile.lam,
        preference_class=preference_class,
    )
