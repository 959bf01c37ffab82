"""Read the game as a two-phase election among three candidates.

Phase 1 eliminates one candidate; phase 2 elects a winner from the remaining
two. An electorate giving every candidate equal chances to win and to lose
corresponds exactly to the fair strategies of the game, and its phase-2
preferences come out cyclic, never a strict ranking.
"""

import cutchoose as cc


def show(title, cutter, chooser, labels):
    report = cc.to_election_report(cutter, chooser, labels)
    print(title)
    for name, dist in (
        ("phase-1 elimination odds", report.phase1_elimination_dist),
        ("phase-2 winner shares   ", report.phase2_winner_dist),
        ("phase-2 loser shares    ", report.phase2_loser_dist),
    ):
        cells = ", ".join(
            f"{label}: {value:.4f}" for label, value in zip(report.labels, dist)
        )
        print(f"  {name}  {cells}")
    kind = report.preference_class.kind.value.replace("_", " ")
    if report.preference_class.order is not None:
        kind += " (" + " > ".join(
            report.labels[f] for f in report.preference_class.order
        ) + ")"
    print(f"  electorate phase-2 preferences: {kind}")
    print()


def main():
    labels = ("Ash", "Birch", "Cedar")
    show(
        "Indecisive electorate (every candidate equally likely to win or lose)",
        cc.make_cutter(1 / 3, 1 / 3, 1 / 3),
        cc.symmetric_chooser(0.7),
        labels,
    )
    show(
        "Electorate that always eliminates the first candidate in phase 1",
        cc.make_cutter(1, 0, 0),
        cc.make_chooser(0.5, 0.5, 0.5),
        labels,
    )
    show(
        "Electorate with a strict phase-2 ranking (phase-2 odds turn unequal)",
        cc.make_cutter(1 / 3, 1 / 3, 1 / 3),
        cc.make_chooser(0.1, 0.1, 0.9),
        labels,
    )


if __name__ == "__main__":
    main()
