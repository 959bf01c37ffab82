"""Every fair chooser strategy is intransitive; sweep the family and see.

A chooser prefers food a to food b when it picks a more often from the pair
left after the third food is removed. Sweeping the fair family's parameter t
shows one preference cycle for t < 0, the opposite cycle for t > 0, and total
indifference at t = 0 — never a strict ranking.
"""

import cutchoose as cc


def describe(klass: cc.PreferenceClass) -> str:
    if klass.order is not None:
        return "strict order " + " > ".join(str(f) for f in klass.order)
    return klass.kind.value.replace("_", " ")


def sweep_family():
    print("Preference classes along the fair chooser family")
    print("--------------------------------------------------")
    for t in [-1.0, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0]:
        relation, klass = cc.classify_preferences(cc.symmetric_chooser(t))
        arrows = []
        for i, (a, b) in enumerate(cc.PREFERENCE_PAIRS):
            winner = relation.winner(i)
            loser = b if winner == a else a
            arrows.append("tie" if winner is None else f"{winner}>{loser}")
        print(f"  t={t:+.1f}  {', '.join(arrows):18s}  -> {describe(klass)}")
    print()


def transitive_choosers_are_unfair():
    print("Strictly ranked choosers cannot reach fair diets at the uniform cutter")
    print("-----------------------------------------------------------------------")
    cutter = cc.make_cutter(1 / 3, 1 / 3, 1 / 3)
    examples = [
        (0.1, 0.1, 0.9),   # ranks 2 > 1 > 0
        (0.9, 0.9, 0.1),   # ranks 0 > 1 > 2
        (0.2, 0.7, 0.6),
    ]
    for triple in examples:
        chooser = cc.make_chooser(*triple)
        _, klass = cc.classify_preferences(chooser)
        report = cc.fairness_residual(cc.diet_profile(cutter, chooser), 1e-9)
        print(f"  chooser {triple}: {describe(klass):24s} "
              f"max diet residual {report.max_abs_residual:.4f}")
    print()
    print("Compare a cyclic family member:")
    chooser = cc.symmetric_chooser(0.6)
    _, klass = cc.classify_preferences(chooser)
    report = cc.fairness_residual(cc.diet_profile(cutter, chooser), 1e-9)
    print(f"  t=+0.6 member: {describe(klass):24s} "
          f"max diet residual {report.max_abs_residual:.2e}")


if __name__ == "__main__":
    sweep_family()
    transitive_choosers_are_unfair()
