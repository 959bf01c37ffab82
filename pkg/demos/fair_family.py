"""Walk through the fairness solution: who must play what for equal diets.

The cutter rejects one of three foods each round, the chooser eats one of the
two survivors, and the cutter eats the leftover. Both want every food to make
up exactly one third of their long-run diet. This script derives the only
strategies that achieve that, then shows why every other cutter is hopeless.
"""

import numpy as np

import cutchoose as cc


def show_solution_family():
    family = cc.solve_joint()
    print("Joint fairness solution")
    print("-----------------------")
    print(f"cutter: {family.cutter.p}")
    print(f"chooser family: {family.description}")
    print()
    print("residual max-norm at sampled family members:")
    for t in np.linspace(-1, 1, 9):
        residual = cc.residual_system(family.cutter, cc.TParams(t, t, t))
        profile = cc.diet_profile(family.cutter, family.member(t))
        print(
            f"  t={t:+.2f}  system residual {residual.max_abs:.2e}  "
            f"diet lam={tuple(round(x, 12) for x in profile.lam)}"
        )
    print()


def show_infeasible_cutters():
    print("Any non-uniform cutter is infeasible, with a quantified floor")
    print("-------------------------------------------------------------")
    for p in [(0.5, 0.25, 0.25), (1.0, 0.0, 0.0), (0.4, 0.35, 0.25)]:
        result = cc.solve_chooser_given_cutter(cc.make_cutter(*p))
        print(f"  cutter {p}: certificate {result.certificate:.6f} "
              f"(no chooser's diet error can go below this)")
        # the indifferent chooser attains the floor
        report = cc.fairness_residual(
            cc.diet_profile(cc.make_cutter(*p), cc.symmetric_chooser(0.0)), 0.0
        )
        print(f"    attained by the t=0 chooser: max residual "
              f"{report.max_abs_residual:.6f}")
    print()


def show_unequal_t_fails():
    print("Equal t's are required, not just a uniform cutter")
    print("--------------------------------------------------")
    cutter = cc.make_cutter(1 / 3, 1 / 3, 1 / 3)
    for t in [(0.5, 0.5, 0.5), (0.5, 0.5, 0.4), (1.0, 0.0, 0.0)]:
        residual = cc.residual_system(cutter, cc.TParams(*t))
        print(f"  t={t}: residual max {residual.max_abs:.4f}")
    print()


if __name__ == "__main__":
    show_solution_family()
    show_infeasible_cutters()
    show_unequal_t_fails()
