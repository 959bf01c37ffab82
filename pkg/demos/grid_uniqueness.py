"""Brute-force check that nothing off the solution family is fair.

The closed-form derivation says only the uniform cutter with equal t's
works. Rather than trust the algebra, enumerate a barycentric grid over all
cutters crossed with a cube grid over all chooser parameters and list every
point whose fairness residuals vanish to 1e-9.
"""

import time

import cutchoose as cc


def run(simplex_step, t_step):
    config = cc.GridSearchConfig(
        simplex_step=simplex_step, t_step=t_step, residual_tol=1e-9
    )
    n_points = (
        (config.simplex_divisions + 1)
        * (config.simplex_divisions + 2)
        // 2
        * (config.t_divisions + 1) ** 3
    )
    start = time.perf_counter()
    report = cc.verify_uniqueness(config, family_tol=1e-9)
    elapsed = time.perf_counter() - start
    print(f"simplex_step=1/{config.simplex_divisions}, "
          f"t_step=2/{config.t_divisions}: {n_points:,} grid points, "
          f"{report.n_hits} fair, {elapsed:.2f} s")
    print(f"  all hits on the family? {report.passed} "
          f"(worst distance {report.worst_distance:.2e})")
    return report


def main():
    print("Exhaustive fairness search at increasing resolution")
    print("----------------------------------------------------")
    run(1 / 3, 1.0)
    run(1 / 6, 0.5)
    run(1 / 12, 0.25)
    run(1 / 24, 0.1)
    print()
    print("Fair points found at the finest grid (all share the uniform cutter):")
    uniform = cc.make_cutter(1 / 3, 1 / 3, 1 / 3)
    for hit in cc.grid_search(
        cc.GridSearchConfig(simplex_step=1 / 24, t_step=0.1, residual_tol=1e-9)
    ):
        assert hit.cutter == uniform
        print(f"  t = {hit.t_params.t}")


if __name__ == "__main__":
    main()
