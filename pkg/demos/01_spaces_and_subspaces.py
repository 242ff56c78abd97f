"""Walkthrough: indefinite inner-product spaces, subspace classification,
and the two projection routes (Euclidean vs product-orthogonal).

Run as a script; every section prints what it computes.
"""

import numpy as np

import kreinframes as kf


def section(title: str) -> None:
    print()
    print(f"--- {title} ---")


def main() -> None:
    # A three-dimensional space with signature (2, 1): the product is
    # [x, y] = x1 y1 + x2 y2 - x3 y3.
    space = kf.make_krein_space(np.diag([1.0, 1.0, -1.0]))
    print(f"signature: ({space.num_positive}, {space.num_negative})")

    section("classifying spans")
    for label, rows in [
        ("canonical positive plane", np.eye(3)[:2]),
        ("tilted positive line", np.array([[1.0, 0.0, 0.5]])),
        ("neutral line", np.array([[1.0, 0.0, 1.0]])),
        ("indefinite plane", np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])),
        ("degenerate plane", np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 1.0]])),
    ]:
        cls = kf.classify(kf.span(rows, space))
        print(f"{label:<26} kind={cls.kind.value:<20} margin={cls.margin:.3f} "
              f"regular={cls.regular}")

    section("projections onto a tilted positive line")
    line = kf.span(np.array([[1.0, 0.0, 0.5]]), space)
    x = np.array([0.3, -1.1, 0.7])
    pi = kf.orthogonal_projection(line)
    q = kf.j_projection(line)
    print(f"Euclidean projection  pi x = {pi.matrix @ x}")
    print(f"product projection     Q x = {q.matrix @ x}")
    residual = np.linalg.norm((q.matrix - pi.matrix) @ x)
    print(f"the two routes differ here by {residual:.3f}")

    section("restriction residual: does Q_W act like pi_W on a definite M?")
    # Aligned case: W sits inside the canonical positive plane.
    plane = kf.span(np.eye(3)[:2], space)
    w_aligned = kf.span(np.array([[1.0, 1.0, 0.0]]), space)
    print(f"aligned   residual = {kf.check_rjpp(w_aligned, plane):.2e}")
    # Tilted case: M is still uniformly positive, but leans into the
    # negative direction; the restriction identity measurably fails.
    tilted = kf.span(np.array([[1.0, 0.0, 0.4], [0.0, 1.0, 0.3]]), space)
    w_tilted = kf.span((tilted.basis @ np.array([[1.0], [0.8]])).T, space)
    print(f"tilted    residual = {kf.check_rjpp(w_tilted, tilted):.2e}")

    section("angular operator of a maximal uniformly positive subspace")
    graph = kf.span(np.array([[1.0, 0.0, 0.3], [0.0, 1.0, 0.2]]), space)
    rep = kf.angular_operator(graph)
    print(f"||K|| = {rep.norm:.6f}, gamma = {rep.gamma:.6f}")
    print(f"||K||^2 - (1-gamma)/(1+gamma) residual: {rep.squared_residual:.2e}")
    print(f"unsquared reading would give {rep.relation_value:.6f} "
          f"(discrepancy flagged: {rep.literal_discrepancy})")


if __name__ == "__main__":
    main()
