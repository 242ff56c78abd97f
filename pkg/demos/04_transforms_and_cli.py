"""Walkthrough: transporting families through operators, the generator,
and driving everything through the JSON command-line interface.
"""

import contextlib
import io
import json
import tempfile
from pathlib import Path

import numpy as np

import kreinframes as kf
from kreinframes.cli import main as cli

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run_quiet(args: list[str]) -> int:
    """Run the CLI but keep its report and summary out of the narrative."""
    with contextlib.redirect_stdout(io.StringIO()), \
            contextlib.redirect_stderr(io.StringIO()):
        return cli(args)


def section(title: str) -> None:
    print()
    print(f"--- {title} ---")


def main() -> None:
    section("transporting a family through an invertible operator")
    space = kf.make_krein_space(np.diag([1.0, 1.0, -1.0, -1.0]))
    fam = kf.make_weighted_family(
        [kf.span(np.eye(4)[i:i + 1], space) for i in range(4)],
        [1.0, 1.5, 1.0, 0.5])
    t = np.diag([1.2, 0.9, 1.1, 0.8])
    image = kf.apply_operator(kf.Operator(space, t), fam)
    print(f"image verdict: {kf.verify_j_fusion_frame(image).is_j_fusion_frame}")
    audit = kf.preservation_audit(kf.Operator(space, t), fam)
    print(f"sufficient condition (parts preserved, T onto): {audit.sufficient}")

    section("a shear that creates a neutral image entry")
    parsed = kf.load_problem(FIXTURES / "neutral_image.json")
    shear_fam = kf.family_from_spans([r for r, _ in parsed.entries],
                                     [w for _, w in parsed.entries], parsed.space)
    try:
        kf.apply_operator(parsed.operator, shear_fam)
    except kf.IndefiniteOrNeutralSubspace as exc:
        w = exc.witness
        print(f"entry {exc.index} rejected; witness {np.round(w, 6)} "
              f"with [w, w] = {exc.self_product:.2e}")

    section("generating a seeded problem and verifying it via the CLI")
    cfg = kf.GeneratorConfig(kind="fusion", seed=42, dim=5, num_positive=2,
                             entry_dims_positive=(2, 1),
                             entry_dims_negative=(2, 1), rotate=True)
    problem = kf.gen_problem(cfg)
    with tempfile.TemporaryDirectory() as tmp:
        problem_path = Path(tmp) / "problem.json"
        report_path = Path(tmp) / "report.json"
        kf.save_json(problem, problem_path)
        code = run_quiet(["verify", str(problem_path), "-o", str(report_path)])
        report = json.loads(report_path.read_text())
        print(f"exit code {code}, verdict {report['result']['verdict']}")
        print(f"bounds: {tuple(round(b, 4) for b in report['result']['bounds'])}")
        print(f"oracle cross-check agreement: "
              f"{report['result']['oracle']['agreement']}")

        code = run_quiet(["dual", str(problem_path), "-o", str(report_path)])
        dual_report = json.loads(report_path.read_text())
        print(f"dual exit code {code}, max reciprocity deviation "
              f"{dual_report['result']['max_relative_deviation']:.3f}")

    section("exit codes on rejected input")
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "r.json"
        code = run_quiet(["verify", str(FIXTURES / "neutral_entry_family.json"),
                          "-o", str(out)])
        rejected = json.loads(out.read_text())["result"]["rejected"]
        print(f"exit code {code} (false verdict still produces a report)")
        print(f"rejected entry {rejected['index']}: {rejected['reason']}")


if __name__ == "__main__":
    main()
