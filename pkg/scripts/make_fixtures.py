"""Regenerate fixtures/*.ca from the model constructors."""

import argparse
from pathlib import Path

from fibercas import models
from fibercas.parser import IdealDecl, RingDecl, SourceDocument


def write(path: Path, header: str, decls):
    doc = SourceDocument()
    for ring_name, name, I in decls:
        doc.rings.setdefault(ring_name, RingDecl(ring_name, I.ring))
        doc.ideals[name] = IdealDecl(name, ring_name, tuple(I.generators))
    path.write_text(f"# {header}\n" + str(doc), encoding="utf-8", newline="\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Path(__file__).resolve().parents[1] / "fixtures", type=Path)
    args = ap.parse_args()
    out = args.out
    out.mkdir(exist_ok=True)
    write(out / "ringA.ca", "chart u3 = 1 of the n = 3 fiber", [("R", "A", models.ring_A())])
    write(out / "chart_u0.ca", "core of chart u0", [("R", "C", models.chart_u0_model())])
    write(out / "chart_u1.ca", "core of chart u1", [("R", "C", models.chart_u1_model())])
    for n in range(2, 7):
        write(out / f"center_noncurvilinear_n{n}.ca", "(x1^2, x1*x2, x2^2, x3, ..., xn)",
              [("R", "J", models.noncurvilinear_center(n))])
        write(out / f"fiber_equations_n{n}.ca", "bilinear fiber equations, u_j paired with the j-th center generator",
              [("R", "F", models.fiber_equations(n)), ("R", "X", models.exceptional_ideal(n))])
    for n in range(2, 6):
        for ell in (2, 3):
            write(out / f"curvilinear_n{n}_l{ell}.ca", f"(x1^{ell}, x2, ..., xn)",
                  [("R", "J", models.curvilinear_center(n, ell))])
            write(out / f"curvilinear_fiber_n{n}_l{ell}.ca", f"fiber over (x1^{ell}, x2, ..., xn)",
                  [("R", "F", models.curvilinear_fiber_equations(n, ell))])
    for n in range(3, 7):
        write(out / f"quadric_cone_n{n}.ca", "x1^2 - x2*x3", [("R", "Q", models.quadric_cone(n))])


if __name__ == "__main__":
    main()
