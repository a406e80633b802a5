"""Time the dense kernels and a few end-to-end computations on each backend.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit
from fractions import Fraction

from stringy import kernels
from stringy.cyclotomic import CycNum
from stringy.grp import orbifold_E
from stringy.qalg import RationalExpr
from stringy.schema import load, parse_group
from stringy.toric import Lattice, PLFunction, SimplicialFan, stringy_E_toric

rng = random.Random(0)
A = [rng.randint(-50, 50) for _ in range(400)]
B = [rng.randint(-50, 50) for _ in range(400)]
P = kernels.BACKENDS["python"].poly_mul(A, [-1] + [0] * 6 + [1])
X = RationalExpr.parse("(uv - 1)^4 * (uv)^(1/7) / (((uv)^(1/5) - 1)*((uv)^(2/3) - 1))")
Z = CycNum(60, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(16)])
GROUP = """{"diagonal_weights": {"order": 60, "exponents": [[12, 48, 0], [0, 5, 55]]}}"""
CONE = PLFunction(SimplicialFan(Lattice([[1, 0, 0], [0, 1, 0], [Fraction(1, 7), Fraction(2, 7), Fraction(4, 7)]]),
                                [(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(0, 1, 2)]), [1, 1, 1])

CASES = {
    "poly_mul 400x400": lambda: kernels.poly_mul(A, B),
    "divide_binomial": lambda: kernels.divide_binomial(P, 7),
    "expr square": lambda: X * X,
    "cyclotomic mul (m=60)": lambda: Z * Z,
    "toric E 1/7(1,2,4)": lambda: stringy_E_toric(CONE),
    "order-60 group classes + E_orb": lambda: orbifold_E(parse_group(load(GROUP))),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = list(kernels.BACKENDS)
    print(f"{'case':34}" + "".join(f"{n:>12}" for n in names))
    for label, fn in CASES.items():
        row = []
        for name in names:
            kernels.set_backend(name)
            number = 1 if "group" in label else 20
            best = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
            row.append(best)
        print(f"{label:34}" + "".join(f"{t * 1e3:10.3f}ms" for t in row))
    kernels.set_backend(names[-1])


if __name__ == "__main__":
    main()
