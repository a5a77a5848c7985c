#!/usr/bin/env python3
"""Walk through the worked expansions and a full reduction with certificate."""

from qsymq.cli import render_path, render_polynomial
from qsymq.poly import Polynomial
from qsymq.qsym import fundamental_qsym
from qsymq.quotient import shared_basis


def main():
    print("F_21 in four variables:")
    print(" ", render_polynomial(fundamental_qsym((2, 1), 4)))

    basis4 = shared_basis(4)
    g = basis4.g((1, 0, 2, 0))
    print("\nG indexed by (1,0,2,0):")
    print(" ", render_polynomial(g))
    exps, coeff = g.leading_monomial()
    print("  leading monomial:", render_polynomial(Polynomial.monomial(4, exps, coeff)))
    print("  its lattice path:")
    for line in render_path(exps).splitlines():
        print("   ", line)

    basis5 = shared_basis(5)
    lhs = (Polynomial.variable(5, 1) * Polynomial.variable(5, 3)
           * fundamental_qsym((2, 1), 5))
    rhs = (basis5.g((3, 1, 1, 0, 0)) - basis5.g((3, 1, 0, 1, 0))
           - basis5.g((0, 3, 2, 0, 0)) + basis5.g((0, 3, 0, 2, 0)))
    print("\nx1*x3*F_21 in five variables matches the four-term G combination:",
          lhs == rhs)

    p = Polynomial(3, {(2, 0, 0): 1, (0, 1, 0): 2})
    result = shared_basis(3).normal_form(p)
    print("\nreduce", render_polynomial(p), "in three variables:")
    print("  remainder:", render_polynomial(result.remainder))
    print("  certificate:")
    for c, eps in result.certificate:
        print(f"    {c} * G_{','.join(str(e) for e in eps)}")


if __name__ == "__main__":
    main()
