"""Published values used as regression fixtures, plus small parsing helpers."""
import sympy

from liechar.poly import Poly, TPoly

Z1, Z2, Z3, T, T1, T2 = sympy.symbols("z1 z2 z3 t t1 t2")


def zpoly(expr: str, nz: int = 2) -> Poly:
    zs = sympy.symbols(" ".join(f"z{i + 1}" for i in range(nz)))
    zs = zs if isinstance(zs, tuple) else (zs,)
    p = sympy.Poly(sympy.sympify(expr), *zs)
    return Poly(nz, {tuple(int(x) for x in m): int(c) for m, c in p.terms()})


def tpoly(expr: str, nt: int = 2, nz: int = 2, tnames=None) -> TPoly:
    ts = tnames or (["t"] if nt == 1 else [f"t{i + 1}" for i in range(nt)])
    names = ts + [f"z{i + 1}" for i in range(nz)]
    syms = sympy.symbols(" ".join(names))
    p = sympy.Poly(sympy.expand(sympy.sympify(expr)), *syms)
    flat = Poly(nt + nz, {tuple(int(x) for x in m): int(c) for m, c in p.terms()})
    return TPoly.from_flat(flat, nt)


# Published C2 characters, keyed by highest weight.
C2_CHARACTERS = {
    (1, 0): "z1",
    (0, 1): "z2",
    (2, 0): "z1**2 - z2 - 1",
    (1, 1): "z1*z2 - z1",
    (0, 2): "z2**2 - z1**2 + z2",
    (0, 3): "-1 + z1**2 - 2*z1**2*z2 + 2*z2**2 + z2**3",
    (1, 2): "z1 - z1**3 + z1*z2**2",
    (2, 1): "1 - z1**2 - z2 + z1**2*z2 - z2**2",
    (3, 0): "-z1 + z1**3 - 2*z1*z2",
    (0, 4): "-z1**2 + z1**4 - 2*z2 + z2**2 - 3*z1**2*z2**2 + 3*z2**3 + z2**4",
    (1, 3): "-2*z1 + 2*z1**3 - 2*z1**3*z2 + z1*z2**2 + z1*z2**3",
    (2, 2): "2*z1**2 - z1**4 + z1**2*z2 - 2*z2**2 + z1**2*z2**2 - z2**3",
    (3, 1): "2*z1 - z1**3 + z1**3*z2 - 2*z1*z2**2",
    (4, 0): "-z1**2 + z1**4 + 2*z2 - 3*z1**2*z2 + z2**2",
    (0, 5): "3*z1**2 - 2*z1**4 - 2*z2 + 3*z1**4*z2 - 3*z2**2 - 3*z1**2*z2**2 + 3*z2**3"
            " - 4*z1**2*z2**3 + 4*z2**4 + z2**5",
    (1, 4): "2*z1 - 3*z1**3 + z1**5 - 2*z1*z2 + 2*z1**3*z2 - 3*z1**3*z2**2 + 2*z1*z2**3 + z1*z2**4",
    (2, 3): "1 - 4*z1**2 + 2*z1**4 + 2*z2 + z1**2*z2 - 2*z1**4*z2 - z2**2 + 3*z1**2*z2**2"
            " - 3*z2**3 + z1**2*z2**3 - z2**4",
    (3, 2): "-z1 + 2*z1**3 - z1**5 + 2*z1**3*z2 - 2*z1*z2**2 + z1**3*z2**2 - 2*z1*z2**3",
    (4, 1): "-1 + 2*z1**2 - z1**4 - z2 + z1**2*z2 + z1**4*z2 + 2*z2**2 - 3*z1**2*z2**2 + z2**3",
    (5, 0): "-z1 - z1**3 + z1**5 + 4*z1*z2 - 4*z1**3*z2 + 3*z1*z2**2",
    (0, 6): "1 - 3*z1**2 + 3*z1**4 - z1**6 + 6*z1**2*z2 - 3*z1**4*z2 - 6*z2**2 + 6*z1**4*z2**2"
            " - 3*z2**3 - 8*z1**2*z2**3 + 6*z2**4 - 5*z1**2*z2**4 + 5*z2**5 + z2**6",
    (1, 5): "-2*z1 + 6*z1**3 - 3*z1**5 - 2*z1**3*z2 + 3*z1**5*z2 - 3*z1*z2**2 + z1*z2**3"
            " - 4*z1**3*z2**3 + 3*z1*z2**4 + z1*z2**5",
    (2, 4): "-1 + 4*z1**2 - 4*z1**4 + z1**6 + 2*z2 - 3*z1**2*z2 + z1**4*z2 + 3*z2**2"
            " + 3*z1**2*z2**2 - 3*z1**4*z2**2 - 3*z2**3 + 5*z1**2*z2**3 - 4*z2**4 + z1**2*z2**4 - z2**5",
    (3, 3): "2*z1 - 5*z1**3 + 2*z1**5 + 4*z1*z2 - z1**3*z2 - 2*z1**5*z2 + 5*z1**3*z2**2"
            " - 4*z1*z2**3 + z1**3*z2**3 - 2*z1*z2**4",
    (4, 2): "-z1**2 + 2*z1**4 - z1**6 - z2 - 3*z1**2*z2 + 3*z1**4*z2 + z2**2 - 3*z1**2*z2**2"
            " + z1**4*z2**2 + 3*z2**3 - 3*z1**2*z2**3 + z2**4",
    (5, 1): "-z1 + 2*z1**3 - z1**5 - 5*z1*z2 + 2*z1**3*z2 + z1**5*z2 + 3*z1*z2**2"
            " - 4*z1**3*z2**2 + 3*z1*z2**3",
    (6, 0): "1 - 2*z1**2 - z1**4 + z1**6 - z2 + 6*z1**2*z2 - 5*z1**4*z2 - 3*z2**2"
            " + 6*z1**2*z2**2 - z2**3",
}

A1_D = "1 - t1*z1 + t1**2"
A2_N = "1 - t1*t2"
A2_D = "(1 - t1*z1 + t1**2*z2 - t1**3)*(1 - t2*z2 + t2**2*z1 - t2**3)"
C2_N = "1 + t2 - z1*t1*t2 + t1**2*t2 + t1**2*t2**2"
C2_D1 = "1 - (t1 + t1**3)*z1 + t1**2*(z2 + 1) + t1**4"
C2_D2 = "1 - (t2 + t2**3)*(z2 - 1) + t2**2*(z1**2 - 2*z2) + t2**4"
C2_D = f"({C2_D1})*({C2_D2})"

A2_DIAG_N = "1 + 2*t - (z1*z2 - 3)*t**2 + 2*t**3 + t**4"
A2_DIAG_D = ("1 + t**6 + (3 - z1*z2)*(t + t**5) + (6 + z1**3 - 5*z1*z2 + z2**3)*(t**2 + t**4)"
             " + (7 + 2*z1**3 - 6*z1*z2 - z1**2*z2**2 + 2*z2**3)*t**3")
A2_DIAG_P = "1 + 2*t - 6*t**2 + 2*t**3 + t**4"

C2_DIAG_N = "(1 - t**2)*(1 + t**4 + 2*t*z1 + 2*t**3*z1 + t**2*(2*z1**2 - z1**2*z2 + z2 + z2**2))"
C2_D_1 = "z1*(-3 + z2)"
C2_D_2 = "-1 + z1**4 + z1**2*(3 - 6*z2) + z2 + 3*z2**2 + z2**3"
C2_D_3 = "z1*(-3 + 2*z1**4 - 2*z2 + 8*z2**2 + 3*z2**3 - z1**2*(-2 + 9*z2 + z2**2))"
C2_D_4 = "z1**6 + z1**4*(4 - 6*z2) + z1**2*(-5 - 6*z2 + 5*z2**2) + z2*(-2 + 3*z2 + 4*z2**2 + z2**3)"
C2_DIAG_D = (f"1 + t**8 - (t + t**7)*({C2_D_1}) + (t**2 + t**6)*({C2_D_2})"
             f" + (t**3 + t**5)*({C2_D_3}) + t**4*({C2_D_4})")

# Operator coefficients as printed.  Off-diagonal entries are the full
# mixed-derivative coefficient.
A1_OPERATOR = {"a": {(0, 0): "z1**2 - 4"}, "b": {0: "3*z1"}}
A2_OPERATOR = {
    "a": {(0, 0): "z1**2 - 3*z2", (1, 1): "z2**2 - 3*z1", (0, 1): "z1*z2 - 9"},
    "b": {0: "4*z1", 1: "4*z2"},
}
C2_OPERATOR = {
    "a": {(0, 0): "z1**2 - 2*z2 - 6", (1, 1): "2*z2**2 - 4*z1**2 + 4*z2 - 6", (0, 1): "2*z1*z2 - 10*z1"},
    "b": {0: "5*z1", 1: "4*z2"},
}
