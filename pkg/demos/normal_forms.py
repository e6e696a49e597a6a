"""Multiply a few elements of R_alpha and print their normal forms."""

from klrcell import RootVector, get_algebra
from klrcell.expr import eval_text

alpha = RootVector.parse("1:2,2:1")
R = get_algebra(alpha)

for src in ["s1*s1*e(1,2,1)", "s2*s2*e(1,1,2)", "s1*s2*s1*e(1,2,1) - s2*s1*s2*e(1,2,1)",
            "tau(s1*y2*s2*e(1,1,2))"]:
    print(f"{src:40s} = {eval_text(src, alpha)}")

x = R.psi(1) * R.y(2) * R.e((1, 1, 2))
print("e_2 inside R_alpha is idempotent:", x * x == x)
