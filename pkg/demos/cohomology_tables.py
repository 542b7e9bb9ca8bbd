"""Second cohomology of the basic graded filiform algebras, exactly.

Prints the dimension tables for H^2(m0(n)), H^2(m2(n)), H^2(V_n) together
with the canonical cocycle representatives, then follows one exceptional-
parameter story: the weight-9 block of the eight-dimensional family stays
one-dimensional at alpha = -5/2, but its class loses the e^1 ^ e^8
component, so no filiform central extension (and no symplectic class)
exists there.
"""

from fractions import Fraction

from filiform import build, cohomology


def table(name, dims_range):
    print(f"\nH^2({name}(n)) dimensions:")
    for n in dims_range:
        block = cohomology(build(name, n=n), 2)
        print(f"  n = {n:2d}: dim = {block.dim}")


def main():
    table("m0", range(3, 13))
    table("m2", range(5, 13))
    table("V", range(5, 13))

    print("\ncanonical representatives for V_9:")
    for rep in cohomology(build("V", n=9), 2).representatives:
        print(f"  {rep}")

    print("\nweight-9 block of the eight-dimensional family:")
    for alpha in (Fraction(3), Fraction(0), Fraction(-5, 2)):
        block = cohomology(build("g8", alpha=alpha), 2, weight=9)
        rep = block.representatives[0]
        tag = "admissible" if (1, 8) in rep.coeffs else "NOT admissible"
        print(f"  alpha = {alpha}: dim = {block.dim}, class {tag}")
        print(f"    {rep}")
    print("\nAt alpha = -5/2 the class cannot feed a filiform extension: the")
    print("family of nine-dimensional algebras ends exactly there.")


if __name__ == "__main__":
    main()
