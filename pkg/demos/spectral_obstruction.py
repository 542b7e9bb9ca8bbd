"""The spectral sequence of the weight filtration, on a worked deformation.

The ten-dimensional algebra with chain relations plus
[e2,e6]=e10, [e2,e5]=e9, [e2,e4]=e8, [e2,e3]=e7 deforms the symplectic
algebra m0(10), yet admits no symplectic structure: on page two the
alternating weight-11 class maps to -2 [e2^e3^e4], and the surviving line
[e1^e10] alone is degenerate.  Changing the deformation level to the
(21)-normal form makes the class survive and lift.
"""

from filiform import build
from filiform.spectral import build_pages, symplectic_survival


def show_pages(algebra, label):
    print(f"\n{label}")
    pages = build_pages(algebra)
    for page in pages:
        dims = ", ".join(f"E^{{{p},{q}}}={d}"
                         for (p, q), d in sorted(page.paper_block_dims().items())
                         if q + p == 2)  # show the 2-cochain column
        print(f"  page r={page.r}: degree-2 blocks: {dims}")
        print(f"    totals per degree: {page.total_dims()}")
    return pages


def main():
    a = build("deformation_23", alphas=(0, 0, 0))
    show_pages(a, "deformation (t = 2) of m0(10):")
    v = symplectic_survival(a)
    print(f"  survival verdict: {v.survives}")
    print(f"  obstruction on page {v.obstruction_page}:")
    print(f"    d_2 [{v.obstruction_source}]")
    print(f"      = [{v.obstruction_image}]")

    b = build("deformation_21", n=10, alphas=(0,))
    v = symplectic_survival(b)
    print(f"\n(21)-normal form (t = 3) of m0(10): survives = {v.survives}")
    print(f"  lifted symplectic form: {v.lift}")


if __name__ == "__main__":
    main()
