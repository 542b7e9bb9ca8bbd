"""Symplectic structures across the catalog.

Runs the full printed-form verification sweep (closedness and
nondegeneracy at guarded parameters, failure at the excluded ones), then
shows the three nonexistence mechanisms on concrete inputs:

  GrCNotM0            -- m1(2k): every closed 2-form is degenerate;
  GrLNotSymplectic    -- deformations of m2(n), n = 2k >= 8;
  SpectralObstruction -- deformations of symplectic m0(10) at the wrong
                         filtration level, killed on page two.
"""

from filiform import build
from filiform.structures import symplectic_catalog_check, symplectic_exists


def main():
    print("printed-form sweep:")
    for label, verdict in symplectic_catalog_check().items():
        print(f"  {label:<28} {verdict}")

    print("\nnonexistence mechanisms:")
    for label, algebra in (
            ("m1(10)", build("m1", n=10)),
            ("t=0 deformation of dim 10", build("abelian_commutant", n=10, t=0, alphas=(1,))),
            ("(23)-type deformation", build("deformation_23", alphas=(1, 2, 3)))):
        cert = symplectic_exists(algebra)
        print(f"  {label:<28} exists={cert.exists}  reason={cert.reason}")
        if cert.reason == "SpectralObstruction":
            v = cert.witness
            print(f"      d_{v.obstruction_page} [{v.obstruction_source}]")
            print(f"        = [{v.obstruction_image}] != 0")

    print("\nand one existence certificate on a filtered deformation:")
    a = build("deformation_21", n=10, alphas=(1,))
    cert = symplectic_exists(a)
    print(f"  (21)-normal form, dim 10: exists={cert.exists}")
    print(f"    omega = {cert.form}")
    print(f"    omega^5 = {cert.top_power}")


if __name__ == "__main__":
    main()
