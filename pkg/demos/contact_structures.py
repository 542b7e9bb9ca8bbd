"""Contactization: from symplectic algebras to contact ones and back.

A symplectic cocycle omega on g defines a central extension in which the
dual of the new central direction is a contact form.  Running this over
the symplectic list produces every contact N-graded filiform algebra:
m_{0,1}(2k+1) from m0(2k), V_{2k+1} from V_2k, and the odd-dimensional
families g9/g11 from g8/g10.  On m0(2k+1) itself no contact form exists:
d(beta) always has rank two.
"""

from fractions import Fraction

from filiform import build
from filiform.catalog import (form_g8_symplectic, form_m0_symplectic,
                              form_v_symplectic)
from filiform.extensions import classify_graded
from filiform.structures import contact_exists, contactize


def main():
    print("contactizations:")
    for label, base, omega in (
            ("m0(8)  + omega(beta=1)", build("m0", n=8), form_m0_symplectic(4, beta=1)),
            ("V(12)  + omega_13", build("V", n=12), form_v_symplectic(6)),
            ("g8@3   + omega_9(3)", build("g8", alpha=3), form_g8_symplectic(3))):
        ext, beta = contactize(base, omega)
        name, param = classify_graded(ext)
        tag = f"{name}({ext.dim})" if param is None else f"{name} at alpha={param}"
        print(f"  {label:<24} -> {tag}; contact certificate verified")

    print("\ndirect contact search:")
    for label, algebra in (("m01(7)", build("m01", n=7)),
                           ("V(9)", build("V", n=9)),
                           ("m0(5)", build("m0", n=5)),
                           ("m0(7)", build("m0", n=7))):
        cert = contact_exists(algebra)
        if cert is None:
            print(f"  {label:<8} no contact form exists (certified: the defining "
                  f"polynomial vanishes identically)")
        else:
            print(f"  {label:<8} contact form {cert.form}")

    print("\nHeisenberg: beta = e^3 on m0(3):")
    from filiform.cochain import Form
    from filiform.structures import contact_check
    cert = contact_check(build("m0", n=3), Form.monomial((3,)))
    print(f"  beta ^ dbeta = {cert.volume} (valid: {cert.valid})")


if __name__ == "__main__":
    main()
