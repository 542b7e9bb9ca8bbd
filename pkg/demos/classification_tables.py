"""Walk the inductive classification of N-graded filiform Lie algebras.

Every dimension is built from the one below it: each class is extended by
its weight-(n+1) cocycles with a nonzero e^1 ^ e^n component, families are
carried symbolically over Q(alpha), and the exceptional parameter values
are isolated exactly.  The output reproduces the classification tables.
"""

from filiform.extensions import enumerate_graded_filiform


def relations(algebra):
    bits = []
    for (i, j), comps in sorted(algebra.brackets.items()):
        if i == 1:
            continue  # suppress the chain [e1, e_i] = e_{i+1}
        rhs = " + ".join(f"({c}) e{k}" for k, c in sorted(comps.items()))
        bits.append(f"[e{i},e{j}] = {rhs}")
    return bits or ["(chain only)"]


def main():
    for n in range(3, 14):
        classes = enumerate_graded_filiform(n)
        fams = sum(1 for c in classes if c.is_family)
        print(f"\ndimension {n}: {len(classes) - fams} named classes"
              + (f" + {fams} one-parameter family" if fams else ""))
        for cls in classes:
            print(f"  {cls.label()}")
            if cls.is_family:
                for alpha, name in cls.overlaps:
                    print(f"      alpha = {alpha} coincides with {name}({n})")
                inst = cls.algebra.at_parameter(5)
                print(f"      sample at alpha = 5:")
                for line in relations(inst):
                    print(f"        {line}")
            else:
                for line in relations(cls.algebra):
                    print(f"      {line}")
    print("\nFrom dimension 12 on the list is finite: m0, m2, V_n and one of")
    print("m_{0,1}/m_{0,2}/m_{0,3} according to parity; the families are gone.")


if __name__ == "__main__":
    main()
