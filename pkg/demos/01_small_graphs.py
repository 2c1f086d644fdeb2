"""Every graph on three and four nodes, with its redundancy and complexity.

Run: python demos/01_small_graphs.py

Each isomorphism class is listed with omega (how many distinct descriptions
its relabelings produce), the complexity C, the compression-aware C_z and
the offdiagonal complexity.  Complementary classes always share omega and C.
"""

from __future__ import annotations

from netcomplexity import complement, complexity_report, enumerate_graphs, encode, canonical_form


def show(n: int) -> None:
    res = enumerate_graphs(n, with_zcomplexity=True)
    print(f"\n{n}-node graphs: {len(res)} classes, sum of omega = {res.omega_total}")
    print(f"{'canonical':>12} {'links':>5} {'omega':>5} {'C':>6} {'C_z':>6} {'OdC':>6}  complement")
    for rec in res:
        rep = rec.report
        comp = canonical_form(complement(rec.graph)).link_bits
        same = "same" if comp == encode(rec.graph).link_bits else comp
        print(f"{encode(rec.graph).link_bits:>12} {rep.links:>5} {rep.omega:>5} {rep.C:6.2f} "
              f"{rep.C_z:6.2f} {rep.odc:6.3f}  {same}")


if __name__ == "__main__":
    show(3)
    show(4)
