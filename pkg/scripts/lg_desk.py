"""Local-global rank table for the coned hexagon.

Prints the order-one ranks at base dimensions 0 and 1 for each apex floor
w_1, then checks that the ranks survive relabeling to the trivial
stratification and one barycentric subdivision.
"""
import argparse
from dataclasses import dataclass

from strathom.complexes import barycentric_subdivision
from strathom.corpus import by_name
from strathom.lghomology import lg_ranks


@dataclass(frozen=True)
class Config:
    name: str = "cone_hexagon"
    max_i: int = 1


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--name", default=Config.name)
    parser.add_argument("--max-i", type=int, default=Config.max_i)
    args = parser.parse_args()
    cfg = Config(name=args.name, max_i=args.max_i)

    k = by_name(cfg.name)
    print(f"{cfg.name}: dim {k.dim}, {len(k.vertices)} vertices")
    print(f"{'i':>3} {'w1':>3} {'rank':>5}  cells")
    for i in range(cfg.max_i + 1):
        for w1 in range(k.dim + 1):
            report = lg_ranks(k, i, (w1,))
            cells = ", ".join(f"{key}: {n}" for key, n in sorted(report.cells.items()))
            print(f"{i:>3} {w1:>3} {report.rank:>5}  {cells}")

    flat = k.with_strata(max(k.dim, 0))
    sd = barycentric_subdivision(k)
    print("stratification independence and subdivision stability at w=(0):")
    for i in range(cfg.max_i + 1):
        base = lg_ranks(k, i, (0,)).rank
        trivial = lg_ranks(flat, i, (0,)).rank
        refined = lg_ranks(sd, i, (0,)).rank
        mark = "ok" if base == trivial == refined else "MISMATCH"
        print(f"  i={i}: labeled {base}, trivial {trivial}, subdivided {refined}  {mark}")


if __name__ == "__main__":
    main()
