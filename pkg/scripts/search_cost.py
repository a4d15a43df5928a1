"""How many structures does an exhaustive search visit, and how long does
it take, as the bounds grow?  Runs every axiom instance at (p, q, r)."""

import argparse
import time
from dataclasses import dataclass

from blw.hilbert import AXIOMS
from blw.nd import axiom_derivation, check_nd
from blw.search import NoneFound, SearchBounds, find_countermodel
from blw.syntax import Atom, render


@dataclass
class Config:
    max_worlds: int = 4
    max_denominator: int = 6
    workers: int = 1


def run(cfg: Config):
    p, q, r = Atom("p"), Atom("q"), Atom("r")
    rows = []
    for axiom in sorted(AXIOMS, key=lambda a: int(a[1:])):
        s = check_nd(axiom_derivation(axiom, p, q, r))
        t0 = time.perf_counter()
        out = find_countermodel(s, SearchBounds(cfg.max_worlds, cfg.max_denominator), workers=cfg.workers)
        rows.append((axiom, render(s.conclusion), isinstance(out, NoneFound),
                     getattr(out, "structures_checked", 0), time.perf_counter() - t0))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-worlds", type=int, default=Config.max_worlds)
    ap.add_argument("--max-denom", type=int, default=Config.max_denominator)
    ap.add_argument("--workers", type=int, default=Config.workers)
    a = ap.parse_args()
    rows = run(Config(a.max_worlds, a.max_denom, a.workers))
    print(f"{'axiom':<5}  {'structures':>10}  {'seconds':>7}  instance")
    for axiom, text, clean, n, secs in rows:
        flag = "" if clean else "  COUNTERMODEL"
        print(f"{axiom:<5}  {n:>10}  {secs:>7.3f}  {text}{flag}")
    print(f"total {sum(r[3] for r in rows)} structures in {sum(r[4] for r in rows):.2f} s")


if __name__ == "__main__":
    main()
