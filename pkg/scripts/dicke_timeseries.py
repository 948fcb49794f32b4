"""zeta_s(t) and zeta_p(t) of the Dicke model for spin-like (Delta=-0.9) and
photon-like (Delta=+0.9) detuning, in both phases, at |xi-1| = 0.05, 0.005, 0.0005.

Each file covers two cycles of the soft polariton.  Near the critical point the
fast polariton forces fine grids, so the smallest distance writes large files;
lower --points-per-fast to thin them.
"""
from _common import outdir, parser, run

DELTAS = [0.05, 0.005, 0.0005]


def main():
    ap = parser(__doc__, "data/dicke_timeseries")
    ap.add_argument("--points-per-fast", type=int, default=8)
    args = ap.parse_args()
    out = outdir(args.outdir)
    for Delta in (-0.9, 0.9):
        for side in ("normal", "superradiant"):
            run(["timeseries", "--model", "dicke", "--side", side, "--Delta", Delta, "--delta", *DELTAS,
                 "--periods", 2, "--points-per-period", 1000, "--points-per-fast", args.points_per_fast,
                 "--outdir", out])


if __name__ == "__main__":
    main()
