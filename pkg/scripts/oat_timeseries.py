"""zeta_s(t) of the transverse-field OAT model on both sides of the critical point.

Writes one CSV per (side, delta) with t, A, B, C, zeta and the optimal angle.
"""
from _common import outdir, parser, run

DELTAS = [0.2, 0.02, 0.002, 0.0002]


def main():
    args = parser(__doc__, "data/oat_timeseries").parse_args()
    out = outdir(args.outdir)
    for side in ("ordered", "disordered"):
        run(["timeseries", "--model", "oat", "--side", side, "--delta", *DELTAS,
             "--periods", 2, "--points-per-period", 2000, "--outdir", out])


if __name__ == "__main__":
    main()
