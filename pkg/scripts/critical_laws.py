"""Critical scaling fits.

OAT: log-log fits of the squeezing period and zeta_min over delta in [1e-4, 1e-2].
Dicke: zeta_min^2 = u + v*delta over [5e-4, 2e-2] for psi = 2, 2.944 (Delta=-0.9), 4, 6, 8.
Sweep CSVs and JSON fit reports land in --outdir; a summary table is printed.
"""
import json

from _common import outdir, parser, run

PSIS = [2.0, 2.944439, 4.0, 6.0, 8.0]


def main():
    ap = parser(__doc__, "data/critical_laws")
    ap.add_argument("--points", type=int, default=12, help="deltas per sweep")
    args = ap.parse_args()
    out = outdir(args.outdir)
    for side in ("ordered", "disordered"):
        stem = f"oat_{side}"
        run(["sweep", "--model", "oat", "--side", side, "--delta-range", 1e-4, 1e-2, args.points,
             "--outdir", out, "--prefix", stem])
        for col in ("period_T", "zeta_min"):
            run(["fit", out / f"{stem}_sweep.csv", "--column", col, "--out", out / f"{stem}_{col}_fit.json"])
    rows = []
    for psi in PSIS:
        for side in ("normal", "superradiant"):
            stem = f"dicke_{side}_psi{psi:g}"
            run(["sweep", "--model", "dicke", "--side", side, "--psi", psi, "--delta-range", 5e-4, 2e-2,
                 args.points, "--outdir", out, "--prefix", stem])
            report = out / f"{stem}_affine_fit.json"
            run(["fit", out / f"{stem}_sweep.csv", "--law", "affine", "--column", "zeta_min", "--out", report])
            fit = json.loads(report.read_text())[0]
            rows.append((psi, side, fit["u"], fit["v"], fit["residual_fraction"]))
    print(f"{'psi':>8} {'side':>13} {'u':>11} {'v':>8} {'res/range':>10}")
    for psi, side, u, v, frac in rows:
        print(f"{psi:8.4g} {side:>13} {u:11.4e} {v:8.4f} {100 * frac:9.2f}%")


if __name__ == "__main__":
    main()
