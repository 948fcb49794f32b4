"""Closed forms against brute force: truncated-Fock evolution for both models and
finite-J exact diagonalization of the spin model.  Convergence records go to --outdir."""
from _common import outdir, parser, run


def main():
    args = parser(__doc__, "data/oracle").parse_args()
    out = outdir(args.outdir)
    for side in ("ordered", "disordered"):
        run(["oracle", "oat", "--side", side, "--tol", 1e-10, "--records", out / f"oat_{side}.json"])
    run(["oracle", "dicke", "--point", 2, 0, "--point", 0.5, 0, "--point", 1.05, 2.944439,
         "--point", 1.05, -2.944439, "--point", 0.95, 2.944439, "--point", 0.95, -2.944439,
         "--records", out / "dicke.json"])
    run(["oracle", "ed", "--xi", 1.2, "--J", 25, 50, 100, 200])


if __name__ == "__main__":
    main()
