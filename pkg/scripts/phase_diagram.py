"""Dicke critical line eps*omega = g^2 and the labelled probe points used elsewhere."""
from _common import outdir, parser, run

PROBES = [(2.0, 0.0), (0.5, 0.0), (1.05, 2.944439), (0.95, 2.944439), (1.05, -2.944439), (0.95, -2.944439)]


def main():
    args = parser(__doc__, "data").parse_args()
    out = outdir(args.outdir)
    argv = ["phase-diagram", "--omega-range", 0.1, 4.0, "--count", 80, "--out", out / "phase_diagram.csv"]
    for xi, psi in PROBES:
        argv += ["--point", xi, psi]
    run(argv)


if __name__ == "__main__":
    main()
