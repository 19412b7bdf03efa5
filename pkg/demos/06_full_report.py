"""The full certified report for one contact structure, as the CLI emits it.

build_report chains every stage together: surgery coefficient, the
(+1)/(-1) diagram, homology with the tracked fiber class, the Spin^c
offset, both omega_red routes, the d3 pair with its gap, and the
degree-window verdict.  The verdicts section re-checks each identity;
the CLI exits nonzero if any of them fails, so a clean report is a
machine-checked certificate.
"""

import sys

from contactsurgery.cli import build_report, main, render_json

report = build_report(g=1, n=2, alpha=3, sign=1, r=1)
sys.stdout.write(render_json(report))

print("\nsame structure through the command line interface:")
main(["report", "--g", "1", "--n", "2", "--alpha", "3", "--sign", "+", "--r", "1"])
