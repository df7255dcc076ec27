#!/usr/bin/env python3
"""No evader survives a space with a minimum point.

The pursuer walks down to the minimum x0 and sits there; whatever the
evader answers at t = 1 is legal for the pursuer to jump to at exactly
t = 1 (x0 specializes to everything), so the rewritten path coincides with
the evader's own response. Causality makes the trap inescapable.
"""

from lionman import build_space, falsify_man_strategy
from lionman.finite import step_path_to_json
from lionman.fixtures import falsifier_fixture_suite

sierpinski = build_space(["0", "1"], leq_pairs=[("0", "1")])
print("Sierpinski space (minimum 0):")
for name, man in falsifier_fixture_suite(sierpinski).items():
    r = falsify_man_strategy(sierpinski, "1", man)
    print(f"  {name:10s} -> capture at t={r.capture_time}, verified={r.verified}, "
          f"response at 1 = {r.response_at_1!r}")

r = falsify_man_strategy(sierpinski, "1", falsifier_fixture_suite(sierpinski)["sit_top"])
print("\nthe defeating path against the sitter:")
print(" ", step_path_to_json(r.beta_prime))

indiscrete = build_space(["a", "b"], leq_pairs=[("a", "b"), ("b", "a")])
print("\nindiscrete 2-point space: every point is a minimum, same story:")
r = falsify_man_strategy(indiscrete, "b", falsifier_fixture_suite(indiscrete)["mirror"])
print(f"  mirror evader -> capture at t={r.capture_time}, verified={r.verified}")

discrete = build_space(["a", "b"], leq_pairs=[])
try:
    falsify_man_strategy(discrete, "a", falsifier_fixture_suite(discrete)["sit_top"])
except Exception as exc:
    print(f"\ndiscrete space has no minimum: {exc}")
