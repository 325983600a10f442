"""
Classifying T(n, a) across the whole spectrum
=============================================

One entry point settles any countable ordinal in normal form: exact
formulas where they exist, a rule pipeline producing a finite upper
bound everywhere below w^w, and the infinite / finite-without-value
split at w^w and beyond.  Every result carries a replayable trace.
"""

import json

from ordramsey import classify, parse, pipeline_bound, replay_trace

# Exact routes.
for text, n in (("17", 3), ("w", 4), ("w + 3", 2), ("w*4", 3)):
    r = classify(parse(text), n)
    print(f"T({n}, {text}) [{r.kind}] = {r.value}")

# Below w^w but outside the closed forms the pipeline bounds through
# powers of w*m + 1: build the m^j table, lift by one, raise to the
# leading exponent, cut back by the subsum rule, restore the tail.
r = classify(parse("w^3*2 + w*5 + 1"), 2)
print(f"\nT(2, w^3*2 + w*5 + 1) <= {r.value}")
for step in r.trace:
    print(f"  {step.rule}: {step.anchor}")

# The trace re-executes from its recorded inputs alone.
print("replay agrees:", replay_trace(r) == r.value)

# The pipeline runs on the exact families too and stays above them.
print("\npipeline on w*4 at n=3:", pipeline_bound(parse("w*4"), 3).value, ">= exact 64")

# At w^w finiteness dies for n >= 2 and only existence survives at n=1.
for text in ("w^w", "w^(w^2)"):
    kinds = [classify(parse(text), n).kind for n in (1, 2)]
    print(f"{text}: n=1 {kinds[0]}, n=2 {kinds[1]}")

# The JSON model is the machine contract the CLI prints.
print("\n" + json.dumps(classify(parse("w*2 + 1"), 1).as_json(), indent=2))
