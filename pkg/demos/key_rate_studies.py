"""Maximum transmission distance for each fluctuation scenario.

Uses a 5 km grid and a coarse intensity search to stay quick; the CLI
``sweep`` mode produces the full 2 km curves. Run:
python3 demos/key_rate_studies.py
"""
import math

from srcfluct.scenarios import (N_SENT_VALUES, SCENARIOS, distance_grid, key_rate_curve,
                                max_distance, scenario_variants)

distances = distance_grid(0, 200, 5)
for scenario in SCENARIOS:
    print(scenario)
    for v in scenario_variants(scenario):
        row = []
        for n in N_SENT_VALUES:
            res = key_rate_curve(v, n, distances, resolution=(20, 20))
            row.append(f"N=10^{math.log10(n):.1f}: {max_distance(distances, res):5.0f} km")
        print(f"  {v.name:>15}  " + "  ".join(row))
