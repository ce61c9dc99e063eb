"""Evaluate every closed-form error bound across a sampling-budget grid.

Shows the plug-in MSE bracket, the modified-Chao worst-case bound and its
leading term, and the bias bracket, then checks the exact uniform MSE
against the bracket.
"""

from supportsize import bound_report, exact_plugin_mse, make_distribution, solve_alpha
from supportsize.bounds import chao_mse_leading_term

k = 1000
print(f"alpha = {solve_alpha():.12f}\n")
print(f"{'n':>6} {'plugin_lo':>12} {'plugin_hi':>12} {'chao_lead':>12} "
      f"{'chao_total':>12} {'bias_lo':>10} {'bias_hi':>10}")
for n in (500.0, 1000.0, 2000.0, 4000.0, 8000.0):
    r = bound_report(n, k)
    print(
        f"{n:6.0f} {r.plugin_lower:12.4g} {r.plugin_upper:12.4g} "
        f"{chao_mse_leading_term(n, k):12.4g} {r.chao_worst_case:12.4g} "
        f"{r.bias_lower:10.3g} {r.bias_upper:10.3g}"
    )

print("\nthe lower edge of the plug-in bracket is tight at uniform:")
P = make_distribution("uniform", k)
for n in (1000.0, 4000.0):
    r = bound_report(n, k)
    exact = exact_plugin_mse(P, n)
    print(f"  n={n:6.0f} exact={exact:.6f} lower={r.plugin_lower:.6f}")

print("\nmoment-dependent collision bounds for the zipf member:")
Z = make_distribution("zipf", k)
for n in (1000.0, 4000.0):
    r = bound_report(n, k, Z)
    high = "inapplicable" if r.high_collision is None else f"{r.high_collision:.4g}"
    print(f"  n={n:6.0f} low_collision={r.low_collision:.4g} high_collision={high}")
