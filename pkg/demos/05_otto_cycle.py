"""One full engine: stroke ledger, cyclic population, work and efficiency,
and the break-even acceleration ratio."""

from circular_otto import (
    CycleConfig,
    cyclic_population,
    efficiency,
    extracted_work,
    hot_transition,
    stroke_ledger,
)

config = CycleConfig.from_accelerations(
    v=0.999, a_hot=100.0, a_cold=15.0, e1=1.0, e2=2.0
)
e2, t_hot, a_hot = config.hot_contact
e1, t_cold, a_cold = config.cold_contact

print("hot contact : gap = %.1f, T = %.4f, a = %.1f (R = %.4f)"
      % (e2, t_hot, a_hot, config.r_hot))
print("cold contact: gap = %.1f, T = %.4f, a = %.1f (R = %.4f)"
      % (e1, t_cold, a_cold, config.r_cold))

p = cyclic_population(config)
print(f"\ncyclic population p = {p:.6f} (below 1/2, as always)")
print(f"hot-contact transition dpH = {hot_transition(config):.6f} per coupling^2")

ledger = stroke_ledger(config)
print("\nstroke ledger (coupling^2 units where the transition enters):")
for name, q, w in (("1 gap widening ", ledger.q1, ledger.w1),
                   ("2 hot contact  ", ledger.q2, ledger.w2),
                   ("3 power stroke ", ledger.q3, ledger.w3),
                   ("4 cold contact ", ledger.q4, ledger.w4)):
    print(f"  stroke {name}: Q = {q:+.6f}   W = {w:+.6f}")
print(f"  totals        : Q = {ledger.q_total:+.6f}   W = {ledger.w_total:+.6f}"
      f"   (sum {ledger.w_total + ledger.q_total:+.1e})")

print(f"\nextracted work  = {extracted_work(config):.6f} per coupling^2")
print(f"efficiency      = {efficiency(config):.3f} = 1 - e1/e2, geometry-independent")

print("\nwork across the break-even ratio a_hot / a_cold = e2 / e1 = 2:")
for a_hot in (25.0, 30.0, 40.0, 100.0, 400.0):
    c = CycleConfig.from_accelerations(0.999, a_hot, 15.0, 1.0, 2.0)
    print(f"  a_hot = {a_hot:6.1f}:  W_ext = {extracted_work(c):+.6f}")
print("below a_hot = 30 the cycle consumes work; above, it is an engine.")
