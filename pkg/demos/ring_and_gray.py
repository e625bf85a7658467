"""A tour of A_k, its Gray map and the twisted shift.

Run:  python demos/ring_and_gray.py
"""

from akcodes import ring
from akcodes.gray import big_sigma_S, phi_k, sigma_Sk
from akcodes.ring import RingElement, parse_element, theta_apply
from akcodes.skewpoly import theta_shift

k = 2
a = parse_element("v1+v1v2", k)
b = parse_element("1+v2", k)
print(f"In A_{k}: a = {a}, b = {b}")
print(f"  a + b = {a + b}")
print(f"  a * b = {a * b}   (every element is idempotent: a*a = {a * a})")

# Evaluating at the four points (v1, v2) in {0,1}^2 splits A_2 into four copies of F2.
print(f"  values of a at the points 00,10,01,11: {ring.crt_forward(a).to_list()}")

print("\nThe Gray map sends an element to its value list, so products become bitwise ANDs:")
for x in (a, b, a * b):
    print(f"  phi({x}) = {phi_k(x)}")

S = {1}
print(f"\nTheta_S with S = {S} swaps v1 and 1+v1. On Gray images it is a coordinate permutation:")
perm = sigma_Sk(S, k)
print(f"  phi(theta(a)) = {phi_k(theta_apply(S, a))}")
print(f"  sigma(phi(a)) = {perm.act_word(phi_k(a))}   permutation {perm.cycle_notation()}")

print("\nThe twisted shift moves coordinates right and applies Theta_S:")
c = (a, b, RingElement.one(k))
for step in range(4):
    print(f"  {step}: {tuple(str(x) for x in c)}")
    c = theta_shift(c, S)

n = 3
sig = big_sigma_S(S, n, k)
print(f"\nOn Gray images of length {n << k} that shift is one permutation of order {sig.order()}:")
print(f"  {sig.cycle_notation()}")
