"""Building skew-cyclic codes from smaller pieces.

Run:  python demos/constructions.py
"""

from akcodes.codes import Code, dual, is_self_dual, is_theta_cyclic, min_distance
from akcodes.constructions import construct_even, construct_from_ap, cyclic_code, find_mu, psi_components
from akcodes.gf2 import BinaryCode
from akcodes.ring import parse_element


def vec(k, *texts):
    return tuple(parse_element(t, k) for t in texts)


print("1. Two binary cyclic codes {00, 11}, interleaved and pulled back through the Gray map.")
rep = BinaryCode.from_strings(["11"])
C = construct_even([rep, rep], {1})
print(f"   {len(C.elements())} words: " + ", ".join(str(tuple(map(str, w))) for w in sorted(
    C.elements(), key=lambda w: [x.bits for x in w])))
print(f"   closed under the twisted shift: {is_theta_cyclic(C, {1})}")
print(f"   closed under scalar multiplication: {C.is_linear()} (an additive code)")

print("\n2. Gluing two codes over A_1 into a code over A_2.")
C4 = Code(1, 2, [vec(1, "0", "1")])
C5 = Code(1, 2, [vec(1, "1", "0")])
mu = find_mu([C4, C5], {1, 2}, 2, 1)
C3 = construct_from_ap([C4, C5], {1, 2}, 2, mu=mu, p=1)
print(f"   matching permutation mu = {mu.cycle_notation()}")
print(f"   result: {C3.cardinality} codewords, component dims {C3.dims}, "
      f"skew-cyclic for S={{1,2}}: {is_theta_cyclic(C3, {1, 2})}")
print(f"   splitting it again gives back the inputs: {psi_components(C3, 1) == [C4, C5]}")

print("\n3. A skew-cyclic code from a polynomial, and its duals.")
C8 = Code(1, 2, [vec(1, "1", "1")])
for T in ((), (1,)):
    print(f"   <(1,1)> self-dual under H_T for T={set(T) or '{}'}: {is_self_dual(C8, T)}")
print(f"   minimum distance {min_distance(C8)}; dual under H_1 equals the code: {dual(C8, {1}) == C8}")

H = cyclic_code("1+x+x^3", 7)
print(f"\n4. The binary Hamming code from 1+x+x^3: dimension {H.dim}, distance {H.min_distance()}")
