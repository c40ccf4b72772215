"""Truth tables on the hypercube: encoding, evaluation, and table surgery.

A function f: {-1,+1}^n -> {-1,+1} lives in a single packed integer, one bit
per input. Input index j encodes the point with x_i = +1 exactly when bit
(i-1) of j is set, so index arithmetic is coordinate arithmetic.
"""

from boolfun import (
    BooleanFunction,
    complement_index,
    counterexample,
    flip_coordinate,
    index_to_signs,
    majority,
    signs_to_index,
)

print("=" * 64)
print("ENCODING: indices <-> points of {-1,+1}^n")
print("=" * 64)
for j in range(8):
    print(f"  j={j}  ->  x = {index_to_signs(j, 3)}")
point = (1, 1, -1, -1, -1)
print(f"  {point} -> j = {signs_to_index(point)}")

print()
print("=" * 64)
print("EVALUATION: the bundled 5-variable threshold function")
print("=" * 64)
f = counterexample()  # sign(2x1 + 2x2 + x3 + x4 + x5)
print(f"  arity {f.n}, table hex {f.to_hex()!r}, {f.ones()} inputs map to +1")
j = signs_to_index(point)
print(f"  f{point} = {f.evaluate(j)}   (weighted sum 2+2-1-1-1 = +1)")
print(f"  bias E[f] = {f.bias()}")

print()
print("=" * 64)
print("INDEX SURGERY: flips and complements")
print("=" * 64)
j = 5
for i in (1, 2, 3):
    print(f"  flip_coordinate(j=5, i={i}) = {flip_coordinate(j, i, 3)}")
print(f"  complement_index(5, n=3) = {complement_index(5, 3)}")

print()
print("=" * 64)
print("TABLE SURGERY: negation and permutation")
print("=" * 64)
maj = majority(5)
neg = maj.negate_inputs()
print(f"  majority is odd: f(-x) = -f(x) pointwise -> "
      f"{all(neg.evaluate(j) == -maj.evaluate(j) for j in range(32))}")
print(f"  negate_inputs is an involution -> {neg.negate_inputs() == maj}")

swapped = f.permute_coordinates((2, 1, 3, 4, 5))
print(f"  swapping the two weight-2 coordinates fixes the table -> {swapped == f}")
g = f.permute_coordinates((3, 2, 1, 4, 5))
print(f"  swapping coordinates 1 and 3 changes it -> {g != f}")
print(f"  (it becomes sign(x1 + 2x2 + 2x3 + x4 + x5), table {g.to_hex()!r})")

print()
print("=" * 64)
print("HEX TEXT FORM: little-endian bytes, bit 0 = input 0")
print("=" * 64)
dictator = BooleanFunction(1, 0b10)
print(f"  dictator x1 -> {dictator.to_hex()!r}")
print(f"  Maj_3       -> {majority(3).to_hex()!r}")
print(f"  round trip  -> {BooleanFunction.from_hex(5, f.to_hex()) == f}")
