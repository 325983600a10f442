"""
Three type calculi for chain embeddings
=======================================

An embedding of a finite chain into a structured codomain compresses
into a finite "type" plus a chain of raw values, and the pair inverts
back to the embedding.  Sums carry additive types, products carry
multiplicative types, and powers carry ordered trees.
"""

from ordramsey import (
    Embedding,
    Leveled,
    Power,
    SumTail,
    additive_type,
    enum_strict,
    mult_type,
    mult_val,
    power_type,
    power_val,
    reconstruct_mult,
    reconstruct_power,
    strict_to_word,
    word_to_strict,
)

# Additive: inside A + m only the hit tail positions matter.
sum_codomain = SumTail(tuple(range(5)), 3)
f = Embedding(sum_codomain, ((1, 0), (4, 0), (0, 1), (2, 1)))
print("additive type:", additive_type(f).as_json())

# Multiplicative: per-level counts plus the quasiorder the values induce
# across levels.  Nine points over four levels:
leveled = Leveled((tuple(range(10)),) * 4)
g = Embedding(
    leveled,
    ((2, 0), (3, 0), (8, 0), (1, 1), (3, 1), (5, 1), (8, 1), (3, 3), (9, 3)),
)
t, v = mult_type(g), mult_val(g)
print("level counts:", t.p)
print("value blocks:", t.blocks)
print("value chain: ", v, "rank", t.rank)
print("reconstructs:", reconstruct_mult(t, v, leveled) == g)

# Strict types (all blocks singletons) biject with words: position k of
# the word names the level of the k-th smallest value.
word = "2302202"
strict = word_to_strict(word, 4)
print(f"word {word} -> blocks {strict.blocks}")
print("back to word:", strict_to_word(strict))
print("count at n=2, m=3:", len(enum_strict(2, 3)), "= 3^2")

# Power: tuples ordered antilexicographically group by shared suffixes
# into a tree of uniform height; the type is the bare shape, the value
# data lists each internal vertex's child labels.
power = Power(tuple(range(4)), 2)
h = Embedding(power, ((1, 0), (3, 0), (0, 2), (2, 2)))
tree = power_type(h)
chains = power_val(h)
print("tree shape:", tree)
print("label chains:", chains)
print("reconstructs:", reconstruct_power(tree, chains, power) == h)
