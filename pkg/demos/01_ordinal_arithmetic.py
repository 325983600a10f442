"""
Ordinal arithmetic in Cantor normal form
========================================

Every ordinal below epsilon_0 has a unique normal form
w^e0*c0 + ... + w^ek*ck with strictly decreasing exponents.  The
Ordinal class keeps that form canonical through +, *, and **, and the
parser round-trips the printed spelling exactly.
"""

from ordramsey import OMEGA, Ordinal, parse

# Parsing accepts the ASCII grammar: 'w' for omega, '^' and '*' binding
# tighter than '+', parentheses only inside exponents.
a = parse("w^3*2 + w*5 + 1")
print("parsed:", a)
print("round-trips:", parse(str(a)) == a)

# Addition absorbs on the left: a finite head vanishes before a limit.
print("1 + w =", Ordinal.from_int(1) + OMEGA)
print("w + 1 =", OMEGA + Ordinal.from_int(1))

# Multiplication distributes over the right factor only.
print("(w + 1)*2 =", (OMEGA + 1) * 2)
print("2*(w + 1) =", Ordinal.from_int(2) * (OMEGA + 1))

# Powers of a successor expand the way the degree pipeline relies on:
# (w*m + 1)^d lists every w^j*m down the ladder.
base = OMEGA * 3 + 1
for d in (1, 2, 3):
    print(f"(w*3 + 1)^{d} =", base**d)

# Comparison is the usual ordinal order; ints coerce.
chain = [Ordinal.from_int(7), OMEGA, OMEGA * 2, OMEGA**2, parse("w^w")]
print("sorted:", " < ".join(str(x) for x in sorted(chain)))

# The threshold that decides finiteness of the degree calculus: every
# exponent finite means the ordinal sits below w^w.
for text in ("w^4*9 + w*2", "w^w", "w^(w + 1)"):
    print(f"{text} below w^w:", parse(text).below_omega_omega())
