"""
The block lookup language
=========================

An input is 2^n binary blocks of n//2 bits joined by '@', then two
n-bit indices x and y, each closed by '#'.  The string belongs to the
language exactly when block x and block y hold the same value.  Note
the block width: with only n//2 bits there are far fewer distinct
values than blocks, so collisions are the norm, not the exception.
"""

import random

from kumsim import blocklang

# a hand-built instance: 4 blocks of 1 bit each, so n = 2
inst = blocklang.Instance(2, ("0", "1", "1", "0"), "01", "10")
s = blocklang.encode(inst)
print("encoded:", s)
print("block[x=01] =", inst.blocks[1], " block[y=10] =", inst.blocks[2])
print("member:", blocklang.member(s))

# flipping y to point at a different value breaks membership
bad = blocklang.encode(blocklang.Instance(2, inst.blocks, "01", "00"))
print("y -> 00:", bad, "member:", blocklang.member(bad))

# parse goes the other way and validates shape
back = blocklang.parse(s)
print("parsed n=%d k=%d blocks=%s" % (back.n, back.k, back.blocks))

# the n = 1 edge case has empty blocks: every well-formed string is in
for x in "01":
    for y in "01":
        t = "@#%s#%s#" % (x, y)
        print("n=1 string %-8r member: %s" % (t, blocklang.member(t)))

# --- generators ----------------------------------------------------------

rng = random.Random(42)
print()
print("positive, n=4:      ", blocklang.encode(blocklang.gen_positive(4, rng)))
print("all blocks equal:   ", blocklang.encode(blocklang.gen_all_equal(4)))
for kind in blocklang.NegativeKind:
    t = blocklang.gen_negative(4, kind, rng)
    shown = t if len(t) <= 60 else t[:57] + "..."
    print("%-20s %s" % (kind.value + ":", shown))

# every negative generator output really is out of the language
rng = random.Random(7)
checked = 0
for n in (2, 3, 4, 5):
    for kind in blocklang.NegativeKind:
        for _ in range(50):
            assert not blocklang.member(blocklang.gen_negative(n, kind, rng))
            checked += 1
print()
print("spot check: %d generated negatives, none a member" % checked)
