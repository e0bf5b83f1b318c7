"""
Real-time recognition on both machines
======================================

Both recognizers answer membership while reading the input once, left
to right, with a fixed number of storage operations between reads.
The driver pads every symbol's work up to the machine's cadence, so
the gap profile of a completed run is dead flat.
"""

import random

from kumsim import (
    KUM_CADENCE, SMM_CADENCE, blocklang, build_kum_recognizer,
    build_smm_recognizer, max_gap, run,
)

kum = build_kum_recognizer()
smm = build_smm_recognizer()

s = "0@1@0@1#00#10#"
print("input:", s, "member:", blocklang.member(s))
for name, prog in (("kum", kum), ("smm", smm)):
    res = run(prog, s)
    gaps = res.trace.gaps()
    print("%s: %s  steps=%d  gaps=%s" % (name, res.verdict,
                                         res.trace.total_steps, gaps))

# the first gap is 0 because the clock starts after setup; every other
# read then lands exactly one cadence apart
print("cadence constants: kum=%d smm=%d" % (KUM_CADENCE, SMM_CADENCE))

# rejection comes with a reason and still never overruns the cadence
for bad in ("0@1@0@1#00#01#",   # blocks 0 and 1 differ
            "0@1@0#00#01#",     # 3 blocks cannot be 2^n
            "0@1@0@1#00#10#1",  # junk after the final '#'
            "0@1@0@1#00"):      # ends mid-field
    res = run(kum, bad)
    print("%-18s -> %-16s max gap %d" % (bad, res.verdict,
                                         max_gap(res.trace)))

# gap flatness holds at every size; time grows only with input length
print()
print("   n  len(s)  kum steps  smm steps  max gap kum/smm")
rng = random.Random(11)
for n in (2, 4, 6, 8, 10):
    t = blocklang.encode(blocklang.gen_positive(n, rng))
    rk = run(kum, t)
    rs = run(smm, t)
    assert rk.verdict.accepted and rs.verdict.accepted
    print("%4d  %6d  %9d  %9d  %7d/%d"
          % (n, len(t), rk.trace.total_steps, rs.trace.total_steps,
             max_gap(rk.trace), max_gap(rs.trace)))
