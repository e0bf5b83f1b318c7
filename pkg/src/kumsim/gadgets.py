"""Shared machine gadgets: rotating counter chains and bit walks.

Both recognizers meter out their per-symbol work against three chains of
bit-colored nodes holding the previous, current, and next block index.
During block i the increment walk computes next = current + 1 two bit
positions per symbol (least significant first), while read walks hand out
the current index's bits most significant first to the structure builders.
At each block boundary the chains rotate by a register permutation, so a
read walk never races the carry propagation of the walk writing the same
chain.

The helpers here only probe and recolor existing nodes, which makes them
identical on both machine flavors; creating and wiring chain nodes differs
per model (one symmetric link versus two directed pointers) and lives in
the recognizer modules.

Chain geometry: every chain node reaches its more significant neighbor
through the model's head-ward port and its less significant neighbor
through the tail-ward port; the head is the most significant bit.

Registers used here: inc_read and inc_write are the increment walk's
positions in the current and next chain; f_carry holds the pending carry
and, after the walk finishes, the carry out of the top bit (a set flag
then means the counter wrapped, i.e. one block too many); f_all_ones
records whether every bit below the head read as one during the walk, and
f_top_one the head bit itself, which together decide the all-ones check
and the parity of n at the end of the block section.  Flags are plain
registers holding the anchor node when set and None when clear.
"""

from __future__ import annotations

# Palette ids shared by both recognizers; bit values double as color ids.
ZERO, ONE, BLANK, MARK = 0, 1, 2, 3

# The initial node: trie root on both machines, and the value flags point
# at when set (never dereferenced through a flag).
ANCHOR = 0

# Increment walk outcomes for one scheduled position.
STEP_OK = 0      # processed a non-head position
STEP_HEAD = 1    # processed the head; the walk is complete
STEP_PAST = 2    # walk was already complete: one position too many

CHAIN_REGISTERS = ("c_prev_h", "c_prev_t", "c_cur_h", "c_cur_t",
                   "c_next_h", "c_next_t")

WALK_REGISTERS = ("inc_read", "inc_write", "f_carry", "f_all_ones",
                  "f_top_one")


def inc_step(g, R, toward_head):
    """Advance the counter increment by one bit position.

    Reads the current chain at inc_read, writes current+1 into the next
    chain at inc_write, and propagates the carry through f_carry.  On the
    head position it records the head bit in f_top_one, leaves the carry
    out in f_carry, and retires the walk.
    """
    pos = R["inc_read"]
    if pos is None:
        return STEP_PAST
    bit = g.get_color(pos)
    if R["f_carry"] is not None:
        new_bit = bit ^ 1
        carry = bit == ONE
    else:
        new_bit = bit
        carry = False
    g.set_color(R["inc_write"], new_bit)
    nxt = g.neighbor(pos, toward_head)
    if nxt is None:
        R["f_top_one"] = ANCHOR if bit == ONE else None
        R["f_carry"] = ANCHOR if carry else None
        R["inc_read"] = None
        R["inc_write"] = None
        return STEP_HEAD
    if bit == ZERO:
        R["f_all_ones"] = None
    R["f_carry"] = ANCHOR if carry else None
    R["inc_read"] = nxt
    R["inc_write"] = g.neighbor(R["inc_write"], toward_head)
    return STEP_OK


def read_step(g, R, reg, toward_tail):
    """Hand out the next bit of a head-to-tail chain walk, or None when done."""
    pos = R[reg]
    if pos is None:
        return None
    R[reg] = g.neighbor(pos, toward_tail)
    return g.get_color(pos)


def rotate_chains(R):
    """previous <- current <- next <- recycled previous (registers only).

    The recycled chain's stale bits are fully overwritten by the next
    increment walk before anything reads them.
    """
    R["c_prev_h"], R["c_prev_t"], R["c_cur_h"], R["c_cur_t"], \
        R["c_next_h"], R["c_next_t"] = \
        R["c_cur_h"], R["c_cur_t"], R["c_next_h"], R["c_next_t"], \
        R["c_prev_h"], R["c_prev_t"]


def reset_increment(R):
    """Arm the increment walk for a fresh block: +1 from the tail up."""
    R["inc_read"] = R["c_cur_t"]
    R["inc_write"] = R["c_next_t"]
    R["f_carry"] = ANCHOR
    R["f_all_ones"] = ANCHOR
