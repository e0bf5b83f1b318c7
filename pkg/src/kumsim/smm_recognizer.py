"""Real-time block-lookup recognizer on the directed-pointer machine.

Same language, same counter pacing as the degree-bounded recognizer, but
the unbounded in-degree makes the lookup radically simpler: every index
leaf stores a direct pointer to its block's representative node, and two
blocks are equal exactly when their representatives are the same node.

Layout:

  index trie   trie of depth w = 2k + 1 over directions l/r keyed by the
               padded block index, rooted at the initial node.  Leaf i
               points through v at the representative of block value b_i.
  value trie   trie of depth k over the block bits, one leaf per distinct
               value, used only to find the representative again when a
               later block repeats the value.
  reps         one dedicated node per distinct value, pointed at by the
               v pointer of every index leaf carrying that value and by
               nothing else, so its in-degree is exactly the number of
               those indices.  The value leaf cannot serve as the rep
               itself (its trie parent already points at it); instead it
               remembers the first carrier leaf, whose v pointer leads
               every later carrier to the rep.  With all blocks equal,
               all 2^n index leaves aim at one node of in-degree 2^n:
               this machine buys its simplicity with in-degree that the
               bounded-degree model cannot have.

Per block symbol: two increment positions, two index-trie levels fed by
the current chain, one value-trie level on the input bit.  No value
strings, no per-value tries, no queue.  x and y each descend the index
trie one level per symbol (after eating the pad branch when n is even);
the second '#' banks x's representative in a register and the final '#'
compares it with y's by node identity.
"""

from __future__ import annotations

from .engine import ModelKind, new_graph
from .gadgets import (ANCHOR, BLANK, CHAIN_REGISTERS, ONE, STEP_HEAD,
                      STEP_OK, WALK_REGISTERS, ZERO, inc_step, read_step,
                      reset_increment, rotate_chains)
from .runtime import Program, RejectReason, Verdict

L, R_DIR, V = 0, 1, 2

PALETTE = ("zero", "one", "blank")
DIRECTIONS = ("l", "r", "v")

# Worst primitive count of any single symbol handler; here the first
# block dominates (chain nodes cost three primitives without symmetric
# links). Measured over the same corpus as the other machine.
SMM_CADENCE = 27

REGISTERS = (
    "ph_first_block", "ph_blocks", "ph_x", "ph_y", "ph_done",
) + CHAIN_REGISTERS + WALK_REGISTERS + (
    "idx_bits",   # read walk feeding the index trie (current chain)
    "icur",       # index trie cursor
    "vroot",      # value trie root
    "vt_cur",     # value trie cursor
    "rep_x",      # representative of b_x, held between the last two '#'
)

_REJ_PACING = Verdict.reject(RejectReason.PACING)
_REJ_FORMAT = Verdict.reject(RejectReason.FORMAT)
_REJ_SUFFIX = Verdict.reject(RejectReason.BAD_SUFFIX)
_REJ_TRUNCATED = Verdict.reject(RejectReason.TRUNCATED)

_ACCEPT = Verdict.accept()


def _descend(g, node, bit):
    """Child of node along direction bit, creating it if absent."""
    child = g.neighbor(node, bit)
    if child is None:
        child = g.create_node(BLANK)
        g.set_pointer(node, bit, child)
    return child


def _append_chain(g, R, head, tail):
    node = g.create_node(ZERO)
    if R[head] is None:
        R[head] = node
        R[tail] = node
    else:
        g.set_pointer(R[head], L, node)
        g.set_pointer(node, R_DIR, R[head])
    R[head] = node


def smm_phase0_tick(g, R, bit):
    for _ in range(2):
        _append_chain(g, R, "c_prev_h", "c_prev_t")
        _append_chain(g, R, "c_cur_h", "c_cur_t")
        _append_chain(g, R, "c_next_h", "c_next_t")
        R["icur"] = _descend(g, R["icur"], 0)
    R["vt_cur"] = _descend(g, R["vt_cur"], bit)
    return None


def _bind_representative(g, R):
    """Point the finished index leaf at its value's representative.

    First carrier of a value allocates the rep and leaves a finder trail
    value leaf -v-> first index leaf -v-> rep; later carriers follow it.
    """
    first = g.neighbor(R["vt_cur"], V)
    if first is None:
        rep = g.create_node(BLANK)
        g.set_pointer(R["vt_cur"], V, R["icur"])
    else:
        rep = g.neighbor(first, V)
    g.set_pointer(R["icur"], V, rep)


def _close_block(g, R):
    _bind_representative(g, R)
    R["vt_cur"] = R["vroot"]
    R["icur"] = ANCHOR
    rotate_chains(R)
    reset_increment(R)
    R["idx_bits"] = R["c_cur_h"]


def smm_phase0_boundary(g, R):
    _append_chain(g, R, "c_prev_h", "c_prev_t")
    _append_chain(g, R, "c_cur_h", "c_cur_t")
    _append_chain(g, R, "c_next_h", "c_next_t")
    g.set_color(R["c_next_t"], ONE)
    R["icur"] = _descend(g, R["icur"], 0)
    _close_block(g, R)
    R["ph_first_block"] = None
    R["ph_blocks"] = ANCHOR
    return None


def smm_base_tick(g, R, bit):
    for _ in range(2):
        if inc_step(g, R, L) != STEP_OK:
            return _REJ_PACING
        b = read_step(g, R, "idx_bits", R_DIR)
        if b is None:
            return _REJ_PACING
        R["icur"] = _descend(g, R["icur"], b)
    R["vt_cur"] = _descend(g, R["vt_cur"], bit)
    return None


def smm_phase_boundary(g, R):
    if inc_step(g, R, L) != STEP_HEAD:
        return _REJ_PACING
    if R["f_carry"] is not None:
        return _REJ_FORMAT  # counter wrapped: more than 2^w blocks
    b = read_step(g, R, "idx_bits", R_DIR)
    if b is None or R["idx_bits"] is not None:
        return _REJ_PACING
    R["icur"] = _descend(g, R["icur"], b)
    _close_block(g, R)
    return None


def _restart_index_walk(g, R):
    """Point icur back at the root, eating the pad branch when n is even."""
    R["icur"] = ANCHOR
    if R["f_top_one"] is None:
        child = g.neighbor(ANCHOR, L)
        if child is None:
            return False
        R["icur"] = child
    return True


def smm_base_end(g, R):
    if inc_step(g, R, L) != STEP_HEAD:
        return _REJ_PACING
    if R["f_all_ones"] is None:
        return _REJ_FORMAT  # block count not a power of two
    b = read_step(g, R, "idx_bits", R_DIR)
    if b is None or R["idx_bits"] is not None:
        return _REJ_PACING
    R["icur"] = _descend(g, R["icur"], b)
    _bind_representative(g, R)
    if not _restart_index_walk(g, R):
        return _REJ_FORMAT
    R["ph_blocks"] = None
    R["ph_x"] = ANCHOR
    return None


def smm_x_tick(g, R, bit):
    child = g.neighbor(R["icur"], bit)
    if child is None:
        return _REJ_FORMAT  # x longer than n, or not over the block count
    R["icur"] = child
    return None


def smm_x_end(g, R):
    rep = g.neighbor(R["icur"], V)
    if rep is None:
        return _REJ_FORMAT  # x shorter than n
    R["rep_x"] = rep
    if not _restart_index_walk(g, R):
        return _REJ_FORMAT
    R["ph_x"] = None
    R["ph_y"] = ANCHOR
    return None


def smm_y_tick(g, R, bit):
    child = g.neighbor(R["icur"], bit)
    if child is None:
        return _REJ_FORMAT
    R["icur"] = child
    return None


def smm_finalize(g, R):
    rep = g.neighbor(R["icur"], V)
    if rep is None:
        return _REJ_FORMAT  # y shorter than n
    if not g.identity_eq(rep, R["rep_x"]):
        return _REJ_FORMAT  # blocks differ
    R["ph_y"] = None
    R["ph_done"] = ANCHOR
    return None


def _on_start(g, R):
    R["vroot"] = g.create_node(BLANK)
    R["vt_cur"] = R["vroot"]
    R["icur"] = ANCHOR
    R["ph_first_block"] = ANCHOR
    return None


def _on_symbol(g, R, ch):
    if ch == "0" or ch == "1":
        bit = ONE if ch == "1" else ZERO
        if R["ph_blocks"] is not None:
            return smm_base_tick(g, R, bit)
        if R["ph_x"] is not None:
            return smm_x_tick(g, R, bit)
        if R["ph_y"] is not None:
            return smm_y_tick(g, R, bit)
        if R["ph_first_block"] is not None:
            return smm_phase0_tick(g, R, bit)
        return _REJ_SUFFIX
    if ch == "@":
        if R["ph_blocks"] is not None:
            return smm_phase_boundary(g, R)
        if R["ph_first_block"] is not None:
            return smm_phase0_boundary(g, R)
        if R["ph_done"] is not None:
            return _REJ_SUFFIX
        return _REJ_FORMAT  # '@' inside the index fields
    # ch == '#'
    if R["ph_blocks"] is not None:
        return smm_base_end(g, R)
    if R["ph_x"] is not None:
        return smm_x_end(g, R)
    if R["ph_y"] is not None:
        return smm_finalize(g, R)
    if R["ph_done"] is not None:
        return _REJ_SUFFIX
    return _REJ_FORMAT  # '#' before any '@'


def _on_end(g, R):
    if R["ph_done"] is not None:
        return _ACCEPT
    return _REJ_TRUNCATED


def _graph_factory():
    return new_graph(ModelKind.SMM, None, PALETTE, DIRECTIONS)


def build_smm_recognizer(cadence=SMM_CADENCE):
    """Recognizer program; cadence=None disables padding (measurement)."""
    return Program(
        register_names=REGISTERS,
        graph_factory=_graph_factory,
        on_start=_on_start,
        on_symbol=_on_symbol,
        on_end=_on_end,
        cadence=cadence,
    )
