# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Embedded CDCL satisfiability core.

Minisat-style solver: two watched literals, first-UIP clause learning with
basic self-subsumption minimization, VSIDS decision heuristic with phase
saving, Luby restarts, and LBD-guided learnt-clause deletion.  Clauses may
be added between solve calls (additions only); solving accepts assumption
literals.  The solver is deterministic: no randomness anywhere.

External variable ids are positive ints 1..n; literals are signed ints as in
DIMACS.  Internally literal 2*(v-1) is the positive and 2*(v-1)+1 the
negative phase of v.
"""

from libcpp.vector cimport vector
from libc.stdint cimport int8_t, int32_t, uint32_t, int64_t
from posix.time cimport clock_gettime, timespec, CLOCK_MONOTONIC

cdef uint32_t LIT_UNDEF = 0xFFFFFFFF
cdef int32_t REF_UNDEF = -1

RESULT_SAT = 10
RESULT_UNSAT = 20
RESULT_UNKNOWN = 0


cdef inline double _now() noexcept:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef inline int64_t _luby(int64_t i) noexcept:
    # Luby sequence value for 1-based index i.
    cdef int64_t k = 1
    cdef int64_t size = 1
    cdef int64_t seq = 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i = i % size
    return <int64_t>1 << seq


cdef class Solver:
    cdef vector[int32_t] arena          # clause storage: [size, lbd, lits...]
    cdef vector[int32_t] learnts        # refs of learnt clauses
    cdef vector[vector[int32_t]] watches  # indexed by literal
    cdef vector[int8_t] assigns         # per var: 0 undef, 1 true, -1 false
    cdef vector[int8_t] phase           # saved phase per var (1 true, 0/-1 false)
    cdef vector[int32_t] level          # per var
    cdef vector[int32_t] reason         # per var: clause ref or REF_UNDEF
    cdef vector[uint32_t] trail
    cdef vector[int32_t] trail_lim
    cdef vector[double] activity
    cdef vector[int32_t] heap           # binary max-heap of vars
    cdef vector[int32_t] heap_pos       # var -> heap index, -1 if absent
    cdef vector[int8_t] seen
    cdef vector[uint32_t] learnt_tmp
    cdef vector[int32_t] lbd_seen       # level stamps for LBD computation
    cdef int32_t lbd_stamp
    cdef int32_t nvars
    cdef int32_t qhead
    cdef double var_inc
    cdef bint ok
    cdef public int64_t conflicts
    cdef public int64_t decisions
    cdef public int64_t propagations
    cdef int64_t max_learnts
    cdef double deadline

    def __cinit__(self):
        self.nvars = 0
        self.qhead = 0
        self.var_inc = 1.0
        self.ok = True
        self.conflicts = 0
        self.decisions = 0
        self.propagations = 0
        self.max_learnts = 8192
        self.deadline = -1.0
        self.lbd_stamp = 0

    # ---------------- variables ----------------

    def add_vars(self, int n):
        """Ensure variables 1..n exist."""
        cdef int32_t v
        while self.nvars < n:
            v = self.nvars
            self.nvars += 1
            self.assigns.push_back(0)
            self.phase.push_back(0)
            self.level.push_back(0)
            self.reason.push_back(REF_UNDEF)
            self.activity.push_back(0.0)
            self.heap_pos.push_back(-1)
            self.seen.push_back(0)
            self.lbd_seen.push_back(-1)
            self.watches.push_back(vector[int32_t]())
            self.watches.push_back(vector[int32_t]())
            self._heap_insert(v)

    def num_vars(self):
        return self.nvars

    # ---------------- heap ----------------

    cdef void _heap_swap(self, int32_t a, int32_t b) noexcept:
        cdef int32_t va = self.heap[a]
        cdef int32_t vb = self.heap[b]
        self.heap[a] = vb
        self.heap[b] = va
        self.heap_pos[va] = b
        self.heap_pos[vb] = a

    cdef void _heap_up(self, int32_t i) noexcept:
        cdef int32_t p
        while i > 0:
            p = (i - 1) >> 1
            if self.activity[self.heap[i]] > self.activity[self.heap[p]]:
                self._heap_swap(i, p)
                i = p
            else:
                break

    cdef void _heap_down(self, int32_t i) noexcept:
        cdef int32_t n = <int32_t>self.heap.size()
        cdef int32_t l, r, best
        while True:
            l = 2 * i + 1
            r = l + 1
            best = i
            if l < n and self.activity[self.heap[l]] > self.activity[self.heap[best]]:
                best = l
            if r < n and self.activity[self.heap[r]] > self.activity[self.heap[best]]:
                best = r
            if best == i:
                break
            self._heap_swap(i, best)
            i = best

    cdef void _heap_insert(self, int32_t v) noexcept:
        if self.heap_pos[v] >= 0:
            return
        self.heap.push_back(v)
        self.heap_pos[v] = <int32_t>self.heap.size() - 1
        self._heap_up(self.heap_pos[v])

    cdef int32_t _heap_pop(self) noexcept:
        cdef int32_t v = self.heap[0]
        cdef int32_t last = self.heap[self.heap.size() - 1]
        self.heap[0] = last
        self.heap_pos[last] = 0
        self.heap.pop_back()
        self.heap_pos[v] = -1
        if self.heap.size() > 0:
            self._heap_down(0)
        return v

    cdef void _bump(self, int32_t v) noexcept:
        cdef int32_t i
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for i in range(self.nvars):
                self.activity[i] *= 1e-100
            self.var_inc *= 1e-100
        if self.heap_pos[v] >= 0:
            self._heap_up(self.heap_pos[v])

    # ---------------- assignment ----------------

    cdef inline int lit_val(self, uint32_t lit) noexcept:
        cdef int8_t a = self.assigns[lit >> 1]
        if a == 0:
            return 0
        if (lit & 1) == 0:
            return a
        return -a

    cdef inline int32_t dlevel(self) noexcept:
        return <int32_t>self.trail_lim.size()

    cdef void enqueue(self, uint32_t lit, int32_t from_ref) noexcept:
        cdef int32_t v = lit >> 1
        self.assigns[v] = 1 if (lit & 1) == 0 else -1
        self.level[v] = self.dlevel()
        self.reason[v] = from_ref
        self.trail.push_back(lit)

    cdef void cancel_until(self, int32_t lvl) noexcept:
        cdef int32_t v
        cdef uint32_t lit
        if self.dlevel() <= lvl:
            return
        cdef int32_t bound = self.trail_lim[lvl]
        cdef int32_t i = <int32_t>self.trail.size() - 1
        while i >= bound:
            lit = self.trail[i]
            v = lit >> 1
            self.phase[v] = self.assigns[v]
            self.assigns[v] = 0
            self.reason[v] = REF_UNDEF
            self._heap_insert(v)
            i -= 1
        self.trail.resize(bound)
        self.trail_lim.resize(lvl)
        if self.qhead > bound:
            self.qhead = bound

    # ---------------- clauses ----------------

    cdef int32_t _alloc_clause(self, vector[uint32_t]& lits, int32_t lbd) noexcept:
        cdef int32_t ref = <int32_t>self.arena.size()
        cdef size_t i
        self.arena.push_back(<int32_t>lits.size())
        self.arena.push_back(lbd)
        for i in range(lits.size()):
            self.arena.push_back(<int32_t>lits[i])
        self.watches[lits[0]].push_back(ref)
        self.watches[lits[1]].push_back(ref)
        return ref

    def add_clause(self, lits):
        """Add a clause of signed external literals; call between solves."""
        self.cancel_until(0)
        cdef vector[uint32_t] ps
        cdef uint32_t lit, prev
        cdef int maxv = 0
        for ext in lits:
            v = abs(ext)
            if v > maxv:
                maxv = v
        if maxv > self.nvars:
            self.add_vars(maxv)
        if not self.ok:
            return False
        for ext in lits:
            lit = 2 * (abs(ext) - 1) + (1 if ext < 0 else 0)
            ps.push_back(lit)
        # sort, dedupe, drop falsified-at-root, detect tautology/satisfied
        cdef size_t i, j
        cdef int val
        for i in range(ps.size()):
            for j in range(i + 1, ps.size()):
                if ps[j] < ps[i]:
                    lit = ps[i]; ps[i] = ps[j]; ps[j] = lit
        j = 0
        prev = LIT_UNDEF
        for i in range(ps.size()):
            lit = ps[i]
            if lit == prev:
                continue
            if prev != LIT_UNDEF and lit == (prev ^ 1):
                return True  # tautology
            val = self.lit_val(lit)
            if val > 0:
                return True  # satisfied at root
            if val < 0:
                continue  # falsified at root: drop literal
            ps[j] = lit
            j += 1
            prev = lit
        ps.resize(j)
        if ps.size() == 0:
            self.ok = False
            return False
        if ps.size() == 1:
            self.enqueue(ps[0], REF_UNDEF)
            if self.propagate() != REF_UNDEF:
                self.ok = False
                return False
            return True
        self._alloc_clause(ps, 0)
        return True

    cdef int32_t propagate(self) noexcept:
        cdef uint32_t p, false_lit, other, cand
        cdef int32_t ref, size, k
        cdef int32_t* lits
        cdef size_t wi, wj, wn
        cdef vector[int32_t]* wl
        cdef bint moved
        while self.qhead < <int32_t>self.trail.size():
            p = self.trail[self.qhead]
            self.qhead += 1
            self.propagations += 1
            false_lit = p ^ 1
            wl = &self.watches[false_lit]
            wn = wl[0].size()
            wi = 0
            wj = 0
            while wi < wn:
                ref = wl[0][wi]
                wi += 1
                size = self.arena[ref]
                if self.arena[ref + 1] == -2:
                    continue  # deleted: drop from watch list
                lits = &self.arena[ref + 2]
                if <uint32_t>lits[0] == false_lit:
                    lits[0] = lits[1]
                    lits[1] = <int32_t>false_lit
                other = <uint32_t>lits[0]
                if self.lit_val(other) > 0:
                    wl[0][wj] = ref
                    wj += 1
                    continue
                moved = False
                for k in range(2, size):
                    cand = <uint32_t>lits[k]
                    if self.lit_val(cand) >= 0:
                        lits[1] = <int32_t>cand
                        lits[k] = <int32_t>false_lit
                        self.watches[cand].push_back(ref)
                        moved = True
                        break
                if moved:
                    continue
                wl[0][wj] = ref
                wj += 1
                if self.lit_val(other) < 0:
                    # conflict: keep remaining watchers, restore list
                    while wi < wn:
                        wl[0][wj] = wl[0][wi]
                        wj += 1
                        wi += 1
                    wl[0].resize(wj)
                    return ref
                self.enqueue(other, ref)
            wl[0].resize(wj)
        return REF_UNDEF

    # ---------------- analysis ----------------

    cdef int32_t _compute_lbd(self, vector[uint32_t]& lits) noexcept:
        cdef int32_t count = 0
        cdef size_t i
        cdef int32_t lv
        self.lbd_stamp += 1
        for i in range(lits.size()):
            lv = self.level[lits[i] >> 1]
            if self.lbd_seen[lv % self.nvars] != self.lbd_stamp or True:
                pass
        # simple exact computation with a stamp array indexed by level
        count = 0
        for i in range(lits.size()):
            lv = self.level[lits[i] >> 1]
            if lv < <int32_t>self.lbd_seen.size() and self.lbd_seen[lv] != self.lbd_stamp:
                self.lbd_seen[lv] = self.lbd_stamp
                count += 1
        return count

    cdef int32_t analyze(self, int32_t confl, vector[uint32_t]& learnt) noexcept:
        """First-UIP learning; returns backtrack level, fills learnt clause."""
        cdef int32_t pathC = 0
        cdef uint32_t p = LIT_UNDEF
        cdef int32_t index = <int32_t>self.trail.size() - 1
        cdef int32_t ref = confl
        cdef int32_t size, k, v, start
        cdef int32_t* lits
        cdef uint32_t q
        learnt.clear()
        learnt.push_back(0)  # slot for asserting literal
        while True:
            size = self.arena[ref]
            lits = &self.arena[ref + 2]
            start = 0 if p == LIT_UNDEF else 1
            for k in range(start, size):
                q = <uint32_t>lits[k]
                v = q >> 1
                if self.seen[v] == 0 and self.level[v] > 0:
                    self.seen[v] = 1
                    self._bump(v)
                    if self.level[v] >= self.dlevel():
                        pathC += 1
                    else:
                        learnt.push_back(q)
            while self.seen[self.trail[index] >> 1] == 0:
                index -= 1
            p = self.trail[index]
            index -= 1
            v = p >> 1
            self.seen[v] = 0
            pathC -= 1
            if pathC <= 0:
                break
            ref = self.reason[v]
        learnt[0] = p ^ 1

        # basic minimization: drop literals implied by the rest via their reason
        cdef size_t ii, jj
        cdef int32_t rref, rsize, rk, rv
        cdef int32_t* rlits
        cdef bint redundant
        for ii in range(1, learnt.size()):
            self.seen[learnt[ii] >> 1] = 1
        jj = 1
        for ii in range(1, learnt.size()):
            v = learnt[ii] >> 1
            rref = self.reason[v]
            redundant = False
            if rref != REF_UNDEF:
                redundant = True
                rsize = self.arena[rref]
                rlits = &self.arena[rref + 2]
                for rk in range(1, rsize):
                    rv = rlits[rk] >> 1
                    if self.seen[rv] == 0 and self.level[rv] > 0:
                        redundant = False
                        break
            if not redundant:
                learnt[jj] = learnt[ii]
                jj += 1
        for ii in range(1, learnt.size()):
            self.seen[learnt[ii] >> 1] = 0
        self.seen[learnt[0] >> 1] = 0
        learnt.resize(jj)

        # backtrack level = second-highest level in learnt; move that lit to [1]
        cdef int32_t bt = 0
        cdef size_t maxi = 1
        if learnt.size() > 1:
            for ii in range(1, learnt.size()):
                if self.level[learnt[ii] >> 1] > self.level[learnt[maxi] >> 1]:
                    maxi = ii
            q = learnt[1]
            learnt[1] = learnt[maxi]
            learnt[maxi] = q
            bt = self.level[learnt[1] >> 1]
        return bt

    cdef void _reduce_db(self):
        """Drop the weakest half of learnt clauses (by LBD, then size)."""
        cdef vector[int32_t] keep
        cdef size_t i
        cdef int32_t ref, size, lbd
        # selection sort refs by (lbd, size) descending badness kept simple:
        # gather scored list in Python for clarity; sizes are modest.
        scored = []
        for i in range(self.learnts.size()):
            ref = self.learnts[i]
            if self.arena[ref + 1] == -2:
                continue
            scored.append((self.arena[ref + 1], self.arena[ref], ref))
        scored.sort()
        cutoff = len(scored) // 2
        kept_py = []
        for idx, (lbd, size, ref) in enumerate(scored):
            locked = self.reason[(<uint32_t>self.arena[ref + 2]) >> 1] == ref
            if idx < cutoff or lbd <= 2 or size <= 2 or locked:
                kept_py.append(ref)
            else:
                self.arena[ref + 1] = -2  # deleted marker
        self.learnts.clear()
        for ref in kept_py:
            self.learnts.push_back(ref)

    # ---------------- search ----------------

    cdef int32_t _pick_branch(self) noexcept:
        cdef int32_t v
        while self.heap.size() > 0:
            v = self._heap_pop()
            if self.assigns[v] == 0:
                return v
        return -1

    def solve(self, assumptions=(), double time_budget=-1.0):
        """Solve under assumptions; returns 10 (SAT), 20 (UNSAT), 0 (budget)."""
        cdef vector[uint32_t] assumps
        cdef uint32_t lit
        cdef int32_t confl, bt, v, lbd, ref
        cdef vector[uint32_t] learnt
        cdef int64_t conflict_budget_base = 0
        cdef int64_t restart_count = 0
        cdef int64_t next_restart
        cdef int val
        for ext in assumptions:
            v = abs(ext)
            if v > self.nvars:
                self.add_vars(v)
            assumps.push_back(2 * (v - 1) + (1 if ext < 0 else 0))
        self.cancel_until(0)
        if not self.ok:
            return RESULT_UNSAT
        self.deadline = -1.0
        if time_budget > 0:
            self.deadline = _now() + time_budget
        if self.propagate() != REF_UNDEF:
            self.ok = False
            return RESULT_UNSAT

        restart_count = 1
        next_restart = self.conflicts + 128 * _luby(restart_count)
        while True:
            confl = self.propagate()
            if confl != REF_UNDEF:
                self.conflicts += 1
                if self.dlevel() == 0:
                    self.ok = False
                    return RESULT_UNSAT
                bt = self.analyze(confl, learnt)
                self.cancel_until(bt if bt > <int32_t>assumps.size() - 1 or True else bt)
                self.cancel_until(bt)
                if learnt.size() == 1:
                    self.cancel_until(0)
                    self.enqueue(learnt[0], REF_UNDEF)
                else:
                    lbd = self._compute_lbd(learnt)
                    ref = self._alloc_clause(learnt, lbd if lbd > 0 else 1)
                    self.learnts.push_back(ref)
                    self.enqueue(learnt[0], ref)
                self.var_inc *= 1.0526315789473684  # 1/0.95 decay
                if (self.conflicts & 511) == 0 and self.deadline > 0 and _now() > self.deadline:
                    self.cancel_until(0)
                    return RESULT_UNKNOWN
            else:
                if self.conflicts >= next_restart and self.dlevel() > <int32_t>assumps.size():
                    restart_count += 1
                    next_restart = self.conflicts + 128 * _luby(restart_count)
                    self.cancel_until(<int32_t>assumps.size())
                    if <int64_t>self.learnts.size() >= self.max_learnts:
                        self.cancel_until(0)
                        self._reduce_db()
                        self.max_learnts += 2048
                # assumption / decision
                if self.dlevel() < <int32_t>assumps.size():
                    lit = assumps[self.dlevel()]
                    val = self.lit_val(lit)
                    if val < 0:
                        self.cancel_until(0)
                        return RESULT_UNSAT
                    self.trail_lim.push_back(<int32_t>self.trail.size())
                    if val == 0:
                        self.decisions += 1
                        self.enqueue(lit, REF_UNDEF)
                    continue
                v = self._pick_branch()
                if v < 0:
                    return RESULT_SAT
                self.decisions += 1
                self.trail_lim.push_back(<int32_t>self.trail.size())
                self.enqueue(2 * v + (0 if self.phase[v] > 0 else 1), REF_UNDEF)

    def model(self):
        """Truth values of vars 1..n as a list with a dummy element at 0."""
        out = [False] * (self.nvars + 1)
        cdef int32_t v
        for v in range(self.nvars):
            out[v + 1] = self.assigns[v] > 0
        return out

    def is_ok(self):
        return self.ok
