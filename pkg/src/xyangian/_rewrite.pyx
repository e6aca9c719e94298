# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled normal-ordering kernel; same interface as ``_rewrite_py.Rewriter``."""


cdef dict _clean(dict d):
    return {k: c for k, c in d.items() if c != 0}


cdef inline void _acc(dict d, object k, object c):
    v = d.get(k)
    d[k] = c if v is None else v + c


cdef class Rewriter:
    cdef public object alg
    cdef dict _dep_flag, _comm, _dep, _ins, _wt, _sq

    def __init__(self, alg):
        self.alg = alg
        self._dep_flag = {}
        self._comm = {}
        self._dep = {}
        self._ins = {}
        self._wt = {}
        self._sq = {}

    def stats(self):
        return {"commutators": len(self._comm), "dependents": len(self._dep),
                "inserts": len(self._ins), "products": len(self._wt)}

    cpdef bint is_dep(self, long a):
        f = self._dep_flag.get(a)
        if f is None:
            f = self._dep_flag[a] = bool(self.alg.is_dep(a))
        return f

    cpdef object square(self, long a):
        if a in self._sq:
            return self._sq[a]
        s = self._sq[a] = self.alg.square(a)
        return s

    cpdef dict comm(self, long a, long b):
        """Normal form of ``[a, b]`` for basis letters ``a > b``."""
        key = (a, b)
        r = self._comm.get(key)
        if r is None:
            r = self.normal_order(self.alg.raw_comm(a, b))
            self._comm[key] = r
        return r

    cpdef dict dep(self, long a):
        r = self._dep.get(a)
        if r is None:
            r = self.normal_order(self.alg.raw_dep(a))
            self._dep[a] = r
        return r

    cpdef dict insert(self, long x, tuple w):
        """Normal form of ``x * w`` for a basis letter ``x`` and a normal word ``w``."""
        cdef long w0
        cdef dict res, r, cm
        if not w:
            return {(x,): 1}
        w0 = w[0]
        if x < w0:
            return {(x,) + w: 1}
        if x == w0:
            sq = self.square(x)
            if sq is None:
                return {(x,) + w: 1}
            return self.poly_times_word(sq, w[1:])
        key = (x, w)
        r = self._ins.get(key)
        if r is not None:
            return r
        rest = w[1:]
        res = {}
        for v, c in self.insert(x, rest).items():
            for v2, c2 in self.insert(w0, v).items():
                _acc(res, v2, c * c2)
        cm = self.comm(x, w0)
        if cm:
            for v, c in cm.items():
                for v2, c2 in self.word_times(v, rest).items():
                    _acc(res, v2, c * c2)
        r = _clean(res)
        self._ins[key] = r
        return r

    cpdef dict word_times(self, tuple v, tuple w):
        """Normal form of ``v * w`` for normal words ``v`` and ``w``."""
        cdef long last, letter
        cdef dict cur, nxt, r
        cdef Py_ssize_t idx
        if not v:
            return {w: 1}
        if not w:
            return {v: 1}
        last = v[len(v) - 1]
        if last < w[0] or (last == w[0] and self.square(last) is None):
            return {v + w: 1}
        key = (v, w)
        r = self._wt.get(key)
        if r is not None:
            return r
        cur = {w: 1}
        for idx in range(len(v) - 1, -1, -1):
            letter = v[idx]
            nxt = {}
            for u, c in cur.items():
                for u2, c2 in self.insert(letter, u).items():
                    _acc(nxt, u2, c * c2)
            cur = _clean(nxt)
        self._wt[key] = cur
        return cur

    cpdef dict poly_times_word(self, dict p, tuple w):
        cdef dict res = {}
        for v, c in p.items():
            for v2, c2 in self.word_times(v, w).items():
                _acc(res, v2, c * c2)
        return _clean(res)

    cpdef dict mul(self, dict p, dict q):
        """Product of two normal polynomials, in normal form."""
        cdef dict res = {}
        for v, c in p.items():
            for w, d in q.items():
                cd = c * d
                for u, e in self.word_times(v, w).items():
                    _acc(res, u, cd * e)
        return _clean(res)

    cpdef dict normal_order(self, dict p):
        """Normal form of an arbitrary free polynomial."""
        cdef dict res = {}
        for word, c in p.items():
            if c == 0:
                continue
            for v, c2 in self.nf_word(tuple(word)).items():
                _acc(res, v, c * c2)
        return _clean(res)

    cpdef dict nf_word(self, tuple word):
        cdef dict cur = {(): 1}
        cdef dict nxt, d
        cdef long letter
        cdef Py_ssize_t idx
        for idx in range(len(word) - 1, -1, -1):
            letter = word[idx]
            nxt = {}
            if self.is_dep(letter):
                d = self.dep(letter)
                for u, c in cur.items():
                    for v, cv in d.items():
                        for u2, c2 in self.word_times(v, u).items():
                            _acc(nxt, u2, c * cv * c2)
            else:
                for u, c in cur.items():
                    for u2, c2 in self.insert(letter, u).items():
                        _acc(nxt, u2, c * c2)
            cur = _clean(nxt)
        return cur
