"""Pure-Python normal-ordering kernel.

Words are tuples of integer letters; a normal word is weakly increasing and
contains only basis letters.  The algebra object supplies four callbacks:

``is_dep(a)``        letter ``a`` is not a PBW basis letter
``raw_comm(a, b)``   free polynomial for ``[a, b]``
``raw_dep(a)``       free polynomial equal to a dependent letter
``square(a)``        normal polynomial for ``a*a`` when that product rewrites, else None

Normal forms of commutators, dependent letters and letter insertions are
memoised, so repeated products inside a session stay cheap.
"""


class Rewriter:
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

    def is_dep(self, a):
        f = self._dep_flag.get(a)
        if f is None:
            f = self._dep_flag[a] = bool(self.alg.is_dep(a))
        return f

    def square(self, a):
        if a in self._sq:
            return self._sq[a]
        s = self._sq[a] = self.alg.square(a)
        return s

    def comm(self, a, b):
        """Normal form of ``[a, b]`` for basis letters ``a > b``."""
        key = (a, b)
        r = self._comm.get(key)
        if r is None:
            r = self.normal_order(self.alg.raw_comm(a, b))
            self._comm[key] = r
        return r

    def dep(self, a):
        r = self._dep.get(a)
        if r is None:
            r = self.normal_order(self.alg.raw_dep(a))
            self._dep[a] = r
        return r

    def insert(self, x, w):
        """Normal form of ``x * w`` for a basis letter ``x`` and a normal word ``w``."""
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
                res[v2] = res.get(v2, 0) + c * c2
        cm = self.comm(x, w0)
        if cm:
            for v, c in cm.items():
                for v2, c2 in self.word_times(v, rest).items():
                    res[v2] = res.get(v2, 0) + c * c2
        r = {k: c for k, c in res.items() if c != 0}
        self._ins[key] = r
        return r

    def word_times(self, v, w):
        """Normal form of ``v * w`` for normal words ``v`` and ``w``."""
        if not v:
            return {w: 1}
        if not w:
            return {v: 1}
        last = v[-1]
        if last < w[0] or (last == w[0] and self.square(last) is None):
            return {v + w: 1}
        key = (v, w)
        r = self._wt.get(key)
        if r is not None:
            return r
        cur = {w: 1}
        for letter in reversed(v):
            nxt = {}
            for u, c in cur.items():
                for u2, c2 in self.insert(letter, u).items():
                    nxt[u2] = nxt.get(u2, 0) + c * c2
            cur = {k: c for k, c in nxt.items() if c != 0}
        self._wt[key] = cur
        return cur

    def poly_times_word(self, p, w):
        res = {}
        for v, c in p.items():
            for v2, c2 in self.word_times(v, w).items():
                res[v2] = res.get(v2, 0) + c * c2
        return {k: c for k, c in res.items() if c != 0}

    def mul(self, p, q):
        """Product of two normal polynomials, in normal form."""
        res = {}
        for v, c in p.items():
            for w, d in q.items():
                cd = c * d
                for u, e in self.word_times(v, w).items():
                    res[u] = res.get(u, 0) + cd * e
        return {k: c for k, c in res.items() if c != 0}

    def normal_order(self, p):
        """Normal form of an arbitrary free polynomial."""
        res = {}
        for word, c in p.items():
            if c == 0:
                continue
            for v, c2 in self.nf_word(word).items():
                res[v] = res.get(v, 0) + c * c2
        return {k: c for k, c in res.items() if c != 0}

    def nf_word(self, word):
        cur = {(): 1}
        for letter in reversed(word):
            nxt = {}
            if self.is_dep(letter):
                d = self.dep(letter)
                for u, c in cur.items():
                    for v, cv in d.items():
                        for u2, c2 in self.word_times(v, u).items():
                            nxt[u2] = nxt.get(u2, 0) + c * cv * c2
            else:
                for u, c in cur.items():
                    for u2, c2 in self.insert(letter, u).items():
                        nxt[u2] = nxt.get(u2, 0) + c * c2
            cur = {k: c for k, c in nxt.items() if c != 0}
        return cur
