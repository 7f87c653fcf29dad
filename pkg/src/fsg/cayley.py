"""Dense Cayley-table view of a small permutation group.

Several consumers (automorphism search, character tables, semidirect
validation) want the group as indexed elements with an integer
multiplication table; this is only sensible for small orders, so the
builder enforces a bound.
"""

from __future__ import annotations

from .errors import ResourceLimitError


class CayleyStructure:
    """Elements of a PermGroup indexed 0..n-1 with full product table."""

    def __init__(self, group, bound=2048):
        n = group.order()
        if n > bound:
            raise ResourceLimitError(
                f"group order {n} exceeds the Cayley-table bound {bound}")
        self.group = group
        self.elements = group.element_list(bound)
        self.index = {g.images: i for i, g in enumerate(self.elements)}
        self.n = n
        self.table = [
            [self.index[(a * b).images] for b in self.elements]
            for a in self.elements
        ]
        self.identity_index = self.index[tuple(range(group.degree))]
        self.inverse = [0] * n
        for i, g in enumerate(self.elements):
            self.inverse[i] = self.index[g.inverse().images]
        self.orders = [g.order() for g in self.elements]

    def mult(self, i, j):
        return self.table[i][j]

    def generator_indices(self):
        return [self.index[g.images] for g in self.group.generators]

    def minimal_generating_indices(self):
        """Greedy generating sequence: scan elements, keep those that enlarge
        the generated subgroup.  Deterministic."""
        chosen = []
        closure = {self.identity_index}
        for i in range(self.n):
            if i in closure:
                continue
            chosen.append(i)
            closure = self._closure(chosen)
            if len(closure) == self.n:
                return chosen
        return chosen  # trivial group: []

    def _closure(self, gens):
        seen = {self.identity_index}
        queue = [self.identity_index]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def subgroup_closure(self, gens):
        return self._closure(list(gens))
