"""
Union-find over arbitrary hashable items.
"""


class UnionFind:
    def __init__(self, items=()):
        self.parent = {}
        self.rank = {}
        for item in items:
            self.add(item)

    def add(self, item):
        if item not in self.parent:
            self.parent[item] = item
            self.rank[item] = 0

    def find(self, item):
        root = self.parent[item]
        if self.parent[root] != root:
            root = self.parent[item] = self.find(root)
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def same(self, x, y):
        return self.find(x) == self.find(y)

    def classes(self):
        """Equivalence classes as sorted tuples, ordered by their least member."""
        grouped = {}
        for item in self.parent:
            grouped.setdefault(self.find(item), []).append(item)
        return sorted(tuple(sorted(members)) for members in grouped.values())

    def __len__(self):
        return sum(1 for item in self.parent if self.find(item) == item)

    def __contains__(self, item):
        return item in self.parent
