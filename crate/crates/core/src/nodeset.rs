use std::fmt;

/// A subset of a small indexed set (simple roots, simple affine
/// reflections), stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct NodeSet(pub u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= 64);
        if n == 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << n) - 1)
        }
    }

    pub fn single(i: usize) -> Self {
        NodeSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(NodeSet::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        NodeSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        NodeSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: NodeSet) -> Self {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> Self {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> Self {
        NodeSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Applies an index map to every member.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        NodeSet::from_indices(self.iter().map(f))
    }

    /// All subsets of `self`, ordered by size and then lexicographically by
    /// sorted index list.
    pub fn subsets(self) -> Vec<NodeSet> {
        let idx = self.indices();
        let mut out: Vec<NodeSet> = (0u64..1 << idx.len())
            .map(|m| NodeSet::from_indices((0..idx.len()).filter(|b| m >> b & 1 == 1).map(|b| idx[b])))
            .collect();
        out.sort_by_key(|s| s.sort_key());
        out
    }

    /// Key realizing the canonical order: size, then sorted indices.
    pub fn sort_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.indices())
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_ordered() {
        let s = NodeSet::from_indices([0, 2, 3]);
        let subs = s.subsets();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], NodeSet::EMPTY);
        assert_eq!(subs[1], NodeSet::single(0));
        assert_eq!(subs[7], s);
        assert!(subs.iter().all(|x| x.is_subset(s)));
    }

    #[test]
    fn set_ops() {
        let a = NodeSet::from_indices([1, 4]);
        let b = NodeSet::from_indices([4, 5]);
        assert_eq!(a.union(b).indices(), vec![1, 4, 5]);
        assert_eq!(a.intersection(b).indices(), vec![4]);
        assert_eq!(a.difference(b).indices(), vec![1]);
        assert_eq!(NodeSet::full(3).len(), 3);
        assert_eq!(a.map(|i| i + 1).indices(), vec![2, 5]);
    }
}
