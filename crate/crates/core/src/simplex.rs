use std::fmt;

use crate::error::{Result, TopologyError};

/// Dense vertex identifier inside a complex's label table.
pub type VertexId = u32;

/// A nonempty simplex, stored as a strictly increasing list of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Sorts the vertices; rejects empty input and repeated vertices.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(TopologyError::EmptySimplex);
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(TopologyError::RepeatedVertex(format!("{vertices:?}")));
        }
        Ok(Self(vertices))
    }

    pub fn vertex(v: VertexId) -> Self {
        Self(vec![v])
    }

    /// Caller guarantees the input is strictly increasing and nonempty.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Number of vertices; a simplex is never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self ⊆ other`, by a merge over the two sorted lists.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Vertices of `self` not in `other`; `None` when nothing remains.
    pub fn difference(&self, other: &Simplex) -> Option<Simplex> {
        let rest: Vec<_> = self
            .0
            .iter()
            .copied()
            .filter(|v| !other.contains_vertex(*v))
            .collect();
        (!rest.is_empty()).then_some(Simplex(rest))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut all = self.0.clone();
        all.extend_from_slice(&other.0);
        all.sort_unstable();
        all.dedup();
        Simplex(all)
    }

    /// The codimension-one face obtained by deleting the vertex at `position`.
    pub fn facet_without(&self, position: usize) -> Option<Simplex> {
        if self.0.len() < 2 {
            return None;
        }
        let mut rest = self.0.clone();
        rest.remove(position);
        Some(Simplex(rest))
    }

    /// All nonempty faces, including `self`.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_rejects_repeats() {
        assert_eq!(Simplex::new(vec![3, 1, 2]).unwrap().vertices(), &[1, 2, 3]);
        assert!(matches!(
            Simplex::new(vec![1, 1]),
            Err(TopologyError::RepeatedVertex(_))
        ));
        assert_eq!(Simplex::new(vec![]), Err(TopologyError::EmptySimplex));
    }

    #[test]
    fn face_relations() {
        let t = Simplex::new(vec![0, 2, 5]).unwrap();
        assert!(Simplex::new(vec![0, 5]).unwrap().is_face_of(&t));
        assert!(!Simplex::new(vec![0, 1]).unwrap().is_face_of(&t));
        assert!(t.is_face_of(&t));
        assert_eq!(t.faces().count(), 7);
        assert_eq!(
            t.difference(&Simplex::vertex(2)).unwrap().vertices(),
            &[0, 5]
        );
        assert!(t.difference(&t).is_none());
        assert!(t.is_disjoint(&Simplex::new(vec![1, 3]).unwrap()));
    }
}
