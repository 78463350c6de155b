//! Diagrams: the game board.
//!
//! A [`Diagram`] is an undirected graph on at most 64 vertices whose edges
//! carry a multiplicity and, for even multiplicities, a direction pointing
//! from the longer vertex to the shorter one. Only the parity of a
//! multiplicity matters for the moves: across an even edge the longer vertex
//! does not see the shorter one, while every other adjacency is seen from
//! both sides. Pinned vertices model a label frozen at 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::labeling::{low_mask, Labeling};

/// Largest nullspace that [`Diagram::fixed_labelings`] will expand.
pub const FIXED_LABELING_NULLITY_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    /// Longer endpoint when `directed`.
    pub u: usize,
    /// Shorter endpoint when `directed`.
    pub v: usize,
    pub multiplicity: u32,
    pub directed: bool,
}

impl Edge {
    pub fn single(u: usize, v: usize) -> Self {
        Self {
            u,
            v,
            multiplicity: 1,
            directed: false,
        }
    }

    /// Double edge with the arrow pointing from `long` to `short`.
    pub fn arrow(long: usize, short: usize) -> Self {
        Self::multiple(long, short, 2)
    }

    /// Directed edge of arbitrary multiplicity, `long` on the longer side.
    pub fn multiple(long: usize, short: usize, multiplicity: u32) -> Self {
        Self {
            u: long,
            v: short,
            multiplicity,
            directed: true,
        }
    }

    pub fn is_even(&self) -> bool {
        self.multiplicity.is_multiple_of(2)
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    n: usize,
    edges: Vec<Edge>,
    pinned: u64,
    adjacency: Vec<u64>,
    effective: Vec<u64>,
    display_order: Vec<usize>,
    name: Option<String>,
}

impl Diagram {
    pub const MAX_VERTICES: usize = 64;

    /// Validates the edge list without changing multiplicities.
    pub fn new(
        n: usize,
        edges: Vec<Edge>,
        pinned: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if n > Self::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: Self::MAX_VERTICES,
            });
        }
        let check = |vertex: usize| {
            if vertex < n {
                Ok(())
            } else {
                Err(Error::VertexOutOfRange { vertex, n })
            }
        };
        let mut seen = std::collections::HashSet::new();
        let mut adjacency = vec![0u64; n];
        let mut effective = vec![0u64; n];
        for e in &edges {
            check(e.u)?;
            check(e.v)?;
            if e.u == e.v {
                return Err(Error::SelfLoop { vertex: e.u });
            }
            if !seen.insert(e.key()) {
                let (u, v) = e.key();
                return Err(Error::DuplicateEdge { u, v });
            }
            if e.multiplicity == 0 {
                return Err(Error::ZeroMultiplicity { u: e.u, v: e.v });
            }
            if e.is_even() && !e.directed {
                return Err(Error::UndirectedEvenEdge {
                    u: e.u,
                    v: e.v,
                    multiplicity: e.multiplicity,
                });
            }
            adjacency[e.u] |= 1 << e.v;
            adjacency[e.v] |= 1 << e.u;
            // The shorter vertex always sees the longer one.
            effective[e.v] |= 1 << e.u;
            if !e.is_even() {
                effective[e.u] |= 1 << e.v;
            }
        }
        let mut pin_mask = 0u64;
        for p in pinned {
            check(p)?;
            pin_mask |= 1 << p;
        }
        Ok(Self {
            n,
            edges,
            pinned: pin_mask,
            adjacency,
            effective,
            display_order: (0..n).collect(),
            name: None,
        })
    }

    pub fn builder(n: usize) -> DiagramBuilder {
        DiagramBuilder {
            n,
            edges: Vec::new(),
            pinned: Vec::new(),
            order: None,
            name: None,
        }
    }

    /// Reduces every multiplicity to 1 (odd) or 2 (even); direction is kept
    /// only on even edges.
    pub fn normalize(&self) -> Diagram {
        let mut out = self.clone();
        for e in &mut out.edges {
            if e.is_even() {
                e.multiplicity = 2;
            } else {
                e.multiplicity = 1;
                e.directed = false;
            }
        }
        out
    }

    pub fn is_normalized(&self) -> bool {
        self.edges
            .iter()
            .all(|e| (e.multiplicity == 1 && !e.directed) || (e.multiplicity == 2 && e.directed))
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Vertex order used when printing labelings; entry `k` is the internal
    /// index of the `k`-th printed vertex.
    pub fn display_order(&self) -> &[usize] {
        &self.display_order
    }

    pub fn with_display_order(mut self, order: Vec<usize>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..self.n).collect::<Vec<_>>() {
            return Err(Error::Precondition(format!(
                "display order {order:?} is not a permutation of 0..{}",
                self.n
            )));
        }
        self.display_order = order;
        Ok(self)
    }

    /// Labeling rendered in display order.
    pub fn render(&self, a: &Labeling) -> String {
        a.to_string_in_order(&self.display_order)
    }

    pub fn pinned_mask(&self) -> u64 {
        self.pinned
    }

    pub fn pinned(&self) -> Vec<usize> {
        bits_of(self.pinned).collect()
    }

    pub fn is_pinned(&self, i: usize) -> bool {
        self.pinned >> i & 1 == 1
    }

    pub fn free_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !self.is_pinned(i)).collect()
    }

    pub fn free_count(&self) -> usize {
        self.n - self.pinned.count_ones() as usize
    }

    /// All neighbors of `i` as a bit mask, ignoring direction.
    pub fn neighbor_mask(&self, i: usize) -> u64 {
        self.adjacency[i]
    }

    /// Neighbors whose labels enter the move at `i`, as a bit mask.
    pub fn effective_mask(&self, i: usize) -> u64 {
        self.effective[i]
    }

    pub fn effective_neighbors(&self, i: usize) -> Result<Vec<usize>> {
        self.check_vertex(i)?;
        Ok(bits_of(self.effective[i]).collect())
    }

    pub fn neighbors(&self, i: usize) -> Result<Vec<usize>> {
        self.check_vertex(i)?;
        Ok(bits_of(self.adjacency[i]).collect())
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    pub(crate) fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: i,
                n: self.n,
            })
        }
    }

    /// Checks length and that every pinned vertex carries a 1.
    pub fn check_labeling(&self, a: &Labeling) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        let cleared = self.pinned & !a.bits();
        if cleared != 0 {
            return Err(Error::PinnedVertexCleared {
                vertex: cleared.trailing_zeros() as usize,
            });
        }
        Ok(())
    }

    /// Labeling from raw bits over all vertices; pinned bits must be set.
    pub fn labeling(&self, bits: u64) -> Result<Labeling> {
        if bits & !low_mask(self.n) != 0 {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: 64 - bits.leading_zeros() as usize,
            });
        }
        let a = Labeling::new(bits, self.n);
        self.check_labeling(&a)?;
        Ok(a)
    }

    /// Labeling given by the labels of the free vertices only (in increasing
    /// vertex order); pinned vertices are filled in with 1.
    pub fn labeling_from_free(&self, free_bits: u64) -> Labeling {
        Labeling::new(self.expand_free(free_bits), self.n)
    }

    /// Parses a bitstring written in display order.
    pub fn parse_labeling(&self, s: &str) -> Result<Labeling> {
        let shown = Labeling::parse(s)?;
        if shown.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: shown.len(),
            });
        }
        let mut bits = 0u64;
        for (k, &i) in self.display_order.iter().enumerate() {
            if shown.get(k) {
                bits |= 1 << i;
            }
        }
        self.labeling(bits)
    }

    /// Scatters the low bits of `free_bits` onto the free vertices and sets
    /// every pinned bit.
    pub(crate) fn expand_free(&self, free_bits: u64) -> u64 {
        if self.pinned == 0 {
            return free_bits;
        }
        let mut out = self.pinned;
        let mut k = 0;
        for i in 0..self.n {
            if !self.is_pinned(i) {
                out |= (free_bits >> k & 1) << i;
                k += 1;
            }
        }
        out
    }

    /// Inverse of [`Diagram::expand_free`].
    pub(crate) fn compress_free(&self, bits: u64) -> u64 {
        if self.pinned == 0 {
            return bits;
        }
        let mut out = 0;
        let mut k = 0;
        for i in 0..self.n {
            if !self.is_pinned(i) {
                out |= (bits >> i & 1) << k;
                k += 1;
            }
        }
        out
    }

    /// Number of connected components of the subgraph induced on `mask`.
    pub(crate) fn components_of_mask(&self, mask: u64) -> u32 {
        let mut remaining = mask;
        let mut count = 0;
        while remaining != 0 {
            let seed = remaining & remaining.wrapping_neg();
            let mut component = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adjacency[v] & mask & !component;
                component |= fresh;
                frontier |= fresh;
            }
            remaining &= !component;
            count += 1;
        }
        count
    }

    /// Components of 1s, counting pinned vertices as 1 and ignoring edge
    /// direction and multiplicity.
    pub fn count_components(&self, a: &Labeling) -> Result<usize> {
        self.check_labeling(a)?;
        Ok(self.components_of_mask(a.bits() | self.pinned) as usize)
    }

    /// True when no move changes `a`.
    pub fn is_fixed(&self, a: &Labeling) -> Result<bool> {
        self.check_labeling(a)?;
        Ok(self.is_fixed_bits(a.bits() | self.pinned))
    }

    pub(crate) fn is_fixed_bits(&self, bits: u64) -> bool {
        (0..self.n).all(|i| self.is_pinned(i) || (self.effective[i] & bits).count_ones().is_multiple_of(2))
    }

    /// Symmetric 0/1 adjacency matrix ignoring direction and multiplicity.
    pub fn adjacency_matrix(&self) -> F2Matrix {
        F2Matrix::from_row_masks(self.n, &self.adjacency)
    }

    /// Row `i` lists the effective neighbors of `i`. On simply-laced diagrams
    /// this is the adjacency matrix.
    pub fn effective_matrix(&self) -> F2Matrix {
        F2Matrix::from_row_masks(self.n, &self.effective)
    }

    /// Every labeling fixed by all moves, in increasing order of bits.
    ///
    /// Solves the linear system "effective-neighbor sum is even" on the free
    /// vertices, with pinned vertices contributing constant 1s.
    pub fn fixed_labelings(&self) -> Result<Vec<Labeling>> {
        let free = self.free_vertices();
        let f = free.len();
        let mut rows = Vec::with_capacity(f);
        let mut rhs = Vec::with_capacity(f);
        for &i in &free {
            rows.push(self.compress_free(self.effective[i] & !self.pinned));
            rhs.push((self.effective[i] & self.pinned).count_ones() % 2 == 1);
        }
        let system = F2Matrix::from_row_masks(f, &rows);
        let Some((particular, basis)) = system.solve(&rhs) else {
            return Ok(Vec::new());
        };
        if basis.len() > FIXED_LABELING_NULLITY_CAP {
            return Err(Error::NullspaceTooLarge {
                dim: basis.len(),
                cap: FIXED_LABELING_NULLITY_CAP,
            });
        }
        let base = particular[0];
        let basis: Vec<u64> = basis.iter().map(|v| v[0]).collect();
        let mut out: Vec<Labeling> = (0u64..1 << basis.len())
            .map(|combo| {
                let free_bits = bits_of(combo).fold(base, |acc, k| acc ^ basis[k]);
                self.labeling_from_free(free_bits)
            })
            .collect();
        out.sort_by_key(|a| a.bits());
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components_of_mask(low_mask(self.n)) == 1
    }

    pub fn is_acyclic(&self) -> bool {
        self.edges.len() + self.components_of_mask(low_mask(self.n)) as usize == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_acyclic()
    }

    /// Every edge acts like a single edge (odd multiplicity).
    pub fn is_simply_laced(&self) -> bool {
        self.edges.iter().all(|e| !e.is_even())
    }

    /// True iff the diagram is a simply-laced tree with a vertex of degree at
    /// least 3 from which at least two arms reach distance 2 or more.
    pub fn contains_e6(&self) -> Result<bool> {
        if !self.is_simply_laced() {
            return Err(Error::Precondition(
                "E6 containment is only defined for simply-laced diagrams".into(),
            ));
        }
        if !self.is_tree() {
            return Err(Error::Precondition(
                "E6 containment requires a tree".into(),
            ));
        }
        // In a tree, the arm through neighbor u has length >= 2 iff u has
        // another neighbor.
        Ok((0..self.n).any(|v| {
            self.degree(v) >= 3
                && bits_of(self.adjacency[v])
                    .filter(|&u| self.degree(u) >= 2)
                    .count()
                    >= 2
        }))
    }

    /// `self` on the low indices, `other` shifted above it.
    pub fn disjoint_union(&self, other: &Diagram) -> Result<Diagram> {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            u: e.u + shift,
            v: e.v + shift,
            ..*e
        }));
        let pinned = self
            .pinned()
            .into_iter()
            .chain(other.pinned().into_iter().map(|p| p + shift));
        Diagram::new(self.n + other.n, edges, pinned)
    }

    /// Renames vertex `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Diagram> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: perm[e.u],
                v: perm[e.v],
                ..*e
            })
            .collect();
        Diagram::new(self.n, edges, self.pinned().into_iter().map(|p| perm[p]))
    }
}

pub(crate) fn bits_of(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub struct DiagramBuilder {
    n: usize,
    edges: Vec<Edge>,
    pinned: Vec<usize>,
    order: Option<Vec<usize>>,
    name: Option<String>,
}

impl DiagramBuilder {
    pub fn edge(mut self, u: usize, v: usize) -> Self {
        self.edges.push(Edge::single(u, v));
        self
    }

    /// Consecutive single edges along `vertices`.
    pub fn path(mut self, vertices: impl IntoIterator<Item = usize>) -> Self {
        let vs: Vec<usize> = vertices.into_iter().collect();
        for w in vs.windows(2) {
            self.edges.push(Edge::single(w[0], w[1]));
        }
        self
    }

    /// Double edge, arrow pointing from `long` to `short`.
    pub fn arrow(mut self, long: usize, short: usize) -> Self {
        self.edges.push(Edge::arrow(long, short));
        self
    }

    pub fn multiple(mut self, long: usize, short: usize, multiplicity: u32) -> Self {
        self.edges.push(Edge::multiple(long, short, multiplicity));
        self
    }

    pub fn pin(mut self, p: usize) -> Self {
        self.pinned.push(p);
        self
    }

    pub fn display_order(mut self, order: Vec<usize>) -> Self {
        self.order = Some(order);
        self
    }

    pub fn name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn build(self) -> Result<Diagram> {
        let mut d = Diagram::new(self.n, self.edges, self.pinned)?;
        if let Some(order) = self.order {
            d = d.with_display_order(order)?;
        }
        d.name = self.name;
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Diagram {
        Diagram::builder(n).path(0..n).build().unwrap()
    }

    #[test]
    fn triple_edge_normalizes_to_single() {
        let d = Diagram::builder(2).multiple(1, 0, 3).build().unwrap().normalize();
        assert_eq!(d.edges(), &[Edge::single(1, 0)]);
        assert_eq!(d.effective_neighbors(0).unwrap(), vec![1]);
        assert_eq!(d.effective_neighbors(1).unwrap(), vec![0]);
    }

    #[test]
    fn quadruple_edge_normalizes_to_double() {
        let d = Diagram::builder(2).multiple(0, 1, 4).build().unwrap().normalize();
        assert_eq!(d.edges(), &[Edge::arrow(0, 1)]);
    }

    #[test]
    fn single_edge_is_already_normal() {
        let d = path(2);
        assert_eq!(d.normalize(), d);
        assert!(d.is_normalized());
    }

    #[test]
    fn construction_errors_name_the_pair() {
        assert_eq!(
            Diagram::new(3, vec![Edge::single(1, 1)], []).unwrap_err(),
            Error::SelfLoop { vertex: 1 }
        );
        assert_eq!(
            Diagram::new(3, vec![Edge::single(0, 2), Edge::arrow(2, 0)], []).unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 2 }
        );
        assert!(matches!(
            Diagram::new(3, vec![Edge::single(0, 3)], []),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        let undirected_double = Edge {
            multiplicity: 2,
            ..Edge::single(0, 1)
        };
        assert!(matches!(
            Diagram::new(2, vec![undirected_double], []),
            Err(Error::UndirectedEvenEdge { .. })
        ));
    }

    #[test]
    fn longer_vertex_does_not_see_shorter() {
        let d = Diagram::builder(2).arrow(0, 1).build().unwrap();
        assert!(d.effective_neighbors(0).unwrap().is_empty());
        assert_eq!(d.effective_neighbors(1).unwrap(), vec![0]);
        assert_eq!(d.neighbors(0).unwrap(), vec![1]);
    }

    #[test]
    fn isolated_vertex_sees_nothing() {
        let d = Diagram::builder(3).edge(0, 1).build().unwrap();
        assert!(d.effective_neighbors(2).unwrap().is_empty());
        assert!(d.effective_neighbors(3).is_err());
    }

    #[test]
    fn components_of_a9_example() {
        let d = path(9);
        let a = Labeling::parse("110100111").unwrap();
        assert_eq!(d.count_components(&a).unwrap(), 3);
        assert_eq!(d.count_components(&Labeling::zeros(9)).unwrap(), 0);
        assert!(d.count_components(&Labeling::zeros(8)).is_err());
    }

    #[test]
    fn pinned_one_merges_with_neighbor() {
        // 1 - 2 - 3 - 4 - [1]
        let d = Diagram::builder(5).path(0..5).pin(4).build().unwrap();
        let a = d.labeling_from_free(0b1001);
        assert_eq!(a.to_string(), "10011");
        assert_eq!(d.count_components(&a).unwrap(), 2);
        assert_eq!(
            d.count_components(&Labeling::parse("10010").unwrap()),
            Err(Error::PinnedVertexCleared { vertex: 4 })
        );
    }

    #[test]
    fn fixed_examples_on_a5() {
        let d = path(5);
        assert!(d.is_fixed(&Labeling::parse("10101").unwrap()).unwrap());
        assert!(d.is_fixed(&Labeling::zeros(5)).unwrap());
        assert!(!d.is_fixed(&Labeling::parse("11000").unwrap()).unwrap());
    }

    #[test]
    fn fixed_labelings_are_sorted_and_fixed() {
        let d = path(5);
        let fixed = d.fixed_labelings().unwrap();
        let strings: Vec<String> = fixed.iter().map(|a| a.to_string()).collect();
        assert_eq!(strings, ["00000", "10101"]);
    }

    #[test]
    fn fixed_labelings_with_pins() {
        // [1] - 1 - [1]: the free vertex sees two 1s whatever it carries.
        let d = Diagram::builder(3).path([1, 0, 2]).pin(1).pin(2).build().unwrap();
        assert_eq!(d.fixed_labelings().unwrap().len(), 2);
        // 1 - [1]: the free vertex always flips, nothing is fixed.
        let d = Diagram::builder(2).edge(0, 1).pin(1).build().unwrap();
        assert!(d.fixed_labelings().unwrap().is_empty());
    }

    #[test]
    fn adjacency_ignores_direction() {
        let d = Diagram::builder(2).arrow(0, 1).build().unwrap();
        assert_eq!(d.adjacency_matrix(), F2Matrix::from_rows(&[[0u8, 1], [1, 0]]));
        assert_eq!(d.effective_matrix(), F2Matrix::from_rows(&[[0u8, 0], [1, 0]]));
    }

    #[test]
    fn shape_predicates() {
        let d5 = Diagram::builder(5).path(0..4).edge(2, 4).build().unwrap();
        assert!(d5.is_tree());
        assert_eq!(d5.max_degree(), 3);
        assert!(!d5.contains_e6().unwrap());
        let e6 = Diagram::builder(6).path(0..5).edge(2, 5).build().unwrap();
        assert!(e6.contains_e6().unwrap());
        let cycle = Diagram::builder(4).path([0, 1, 2, 3, 0]).build().unwrap();
        assert!(!cycle.is_acyclic());
        assert!(cycle.contains_e6().is_err());
        let b3 = Diagram::builder(3).edge(0, 1).arrow(1, 2).build().unwrap();
        assert!(b3.contains_e6().is_err());
    }

    #[test]
    fn disjoint_union_shifts_pins() {
        let a = Diagram::builder(2).edge(0, 1).pin(1).build().unwrap();
        let u = a.disjoint_union(&a).unwrap();
        assert_eq!(u.pinned(), vec![1, 3]);
        assert!(!u.is_connected());
    }

    #[test]
    fn display_order_round_trip() {
        let d = Diagram::builder(3)
            .path(0..3)
            .display_order(vec![2, 0, 1])
            .build()
            .unwrap();
        let a = d.parse_labeling("100").unwrap();
        assert_eq!(a.to_string(), "001");
        assert_eq!(d.render(&a), "100");
    }
}
