//! Single moves, move sequences and their matrices.

use std::collections::{HashMap, VecDeque};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::labeling::Labeling;

/// The move at one vertex together with its matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveOperator {
    pub vertex: usize,
    pub as_matrix: F2Matrix,
}

impl MoveOperator {
    pub fn new(d: &Diagram, vertex: usize) -> Result<Self> {
        d.check_vertex(vertex)?;
        Ok(Self {
            vertex,
            as_matrix: move_matrix(d, vertex),
        })
    }

    pub fn apply(&self, d: &Diagram, a: &Labeling) -> Result<Labeling> {
        apply_move(d, a, self.vertex)
    }
}

#[inline]
pub(crate) fn move_bits(d: &Diagram, bits: u64, i: usize) -> u64 {
    if d.is_pinned(i) {
        return bits;
    }
    let parity = (d.effective_mask(i) & bits).count_ones() as u64 & 1;
    bits ^ parity << i
}

/// Adds the labels of the effective neighbors of `i` to `a_i`. Moves at a
/// pinned vertex do nothing.
pub fn apply_move(d: &Diagram, a: &Labeling, i: usize) -> Result<Labeling> {
    d.check_vertex(i)?;
    d.check_labeling(a)?;
    Ok(Labeling::new(move_bits(d, a.bits(), i), a.len()))
}

/// Applies `moves` left to right.
pub fn apply_sequence(d: &Diagram, a: &Labeling, moves: &[usize]) -> Result<Labeling> {
    d.check_labeling(a)?;
    let mut bits = a.bits();
    for &i in moves {
        d.check_vertex(i)?;
        bits = move_bits(d, bits, i);
    }
    Ok(Labeling::new(bits, a.len()))
}

/// Identity with row `i` replaced by `e_i` plus the effective neighbors of
/// `i`, so that `move_matrix(d, i) * a == apply_move(d, a, i)`.
pub fn move_matrix(d: &Diagram, i: usize) -> F2Matrix {
    let n = d.n_vertices();
    let mut m = F2Matrix::identity(n);
    if !d.is_pinned(i) {
        for j in crate::diagram::bits_of(d.effective_mask(i)) {
            m.set(i, j, true);
        }
    }
    m
}

/// Shortest move sequence taking `a` to `b`, found by breadth-first search.
/// Gives up with a resource error after visiting `max_states` labelings.
pub fn find_move_sequence(
    d: &Diagram,
    a: &Labeling,
    b: &Labeling,
    max_states: usize,
) -> Result<Option<Vec<usize>>> {
    d.check_labeling(a)?;
    d.check_labeling(b)?;
    let (start, goal) = (a.bits(), b.bits());
    let mut parent: HashMap<u64, (u64, usize)> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    parent.insert(start, (start, usize::MAX));
    let free = d.free_vertices();
    while let Some(s) = queue.pop_front() {
        if s == goal {
            let mut path = Vec::new();
            let mut cur = s;
            while cur != start {
                let (prev, i) = parent[&cur];
                path.push(i);
                cur = prev;
            }
            path.reverse();
            return Ok(Some(path));
        }
        for &i in &free {
            let t = move_bits(d, s, i);
            if t != s && !parent.contains_key(&t) {
                if parent.len() >= max_states {
                    return Err(Error::StateSpaceTooLarge {
                        free: free.len(),
                        cap: max_states,
                        states: 1u128 << free.len(),
                    });
                }
                parent.insert(t, (s, i));
                queue.push_back(t);
            }
        }
    }
    Ok(None)
}

/// Decides equivalence by searching from `a`; bounded like
/// [`find_move_sequence`].
pub fn are_equivalent(d: &Diagram, a: &Labeling, b: &Labeling, max_states: usize) -> Result<bool> {
    Ok(find_move_sequence(d, a, b, max_states)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Diagram {
        Diagram::builder(3).path(0..3).build().unwrap()
    }

    #[test]
    fn a3_moves_on_all_ones() {
        let d = a3();
        let ones = Labeling::ones(3);
        assert_eq!(apply_move(&d, &ones, 1).unwrap(), ones);
        assert_eq!(apply_move(&d, &ones, 0).unwrap().to_string(), "011");
        assert_eq!(apply_sequence(&d, &ones, &[0, 0]).unwrap(), ones);
        assert_eq!(apply_sequence(&d, &ones, &[]).unwrap(), ones);
    }

    #[test]
    fn b_type_edge_moves() {
        let d = Diagram::builder(2).arrow(0, 1).build().unwrap();
        let a = Labeling::ones(2);
        assert_eq!(apply_move(&d, &a, 0).unwrap(), a);
        assert_eq!(apply_move(&d, &a, 1).unwrap().to_string(), "10");
    }

    #[test]
    fn pinned_vertex_never_moves() {
        let d = Diagram::builder(2).edge(0, 1).pin(1).build().unwrap();
        let a = d.labeling(0b11).unwrap();
        assert_eq!(apply_move(&d, &a, 1).unwrap(), a);
        assert_eq!(apply_move(&d, &a, 0).unwrap().bits(), 0b10);
    }

    #[test]
    fn out_of_range_vertex() {
        assert!(matches!(
            apply_move(&a3(), &Labeling::zeros(3), 3),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn a2_matrix_matches_moves() {
        let d = Diagram::builder(2).edge(0, 1).build().unwrap();
        let m = move_matrix(&d, 0);
        assert_eq!(m, F2Matrix::from_rows(&[[1u8, 1], [0, 1]]));
        for bits in 0..4 {
            let a = Labeling::new(bits, 2);
            assert_eq!(m.mul_vec(bits), apply_move(&d, &a, 0).unwrap().bits());
        }
        assert_eq!(m.mul(&m), F2Matrix::identity(2));
    }

    #[test]
    fn isolated_vertex_matrix_is_identity() {
        let d = Diagram::builder(2).build().unwrap();
        assert_eq!(move_matrix(&d, 1), F2Matrix::identity(2));
    }

    #[test]
    fn bfs_finds_short_witness() {
        let d = a3();
        let a = Labeling::parse("110").unwrap();
        let b = Labeling::parse("011").unwrap();
        let path = find_move_sequence(&d, &a, &b, 1000).unwrap().unwrap();
        assert_eq!(apply_sequence(&d, &a, &path).unwrap(), b);
        assert!(!are_equivalent(&d, &a, &Labeling::parse("101").unwrap(), 1000).unwrap());
    }
}
