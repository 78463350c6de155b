//! The lit-only sigma game and its duality with the moves.
//!
//! In the sigma game a vertex labeled 1 may flip the labels of all of its
//! neighbors. Its matrices are the transposes of the move matrices, and the
//! adjacency matrix `A` intertwines the two games: `A T_i = S_i A`. When `A`
//! is invertible over F2, `a -> A a` carries classes onto sigma orbits.

use serde::Serialize;

use crate::diagram::{bits_of, Diagram};
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::labeling::Labeling;
use crate::moves::move_matrix;
use crate::partition::{enumerate_classes_with_cap, DEFAULT_CAP};

fn require_simply_laced(d: &Diagram) -> Result<()> {
    if d.is_simply_laced() && d.pinned_mask() == 0 {
        Ok(())
    } else {
        Err(Error::Precondition(
            "the sigma game is defined on unpinned simply-laced diagrams".into(),
        ))
    }
}

/// Flips every neighbor of `i` when `a_i = 1`.
pub fn sigma_move(d: &Diagram, a: &Labeling, i: usize) -> Result<Labeling> {
    require_simply_laced(d)?;
    d.check_vertex(i)?;
    d.check_labeling(a)?;
    if a.get(i) {
        Ok(Labeling::new(a.bits() ^ d.neighbor_mask(i), a.len()))
    } else {
        Ok(*a)
    }
}

/// Identity plus the neighbors of `i` in column `i`.
pub fn sigma_matrix(d: &Diagram, i: usize) -> Result<F2Matrix> {
    require_simply_laced(d)?;
    d.check_vertex(i)?;
    let mut m = F2Matrix::identity(d.n_vertices());
    for j in bits_of(d.neighbor_mask(i)) {
        m.set(j, i, true);
    }
    Ok(m)
}

/// Checks `S_i = T_i^t` and `A T_i = S_i A` for every vertex.
pub fn duality_check(d: &Diagram) -> Result<bool> {
    require_simply_laced(d)?;
    let a = d.adjacency_matrix();
    for i in 0..d.n_vertices() {
        let t = move_matrix(d, i);
        let s = sigma_matrix(d, i)?;
        if s != t.transpose() || a.mul(&t) != s.mul(&a) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orbit id of every labeling under the sigma game, numbered by the
/// smallest member. Returns the ids and the number of orbits.
pub fn sigma_orbits(d: &Diagram, cap: usize) -> Result<(Vec<u32>, usize)> {
    require_simply_laced(d)?;
    let n = d.n_vertices();
    if n > cap || n > 31 {
        return Err(Error::StateSpaceTooLarge {
            free: n,
            cap: cap.min(31),
            states: 1u128 << n,
        });
    }
    let states = 1usize << n;
    let mut parent: Vec<u32> = (0..states as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            let p = parent[x as usize];
            parent[x as usize] = parent[p as usize];
            x = parent[x as usize];
        }
        x
    }
    let masks: Vec<u64> = (0..n).map(|i| d.neighbor_mask(i)).collect();
    for s in 0..states as u64 {
        for (i, &m) in masks.iter().enumerate() {
            if s >> i & 1 == 1 && m != 0 {
                let (a, b) = (find(&mut parent, s as u32), find(&mut parent, (s ^ m) as u32));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
    }
    let mut count = 0u32;
    for s in 0..states {
        let p = parent[s] as usize;
        parent[s] = if p == s {
            count += 1;
            count - 1
        } else {
            parent[p]
        };
    }
    Ok((parent, count as usize))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub reeder_classes: usize,
    pub sigma_orbits: usize,
    /// Determinant of the adjacency matrix over F2.
    #[serde(rename = "det_A")]
    pub det_a: u8,
    /// `None` when `det A = 0`: no correspondence is claimed then.
    pub bijection_verified: Option<bool>,
    /// `(class, orbit)` pairs, present when the bijection was checked.
    pub pairing: Vec<(usize, usize)>,
}

impl DualityReport {
    pub fn is_applicable(&self) -> bool {
        self.bijection_verified.is_some()
    }
}

/// Enumerates both games and, when `A` is invertible, checks that
/// `a -> A a` sends every class onto exactly one orbit and vice versa.
pub fn orbit_bijection_check(d: &Diagram) -> Result<DualityReport> {
    orbit_bijection_check_with_cap(d, DEFAULT_CAP)
}

pub fn orbit_bijection_check_with_cap(d: &Diagram, cap: usize) -> Result<DualityReport> {
    require_simply_laced(d)?;
    let a = d.adjacency_matrix();
    let det = a.determinant();
    let partition = enumerate_classes_with_cap(d, cap)?;
    let (orbit_ids, orbits) = sigma_orbits(d, cap)?;
    let classes = partition.class_count();
    if !det {
        return Ok(DualityReport {
            reeder_classes: classes,
            sigma_orbits: orbits,
            det_a: 0,
            bijection_verified: None,
            pairing: Vec::new(),
        });
    }
    const UNSET: u32 = u32::MAX;
    let mut orbit_of_class = vec![UNSET; classes];
    let mut class_of_orbit = vec![UNSET; orbits];
    let mut ok = classes == orbits;
    for (s, &c) in partition.class_ids().iter().enumerate() {
        let o = orbit_ids[a.mul_vec(s as u64) as usize];
        let (c, o) = (c as usize, o as usize);
        if orbit_of_class[c] == UNSET {
            orbit_of_class[c] = o as u32;
        }
        if class_of_orbit[o] == UNSET {
            class_of_orbit[o] = c as u32;
        }
        if orbit_of_class[c] as usize != o || class_of_orbit[o] as usize != c {
            ok = false;
            break;
        }
    }
    ok &= class_of_orbit.iter().all(|&c| c != UNSET);
    let pairing = orbit_of_class
        .iter()
        .enumerate()
        .map(|(c, &o)| (c, o as usize))
        .collect();
    Ok(DualityReport {
        reeder_classes: classes,
        sigma_orbits: orbits,
        det_a: 1,
        bijection_verified: Some(ok),
        pairing: if ok { pairing } else { Vec::new() },
    })
}
