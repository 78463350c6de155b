//! Class predictions from invariants, without enumerating the state space.

use log::warn;
use num_integer::binomial;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::families::{construct, Family, FamilySpec};
use crate::labeling::Labeling;
use crate::moves::apply_sequence;
use crate::partition::{enumerate_classes, ClassPartition};

/// Class of a labeling as predicted by a classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKey {
    /// A fixed labeling, alone in its class.
    Fixed(Labeling),
    /// Non-fixed labelings with an odd number of components.
    Odd,
    /// Non-fixed labelings with an even number of components.
    Even,
    /// Class index from a full enumeration.
    Enumerated(usize),
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.into()))
    }
}

fn is_path(d: &Diagram) -> bool {
    d.is_tree() && d.is_simply_laced() && d.max_degree() <= 2 && d.pinned_mask() == 0
}

/// On a path, two labelings are equivalent exactly when they have the same
/// number of components; the key is that number.
pub fn classify_by_components(d: &Diagram, a: &Labeling) -> Result<usize> {
    require(is_path(d), "component classification needs an unpinned path")?;
    d.count_components(a)
}

/// Number of components mod 2, invariant under moves on simply-laced trees.
pub fn parity(d: &Diagram, a: &Labeling) -> Result<u8> {
    require(
        d.is_simply_laced() && d.is_tree(),
        "parity is only invariant on simply-laced trees",
    )?;
    Ok((d.count_components(a)? % 2) as u8)
}

/// Predicted partition of a tree containing E6.
#[derive(Debug, Clone)]
pub struct E6TreePrediction {
    pub nullity: usize,
    pub fixed: Vec<Labeling>,
    pub class_count: usize,
    /// Set when the guard could not confirm both parity classes and the
    /// partition was enumerated instead.
    pub fallback: Option<ClassPartition>,
    diagram: Diagram,
}

impl E6TreePrediction {
    pub fn key(&self, a: &Labeling) -> Result<ClassKey> {
        if let Some(p) = &self.fallback {
            return Ok(ClassKey::Enumerated(p.class_of(a)?));
        }
        if self.diagram.is_fixed(a)? {
            return Ok(ClassKey::Fixed(*a));
        }
        Ok(if self.diagram.count_components(a)? % 2 == 1 {
            ClassKey::Odd
        } else {
            ClassKey::Even
        })
    }
}

/// Fixed labelings are singletons; every other labeling lies in the odd or
/// the even class according to its number of components.
pub fn e6_tree_classify(d: &Diagram) -> Result<E6TreePrediction> {
    require(d.pinned_mask() == 0, "E6 tree classification needs an unpinned tree")?;
    require(d.contains_e6()?, "tree does not contain E6")?;
    let nullity = d.adjacency_matrix().nullity();
    let fixed = d.fixed_labelings()?;
    let n = d.n_vertices();
    let non_fixed = |bits: u64| !d.is_fixed_bits(bits);
    let odd = (0..n).any(|i| non_fixed(1 << i));
    let even = (0..n).any(|i| {
        (i + 1..n).any(|j| d.neighbor_mask(i) >> j & 1 == 0 && non_fixed(1 << i | 1 << j))
    });
    if odd && even {
        return Ok(E6TreePrediction {
            nullity,
            class_count: fixed.len() + 2,
            fixed,
            fallback: None,
            diagram: d.clone(),
        });
    }
    warn!("parity classes not confirmed on {n}-vertex tree, enumerating instead");
    let p = enumerate_classes(d)?;
    Ok(E6TreePrediction {
        nullity,
        class_count: p.class_count(),
        fixed,
        fallback: Some(p),
        diagram: d.clone(),
    })
}

/// Predicted partition of the flower with `d` petals.
#[derive(Debug, Clone)]
pub struct FlowerPrediction {
    pub petals: u32,
    pub class_count: u64,
    diagram: Diagram,
}

impl FlowerPrediction {
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    /// Unlit center with an even number of lit petals is fixed; everything
    /// else has an odd number of components and lies in one class.
    pub fn key(&self, a: &Labeling) -> Result<ClassKey> {
        self.diagram.check_labeling(a)?;
        if !a.get(0) && a.weight().is_multiple_of(2) {
            Ok(ClassKey::Fixed(*a))
        } else {
            Ok(ClassKey::Odd)
        }
    }
}

pub fn flower_classify(d: u32) -> Result<FlowerPrediction> {
    let diagram = construct(&FamilySpec::new(Family::Flower, d))?;
    let d64 = u64::from(d);
    // Zero, the non-zero even petal sets, and the odd class.
    let even_sets: u64 = (1..=d64 / 2).map(|m| binomial(d64, 2 * m)).sum();
    Ok(FlowerPrediction {
        petals: d,
        class_count: 1 + even_sets + 1,
        diagram,
    })
}

fn is_b_type(d: &Diagram) -> bool {
    let n = d.n_vertices();
    if n < 2 || d.pinned_mask() != 0 {
        return false;
    }
    let Ok(b) = construct(&FamilySpec::new(Family::B, n as u32)) else {
        return false;
    };
    let canon = |d: &Diagram| {
        let mut v: Vec<(usize, usize, bool)> = d
            .normalize()
            .edges()
            .iter()
            .map(|e| match e.directed {
                true => (e.u, e.v, true),
                false => (e.u.min(e.v), e.u.max(e.v), false),
            })
            .collect();
        v.sort_unstable();
        v
    };
    canon(d) == canon(&b)
}

/// Move sequence taking `tail => 0` to `tail => 1` on a B diagram, where
/// `tail` labels the long vertices. The component ending at the rightmost 1
/// is stretched up to the short vertex, the short vertex flips, and the
/// component shrinks back. Returns `None` when the tail is zero, in which
/// case the two labelings are in different classes.
pub fn swallowing_check(d: &Diagram, tail: &Labeling) -> Result<Option<Vec<usize>>> {
    require(is_b_type(d), "swallowing needs a B diagram")?;
    let n = d.n_vertices();
    if tail.len() != n - 1 {
        return Err(Error::LengthMismatch {
            expected: n - 1,
            found: tail.len(),
        });
    }
    if tail.is_zero() {
        return Ok(None);
    }
    let j = 63 - tail.bits().leading_zeros() as usize;
    let short = n - 1;
    let mut witness: Vec<usize> = (j + 1..short).collect();
    witness.push(short);
    witness.extend((j + 1..short).rev());
    let start = Labeling::new(tail.bits(), n);
    let end = Labeling::new(tail.bits() | 1 << short, n);
    if apply_sequence(d, &start, &witness)? != end {
        return Err(Error::Precondition("swallowing script failed".into()));
    }
    Ok(Some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{eta, xi};
    use crate::moves::find_move_sequence;

    fn fam(s: &str) -> Diagram {
        construct(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn component_keys_on_a7() {
        let d = fam("A:7");
        let key = |a: &Labeling| classify_by_components(&d, a).unwrap();
        assert_eq!(key(&Labeling::parse("1101000").unwrap()), 2);
        assert_eq!(key(&xi(2, 7).unwrap()), key(&eta(2, 7).unwrap()));
        assert_eq!(key(&Labeling::zeros(7)), 0);
        assert!(classify_by_components(&fam("D:5"), &Labeling::zeros(5)).is_err());
    }

    #[test]
    fn parity_examples() {
        let e8 = fam("affE8");
        assert_eq!(parity(&e8, &Labeling::zeros(9)).unwrap(), 0);
        assert_eq!(parity(&e8, &Labeling::from_ones(9, [3])).unwrap(), 1);
        let l_l = e8.parse_labeling("101010001").unwrap();
        assert_eq!(e8.count_components(&l_l).unwrap(), 4);
        assert_eq!(parity(&e8, &l_l).unwrap(), 0);
        assert!(parity(&fam("affA:4"), &Labeling::zeros(5)).is_err());
    }

    #[test]
    fn e6_tree_counts() {
        for (s, fixed) in [("affE6", 2), ("affE7", 4), ("E6", 1)] {
            let p = e6_tree_classify(&fam(s)).unwrap();
            assert_eq!(p.fixed.len(), fixed, "{s}");
            assert_eq!(p.class_count, fixed + 2, "{s}");
            assert_eq!(p.fixed.len(), 1 << p.nullity);
            assert!(p.fallback.is_none());
        }
        assert!(e6_tree_classify(&fam("D:6")).is_err());
    }

    #[test]
    fn flower_counts() {
        assert_eq!(flower_classify(4).unwrap().class_count, 9);
        assert_eq!(flower_classify(1).unwrap().class_count, 2);
        for d in 1..30 {
            assert_eq!(flower_classify(d).unwrap().class_count, (1 << (d - 1)) + 1);
        }
    }

    #[test]
    fn swallowing_b5() {
        let b5 = fam("B:5");
        let tail = Labeling::parse("1000").unwrap();
        let w = swallowing_check(&b5, &tail).unwrap().unwrap();
        let start = Labeling::new(tail.bits(), 5);
        let end = Labeling::new(tail.bits() | 1 << 4, 5);
        let shortest = find_move_sequence(&b5, &start, &end, 1 << 10).unwrap().unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(shortest.len(), w.len());
        assert_eq!(swallowing_check(&b5, &Labeling::zeros(4)).unwrap(), None);
        let tail = Labeling::parse("0101").unwrap();
        let w = swallowing_check(&b5, &tail).unwrap().unwrap();
        assert_eq!(w, vec![4]);
        assert!(swallowing_check(&fam("C:5"), &tail).is_err());
    }
}
