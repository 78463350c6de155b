//! Exhaustive enumeration of equivalence classes.
//!
//! States are the labelings of the free (non-pinned) vertices, packed into
//! integers. A union-find with path halving links every state to its
//! neighbors under single moves; roots always link to the smaller root, so
//! every parent pointer points downwards and a single ascending pass turns
//! the forest into dense class ids.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::labeling::Labeling;

/// Default limit on the number of free vertices enumerated.
pub const DEFAULT_CAP: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSummary {
    pub size: u64,
    /// Fewest 1s, ties broken by smallest integer value.
    pub representative: Labeling,
    /// Number of members per component count.
    pub component_counts: BTreeMap<usize, u64>,
    pub singleton_fixed: bool,
}

#[derive(Debug, Clone)]
pub struct ClassPartition {
    diagram: Diagram,
    class_of_state: Vec<u32>,
    summaries: Vec<ClassSummary>,
}

/// Per free vertex: effective mask restricted to free vertices (compressed)
/// and the parity contributed by pinned neighbors.
fn move_tables(d: &Diagram) -> Vec<(u64, u32)> {
    d.free_vertices()
        .iter()
        .map(|&i| {
            let m = d.effective_mask(i);
            (
                d.compress_free(m & !d.pinned_mask()),
                (m & d.pinned_mask()).count_ones() & 1,
            )
        })
        .collect()
}

fn check_cap(d: &Diagram, cap: usize) -> Result<usize> {
    let f = d.free_count();
    // u32 class ids also bound the state space.
    if f > cap || f > 31 {
        return Err(Error::StateSpaceTooLarge {
            free: f,
            cap: cap.min(31),
            states: 1u128 << f,
        });
    }
    Ok(f)
}

/// Union-find over all free states; the returned array maps each state to
/// its root, which is the smallest state of its class.
fn union_states(d: &Diagram, f: usize) -> Vec<u32> {
    let tables = move_tables(d);
    let states = 1usize << f;
    let mut parent: Vec<u32> = (0..states as u32).collect();
    let find = |parent: &mut Vec<u32>, mut x: u32| -> u32 {
        while parent[x as usize] != x {
            let p = parent[x as usize];
            parent[x as usize] = parent[p as usize];
            x = parent[x as usize];
        }
        x
    };
    for s in 0..states as u64 {
        for (k, &(cmask, pin_parity)) in tables.iter().enumerate() {
            if s >> k & 1 == 1 {
                continue;
            }
            if ((s & cmask).count_ones() + pin_parity) & 1 == 1 {
                let a = find(&mut parent, s as u32);
                let b = find(&mut parent, (s | 1 << k) as u32);
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi as usize] = lo;
                }
            }
        }
    }
    // Parent pointers point downwards, so one ascending pass flattens.
    for s in 0..states {
        let p = parent[s] as usize;
        parent[s] = parent[p];
    }
    parent
}

/// Number of classes without building summaries.
pub fn count_classes(d: &Diagram, cap: usize) -> Result<usize> {
    let f = check_cap(d, cap)?;
    let roots = union_states(d, f);
    Ok(roots
        .iter()
        .enumerate()
        .filter(|&(s, &r)| s as u32 == r)
        .count())
}

/// Enumerates with the default cap.
pub fn enumerate_classes(d: &Diagram) -> Result<ClassPartition> {
    enumerate_classes_with_cap(d, DEFAULT_CAP)
}

pub fn enumerate_classes_with_cap(d: &Diagram, cap: usize) -> Result<ClassPartition> {
    let f = check_cap(d, cap)?;
    let mut ids = union_states(d, f);
    let states = ids.len();

    // Roots become provisional ids in ascending order.
    let mut count = 0u32;
    for s in 0..states {
        let r = ids[s] as usize;
        ids[s] = if r == s {
            count += 1;
            count - 1
        } else {
            ids[r]
        };
    }

    struct Acc {
        size: u64,
        best: u64,
        hist: BTreeMap<usize, u64>,
    }
    let mut accs: Vec<Acc> = (0..count)
        .map(|_| Acc {
            size: 0,
            best: u64::MAX,
            hist: BTreeMap::new(),
        })
        .collect();
    let key = |s: u64| (s.count_ones(), s);
    for s in 0..states as u64 {
        let acc = &mut accs[ids[s as usize] as usize];
        acc.size += 1;
        if acc.best == u64::MAX || key(s) < key(acc.best) {
            acc.best = s;
        }
        let full = d.expand_free(s);
        *acc.hist
            .entry(d.components_of_mask(full) as usize)
            .or_insert(0) += 1;
    }

    // Final order: by the representative's integer value. Expanding free
    // bits preserves order, so comparing compressed states suffices.
    let mut order: Vec<usize> = (0..accs.len()).collect();
    order.sort_by_key(|&c| accs[c].best);
    let mut rank = vec![0u32; accs.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new as u32;
    }
    for id in ids.iter_mut() {
        *id = rank[*id as usize];
    }
    let n = d.n_vertices();
    let mut slots: Vec<Option<Acc>> = accs.into_iter().map(Some).collect();
    let summaries = order
        .iter()
        .map(|&old| {
            let acc = slots[old].take().expect("each class visited once");
            let full = d.expand_free(acc.best);
            ClassSummary {
                size: acc.size,
                representative: Labeling::new(full, n),
                component_counts: acc.hist,
                singleton_fixed: acc.size == 1 && d.is_fixed_bits(full),
            }
        })
        .collect();
    Ok(ClassPartition {
        diagram: d.clone(),
        class_of_state: ids,
        summaries,
    })
}

#[derive(Serialize)]
struct ClassRecord {
    index: usize,
    size: u64,
    representative: String,
    weight: u32,
    component_counts: BTreeMap<usize, u64>,
    singleton_fixed: bool,
}

#[derive(Serialize)]
struct PartitionRecord<'a> {
    diagram: Option<&'a str>,
    vertices: usize,
    pinned: Vec<usize>,
    class_count: usize,
    classes: Vec<ClassRecord>,
}

impl ClassPartition {
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn class_count(&self) -> usize {
        self.summaries.len()
    }

    pub fn summaries(&self) -> &[ClassSummary] {
        &self.summaries
    }

    /// Total number of labelings, `2^free`.
    pub fn state_count(&self) -> usize {
        self.class_of_state.len()
    }

    pub fn class_of(&self, a: &Labeling) -> Result<usize> {
        self.diagram.check_labeling(a)?;
        let s = self.diagram.compress_free(a.bits());
        Ok(self.class_of_state[s as usize] as usize)
    }

    pub fn are_equivalent(&self, a: &Labeling, b: &Labeling) -> Result<bool> {
        Ok(self.class_of(a)? == self.class_of(b)?)
    }

    pub fn summary(&self, index: usize) -> Result<&ClassSummary> {
        self.summaries.get(index).ok_or(Error::UnknownClass {
            index,
            count: self.summaries.len(),
        })
    }

    pub fn minimal_representative(&self, index: usize) -> Result<Labeling> {
        Ok(self.summary(index)?.representative)
    }

    /// Members of a class in increasing integer order.
    pub fn members(&self, index: usize) -> Result<Vec<Labeling>> {
        self.summary(index)?;
        let n = self.diagram.n_vertices();
        Ok(self
            .class_of_state
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c as usize == index)
            .map(|(s, _)| Labeling::new(self.diagram.expand_free(s as u64), n))
            .collect())
    }

    /// Members of every class, in one pass over the states.
    pub fn all_members(&self) -> Vec<Vec<Labeling>> {
        let n = self.diagram.n_vertices();
        let mut out: Vec<Vec<Labeling>> = self
            .summaries
            .iter()
            .map(|s| Vec::with_capacity(s.size as usize))
            .collect();
        for (s, &c) in self.class_of_state.iter().enumerate() {
            out[c as usize].push(Labeling::new(self.diagram.expand_free(s as u64), n));
        }
        out
    }

    /// Class index for every state, indexed by the packed free labels.
    pub fn class_ids(&self) -> &[u32] {
        &self.class_of_state
    }

    fn records(&self) -> Vec<ClassRecord> {
        self.summaries
            .iter()
            .enumerate()
            .map(|(index, s)| ClassRecord {
                index,
                size: s.size,
                representative: self.diagram.render(&s.representative),
                weight: s.representative.weight(),
                component_counts: s.component_counts.clone(),
                singleton_fixed: s.singleton_fixed,
            })
            .collect()
    }

    /// JSON export; labelings are written in the diagram's display order.
    pub fn to_json(&self) -> serde_json::Value {
        let record = PartitionRecord {
            diagram: self.diagram.name(),
            vertices: self.diagram.n_vertices(),
            pinned: self.diagram.pinned(),
            class_count: self.class_count(),
            classes: self.records(),
        };
        serde_json::to_value(record).expect("partition records serialize")
    }

    /// CSV export, one row per class. Component counts are written as
    /// `count:members` pairs separated by `;`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "index",
            "size",
            "representative",
            "weight",
            "component_counts",
            "singleton_fixed",
        ])
        .expect("in-memory write");
        for r in self.records() {
            let hist = r
                .component_counts
                .iter()
                .map(|(k, v)| format!("{k}:{v}"))
                .collect::<Vec<_>>()
                .join(";");
            w.write_record([
                r.index.to_string(),
                r.size.to_string(),
                r.representative,
                r.weight.to_string(),
                hist,
                r.singleton_fixed.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }
}
