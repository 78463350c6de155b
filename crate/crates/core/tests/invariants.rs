//! Property tests over randomly generated diagrams and labelings.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use reeder_core::corpus::{random_graph, random_multigraph, random_tree};
use reeder_core::families::{construct, Family, FamilySpec};
use reeder_core::sigma::{sigma_matrix, sigma_move};
use reeder_core::{apply_move, count_classes, enumerate_classes, move_matrix, Diagram, Labeling, DEFAULT_CAP};

fn diagram(kind: u8, n: usize, seed: u64) -> Diagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind % 3 {
        0 => random_tree(n, &mut rng),
        1 => random_graph(n, n / 2, &mut rng),
        _ => random_multigraph(n, &mut rng),
    }
}

fn labeling(d: &Diagram, bits: u64) -> Labeling {
    Labeling::new(bits | d.pinned_mask(), d.n_vertices())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn moves_are_local_involutions(kind in 0u8..3, n in 1usize..13, seed: u64, bits: u64) {
        let d = diagram(kind, n, seed);
        let a = labeling(&d, bits);
        for i in 0..n {
            let b = apply_move(&d, &a, i).unwrap();
            prop_assert_eq!((a.bits() ^ b.bits()) & !(1 << i), 0);
            prop_assert_eq!(apply_move(&d, &b, i).unwrap(), a);
            prop_assert_eq!(move_matrix(&d, i).mul_vec(a.bits()), b.bits());
        }
    }

    #[test]
    fn fixed_means_no_move_changes(kind in 0u8..3, n in 1usize..13, seed: u64, bits: u64) {
        let d = diagram(kind, n, seed);
        let a = labeling(&d, bits);
        let by_moves = (0..n).all(|i| apply_move(&d, &a, i).unwrap() == a);
        prop_assert_eq!(d.is_fixed(&a).unwrap(), by_moves);
    }

    #[test]
    fn fixed_labelings_are_exactly_the_fixed_ones(kind in 0u8..3, n in 1usize..11, seed: u64) {
        let d = diagram(kind, n, seed);
        let listed: Vec<u64> = d.fixed_labelings().unwrap().iter().map(|a| a.bits()).collect();
        let brute: Vec<u64> = (0..1u64 << n)
            .filter(|&s| s & d.pinned_mask() == d.pinned_mask())
            .filter(|&s| d.is_fixed(&Labeling::new(s, n)).unwrap())
            .collect();
        prop_assert_eq!(&listed, &brute);
        if d.pinned_mask() == 0 {
            let system = if d.is_simply_laced() { d.adjacency_matrix() } else { d.effective_matrix() };
            prop_assert_eq!(listed.len(), 1 << system.nullity());
        }
    }

    #[test]
    fn components_survive_relabeling(kind in 0u8..3, n in 1usize..13, seed: u64, bits: u64) {
        let d = diagram(kind, n, seed);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
        let e = d.relabel(&perm).unwrap();
        let a = labeling(&d, bits);
        let moved = Labeling::from_ones(n, (0..n).filter(|&i| a.get(i)).map(|i| perm[i]));
        prop_assert_eq!(d.count_components(&a).unwrap(), e.count_components(&moved).unwrap());
        prop_assert_eq!(
            count_classes(&d, DEFAULT_CAP).unwrap(),
            count_classes(&e, DEFAULT_CAP).unwrap()
        );
    }

    #[test]
    fn flower_petal_symmetry(d in 2u32..9, bits: u64, seed: u64) {
        let f = construct(&FamilySpec::new(Family::Flower, d)).unwrap();
        let n = f.n_vertices();
        let mut petals: Vec<usize> = (1..n).collect();
        petals.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let perm: Vec<usize> = std::iter::once(0).chain(petals).collect();
        let g = f.relabel(&perm).unwrap();
        prop_assert!((0..n).all(|i| g.neighbor_mask(i) == f.neighbor_mask(i)));
        let a = Labeling::new(bits, n);
        let moved = Labeling::from_ones(n, (0..n).filter(|&i| a.get(i)).map(|i| perm[i]));
        prop_assert_eq!(f.count_components(&a).unwrap(), f.count_components(&moved).unwrap());
    }

    #[test]
    fn partition_sanity(kind in 0u8..3, n in 1usize..12, seed: u64) {
        let d = diagram(kind, n, seed);
        let p = enumerate_classes(&d).unwrap();
        let total: u64 = p.summaries().iter().map(|s| s.size).sum();
        prop_assert_eq!(total, 1u64 << d.free_count());
        let mut min_weight = vec![u32::MAX; p.class_count()];
        for s in 0..1u64 << d.free_count() {
            let a = d.labeling_from_free(s);
            let c = p.class_of(&a).unwrap();
            min_weight[c] = min_weight[c].min(a.weight());
        }
        for (c, s) in p.summaries().iter().enumerate() {
            prop_assert_eq!(s.singleton_fixed, d.is_fixed(&s.representative).unwrap());
            prop_assert_eq!(s.singleton_fixed, s.size == 1);
            prop_assert_eq!(s.representative.weight(), min_weight[c]);
            prop_assert_eq!(p.class_of(&s.representative).unwrap(), c);
        }
    }

    #[test]
    fn product_law(k1 in 0u8..3, n1 in 1usize..8, s1: u64, k2 in 0u8..3, n2 in 1usize..8, s2: u64) {
        let a = diagram(k1, n1, s1);
        let b = diagram(k2, n2, s2);
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(
            count_classes(&u, DEFAULT_CAP).unwrap(),
            count_classes(&a, DEFAULT_CAP).unwrap() * count_classes(&b, DEFAULT_CAP).unwrap()
        );
    }

    #[test]
    fn sigma_moves_cancel_and_transpose(kind in 0u8..2, n in 1usize..13, seed: u64, bits: u64) {
        let d = diagram(kind, n, seed);
        let a = Labeling::new(bits, n);
        for i in 0..n {
            let b = sigma_move(&d, &a, i).unwrap();
            prop_assert_eq!(sigma_move(&d, &b, i).unwrap(), a);
            let s = sigma_matrix(&d, i).unwrap();
            prop_assert_eq!(s.mul_vec(a.bits()), b.bits());
            prop_assert_eq!(s, move_matrix(&d, i).transpose());
        }
    }
}
