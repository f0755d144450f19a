//! Galois-invariant data attached to a tree: rotation group order and
//! primitivity, quotient trees (reductions), and k-th power structure.
//!
//! With the face permutation standardized to the n-cycle `e -> e + 1`, any
//! partition of the edges preserved by the rotation group is a system of
//! residue classes mod a divisor n' of n, and it is preserved as soon as the
//! white rotation descends to residues. The quotient pair on residues is
//! again a tree (the intermediate cover is rational), so reducibility is
//! exactly imprimitivity of the rotation group, checked two independent ways.

use crate::enumerate::{enumerate_trees, BoundExceeded, MAX_EDGES};
use crate::group::PermGroup;
use crate::tree::{Passport, PlaneTree};
use alloc::vec::Vec;
use num_bigint::BigUint;

/// Everything invariant under the Galois action that this crate computes for
/// a single tree. Relabeling-invariant; not color-swap-invariant (the
/// passport and power entries keep their orientation).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantVector {
    pub edges: usize,
    pub passport: Passport,
    /// Order of the (cyclic) automorphism group of the embedded tree.
    pub automorphisms: usize,
    /// Order of the group generated by the white and black rotations.
    pub rotation_order: BigUint,
    /// Primitivity of that group on edges.
    pub primitive: bool,
    /// Proper quotients: `(n', passport of the quotient tree)` for each
    /// divisor n' of n with 1 < n' < n admitting a quotient, ascending in n'.
    pub reductions: Vec<(usize, Passport)>,
    /// K-th power structure: `(k, passport of the base)` for every k >= 2
    /// with k | n and a base tree whose k-th lift is this tree, including the
    /// degenerate single-edge base when the tree is the n-star. Ascending in
    /// k, then by base canonical key.
    pub powers: Vec<(usize, Passport)>,
}

/// All quotient trees: for each divisor n' of n with n' < n (including the
/// trivial n' = 1), the quotient by residue classes mod n' when the white
/// rotation descends. Pairs `(n', canonical representative)`, ascending n'.
pub fn reductions(tree: &PlaneTree) -> Vec<(usize, PlaneTree)> {
    let n = tree.edges();
    let standardized = tree.face_standardized();
    let white = standardized.white_rot();
    let black = standardized.black_rot();
    let mut out = Vec::new();
    for quotient_edges in (1..n).filter(|d| n % d == 0) {
        let descends = (0..n).all(|e| {
            white.apply(e) % quotient_edges == white.apply((e + quotient_edges) % n) % quotient_edges
        });
        if !descends {
            continue;
        }
        let white_q: Vec<usize> = (0..quotient_edges).map(|r| white.apply(r) % quotient_edges).collect();
        let black_q: Vec<usize> = (0..quotient_edges).map(|r| black.apply(r) % quotient_edges).collect();
        match PlaneTree::from_images(white_q, black_q) {
            Ok(quotient) => out.push((quotient_edges, quotient.canonical_rep())),
            // The quotient of a genus-zero pair along face-cycle residues is
            // genus zero; reaching this arm would be a bug.
            Err(e) => unreachable!("quotient must be a tree: {e}"),
        }
    }
    out
}

/// The k-th lift of a base tree: every edge is split into k, the white
/// valencies multiply by k, and each black vertex keeps its valency while
/// k-1 new black leaves appear per base edge. Edge `(e, j)` of the lift is
/// labeled `e * k + j`.
pub fn power_lift(base: &PlaneTree, k: usize) -> PlaneTree {
    assert!(k >= 1, "lift exponent must be positive");
    let m = base.edges();
    let n = m * k;
    assert!(n <= 255, "lift exceeds the canonical key bound");
    let mut white = alloc::vec![0usize; n];
    let mut black = alloc::vec![0usize; n];
    for e in 0..m {
        for j in 0..k {
            let idx = e * k + j;
            white[idx] = if j + 1 < k { idx + 1 } else { base.white_rot().apply(e) * k };
            black[idx] = if j == 0 { base.black_rot().apply(e) * k } else { idx };
        }
    }
    PlaneTree::from_images(white, black).expect("the lift of a tree is a tree")
}

/// Every way to express the tree as a k-th lift: pairs `(k, base)` with
/// k >= 2, k | n, and `power_lift(&base, k)` isotopic to the tree. Bases are
/// canonical representatives; ascending in k, then by canonical key.
pub fn power_bases(tree: &PlaneTree) -> Result<Vec<(usize, PlaneTree)>, BoundExceeded> {
    let n = tree.edges();
    if !(1..=MAX_EDGES).contains(&n) {
        return Err(BoundExceeded { edges: n });
    }
    let key = tree.canonical_form();
    let mut out = Vec::new();
    for k in 2..=n {
        if n % k != 0 {
            continue;
        }
        for base in enumerate_trees(n / k)? {
            if power_lift(&base, k).canonical_form() == key {
                out.push((k, base));
            }
        }
    }
    Ok(out)
}

/// Computes the full invariant vector; the power search bounds the edge
/// count by `MAX_EDGES`.
pub fn invariant_vector(tree: &PlaneTree) -> Result<InvariantVector, BoundExceeded> {
    let n = tree.edges();
    if !(1..=MAX_EDGES).contains(&n) {
        return Err(BoundExceeded { edges: n });
    }
    let group = PermGroup::new(n, &[tree.white_rot().clone(), tree.black_rot().clone()]);
    let rotation_order = group.order();
    let primitive = group.is_primitive().expect("tree rotation groups are transitive");
    let proper_reductions: Vec<(usize, Passport)> = reductions(tree)
        .into_iter()
        .filter(|(d, _)| *d > 1)
        .map(|(d, quotient)| (d, quotient.passport()))
        .collect();
    let powers: Vec<(usize, Passport)> = power_bases(tree)?
        .into_iter()
        .map(|(k, base)| (k, base.passport()))
        .collect();
    Ok(InvariantVector {
        edges: n,
        passport: tree.passport(),
        automorphisms: tree.automorphism_order(),
        rotation_order,
        primitive,
        reductions: proper_reductions,
        powers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use alloc::vec;
    use alloc::vec::Vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn star(n: usize) -> PlaneTree {
        PlaneTree::new(Perm::standard_cycle(n), Perm::identity(n)).unwrap()
    }

    fn chain2() -> PlaneTree {
        // Two edges around one black vertex: passport 1,1|2.
        PlaneTree::new(Perm::identity(2), Perm::standard_cycle(2)).unwrap()
    }

    fn passport(s: &str) -> Passport {
        s.parse().unwrap()
    }

    fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Perm {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            images.swap(i, rng.gen_range(0..=i));
        }
        Perm::from_images(images).unwrap()
    }

    #[test]
    fn star_reduces_to_smaller_stars() {
        let reds = reductions(&star(10));
        let data: Vec<(usize, Passport)> =
            reds.into_iter().map(|(d, q)| (d, q.passport())).collect();
        assert_eq!(
            data,
            vec![
                (1, passport("1|1")),
                (2, passport("2|1,1")),
                (5, passport("5|1,1,1,1,1")),
            ]
        );
    }

    #[test]
    fn star_power_structure() {
        let bases = power_bases(&star(10)).unwrap();
        let data: Vec<(usize, Passport)> =
            bases.into_iter().map(|(k, b)| (k, b.passport())).collect();
        assert_eq!(
            data,
            vec![
                (2, passport("5|1,1,1,1,1")),
                (5, passport("2|1,1")),
                (10, passport("1|1")),
            ]
        );
    }

    #[test]
    fn lift_shapes_match_expected_passports() {
        let five_lift = power_lift(&chain2(), 5);
        assert_eq!(five_lift.passport(), passport("5,5|2,1,1,1,1,1,1,1,1"));
        let found = power_bases(&five_lift).unwrap();
        assert!(found
            .iter()
            .any(|(k, b)| *k == 5 && b.canonical_form() == chain2().canonical_form()));

        // The 5-edge path, white leaf first.
        let five_chain =
            PlaneTree::from_images(vec![0, 2, 1, 4, 3], vec![1, 0, 3, 2, 4]).unwrap();
        assert_eq!(five_chain.passport(), passport("2,2,1|2,2,1"));
        let double = power_lift(&five_chain, 2);
        assert_eq!(double.passport(), passport("4,4,2|2,2,1,1,1,1,1,1"));
    }

    #[test]
    fn lifts_reduce_to_stars_and_recover_bases() {
        for base in enumerate_trees(3).unwrap() {
            for k in [2usize, 3] {
                let lift = power_lift(&base, k);
                assert_eq!(lift.edges(), 3 * k);
                // White valencies multiply by k; black gains (k-1)*m leaves.
                let scaled: Vec<usize> =
                    base.passport().white().iter().map(|v| v * k).collect();
                let mut extended = base.passport().black().to_vec();
                extended.extend(core::iter::repeat(1).take((k - 1) * 3));
                assert_eq!(lift.passport(), Passport::new(scaled, extended).unwrap());
                // A k-th lift always reduces to the k-star.
                assert!(reductions(&lift)
                    .iter()
                    .any(|(d, q)| *d == k && q.passport() == star(k).passport()));
                // And the base is recovered.
                assert!(power_bases(&lift)
                    .unwrap()
                    .iter()
                    .any(|(kk, b)| *kk == k && b.canonical_form() == base.canonical_form()));
            }
        }
    }

    #[test]
    fn reducibility_is_imprimitivity() {
        // Two independent computations of the same notion: residues-mod-n'
        // quotients exist exactly when the rotation group is imprimitive.
        for n in 2..=7 {
            for tree in enumerate_trees(n).unwrap() {
                let group = PermGroup::new(
                    n,
                    &[tree.white_rot().clone(), tree.black_rot().clone()],
                );
                assert!(group.is_transitive());
                let proper = reductions(&tree).into_iter().filter(|(d, _)| *d > 1).count();
                let primitive = group.is_primitive().unwrap();
                assert_eq!(
                    primitive,
                    proper == 0,
                    "n = {n}, passport {}",
                    tree.passport()
                );
            }
        }
    }

    #[test]
    fn four_edge_example_vector() {
        let tree = PlaneTree::new(
            Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap(),
            Perm::from_cycles(4, &[&[2, 3]]).unwrap(),
        )
        .unwrap();
        let vector = invariant_vector(&tree).unwrap();
        assert_eq!(vector.edges, 4);
        assert_eq!(vector.automorphisms, 1);
        assert_eq!(vector.rotation_order, BigUint::from(24u32));
        assert!(vector.primitive);
        assert!(vector.reductions.is_empty());
        assert!(vector.powers.is_empty());
    }

    #[test]
    fn six_edge_symmetric_tree_has_three_edge_quotient() {
        let trees = enumerate_trees(6).unwrap();
        let symmetric: Vec<&PlaneTree> = trees
            .iter()
            .filter(|t| {
                t.passport() == passport("4,1,1|2,2,1,1") && t.automorphism_order() == 2
            })
            .collect();
        assert_eq!(symmetric.len(), 1);
        let reds = reductions(symmetric[0]);
        assert!(reds.iter().any(|(d, q)| *d == 3 && q.passport() == passport("2,1|2,1")));
    }

    #[test]
    fn vector_is_relabeling_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1eaf);
        for tree in enumerate_trees(5).unwrap() {
            let reference = invariant_vector(&tree).unwrap();
            for _ in 0..5 {
                let pi = random_perm(5, &mut rng);
                assert_eq!(invariant_vector(&tree.relabeled(&pi)).unwrap(), reference);
            }
        }
    }

    #[test]
    fn out_of_range_trees_are_rejected() {
        let big = power_lift(&star(7), 2); // 14 edges
        assert_eq!(power_bases(&big), Err(BoundExceeded { edges: 14 }));
        assert!(invariant_vector(&big).is_err());
    }
}
