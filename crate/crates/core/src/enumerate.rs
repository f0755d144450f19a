//! Enumeration of plane bicolored trees up to isotopy, grouping into type
//! buckets, and exact weighted counts.
//!
//! Fixing the face permutation to the standard n-cycle pins the edge labeling
//! of a tree up to the n rotations of its face walk, so every isotopy class T
//! appears exactly `n / aut(T)` times among the image arrays the backtracking
//! emits; canonical keys collapse those to a single representative.

use crate::perm::Perm;
use crate::tree::{CanonicalKey, Passport, PlaneTree};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

/// Largest supported edge count for exhaustive enumeration.
pub const MAX_EDGES: usize = 12;

/// Requested edge count outside `1..=MAX_EDGES`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundExceeded {
    pub edges: usize,
}

impl fmt::Display for BoundExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge count {} outside supported range 1..={MAX_EDGES}", self.edges)
    }
}

impl core::error::Error for BoundExceeded {}

/// All trees of one type: a color-normalized passport, its exact weighted
/// count (total `1/aut` mass), and the canonical representatives.
#[derive(Clone, PartialEq, Debug)]
pub struct TypeBucket {
    pub passport: Passport,
    pub weight: BigRational,
    pub trees: Vec<PlaneTree>,
}

/// A partial injection grown one pair at a time, with just enough structure
/// to bound the cycle count of any completion: `closed` finished cycles plus
/// `chains` maximal open paths, counting isolated points as zero-edge paths.
/// The bound `closed + chains` never increases as pairs are added and equals
/// the cycle count once the injection is a full permutation.
struct PartialPerm {
    /// For a point `e` with no image yet: the start of the open path ending
    /// at `e`. Stale (and unread) once `e` has an image.
    start_of: Vec<usize>,
    /// For a point `s` with no preimage yet: the end of the open path
    /// starting at `s`. Stale (and unread) once `s` has a preimage.
    end_of: Vec<usize>,
    closed: usize,
    chains: usize,
}

/// Undo record for one `link` call.
enum Link {
    ClosedCycle,
    Merged { start: usize, end: usize },
}

impl PartialPerm {
    fn new(n: usize) -> Self {
        PartialPerm {
            start_of: (0..n).collect(),
            end_of: (0..n).collect(),
            closed: 0,
            chains: n,
        }
    }

    /// Records the pair `x -> y`; `x` must have no image and `y` no preimage.
    fn link(&mut self, x: usize, y: usize) -> Link {
        if self.start_of[x] == y {
            // Joining the end of a path to its own start closes a cycle.
            self.closed += 1;
            self.chains -= 1;
            Link::ClosedCycle
        } else {
            let start = self.start_of[x];
            let end = self.end_of[y];
            self.end_of[start] = end;
            self.start_of[end] = start;
            self.chains -= 1;
            Link::Merged { start, end }
        }
    }

    fn unlink(&mut self, x: usize, y: usize, link: Link) {
        match link {
            Link::ClosedCycle => {
                self.closed -= 1;
                self.chains += 1;
            }
            Link::Merged { start, end } => {
                self.end_of[start] = x;
                self.start_of[end] = y;
                self.chains += 1;
            }
        }
    }

    /// Upper bound for the cycle count of any completion.
    fn cycle_bound(&self) -> usize {
        self.closed + self.chains
    }
}

struct Search {
    n: usize,
    white_images: Vec<usize>,
    black_images: Vec<usize>,
    used: Vec<bool>,
    white: PartialPerm,
    black: PartialPerm,
    found: BTreeMap<CanonicalKey, PlaneTree>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            n,
            white_images: alloc::vec![0; n],
            black_images: alloc::vec![0; n],
            used: alloc::vec![false; n],
            white: PartialPerm::new(n),
            black: PartialPerm::new(n),
            found: BTreeMap::new(),
        }
    }

    /// Sets `white(i) = v`, which forces `black(v) = i + 1 (mod n)` because
    /// the face permutation is pinned to the standard cycle.
    fn assign(&mut self, i: usize, v: usize) -> (Link, Link) {
        let next = (i + 1) % self.n;
        let lw = self.white.link(i, v);
        let lb = self.black.link(v, next);
        self.white_images[i] = v;
        self.black_images[v] = next;
        self.used[v] = true;
        (lw, lb)
    }

    fn undo(&mut self, i: usize, v: usize, links: (Link, Link)) {
        self.used[v] = false;
        self.black.unlink(v, (i + 1) % self.n, links.1);
        self.white.unlink(i, v, links.0);
    }

    /// A completion can satisfy the genus condition only while the cycle
    /// bounds still admit `n + 1` cycles in total.
    fn viable(&self) -> bool {
        self.white.cycle_bound() + self.black.cycle_bound() >= self.n + 1
    }

    fn emit(&mut self) {
        debug_assert_eq!(self.white.closed + self.black.closed, self.n + 1);
        let tree = PlaneTree::from_images(self.white_images.clone(), self.black_images.clone())
            .expect("face is the standard cycle and the cycle bound held");
        let key = tree.canonical_form();
        if !self.found.contains_key(&key) {
            let rep = PlaneTree::from_canonical_key(&key).expect("key of a valid tree");
            self.found.insert(key, rep);
        }
    }

    fn run(&mut self, i: usize) {
        if i == self.n {
            self.emit();
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let links = self.assign(i, v);
            if self.viable() {
                self.run(i + 1);
            }
            self.undo(i, v, links);
        }
    }
}

fn check_bound(n: usize) -> Result<(), BoundExceeded> {
    if (1..=MAX_EDGES).contains(&n) {
        Ok(())
    } else {
        Err(BoundExceeded { edges: n })
    }
}

/// Canonical representatives of the trees with `white(0) = first_image`,
/// keyed by canonical form. The union over all first images is the full
/// enumeration; the slices overlap as class sets, so a global dedupe by key
/// is still required when merging.
pub fn enumerate_part(
    n: usize,
    first_image: usize,
) -> Result<BTreeMap<CanonicalKey, PlaneTree>, BoundExceeded> {
    check_bound(n)?;
    assert!(first_image < n, "first image out of range");
    let mut search = Search::new(n);
    let links = search.assign(0, first_image);
    if search.viable() {
        search.run(1);
    }
    search.undo(0, first_image, links);
    Ok(search.found)
}

/// All plane bicolored trees with `n` edges up to isotopy (colors fixed):
/// canonical representatives sorted by canonical key.
pub fn enumerate_trees(n: usize) -> Result<Vec<PlaneTree>, BoundExceeded> {
    check_bound(n)?;
    let mut merged: BTreeMap<CanonicalKey, PlaneTree> = BTreeMap::new();
    for first_image in 0..n {
        merged.extend(enumerate_part(n, first_image)?);
    }
    Ok(merged.into_values().collect())
}

/// The trees with `n` edges grouped by color-normalized passport, in
/// lexicographically descending passport order; trees within a bucket are
/// canonical representatives in ascending key order.
pub fn bucket_trees(n: usize) -> Result<Vec<TypeBucket>, BoundExceeded> {
    let trees = enumerate_trees(n)?;
    let mut groups: BTreeMap<Passport, BTreeMap<CanonicalKey, PlaneTree>> = BTreeMap::new();
    for tree in &trees {
        let normalized = tree.normalize_colors();
        let key = normalized.canonical_form();
        let rep = PlaneTree::from_canonical_key(&key).expect("key of a valid tree");
        groups.entry(normalized.passport()).or_default().insert(key, rep);
    }
    Ok(groups
        .into_iter()
        .rev()
        .map(|(passport, members)| {
            let weight = goulden_jackson(&passport);
            TypeBucket { passport, weight, trees: members.into_values().collect() }
        })
        .collect())
}

fn factorial(k: usize) -> BigUint {
    let mut out = BigUint::from(1u32);
    for i in 2..=k {
        out *= BigUint::from(i);
    }
    out
}

/// Binomial(2n, n) / (n + 1).
pub fn catalan(n: usize) -> BigUint {
    factorial(2 * n) / (factorial(n) * factorial(n) * BigUint::from(n + 1))
}

/// Product of `m!` over the multiplicities `m` of repeated values in a
/// nonincreasing list.
fn multiplicity_factorials(list: &[usize]) -> BigUint {
    let mut out = BigUint::from(1u32);
    let mut run = 0usize;
    for i in 0..list.len() {
        run += 1;
        if i + 1 == list.len() || list[i + 1] != list[i] {
            out *= factorial(run);
            run = 0;
        }
    }
    out
}

/// Exact weighted count of the trees with this passport, each weighted by
/// the reciprocal of its automorphism group order:
/// `(v_w - 1)! (v_b - 1)! / (prod of white multiplicity factorials * prod of
/// black multiplicity factorials)` for `v_w` white and `v_b` black vertices.
pub fn goulden_jackson(passport: &Passport) -> BigRational {
    let numerator =
        factorial(passport.white().len() - 1) * factorial(passport.black().len() - 1);
    let denominator = multiplicity_factorials(passport.white())
        * multiplicity_factorials(passport.black());
    BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every consistent ordered passport with `n` edges: pairs of partitions of
/// `n` whose lengths sum to `n + 1`.
fn passport_pairs(n: usize) -> Vec<Passport> {
    let parts = partitions(n);
    let mut out = Vec::new();
    for white in &parts {
        for black in &parts {
            if white.len() + black.len() == n + 1 {
                out.push(
                    Passport::new(white.clone(), black.clone())
                        .expect("partition pair with matching lengths"),
                );
            }
        }
    }
    out
}

/// Total weighted count over every ordered passport with `n` edges; equals
/// `catalan(n) / n`.
pub fn weighted_sum(n: usize) -> BigRational {
    assert!(n >= 1, "need at least one edge");
    let mut total = BigRational::zero();
    for passport in passport_pairs(n) {
        total += goulden_jackson(&passport);
    }
    total
}

pub mod rooted {
    //! Independent recount oracle: rooted ordered trees.
    //!
    //! A rooted ordered tree with n edges and a white root corresponds to a
    //! plane bicolored tree with one marked corner at a white vertex. A class
    //! T has `n / aut(T)` distinct corner marks, so converting every rooted
    //! ordered tree (there are `catalan(n)`) must hit each class exactly that
    //! often — an end-to-end check of the backtracking enumeration that
    //! shares none of its machinery.

    use super::Perm;
    use super::PlaneTree;
    use alloc::vec::Vec;

    /// A rooted tree with ordered children.
    #[derive(Clone, Debug)]
    pub struct Node {
        pub children: Vec<Node>,
    }

    impl Node {
        pub fn edge_count(&self) -> usize {
            self.children.iter().map(|c| 1 + c.edge_count()).sum()
        }
    }

    /// Every rooted ordered tree with exactly `edges` edges.
    pub fn all_trees(edges: usize) -> Vec<Node> {
        forests(edges).into_iter().map(|children| Node { children }).collect()
    }

    /// Every ordered forest consuming `budget` edges, where attaching a
    /// subtree T to the common root costs `1 + edges(T)`.
    fn forests(budget: usize) -> Vec<Vec<Node>> {
        if budget == 0 {
            return alloc::vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first_cost in 1..=budget {
            for first in all_trees(first_cost - 1) {
                for rest in forests(budget - first_cost) {
                    let mut forest = Vec::with_capacity(1 + rest.len());
                    forest.push(first.clone());
                    forest.extend(rest);
                    out.push(forest);
                }
            }
        }
        out
    }

    /// Reads the rooted tree as a plane bicolored tree: the root is white,
    /// colors alternate with depth, edges are labeled in first-visit order,
    /// and the rotation at a vertex is (parent edge, child edges in order).
    pub fn to_plane_tree(root: &Node) -> PlaneTree {
        let n = root.edge_count();
        assert!(n >= 1, "a tree needs at least one edge");
        let mut white_cycles: Vec<Vec<usize>> = Vec::new();
        let mut black_cycles: Vec<Vec<usize>> = Vec::new();
        let mut next_edge = 0usize;
        walk(root, None, 0, &mut next_edge, &mut white_cycles, &mut black_cycles);
        let as_perm = |cycles: &[Vec<usize>]| {
            let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
            Perm::from_cycles(n, &refs).expect("disjoint rotation cycles")
        };
        PlaneTree::new(as_perm(&white_cycles), as_perm(&black_cycles))
            .expect("rooted ordered trees are plane trees")
    }

    fn walk(
        node: &Node,
        parent_edge: Option<usize>,
        depth: usize,
        next_edge: &mut usize,
        white_cycles: &mut Vec<Vec<usize>>,
        black_cycles: &mut Vec<Vec<usize>>,
    ) {
        let mut rotation = Vec::with_capacity(node.children.len() + 1);
        if let Some(p) = parent_edge {
            rotation.push(p);
        }
        let mut child_edges = Vec::with_capacity(node.children.len());
        for _ in &node.children {
            child_edges.push(*next_edge);
            *next_edge += 1;
        }
        rotation.extend(child_edges.iter().copied());
        if !rotation.is_empty() {
            if depth % 2 == 0 {
                white_cycles.push(rotation);
            } else {
                black_cycles.push(rotation);
            }
        }
        for (child, &edge) in node.children.iter().zip(&child_edges) {
            walk(child, Some(edge), depth + 1, next_edge, white_cycles, black_cycles);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn catalan_values() {
        let expected: [u32; 11] = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n), BigUint::from(c));
        }
    }

    #[test]
    fn class_counts_for_small_n() {
        assert_eq!(enumerate_trees(1).unwrap().len(), 1);
        assert_eq!(enumerate_trees(2).unwrap().len(), 2);
        assert_eq!(enumerate_trees(3).unwrap().len(), 3);
        assert_eq!(enumerate_trees(4).unwrap().len(), 6);
    }

    #[test]
    fn four_edge_passports() {
        let trees = enumerate_trees(4).unwrap();
        let mut passports: Vec<alloc::string::String> =
            trees.iter().map(|t| t.passport().to_string()).collect();
        passports.sort();
        let mut expected: Vec<alloc::string::String> = vec![
            "4|1,1,1,1",
            "3,1|2,1,1",
            "2,2|2,1,1",
            "2,1,1|3,1",
            "2,1,1|2,2",
            "1,1,1,1|4",
        ]
        .into_iter()
        .map(alloc::string::String::from)
        .collect();
        expected.sort();
        assert_eq!(passports, expected);
    }

    #[test]
    fn labeled_count_identity() {
        // Each class accounts for n / aut labeled trees with a standard face.
        for n in 1..=7 {
            let mut total = 0usize;
            for tree in enumerate_trees(n).unwrap() {
                total += n / tree.automorphism_order();
            }
            assert_eq!(BigUint::from(total), catalan(n), "n = {n}");
        }
    }

    #[test]
    fn rooted_oracle_agreement() {
        use alloc::collections::BTreeMap;
        for n in 1..=6 {
            let mut counts: BTreeMap<crate::tree::CanonicalKey, usize> = BTreeMap::new();
            let rooted_trees = rooted::all_trees(n);
            assert_eq!(BigUint::from(rooted_trees.len()), catalan(n));
            for node in &rooted_trees {
                assert_eq!(node.edge_count(), n);
                let tree = rooted::to_plane_tree(node);
                *counts.entry(tree.canonical_form()).or_insert(0) += 1;
            }
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(counts.len(), trees.len(), "n = {n}");
            for tree in &trees {
                let expected = n / tree.automorphism_order();
                assert_eq!(
                    counts.get(&tree.canonical_form()),
                    Some(&expected),
                    "n = {n}, passport {}",
                    tree.passport()
                );
            }
        }
    }

    #[test]
    fn buckets_are_ordered_and_weighted() {
        for n in 1..=6 {
            let buckets = bucket_trees(n).unwrap();
            for pair in buckets.windows(2) {
                assert!(pair[0].passport > pair[1].passport, "descending passports");
            }
            for bucket in &buckets {
                assert!(bucket.passport.is_color_normalized());
                assert!(!bucket.trees.is_empty());
                let mut mass = BigRational::zero();
                for tree in &bucket.trees {
                    assert_eq!(tree.passport(), bucket.passport);
                    assert_eq!(&PlaneTree::from_canonical_key(&tree.canonical_form()).unwrap(), tree);
                    mass += BigRational::new(
                        BigInt::from(1),
                        BigInt::from(tree.automorphism_order()),
                    );
                }
                assert_eq!(mass, bucket.weight, "n = {n}, passport {}", bucket.passport);
                for pair in bucket.trees.windows(2) {
                    assert!(pair[0].canonical_form() < pair[1].canonical_form());
                }
            }
        }
    }

    #[test]
    fn weighted_sum_matches_catalan() {
        for n in 1..=8 {
            let expected = BigRational::new(BigInt::from(catalan(n)), BigInt::from(n));
            assert_eq!(weighted_sum(n), expected, "n = {n}");
        }
    }

    #[test]
    fn weight_formula_examples() {
        let w = |s: &str| goulden_jackson(&s.parse().unwrap());
        let q = |num: i64, den: i64| BigRational::new(BigInt::from(num), BigInt::from(den));
        assert_eq!(w("4,1,1|2,2,1,1"), q(3, 2));
        assert_eq!(w("10|1,1,1,1,1,1,1,1,1,1"), q(1, 10));
        assert_eq!(w("8,1,1|2,2,1,1,1,1,1,1"), q(7, 2));
        assert_eq!(w("4,3,2,1|3,2,1,1,1,1,1"), q(36, 1));
        // The formula is color-symmetric.
        assert_eq!(w("2,2,1,1,1,1,1,1|8,1,1"), q(7, 2));
    }

    #[test]
    fn parts_cover_the_enumeration() {
        let n = 5;
        let full = enumerate_trees(n).unwrap();
        let mut union: alloc::collections::BTreeMap<_, _> = Default::default();
        for v in 0..n {
            union.extend(enumerate_part(n, v).unwrap());
        }
        let merged: Vec<PlaneTree> = union.into_values().collect();
        assert_eq!(merged, full);
    }

    #[test]
    fn rejects_out_of_range_sizes() {
        assert_eq!(enumerate_trees(0), Err(BoundExceeded { edges: 0 }));
        assert_eq!(enumerate_trees(13), Err(BoundExceeded { edges: 13 }));
        assert!(bucket_trees(0).is_err());
        let message = BoundExceeded { edges: 13 }.to_string();
        assert!(message.contains("13") && message.contains("1..=12"));
    }
}
