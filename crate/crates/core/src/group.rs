//! Permutation groups of small degree: order via a deterministic
//! Schreier–Sims stabilizer chain, transitivity, and primitivity via minimal
//! block systems.

use crate::perm::Perm;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;

/// Raised by operations that require a transitive group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NotTransitive;

impl fmt::Display for NotTransitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group is not transitive")
    }
}

impl core::error::Error for NotTransitive {}

/// One level of the stabilizer chain: a base point, the stored generators
/// fixing every earlier base (as indices into the master list), the orbit of
/// the base under those generators, and a transversal mapping the base onto
/// each orbit element.
struct Level {
    base: usize,
    gens: Vec<usize>,
    /// `transversal[p]` maps `base` to `p`; `None` for points off the orbit.
    /// Entries are never replaced once set, which keeps already-verified
    /// Schreier products valid as the chain grows.
    transversal: Vec<Option<Perm>>,
    /// Schreier pairs (orbit point, stored generator index) whose product
    /// has been sifted already.
    verified: BTreeSet<(usize, usize)>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal: Vec<Option<Perm>> = alloc::vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Level { base, gens: Vec::new(), transversal, verified: BTreeSet::new() }
    }

    fn orbit_len(&self) -> usize {
        self.transversal.iter().filter(|t| t.is_some()).count()
    }

    /// Grows the orbit after a generator was appended, keeping every
    /// existing transversal entry.
    fn extend_orbit(&mut self, stored: &[Perm]) {
        let degree = self.transversal.len();
        let mut queue: Vec<usize> =
            (0..degree).filter(|&p| self.transversal[p].is_some()).collect();
        while let Some(p) = queue.pop() {
            let up = self.transversal[p].clone().expect("queued points are in the orbit");
            for &s in &self.gens {
                let g = &stored[s];
                let q = g.apply(p);
                if self.transversal[q].is_none() {
                    self.transversal[q] = Some(up.then(g));
                    queue.push(q);
                }
            }
        }
    }
}

/// A permutation group given by generators, with a stabilizer chain built
/// eagerly at construction.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    /// Master generator list: the non-identity input generators plus every
    /// sifting residue adopted while closing the chain. Level `i` uses the
    /// subset fixing the bases of levels `0..i` pointwise.
    stored: Vec<Perm>,
    chain: Vec<Level>,
}

impl PermGroup {
    /// Builds the stabilizer chain for the group generated by `gens` on
    /// `0..degree`. Identity generators are dropped; all generators must have
    /// the given degree.
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        assert!(degree >= 1, "degree must be positive");
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let mut group =
            PermGroup { degree, gens: gens.to_vec(), stored: Vec::new(), chain: Vec::new() };
        for g in gens {
            if !g.is_identity() {
                group.store(g.clone());
            }
        }
        group.close_chain();
        group
    }

    /// Adopts a non-identity element as a stored generator: it joins every
    /// level whose base prefix it fixes (growing those orbits), and opens a
    /// new level at its first moved point when it fixes every existing base.
    fn store(&mut self, g: Perm) {
        debug_assert!(!g.is_identity());
        let idx = self.stored.len();
        self.stored.push(g);
        for level in 0..self.chain.len() {
            self.chain[level].gens.push(idx);
            self.chain[level].extend_orbit(&self.stored);
            if self.stored[idx].apply(self.chain[level].base) != self.chain[level].base {
                return;
            }
        }
        // Fixes every base: a fresh level. Every older stored generator
        // moves one of the existing bases, so the new level starts from this
        // generator alone.
        let base = (0..self.degree)
            .find(|&p| self.stored[idx].apply(p) != p)
            .expect("stored generators are not the identity");
        let mut level = Level::new(self.degree, base);
        level.gens.push(idx);
        level.extend_orbit(&self.stored);
        self.chain.push(level);
    }

    /// Sifts every Schreier generator of every level, adopting each
    /// non-identity residue and rescanning, until the whole chain is closed;
    /// the orbit-length product is then the group order.
    fn close_chain(&mut self) {
        'scan: loop {
            for i in 0..self.chain.len() {
                let pending: Vec<(usize, usize)> = {
                    let level = &self.chain[i];
                    let mut pending = Vec::new();
                    for p in 0..self.degree {
                        if level.transversal[p].is_none() {
                            continue;
                        }
                        for &s in &level.gens {
                            if !level.verified.contains(&(p, s)) {
                                pending.push((p, s));
                            }
                        }
                    }
                    pending
                };
                for (p, s) in pending {
                    self.chain[i].verified.insert((p, s));
                    let up = self.chain[i].transversal[p].clone().expect("orbit point");
                    let g = &self.stored[s];
                    let q = g.apply(p);
                    let uq = self.chain[i].transversal[q]
                        .clone()
                        .expect("orbit is closed under level generators");
                    let schreier = up.then(g).then(&uq.inverse());
                    if let Some(residue) = self.sift_from(i + 1, schreier) {
                        self.store(residue);
                        continue 'scan;
                    }
                }
            }
            return;
        }
    }

    /// Strips `g` through levels `start..`; `None` when it reaches the
    /// identity, otherwise the non-identity residue that failed to strip.
    fn sift_from(&self, start: usize, g: Perm) -> Option<Perm> {
        let mut residue = g;
        for level in &self.chain[start..] {
            if residue.is_identity() {
                return None;
            }
            let image = residue.apply(level.base);
            match &level.transversal[image] {
                Some(u) => residue = residue.then(&u.inverse()),
                None => return Some(residue),
            }
        }
        if residue.is_identity() {
            None
        } else {
            Some(residue)
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Group order: the product of the orbit lengths along the chain.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::from(1u32);
        for level in &self.chain {
            order *= BigUint::from(level.orbit_len());
        }
        order
    }

    /// Membership test by sifting.
    pub fn contains(&self, g: &Perm) -> bool {
        assert_eq!(g.degree(), self.degree);
        self.sift_from(0, g.clone()).is_none()
    }

    /// True when the generators move 0 across the whole domain.
    pub fn is_transitive(&self) -> bool {
        self.orbit_of(0).len() == self.degree
    }

    fn orbit_of(&self, start: usize) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.degree];
        seen[start] = true;
        let mut queue = alloc::vec![start];
        let mut orbit = alloc::vec![start];
        while let Some(p) = queue.pop() {
            for g in &self.gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                    queue.push(q);
                }
            }
        }
        orbit
    }

    /// Primitivity of a transitive group: no block system with blocks of size
    /// strictly between 1 and the degree. Checks the minimal block system
    /// containing {0, p} for every p.
    pub fn is_primitive(&self) -> Result<bool, NotTransitive> {
        if !self.is_transitive() {
            return Err(NotTransitive);
        }
        if self.degree <= 2 {
            return Ok(true);
        }
        for p in 1..self.degree {
            let block = self.minimal_block_with(0, p);
            if block < self.degree {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Size of the smallest block containing {a, b}: union-find refinement,
    /// merging the images of fused points under every generator until stable.
    fn minimal_block_with(&self, a: usize, b: usize) -> usize {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue: Vec<(usize, usize)> = alloc::vec![(a, b)];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[rb] = ra;
        while let Some((x, y)) = queue.pop() {
            for g in &self.gens {
                let (gx, gy) = (g.apply(x), g.apply(y));
                let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
                if rx != ry {
                    parent[ry] = rx;
                    queue.push((gx, gy));
                }
            }
        }
        let root = find(&mut parent, a);
        (0..self.degree).filter(|&x| find(&mut parent, x) == root).count()
    }
}
