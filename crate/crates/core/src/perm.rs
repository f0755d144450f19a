//! Permutations of {0, …, n-1} stored as image arrays.
//!
//! Composition is left-to-right throughout the crate: `p.then(q)` applies `p`
//! first, then `q`.

use alloc::vec::Vec;

/// A permutation of `0..n`, stored as its image array (`images[i]` is where
/// `i` goes).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation from an image array; `None` if the array is not a
    /// bijection of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm { images })
    }

    /// Builds the permutation with the given cycles on `0..n`; unlisted points
    /// are fixed. `None` on out-of-range or repeated points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = alloc::vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n || seen[x] {
                    return None;
                }
                seen[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Some(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` then `other`: `(self.then(other))(x) = other(self(x))`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&v| other.images[v]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// The relabeling of `self` under `pi`: point `x` is renamed `pi(x)`, so
    /// the result is `pi^-1 . self . pi` in left-to-right composition.
    pub fn relabeled(&self, pi: &Perm) -> Perm {
        pi.inverse().then(self).then(pi)
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_lengths_unsorted().len()
    }

    /// Cycle lengths in no particular order.
    pub fn cycle_lengths_unsorted(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            lengths.push(len);
        }
        lengths
    }

    /// Cycle lengths sorted in nonincreasing order.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lengths = self.cycle_lengths_unsorted();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// True when the whole domain is a single cycle.
    pub fn is_single_cycle(&self) -> bool {
        let n = self.images.len();
        if n == 0 {
            return false;
        }
        let mut x = 0;
        for _ in 0..n - 1 {
            x = self.images[x];
            if x == 0 {
                return false;
            }
        }
        self.images[x] == 0
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.then(other) == other.then(self)
    }

    /// The standard cycle (0 1 … n-1).
    pub fn standard_cycle(n: usize) -> Perm {
        Perm { images: (0..n).map(|i| (i + 1) % n).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(images: &[usize]) -> Perm {
        Perm::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // a = (0 1 2), b = (2 3): apply a then b sends 1 -> 2 -> 3.
        let a = Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        let b = Perm::from_cycles(4, &[&[2, 3]]).unwrap();
        assert_eq!(a.then(&b), p(&[1, 3, 0, 2]));
    }

    #[test]
    fn inverse_round_trip() {
        let a = p(&[2, 0, 3, 1]);
        assert!(a.then(&a.inverse()).is_identity());
        assert!(a.inverse().then(&a).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_none());
        assert!(Perm::from_images(vec![0, 3]).is_none());
        assert!(Perm::from_cycles(3, &[&[0, 1, 0]]).is_none());
    }

    #[test]
    fn cycle_structure() {
        let a = Perm::from_cycles(6, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(a.cycle_lengths(), vec![3, 2, 1]);
        assert_eq!(a.cycle_count(), 3);
        assert!(!a.is_single_cycle());
        assert!(Perm::standard_cycle(6).is_single_cycle());
        assert!(!Perm::identity(2).is_single_cycle());
        assert!(Perm::identity(1).is_single_cycle());
    }

    #[test]
    fn relabeling_conjugates() {
        let a = Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        let pi = p(&[3, 2, 1, 0]);
        let c = a.relabeled(&pi);
        // x renamed pi(x): the cycle (0 1 2) becomes (3 2 1).
        assert_eq!(c, Perm::from_cycles(4, &[&[3, 2, 1]]).unwrap());
        assert_eq!(c.cycle_lengths(), a.cycle_lengths());
    }
}
