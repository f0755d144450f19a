//! Plane bicolored trees with `n` edges, encoded as a pair of permutations of
//! the edge set {0, …, n-1}: the counterclockwise rotation around white
//! vertices and the one around black vertices.
//!
//! The face permutation is `white_rot` then `black_rot` (left-to-right). A
//! pair encodes a tree exactly when the face permutation is a single n-cycle
//! and the vertex count comes out right: `cycles(white) + cycles(black) =
//! n + 1`.

use crate::perm::Perm;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Why a permutation pair failed validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TreeError {
    /// Empty edge set.
    NoEdges,
    /// An image array is not a bijection, or the two arrays disagree in length.
    NotAPermutation,
    /// The face permutation is not a single n-cycle (the map is disconnected
    /// or has more than one face).
    NotConnectedSingleFace,
    /// Connected with a single face but the wrong vertex count, i.e. positive
    /// genus.
    WrongGenus,
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::NoEdges => write!(f, "a tree needs at least one edge"),
            TreeError::NotAPermutation => write!(f, "rotation is not a permutation of the edge set"),
            TreeError::NotConnectedSingleFace => {
                write!(f, "face permutation is not a single cycle")
            }
            TreeError::WrongGenus => write!(f, "cycle counts violate the tree condition"),
        }
    }
}

impl core::error::Error for TreeError {}

/// A plane bicolored tree: rotations around white and black vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PlaneTree {
    white: Perm,
    black: Perm,
}

/// Canonical form of a tree: a byte key equal for exactly the trees that
/// differ by an edge relabeling (same embedded colored tree up to isotopy).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// A passport: white and black vertex valency lists, each sorted
/// nonincreasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Passport {
    white: Vec<usize>,
    black: Vec<usize>,
}

impl Passport {
    /// Sorts both valency lists nonincreasing. Valencies must be positive and
    /// the lists consistent: equal sums `n` and `len(white) + len(black) =
    /// n + 1` (the vertex count of a tree with n edges).
    pub fn new(mut white: Vec<usize>, mut black: Vec<usize>) -> Result<Self, String> {
        if white.is_empty() || black.is_empty() {
            return Err(String::from("valency lists must be nonempty"));
        }
        if white.iter().chain(black.iter()).any(|&v| v == 0) {
            return Err(String::from("valencies must be positive"));
        }
        let n: usize = white.iter().sum();
        if black.iter().sum::<usize>() != n {
            return Err(String::from("white and black valencies must have equal sums"));
        }
        if white.len() + black.len() != n + 1 {
            return Err(alloc::format!(
                "a tree with {n} edges has {} vertices, got {}",
                n + 1,
                white.len() + black.len()
            ));
        }
        white.sort_unstable_by(|a, b| b.cmp(a));
        black.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Passport { white, black })
    }

    pub fn white(&self) -> &[usize] {
        &self.white
    }

    pub fn black(&self) -> &[usize] {
        &self.black
    }

    /// Edge count.
    pub fn edges(&self) -> usize {
        self.white.iter().sum()
    }

    pub fn swapped(&self) -> Passport {
        Passport { white: self.black.clone(), black: self.white.clone() }
    }

    /// True when the white list is lexicographically at least the black list.
    pub fn is_color_normalized(&self) -> bool {
        self.white >= self.black
    }

    /// This passport with colors swapped if that raises the white list.
    pub fn color_normalized(&self) -> Passport {
        if self.is_color_normalized() {
            self.clone()
        } else {
            self.swapped()
        }
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, list: &[usize]| -> fmt::Result {
            for (i, v) in list.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        };
        join(f, &self.white)?;
        write!(f, "|")?;
        join(f, &self.black)
    }
}

impl core::str::FromStr for Passport {
    type Err = String;

    /// Parses `"5,3,1,1|4,1,1,1,1,1,1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (w, b) = s
            .split_once('|')
            .ok_or_else(|| String::from("passport must be \"w1,w2,...|b1,b2,...\""))?;
        let parse_list = |part: &str| -> Result<Vec<usize>, String> {
            part.split(',')
                .map(|item| {
                    item.trim()
                        .parse::<usize>()
                        .map_err(|_| alloc::format!("bad valency {item:?}"))
                })
                .collect()
        };
        Passport::new(parse_list(w)?, parse_list(b)?)
    }
}

impl PlaneTree {
    /// Validates a permutation pair as a plane bicolored tree.
    pub fn new(white: Perm, black: Perm) -> Result<Self, TreeError> {
        let n = white.degree();
        if n == 0 {
            return Err(TreeError::NoEdges);
        }
        if black.degree() != n {
            return Err(TreeError::NotAPermutation);
        }
        if !white.then(&black).is_single_cycle() {
            return Err(TreeError::NotConnectedSingleFace);
        }
        if white.cycle_count() + black.cycle_count() != n + 1 {
            return Err(TreeError::WrongGenus);
        }
        Ok(PlaneTree { white, black })
    }

    /// Validates raw image arrays.
    pub fn from_images(white: Vec<usize>, black: Vec<usize>) -> Result<Self, TreeError> {
        if white.is_empty() {
            return Err(TreeError::NoEdges);
        }
        if white.len() != black.len() {
            return Err(TreeError::NotAPermutation);
        }
        let w = Perm::from_images(white).ok_or(TreeError::NotAPermutation)?;
        let b = Perm::from_images(black).ok_or(TreeError::NotAPermutation)?;
        PlaneTree::new(w, b)
    }

    pub fn edges(&self) -> usize {
        self.white.degree()
    }

    pub fn white_rot(&self) -> &Perm {
        &self.white
    }

    pub fn black_rot(&self) -> &Perm {
        &self.black
    }

    /// The face permutation: `white_rot` then `black_rot`.
    pub fn face(&self) -> Perm {
        self.white.then(&self.black)
    }

    pub fn passport(&self) -> Passport {
        let mut white = self.white.cycle_lengths();
        let mut black = self.black.cycle_lengths();
        white.sort_unstable_by(|a, b| b.cmp(a));
        black.sort_unstable_by(|a, b| b.cmp(a));
        Passport { white, black }
    }

    /// The same tree with the colors exchanged.
    pub fn color_swap(&self) -> PlaneTree {
        PlaneTree { white: self.black.clone(), black: self.white.clone() }
    }

    /// Color-swaps exactly when that raises the white valency list, so the
    /// result has `passport().is_color_normalized()`.
    pub fn normalize_colors(&self) -> PlaneTree {
        if self.passport().is_color_normalized() {
            self.clone()
        } else {
            self.color_swap()
        }
    }

    /// Relabels edges by `pi` (edge `e` becomes `pi(e)`).
    pub fn relabeled(&self, pi: &Perm) -> PlaneTree {
        PlaneTree { white: self.white.relabeled(pi), black: self.black.relabeled(pi) }
    }

    /// The relabeling that walks the face starting at `start`: edge
    /// `face^i(start)` is renamed `i`, so the face permutation becomes the
    /// standard cycle (0 1 … n-1).
    fn face_relabeling(&self, start: usize) -> Perm {
        let n = self.edges();
        let face = self.face();
        let mut images = alloc::vec![0usize; n];
        let mut e = start;
        for i in 0..n {
            images[e] = i;
            e = face.apply(e);
        }
        Perm::from_images(images).expect("face walk visits every edge once")
    }

    /// This tree relabeled so its face permutation is the standard cycle.
    pub fn face_standardized(&self) -> PlaneTree {
        self.relabeled(&self.face_relabeling(0))
    }

    /// Canonical key: among the n relabelings that standardize the face
    /// permutation, the lexicographically smallest white image array, prefixed
    /// by n. Equal keys exactly characterize relabelings of one another.
    pub fn canonical_form(&self) -> CanonicalKey {
        let n = self.edges();
        assert!(n <= 255, "canonical keys support at most 255 edges");
        let mut best: Option<Vec<usize>> = None;
        for start in 0..n {
            let candidate = self.white.relabeled(&self.face_relabeling(start));
            let images = candidate.images().to_vec();
            if best.as_ref().is_none_or(|b| images < *b) {
                best = Some(images);
            }
        }
        let best = best.expect("n >= 1");
        let mut bytes = Vec::with_capacity(n + 1);
        bytes.push(n as u8);
        bytes.extend(best.iter().map(|&v| v as u8));
        CanonicalKey(bytes)
    }

    /// The canonical representative: the relabeling of this tree whose white
    /// image array is the canonical key body.
    pub fn canonical_rep(&self) -> PlaneTree {
        let key = self.canonical_form();
        PlaneTree::from_canonical_key(&key).expect("round trip")
    }

    /// Rebuilds a tree from a canonical key. With the face permutation
    /// standard, the black rotation is determined by the white one.
    pub fn from_canonical_key(key: &CanonicalKey) -> Result<PlaneTree, TreeError> {
        let bytes = key.bytes();
        if bytes.is_empty() {
            return Err(TreeError::NoEdges);
        }
        let n = bytes[0] as usize;
        if bytes.len() != n + 1 {
            return Err(TreeError::NotAPermutation);
        }
        let white: Vec<usize> = bytes[1..].iter().map(|&b| b as usize).collect();
        let w = Perm::from_images(white).ok_or(TreeError::NotAPermutation)?;
        // face = white then black is the standard cycle, so black = white^-1
        // then standard.
        let black = w.inverse().then(&Perm::standard_cycle(n));
        PlaneTree::new(w, black)
    }

    /// Order of the automorphism group: the number of powers of the face
    /// permutation that commute with the white rotation. Divides n.
    pub fn automorphism_order(&self) -> usize {
        let n = self.edges();
        let face = self.face();
        let mut power = Perm::identity(n);
        let mut count = 0;
        for _ in 0..n {
            if power.commutes_with(&self.white) {
                count += 1;
            }
            power = power.then(&face);
        }
        debug_assert_eq!(n % count, 0);
        count
    }
}
