//! Permutations, roots and simple-root subsets of the Weyl group `W(A_n)`.
//!
//! `W(A_n)` is realized as the symmetric group on `{1, .., n+1}` in one-line
//! notation. Composition is right-to-left: `(p ∘ q)(i) = p(q(i))`. The simple
//! root `α_k = e_k − e_{k+1}` is numbered by `k ∈ 1..=n`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank for which a permutation still fits the packed encoding.
pub const MAX_RANK: usize = 15;

/// Default cap on the rank of groups that are enumerated in full.
pub const DEFAULT_RANK_CAP: usize = 8;

/// An element of `W(A_n) ≅ S_{n+1}`.
///
/// The images are packed four bits per point, first point in the most
/// significant nibble, so numeric order of `packed` is lexicographic order of
/// the one-line notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation {
    packed: u64,
    degree: u8,
}

#[inline]
fn shift(i: usize) -> u32 {
    60 - 4 * i as u32
}

impl Permutation {
    pub fn identity(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds packed encoding");
        let degree = rank + 1;
        let mut packed = 0;
        for i in 0..degree {
            packed |= (i as u64) << shift(i);
        }
        Permutation {
            packed,
            degree: degree as u8,
        }
    }

    /// Builds a permutation from its one-line notation over `{1, .., n+1}`.
    pub fn from_images(images: &[u8]) -> Result<Self> {
        let degree = images.len();
        if degree < 2 {
            return Err(Error::InvalidPermutation(format!(
                "need at least two points, got {degree}"
            )));
        }
        if degree > MAX_RANK + 1 {
            return Err(Error::InvalidPermutation(format!(
                "{degree} points exceed the packed encoding"
            )));
        }
        let mut seen = 0u32;
        let mut packed = 0;
        for (i, &v) in images.iter().enumerate() {
            let v = v as usize;
            if v == 0 || v > degree || seen & (1 << v) != 0 {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={degree}"
                )));
            }
            seen |= 1 << v;
            packed |= ((v - 1) as u64) << shift(i);
        }
        Ok(Permutation {
            packed,
            degree: degree as u8,
        })
    }

    /// The simple reflection `s_k` swapping `k` and `k+1`.
    pub fn simple_reflection(rank: usize, k: usize) -> Result<Self> {
        if k == 0 || k > rank {
            return Err(Error::InvalidRoot {
                i: k,
                j: k + 1,
                rank,
            });
        }
        reflection_of_root(Root::simple(k), rank)
    }

    #[inline]
    fn get(&self, i: usize) -> usize {
        ((self.packed >> shift(i)) & 0xf) as usize
    }

    #[inline]
    fn set(packed: &mut u64, i: usize, v: usize) {
        *packed |= (v as u64) << shift(i);
    }

    pub fn rank(&self) -> usize {
        self.degree as usize - 1
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// `w(i)` for a 1-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.degree());
        self.get(i - 1) + 1
    }

    pub fn images(&self) -> Vec<u8> {
        (0..self.degree()).map(|i| self.get(i) as u8 + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.degree()).all(|i| self.get(i) == i)
    }

    /// `self ∘ other`, checking that both live in the same group.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree != other.degree {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let mut packed = 0;
        for i in 0..self.degree() {
            Self::set(&mut packed, i, self.get(other.get(i)));
        }
        Permutation {
            packed,
            degree: self.degree,
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut packed = 0;
        for i in 0..self.degree() {
            Self::set(&mut packed, self.get(i), i);
        }
        Permutation {
            packed,
            degree: self.degree,
        }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let d = self.degree();
        let mut count = 0;
        for i in 0..d {
            let vi = self.get(i);
            for j in i + 1..d {
                if vi > self.get(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Mask of simple roots sent to negative roots: bit `k-1` is set when
    /// `w(k) > w(k+1)`.
    pub fn right_descent_mask(&self) -> u32 {
        let mut mask = 0;
        for i in 0..self.rank() {
            if self.get(i) > self.get(i + 1) {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Mask of simple roots `α` with `w⁻¹(α)` negative.
    pub fn left_descent_mask(&self) -> u32 {
        self.inverse().right_descent_mask()
    }

    /// True when `w(α)` is a positive root for every `α ∈ subset`.
    #[inline]
    pub fn keeps_positive(&self, subset: SimpleSubset) -> bool {
        self.right_descent_mask() & subset.mask() == 0
    }

    pub fn act_on_root(&self, root: Root) -> Result<Root> {
        if root.j() > self.degree() || root.i() > self.degree() {
            return Err(Error::InvalidRoot {
                i: root.i(),
                j: root.j(),
                rank: self.rank(),
            });
        }
        Ok(Root {
            i: self.apply(root.i()) as u8,
            j: self.apply(root.j()) as u8,
        })
    }

    /// Sort key used throughout: length first, then one-line notation.
    fn sort_key(&self) -> (usize, u8, u64) {
        (self.length(), self.degree, self.packed)
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    /// Panics on a rank mismatch; use [`Permutation::compose`] to get an error instead.
    fn mul(self, rhs: Permutation) -> Permutation {
        assert_eq!(self.degree, rhs.degree, "composing permutations of different rank");
        self.compose_unchecked(&rhs)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<u8>) -> Result<Self> {
        Permutation::from_images(&images)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Vec<u8> {
        p.images()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.degree() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.get(i) + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The root `e_i − e_j`, `i ≠ j`, with 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    i: u8,
    j: u8,
}

impl Root {
    pub fn new(i: usize, j: usize, rank: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > rank + 1 || j > rank + 1 {
            return Err(Error::InvalidRoot { i, j, rank });
        }
        Ok(Root {
            i: i as u8,
            j: j as u8,
        })
    }

    /// `α_k = e_k − e_{k+1}`.
    pub fn simple(k: usize) -> Self {
        Root {
            i: k as u8,
            j: k as u8 + 1,
        }
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negate(&self) -> Root {
        Root {
            i: self.j,
            j: self.i,
        }
    }

    /// `Some(k)` when this is the simple root `α_k`.
    pub fn simple_index(&self) -> Option<usize> {
        (self.j == self.i + 1).then_some(self.i as usize)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// The reflection in `r`: the transposition of its two endpoints.
pub fn reflection_of_root(root: Root, rank: usize) -> Result<Permutation> {
    if rank > MAX_RANK || root.i() > rank + 1 || root.j() > rank + 1 {
        return Err(Error::InvalidRoot {
            i: root.i(),
            j: root.j(),
            rank,
        });
    }
    let mut images: Vec<u8> = (1..=rank as u8 + 1).collect();
    images.swap(root.i() - 1, root.j() - 1);
    Permutation::from_images(&images)
}

/// Every positive and negative root at the given rank.
pub fn all_roots(rank: usize) -> Vec<Root> {
    let mut roots = Vec::with_capacity(rank * (rank + 1));
    for i in 1..=rank + 1 {
        for j in 1..=rank + 1 {
            if i != j {
                roots.push(Root {
                    i: i as u8,
                    j: j as u8,
                });
            }
        }
    }
    roots
}

/// A subset `J ⊆ Π`; bit `k-1` of the mask stands for `α_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSubset {
    rank: u8,
    mask: u32,
}

impl SimpleSubset {
    pub fn new(rank: usize, mask: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::RankZero);
        }
        if rank > MAX_RANK {
            return Err(Error::RankCap {
                rank,
                cap: MAX_RANK,
            });
        }
        if mask >> rank != 0 {
            return Err(Error::InvalidSubset(format!(
                "mask {mask:#b} has bits beyond rank {rank}"
            )));
        }
        Ok(SimpleSubset {
            rank: rank as u8,
            mask,
        })
    }

    pub fn empty(rank: usize) -> Self {
        SimpleSubset {
            rank: rank as u8,
            mask: 0,
        }
    }

    pub fn full(rank: usize) -> Self {
        SimpleSubset {
            rank: rank as u8,
            mask: (1u32 << rank) - 1,
        }
    }

    /// Builds `{α_k : k ∈ indices}`.
    pub fn from_indices(rank: usize, indices: &[usize]) -> Result<Self> {
        let mut mask = 0;
        for &k in indices {
            if k == 0 || k > rank {
                return Err(Error::InvalidSubset(format!(
                    "a{k} is not a simple root at rank {rank}"
                )));
            }
            mask |= 1 << (k - 1);
        }
        SimpleSubset::new(rank, mask)
    }

    /// Parses `full`, `empty`, or a comma-separated list such as `a1,a3`.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "full" => return SimpleSubset::new(rank, Self::full(rank).mask),
            "empty" | "" => return SimpleSubset::new(rank, 0),
            _ => {}
        }
        let mut indices = Vec::new();
        for item in text.split(',') {
            let item = item.trim();
            let k = item
                .strip_prefix('a')
                .and_then(|digits| digits.parse::<usize>().ok())
                .ok_or_else(|| {
                    Error::InvalidSubset(format!("cannot parse {item:?} as a simple root name"))
                })?;
            indices.push(k);
        }
        SimpleSubset::from_indices(rank, &indices)
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == Self::full(self.rank()).mask
    }

    pub fn contains(&self, k: usize) -> bool {
        k >= 1 && k <= self.rank() && self.mask & (1 << (k - 1)) != 0
    }

    pub fn is_subset_of(&self, other: &SimpleSubset) -> bool {
        self.rank == other.rank && self.mask & !other.mask == 0
    }

    pub fn intersection(&self, other: &SimpleSubset) -> SimpleSubset {
        debug_assert_eq!(self.rank, other.rank);
        SimpleSubset {
            rank: self.rank,
            mask: self.mask & other.mask,
        }
    }

    pub fn union(&self, other: &SimpleSubset) -> SimpleSubset {
        debug_assert_eq!(self.rank, other.rank);
        SimpleSubset {
            rank: self.rank,
            mask: self.mask | other.mask,
        }
    }

    pub fn difference(&self, other: &SimpleSubset) -> SimpleSubset {
        debug_assert_eq!(self.rank, other.rank);
        SimpleSubset {
            rank: self.rank,
            mask: self.mask & !other.mask,
        }
    }

    pub(crate) fn with_mask(&self, mask: u32) -> SimpleSubset {
        SimpleSubset {
            rank: self.rank,
            mask,
        }
    }

    /// Indices `k` with `α_k` in the subset, ascending.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank()).filter(move |&k| self.contains(k))
    }

    /// Connected components as `(first index, number of roots)`, left to right.
    pub fn components(&self) -> Vec<(usize, usize)> {
        let mut runs = Vec::new();
        let mut k = 1;
        while k <= self.rank() {
            if self.contains(k) {
                let start = k;
                while k <= self.rank() && self.contains(k) {
                    k += 1;
                }
                runs.push((start, k - start));
            } else {
                k += 1;
            }
        }
        runs
    }

    /// All subsets in increasing mask order.
    pub fn subsets(&self) -> Vec<SimpleSubset> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = 0u32;
        loop {
            out.push(self.with_mask(sub));
            if sub == self.mask {
                break;
            }
            sub = sub.wrapping_sub(self.mask) & self.mask;
        }
        out
    }

    /// The roots `{α : α ∈ self}` as `Root`s.
    pub fn roots(&self) -> Vec<Root> {
        self.indices().map(Root::simple).collect()
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "empty");
        }
        let mut first = true;
        for k in self.indices() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "a{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}/A{}", self.rank)
    }
}

#[derive(Serialize, Deserialize)]
struct SubsetRepr {
    rank: usize,
    roots: Vec<usize>,
}

impl Serialize for SimpleSubset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SubsetRepr {
            rank: self.rank(),
            roots: self.indices().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimpleSubset {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SubsetRepr::deserialize(deserializer)?;
        SimpleSubset::from_indices(repr.rank, &repr.roots).map_err(serde::de::Error::custom)
    }
}

/// `{w(α) : α ∈ subset} ∩ within`, keeping only images that are simple roots
/// of `within`. Non-simple and negative images drop out.
pub fn image_meet(w: &Permutation, subset: SimpleSubset, within: SimpleSubset) -> SimpleSubset {
    let mut mask = 0;
    for k in subset.indices() {
        let a = w.apply(k);
        if w.apply(k + 1) == a + 1 && within.contains(a) {
            mask |= 1 << (a - 1);
        }
    }
    within.with_mask(mask)
}

/// `w(J)` as a set of roots, when every image is a simple root.
pub fn conjugate_subset(w: &Permutation, subset: SimpleSubset) -> Option<SimpleSubset> {
    let image = image_meet(w, subset, SimpleSubset::full(subset.rank()));
    (image.len() == subset.len()).then_some(image)
}

/// A partition of a positive integer, parts weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Every partition of `total`, in reverse-lexicographic order (`(total)` first).
    pub fn all(total: u32) -> Vec<Partition> {
        fn extend(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in (1..=max.min(remaining)).rev() {
                prefix.push(part);
                extend(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if total > 0 {
            extend(total, total, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The W-orbit label of `J`: component sizes plus one, padded with ones to
/// total `n+1`.
pub fn class_of(subset: SimpleSubset) -> Partition {
    let mut parts: Vec<u32> = subset
        .components()
        .iter()
        .map(|&(_, len)| len as u32 + 1)
        .collect();
    let covered: u32 = parts.iter().sum();
    parts.extend(std::iter::repeat(1).take(subset.rank() + 1 - covered as usize));
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

/// `W_J` by closing `{s_k : k ∈ J}` under composition, sorted by length then
/// one-line notation.
pub fn generate_parabolic(subset: SimpleSubset) -> Vec<Permutation> {
    let rank = subset.rank();
    let generators: Vec<Permutation> = subset
        .indices()
        .map(|k| reflection_of_root(Root::simple(k), rank).expect("simple root in range"))
        .collect();
    let identity = Permutation::identity(rank);
    let mut seen: HashSet<Permutation> = HashSet::from([identity]);
    let mut queue = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        for s in &generators {
            let next = w.compose_unchecked(s);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    elements
}

/// `|W_J|`: the product of `(c+1)!` over components of size `c`.
pub fn parabolic_order(subset: SimpleSubset) -> u64 {
    subset
        .components()
        .iter()
        .map(|&(_, c)| (1..=c as u64 + 1).product::<u64>())
        .product()
}

/// The longest element of `W_J`: reverses the points of every component.
pub fn longest_element(subset: SimpleSubset) -> Permutation {
    let rank = subset.rank();
    let mut images: Vec<u8> = (1..=rank as u8 + 1).collect();
    for (start, len) in subset.components() {
        images[start - 1..start + len].reverse();
    }
    Permutation::from_images(&images).expect("block reversal is a bijection")
}

/// Every permutation of `{1, .., n+1}`, sorted by length then one-line notation.
pub fn all_elements(rank: usize) -> Vec<Permutation> {
    let degree = rank + 1;
    let mut current: Vec<u8> = (1..=degree as u8).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_images(&current).expect("valid arrangement"));
        // next lexicographic arrangement
        let Some(i) = (0..degree - 1).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..degree).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out.sort_unstable();
    out
}
