//! Arithmetic, enumeration, and conjugacy machinery for the classical Weyl
//! groups 𝔖_n (kind A), ℬ_n = ℤ₂ ≀ 𝔖_n (kind B), and 𝒟_n (kind D), regarded
//! as supergroups in which every reflection is odd.
//!
//! Elements are stored in the normal form t₁^{i₁}⋯t_n^{i_n}·σ: a permutation
//! plus a sign vector, with 𝔖_n acting on ℤ₂ⁿ by place permutation.

use std::collections::HashSet;
use std::fmt;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closure::Parity;

/// Default cap on group enumeration; ℬ₅ (3840) and ℬ₆ (46080) fit under it.
pub const DEFAULT_ENUM_CAP: u64 = 100_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("kind {kind:?} requires rank n ≥ {min}, got {n}")]
    InvalidRank { kind: Kind, n: usize, min: usize },
    #[error("elements belong to different ambient groups")]
    SpecMismatch,
    #[error("sign vector {signs:#b} is not allowed in kind {kind:?}")]
    NotInGroup { kind: Kind, signs: u32 },
    #[error("images are not a bijection of 1..n")]
    NotAPermutation,
    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("multiplication table i/o: {0}")]
    Cache(#[from] std::io::Error),
    #[error("multiplication table file is malformed: {0}")]
    BadCacheFile(String),
}

/// Weyl kind: A = 𝔖_n, B = ℬ_n, D = 𝒟_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    D,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// A validated (kind, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    kind: Kind,
    n: u8,
}

impl GroupSpec {
    /// Ranks follow the sources: n ≥ 2 for kinds A and B, n ≥ 4 for kind D.
    pub fn new(kind: Kind, n: usize) -> Result<Self, GroupError> {
        let min = match kind {
            Kind::A | Kind::B => 2,
            Kind::D => 4,
        };
        if n < min || n > 30 {
            return Err(GroupError::InvalidRank { kind, n, min });
        }
        Ok(GroupSpec { kind, n: n as u8 })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn order(&self) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        match self.kind {
            Kind::A => fact,
            Kind::B => fact << self.n,
            Kind::D => fact << (self.n - 1),
        }
    }

    /// Order of the even (index-2) subgroup under the grading character.
    pub fn even_order(&self) -> u64 {
        self.order() / 2
    }

    /// Span of the packed sign bits inside an element index.
    fn sign_span(&self) -> u64 {
        match self.kind {
            Kind::A => 1,
            Kind::B => 1 << self.n,
            Kind::D => 1 << (self.n - 1),
        }
    }

    /// The grading character: ε for kind B, ε″ for kinds A and D.
    pub fn grading_character(&self) -> LinearCharacter {
        match self.kind {
            Kind::B => LinearCharacter::FullSign,
            Kind::A | Kind::D => LinearCharacter::PermSign,
        }
    }

    pub fn grading_of(&self, a: &SignedPerm) -> Parity {
        if a.char_value(self.grading_character()) == 1 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Number of long reflections (the (i,j) / t_it_j(i,j) family).
    pub fn long_reflection_count(&self) -> usize {
        let n = self.rank();
        match self.kind {
            Kind::A => n * (n - 1) / 2,
            Kind::B | Kind::D => n * (n - 1),
        }
    }

    pub fn identity(&self) -> SignedPerm {
        SignedPerm {
            spec: *self,
            images: (0..self.n).collect(),
            signs: 0,
        }
    }

    /// The transposition (i+1, j+1) on 0-based points i < j.
    pub fn transposition(&self, i: usize, j: usize) -> SignedPerm {
        assert!(i < j && j < self.rank());
        let mut images: Vec<u8> = (0..self.n).collect();
        images.swap(i, j);
        SignedPerm {
            spec: *self,
            images,
            signs: 0,
        }
    }

    /// The long reflection t_{i+1} t_{j+1} (i+1, j+1).
    pub fn signed_transposition(&self, i: usize, j: usize) -> SignedPerm {
        let mut r = self.transposition(i, j);
        r.signs = (1 << i) | (1 << j);
        r
    }

    /// The sign flip t_{i+1}; only an element of kind B.
    pub fn sign_flip(&self, i: usize) -> SignedPerm {
        assert!(self.kind == Kind::B && i < self.rank());
        SignedPerm {
            spec: *self,
            images: (0..self.n).collect(),
            signs: 1 << i,
        }
    }

    /// Element from raw data, checked against the kind's sign constraints.
    pub fn element(&self, images: Vec<u8>, signs: u32) -> Result<SignedPerm, GroupError> {
        let n = self.rank();
        let mut seen = vec![false; n];
        if images.len() != n {
            return Err(GroupError::NotAPermutation);
        }
        for &p in &images {
            if p as usize >= n || seen[p as usize] {
                return Err(GroupError::NotAPermutation);
            }
            seen[p as usize] = true;
        }
        if signs >> n != 0 || !self.signs_allowed(signs) {
            return Err(GroupError::NotInGroup {
                kind: self.kind,
                signs,
            });
        }
        Ok(SignedPerm {
            spec: *self,
            images,
            signs,
        })
    }

    fn signs_allowed(&self, signs: u32) -> bool {
        match self.kind {
            Kind::A => signs == 0,
            Kind::B => true,
            Kind::D => signs.count_ones() % 2 == 0,
        }
    }

    /// Coxeter generators: s₁,…,s_{n−1} plus t_n (kind B) or s̃_n (kind D).
    pub fn coxeter_generators(&self) -> Vec<SignedPerm> {
        let n = self.rank();
        let mut gens: Vec<SignedPerm> = (0..n - 1).map(|i| self.transposition(i, i + 1)).collect();
        match self.kind {
            Kind::A => {}
            Kind::B => gens.push(self.sign_flip(n - 1)),
            Kind::D => gens.push(self.signed_transposition(n - 2, n - 1)),
        }
        gens
    }

    /// Generators of the even subgroup: all products g₁gᵢ and gᵢg₁ of the
    /// (odd) Coxeter generators. Any even word is a product of such pairs.
    pub fn even_generators(&self) -> Vec<SignedPerm> {
        let gens = self.coxeter_generators();
        let mut out = Vec::new();
        for g in &gens[1..] {
            out.push(gens[0].compose(g).unwrap());
            out.push(g.compose(&gens[0]).unwrap());
        }
        out
    }

    /// The long and short reflections (C_ℓ, C_s). C_s is empty for kinds A
    /// and D; for kind B it is {t₁,…,t_n}.
    pub fn reflections(&self) -> (Vec<SignedPerm>, Vec<SignedPerm>) {
        let n = self.rank();
        let mut long = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                long.push(self.transposition(i, j));
            }
        }
        if matches!(self.kind, Kind::B | Kind::D) {
            for i in 0..n {
                for j in i + 1..n {
                    long.push(self.signed_transposition(i, j));
                }
            }
        }
        let short = match self.kind {
            Kind::B => (0..n).map(|i| self.sign_flip(i)).collect(),
            Kind::A | Kind::D => Vec::new(),
        };
        (long, short)
    }

    /// Spec one rank lower, when that rank is still admissible.
    pub fn sub_spec(&self) -> Option<GroupSpec> {
        GroupSpec::new(self.kind, self.rank() - 1).ok()
    }
}

/// The linear characters ε, ε′, ε″ of ℬ_n (and their restrictions).
///
/// On generators: ε(tᵢ) = −1, ε(sⱼ) = −1 (the sign character of ℬ_n);
/// ε′(tᵢ) = −1, ε′(sⱼ) = +1; ε″(tᵢ) = +1, ε″(sⱼ) = −1. One has ε = ε′·ε″.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinearCharacter {
    /// ε: sign character of ℬ_n (grading character for kind B).
    FullSign,
    /// ε′: parity of the sign vector; 𝒟_n = ker ε′.
    FlipSign,
    /// ε″: sign of the underlying permutation (grading for kinds A and D).
    PermSign,
}

/// An element of ℬ_n in normal form (permutation, sign vector); kinds A and
/// D are the subgroups with zero resp. even sign vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    spec: GroupSpec,
    /// 0-based one-line notation: `images[p]` is the image of point p.
    images: Vec<u8>,
    /// Bit i is the exponent of t_{i+1}.
    signs: u32,
}

impl SignedPerm {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn signs(&self) -> u32 {
        self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.signs == 0 && self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Normal-form product. Signs combine by the place-permutation rule:
    /// the product's sign at position σ_a(j) is signs_a(σ_a(j)) ⊕ signs_b(j).
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm, GroupError> {
        if self.spec != other.spec {
            return Err(GroupError::SpecMismatch);
        }
        let n = self.rank();
        let mut images = vec![0u8; n];
        let mut signs = self.signs;
        for p in 0..n {
            images[p] = self.images[other.images[p] as usize];
        }
        for j in 0..n {
            if other.signs >> j & 1 == 1 {
                signs ^= 1 << self.images[j];
            }
        }
        Ok(SignedPerm {
            spec: self.spec,
            images,
            signs,
        })
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.rank();
        let mut images = vec![0u8; n];
        let mut signs = 0u32;
        for p in 0..n {
            images[self.images[p] as usize] = p as u8;
        }
        for k in 0..n {
            if self.signs >> self.images[k] & 1 == 1 {
                signs |= 1 << k;
            }
        }
        SignedPerm {
            spec: self.spec,
            images,
            signs,
        }
    }

    pub fn conjugate_by(&self, g: &SignedPerm) -> Result<SignedPerm, GroupError> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// Value of a linear character, as +1 or −1.
    pub fn char_value(&self, which: LinearCharacter) -> i8 {
        let flip = self.signs.count_ones() % 2 == 1;
        let perm = self.perm_sign_negative();
        let negative = match which {
            LinearCharacter::FullSign => flip ^ perm,
            LinearCharacter::FlipSign => flip,
            LinearCharacter::PermSign => perm,
        };
        if negative {
            -1
        } else {
            1
        }
    }

    fn perm_sign_negative(&self) -> bool {
        let mut inv = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 1
    }

    /// Cycle lengths of the underlying permutation, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    /// Ordinal in [0, order): Lehmer rank of the permutation times the sign
    /// span, plus the packed sign bits (kind D drops the parity-determined
    /// last bit). No table lookup.
    pub fn index(&self) -> u64 {
        let span = self.spec.sign_span();
        let packed = match self.spec.kind {
            Kind::A => 0,
            Kind::B => self.signs as u64,
            Kind::D => (self.signs & ((1 << (self.rank() - 1)) - 1)) as u64,
        };
        self.perm_rank() * span + packed
    }

    fn perm_rank(&self) -> u64 {
        let n = self.rank();
        let mut rank = 0u64;
        let mut fact: u64 = (1..n as u64).product();
        for i in 0..n {
            let smaller = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count() as u64;
            rank += smaller * fact;
            if n - i > 1 {
                fact /= (n - i - 1) as u64;
            }
        }
        rank
    }

    /// Same-rank element of a 1-larger group, fixing the new point.
    pub fn embed(&self, into: GroupSpec) -> Result<SignedPerm, GroupError> {
        if into.kind() != self.spec.kind() || into.rank() != self.rank() + 1 {
            return Err(GroupError::SpecMismatch);
        }
        let mut images = self.images.clone();
        images.push(self.rank() as u8);
        into.element(images, self.signs)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for i in 0..self.rank() {
            if self.signs >> i & 1 == 1 {
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "t{}", i + 1)?;
                wrote = true;
            }
        }
        let mut seen = vec![false; self.rank()];
        for start in 0..self.rank() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            if wrote {
                write!(f, " ")?;
            }
            write!(f, "({}", start + 1)?;
            seen[start] = true;
            let mut p = self.images[start] as usize;
            while p != start {
                write!(f, ",{}", p + 1)?;
                seen[p] = true;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

/// Element with the given ordinal (inverse of [`SignedPerm::index`]).
pub fn element_of(spec: GroupSpec, ord: u64) -> SignedPerm {
    let span = spec.sign_span();
    let (rank, packed) = (ord / span, ord % span);
    let n = spec.rank();
    let images = perm_unrank(n, rank);
    let signs = match spec.kind() {
        Kind::A => 0,
        Kind::B => packed as u32,
        Kind::D => {
            let low = packed as u32;
            let parity = low.count_ones() % 2;
            low | (parity << (n - 1))
        }
    };
    SignedPerm {
        spec,
        images,
        signs,
    }
}

fn perm_unrank(n: usize, mut rank: u64) -> Vec<u8> {
    let mut avail: Vec<u8> = (0..n as u8).collect();
    let mut fact: u64 = (1..n as u64).product();
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let d = (rank / fact) as usize;
        rank %= fact;
        images.push(avail.remove(d));
        if n - i > 1 {
            fact /= (n - i - 1) as u64;
        }
    }
    images
}

/// All group elements indexed by ordinal.
pub fn enumerate(spec: GroupSpec, cap: u64) -> Result<Vec<SignedPerm>, GroupError> {
    let order = spec.order();
    if order > cap {
        return Err(GroupError::CapExceeded { order, cap });
    }
    Ok((0..order).map(|o| element_of(spec, o)).collect())
}

/// Which group the conjugation (or generation) runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Full,
    Even,
}

/// Orbit of `rep` under conjugation by the chosen subgroup, computed by
/// breadth-first closure over that subgroup's generators. Sorted by ordinal.
pub fn conjugacy_class(rep: &SignedPerm, ambient: Ambient) -> Vec<SignedPerm> {
    let spec = rep.spec();
    let gens = match ambient {
        Ambient::Full => spec.coxeter_generators(),
        Ambient::Even => spec.even_generators(),
    };
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![rep.clone()];
    seen.insert(rep.index());
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.conjugate_by(g).expect("same spec");
            if seen.insert(y.index()) {
                frontier.push(y);
            }
        }
        out.push(x);
    }
    out.sort_by_key(|x| x.index());
    out
}

/// Size of the subgroup generated by the given elements (BFS closure under
/// composition; in a finite group no explicit inverses are needed).
pub fn subgroup_generated(gens: &[SignedPerm]) -> u64 {
    let Some(first) = gens.first() else {
        return 1;
    };
    let spec = first.spec();
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(spec.identity().index());
    let mut frontier = vec![spec.identity()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g).expect("same spec");
            if seen.insert(y.index()) {
                frontier.push(y);
            }
        }
    }
    seen.len() as u64
}

/// On-disk multiplication table: header (kind byte, n, order as LE u64),
/// then order² ordinals as LE u32, row-major (`entry[i·order + j] = i∘j`).
pub mod cache {
    use super::*;

    pub fn write_mult_table<W: Write>(spec: GroupSpec, cap: u64, w: &mut W) -> Result<(), GroupError> {
        let elems = enumerate(spec, cap)?;
        let order = elems.len() as u64;
        w.write_all(&[kind_byte(spec.kind()), spec.rank() as u8])?;
        w.write_all(&order.to_le_bytes())?;
        for a in &elems {
            for b in &elems {
                let idx = a.compose(b).expect("same spec").index() as u32;
                w.write_all(&idx.to_le_bytes())?;
            }
        }
        Ok(())
    }

    pub fn read_mult_table<R: Read>(r: &mut R) -> Result<(GroupSpec, Vec<u32>), GroupError> {
        let mut head = [0u8; 10];
        r.read_exact(&mut head)?;
        let kind = match head[0] {
            b'A' => Kind::A,
            b'B' => Kind::B,
            b'D' => Kind::D,
            other => return Err(GroupError::BadCacheFile(format!("bad kind byte {other}"))),
        };
        let spec = GroupSpec::new(kind, head[1] as usize)
            .map_err(|e| GroupError::BadCacheFile(e.to_string()))?;
        let order = u64::from_le_bytes(head[2..10].try_into().unwrap());
        if order != spec.order() {
            return Err(GroupError::BadCacheFile(format!(
                "order {order} does not match spec {spec:?}"
            )));
        }
        let mut body = Vec::new();
        r.read_to_end(&mut body)?;
        if body.len() as u64 != order * order * 4 {
            return Err(GroupError::BadCacheFile("truncated table".into()));
        }
        let table = body
            .chunks_exact(4)
            .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Ok((spec, table))
    }

    fn kind_byte(kind: Kind) -> u8 {
        match kind {
            Kind::A => b'A',
            Kind::B => b'B',
            Kind::D => b'D',
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize) -> GroupSpec {
        GroupSpec::new(Kind::B, n).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(b(2).order(), 8);
        assert_eq!(GroupSpec::new(Kind::D, 4).unwrap().order(), 192);
        assert_eq!(GroupSpec::new(Kind::A, 6).unwrap().order(), 720);
    }

    #[test]
    fn t1_squares_to_identity() {
        let s = b(2);
        let t1 = s.sign_flip(0);
        assert!(t1.compose(&t1).unwrap().is_identity());
        assert_eq!(t1.inverse(), t1);
    }

    #[test]
    fn place_permutation_rule() {
        // s₁ t₁ s₁ = t₂, by expanding the place-permutation rule by hand
        let s = b(2);
        let s1 = s.transposition(0, 1);
        let t1 = s.sign_flip(0);
        let got = s1.compose(&t1).unwrap().compose(&s1).unwrap();
        assert_eq!(got, s.sign_flip(1));
    }

    #[test]
    fn transposition_conjugation() {
        // (1,2)(2,3)(1,2) = (1,3)
        let s = GroupSpec::new(Kind::A, 3).unwrap();
        let a = s.transposition(0, 1);
        let c = s.transposition(1, 2);
        let got = a.compose(&c).unwrap().compose(&a).unwrap();
        assert_eq!(got, s.transposition(0, 2));
    }

    #[test]
    fn inverse_of_mixed_element() {
        // (t₁ s₁)⁻¹ = s₁ t₁, verified by composing back to the identity
        let s = b(2);
        let t1s1 = s.sign_flip(0).compose(&s.transposition(0, 1)).unwrap();
        let s1t1 = s.transposition(0, 1).compose(&s.sign_flip(0)).unwrap();
        assert_eq!(t1s1.inverse(), s1t1);
        assert!(t1s1.compose(&t1s1.inverse()).unwrap().is_identity());
    }

    #[test]
    fn character_values() {
        let s = b(3);
        let t1 = s.sign_flip(0);
        assert_eq!(t1.char_value(LinearCharacter::PermSign), 1);
        assert_eq!(t1.char_value(LinearCharacter::FlipSign), -1);
        let t1s1 = t1.compose(&s.transposition(0, 1)).unwrap();
        assert_eq!(t1s1.char_value(LinearCharacter::FullSign), 1);
        // ε′(t₁t₂(1,2)) = +1: two sign generators
        let x = s
            .sign_flip(0)
            .compose(&s.sign_flip(1))
            .unwrap()
            .compose(&s.transposition(0, 1))
            .unwrap();
        assert_eq!(x.char_value(LinearCharacter::FlipSign), 1);
    }

    #[test]
    fn indexing_is_a_bijection() {
        for spec in [
            GroupSpec::new(Kind::A, 4).unwrap(),
            b(3),
            GroupSpec::new(Kind::D, 4).unwrap(),
        ] {
            let elems = enumerate(spec, DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(elems.len() as u64, spec.order());
            for (i, e) in elems.iter().enumerate() {
                assert_eq!(e.index(), i as u64);
                assert_eq!(element_of(spec, i as u64), *e);
            }
        }
    }

    #[test]
    fn reflection_counts() {
        let (l, s) = b(2).reflections();
        assert_eq!((l.len(), s.len()), (2, 2));
        let (l, s) = GroupSpec::new(Kind::D, 4).unwrap().reflections();
        assert_eq!((l.len(), s.len()), (12, 0));
        let (l, s) = GroupSpec::new(Kind::A, 3).unwrap().reflections();
        assert_eq!((l.len(), s.len()), (3, 0));
    }

    #[test]
    fn class_of_t1_is_all_sign_flips() {
        for n in [3, 4, 5] {
            let s = b(n);
            let class = conjugacy_class(&s.sign_flip(0), Ambient::Full);
            assert_eq!(class.len(), n);
            assert!(class.iter().all(|x| x.signs().count_ones() == 1));
        }
    }

    #[test]
    fn class_of_t1_23_in_even_b5() {
        // orbit of t₁(2,3) under (ℬ₅)₀-conjugation: all tᵢ(j,k) and tᵢtⱼt_k(j,k)
        let s = b(5);
        let rep = s.sign_flip(0).compose(&s.transposition(1, 2)).unwrap();
        let class = conjugacy_class(&rep, Ambient::Even);
        assert_eq!(class.len(), 60);
        assert!(class
            .iter()
            .all(|x| matches!(x.signs().count_ones(), 1 | 3)));
    }

    #[test]
    fn alternating_class_and_closure() {
        let s = GroupSpec::new(Kind::A, 5).unwrap();
        let rep = s
            .transposition(0, 1)
            .compose(&s.transposition(2, 3))
            .unwrap();
        let class = conjugacy_class(&rep, Ambient::Even);
        assert_eq!(class.len(), 15);
        assert_eq!(subgroup_generated(&class), 60); // A₅
    }

    #[test]
    fn generated_even_subgroups() {
        // ⟨class of t₁(2,3)⟩ = (ℬ₅)₀, an index-2 subgroup of ℬ₅
        let s = b(5);
        let rep = s.sign_flip(0).compose(&s.transposition(1, 2)).unwrap();
        assert_eq!(
            subgroup_generated(&conjugacy_class(&rep, Ambient::Even)),
            1920
        );
        // ⟨sign variants of (1,2)(3,4)⟩ = (𝒟₅)₀
        let d = GroupSpec::new(Kind::D, 5).unwrap();
        let rep = d
            .transposition(0, 1)
            .compose(&d.transposition(2, 3))
            .unwrap();
        assert_eq!(
            subgroup_generated(&conjugacy_class(&rep, Ambient::Even)),
            960
        );
    }

    #[test]
    fn coxeter_presentation() {
        for spec in [
            GroupSpec::new(Kind::A, 5).unwrap(),
            b(4),
            GroupSpec::new(Kind::D, 4).unwrap(),
        ] {
            let gens = spec.coxeter_generators();
            let n = spec.rank();
            for g in &gens[..n - 1] {
                assert!(g.compose(g).unwrap().is_identity(), "sᵢ² = e");
            }
            for w in gens[..n - 1].windows(2) {
                let braid = w[0].compose(&w[1]).unwrap();
                let cubed = braid.compose(&braid).unwrap().compose(&braid).unwrap();
                assert!(cubed.is_identity(), "(sᵢsᵢ₊₁)³ = e");
            }
            match spec.kind() {
                Kind::A => {}
                Kind::B => {
                    let tn = &gens[n - 1];
                    assert!(tn.compose(tn).unwrap().is_identity(), "t_n² = e");
                    let x = gens[n - 2].compose(tn).unwrap();
                    let x2 = x.compose(&x).unwrap();
                    assert!(x2.compose(&x2).unwrap().is_identity(), "(s_{{n−1}}t_n)⁴ = e");
                }
                Kind::D => {
                    let sn = &gens[n - 1];
                    assert!(sn.compose(sn).unwrap().is_identity(), "s̃_n² = e");
                    let x = gens[n - 2].compose(sn).unwrap();
                    assert!(x.compose(&x).unwrap().is_identity(), "(s_{{n−1}}s̃_n)² = e");
                }
            }
        }
    }

    #[test]
    fn characters_multiplicative_and_factor() {
        use rand::{Rng, SeedableRng};
        let spec = b(4);
        let mut rng = rand::rngs::StdRng::seed_from_u64(42);
        for _ in 0..2000 {
            let x = element_of(spec, rng.gen_range(0..spec.order()));
            let y = element_of(spec, rng.gen_range(0..spec.order()));
            let xy = x.compose(&y).unwrap();
            for c in [
                LinearCharacter::FullSign,
                LinearCharacter::FlipSign,
                LinearCharacter::PermSign,
            ] {
                assert_eq!(xy.char_value(c), x.char_value(c) * y.char_value(c));
            }
            assert_eq!(
                x.char_value(LinearCharacter::FullSign),
                x.char_value(LinearCharacter::FlipSign) * x.char_value(LinearCharacter::PermSign)
            );
        }
    }

    #[test]
    fn reflections_closed_under_conjugation() {
        for spec in [
            GroupSpec::new(Kind::A, 4).unwrap(),
            b(3),
            GroupSpec::new(Kind::D, 4).unwrap(),
        ] {
            let (long, short) = spec.reflections();
            let long_set: HashSet<u64> = long.iter().map(|x| x.index()).collect();
            let short_set: HashSet<u64> = short.iter().map(|x| x.index()).collect();
            for g in enumerate(spec, DEFAULT_ENUM_CAP).unwrap() {
                for r in &long {
                    assert!(long_set.contains(&r.conjugate_by(&g).unwrap().index()));
                }
                for r in &short {
                    assert!(short_set.contains(&r.conjugate_by(&g).unwrap().index()));
                }
            }
        }
    }

    #[test]
    fn mult_table_roundtrip() {
        let spec = b(2);
        let mut buf = Vec::new();
        cache::write_mult_table(spec, DEFAULT_ENUM_CAP, &mut buf).unwrap();
        let (spec2, table) = cache::read_mult_table(&mut buf.as_slice()).unwrap();
        assert_eq!(spec, spec2);
        let elems = enumerate(spec, DEFAULT_ENUM_CAP).unwrap();
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                assert_eq!(
                    table[i * elems.len() + j] as u64,
                    a.compose(b).unwrap().index()
                );
            }
        }
    }

    #[test]
    fn d_kind_membership_enforced() {
        let d = GroupSpec::new(Kind::D, 4).unwrap();
        assert!(d.element(vec![0, 1, 2, 3], 0b0001).is_err());
        assert!(d.element(vec![0, 1, 2, 3], 0b0011).is_ok());
        let a = GroupSpec::new(Kind::A, 3).unwrap();
        assert!(a.element(vec![0, 1, 2], 0b001).is_err());
    }
}
